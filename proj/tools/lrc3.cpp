// Command-line front end: construct, verify, classify, search, table.

#include <chrono>
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lrc3/bounds.hpp"
#include "lrc3/classifier.hpp"
#include "lrc3/code.hpp"
#include "lrc3/constructions.hpp"
#include "lrc3/locality.hpp"
#include "lrc3/matrix_io.hpp"
#include "lrc3/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotOptimal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

uint64_t parse_cap(const std::string& s) {
  if (s.rfind("3^", 0) == 0) {
    long long e = std::stoll(s.substr(2));
    if (e < 0 || e > 39) throw CLI::ValidationError("--cap", "exponent out of range");
    uint64_t v = 1;
    for (long long i = 0; i < e; ++i) v *= 3;
    return v;
  }
  return std::stoull(s);
}

std::string class_list(const lrc3::ClassVerdict& v) {
  if (v.matches.empty()) return "none";
  std::string out;
  for (const auto& m : v.matches) {
    if (!out.empty()) out += ",";
    out += std::to_string(m.class_id);
  }
  return out;
}

struct VerifyOutput {
  std::size_t n, k, d;
  lrc3::LocalityProfile profile;
  long long d_target_exact;
  std::optional<long long> d_target_declared;
  bool optimal;
  std::string classes;
  bool plotkin_ok;
  double elapsed_ms;
};

VerifyOutput verify_code(const lrc3::LinearCode& code, std::optional<long long> declared_r) {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyOutput out;
  out.n = code.length();
  out.k = code.dimension();
  out.d = lrc3::min_distance(code);
  out.profile = lrc3::code_locality(code);
  const long long n = (long long)out.n, k = (long long)out.k;
  const long long r_exact = (long long)out.profile.code_locality;
  // the bound formula needs r <= k; locality above k is capped for evaluation
  out.d_target_exact = lrc3::singleton_like_d(n, k, std::min(r_exact, k));
  if (declared_r) out.d_target_declared = lrc3::singleton_like_d(n, k, *declared_r);
  out.optimal = (long long)out.d == out.d_target_exact;
  if (r_exact >= 1 && r_exact <= k - 1 && k <= n - 1) {
    out.classes = class_list(lrc3::classify(n, k, r_exact));
  } else {
    out.classes = "none";
  }
  out.plotkin_ok = lrc3::plotkin_feasible(n, lrc3::pow3ll(k), (long long)out.d);
  out.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

void print_verify(const VerifyOutput& o, const std::string& format) {
  std::string profile;
  for (auto r : o.profile.per_symbol) {
    if (!profile.empty()) profile += " ";
    profile += std::to_string(r);
  }
  if (format == "kv") {
    std::cout << "n=" << o.n << "\n";
    std::cout << "k=" << o.k << "\n";
    std::cout << "d=" << o.d << "\n";
    std::cout << "locality_profile=" << profile << "\n";
    std::cout << "r_exact=" << o.profile.code_locality << "\n";
    if (o.d_target_declared)
      std::cout << "d_singleton_declared=" << *o.d_target_declared << "\n";
    std::cout << "d_singleton_exact=" << o.d_target_exact << "\n";
    std::cout << "optimal=" << (o.optimal ? "true" : "false") << "\n";
    std::cout << "classes=" << o.classes << "\n";
    std::cout << "plotkin_feasible=" << (o.plotkin_ok ? "true" : "false") << "\n";
    std::cout << "elapsed_ms=" << o.elapsed_ms << "\n";
  } else {
    std::cout << "[" << o.n << "," << o.k << "," << o.d << "] ternary code\n";
    std::cout << "  locality per symbol: " << profile << "\n";
    std::cout << "  exact code locality: " << o.profile.code_locality << "\n";
    if (o.d_target_declared)
      std::cout << "  Singleton-like bound at declared r: " << *o.d_target_declared << "\n";
    std::cout << "  Singleton-like bound at exact r:    " << o.d_target_exact << "\n";
    std::cout << "  optimal: " << (o.optimal ? "true" : "false") << "\n";
    std::cout << "  class: " << o.classes << "\n";
    std::cout << "  Plotkin feasible: " << (o.plotkin_ok ? "true" : "false") << "\n";
    std::cout << "  elapsed: " << o.elapsed_ms << " ms\n";
  }
}

lrc3::Gf3Matrix construct_matrix(int class_id, std::optional<std::size_t> k,
                                 std::optional<std::size_t> r, std::optional<std::size_t> g,
                                 std::optional<std::size_t> l, std::optional<std::size_t> n) {
  auto need = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  };
  switch (class_id) {
    case 1:
      need(k && r, "class 1 needs --k and --r");
      return lrc3::class1_parity(*k, *r);
    case 2:
      need(g.has_value(), "class 2 needs --g");
      return lrc3::class2_parity(*g);
    case 3:
      need(k.has_value(), "class 3 needs --k");
      return lrc3::class3_parity(*k);
    case 4:
      return lrc3::class4_parity();
    case 5:
      need(n && k, "class 5 needs --n and --k");
      return lrc3::class5(*n, *k).parity_check();
    case 6:
      need(l.has_value(), "class 6 needs --l");
      return lrc3::class6_parity(*l);
    case 7:
      need(l.has_value(), "class 7 needs --l");
      return lrc3::class7_parity(*l);
    case 8:
      return lrc3::class8_parity();
    default:
      throw std::invalid_argument("--class must be 1..8");
  }
}

struct TableRow {
  int class_id;
  std::size_t n, k, r, d;
};

int run_table(const std::string& format) {
  struct Entry {
    int class_id;
    lrc3::LinearCode code;
    TableRow expected;
  };
  std::vector<Entry> entries;
  entries.push_back({1, lrc3::class1(2, 1), {1, 4, 2, 1, 2}});
  for (std::size_t g = 0; g <= 4; ++g)
    entries.push_back({2, lrc3::class2(g), {2, 13 - g, 10 - g, 8 - g, 3}});
  entries.push_back({3, lrc3::class3(2), {3, 6, 2, 1, 4}});
  entries.push_back({4, lrc3::class4(), {4, 8, 2, 1, 6}});
  for (const auto& [n, k] : lrc3::class5_targets())
    entries.push_back({5, lrc3::class5(n, k), {5, n, k, k - 1, n - k}});
  entries.push_back({6, lrc3::class6(3), {6, 12, 7, 3, 4}});
  entries.push_back({7, lrc3::class7(3), {7, 9, 5, 2, 3}});
  entries.push_back({8, lrc3::class8(), {8, 12, 5, 2, 6}});

  bool all_ok = true;
  for (const auto& e : entries) {
    std::size_t d = lrc3::min_distance(e.code);
    lrc3::LocalityProfile p = lrc3::code_locality(e.code);
    bool ok = e.code.length() == e.expected.n && e.code.dimension() == e.expected.k &&
              d == e.expected.d && p.code_locality == e.expected.r;
    all_ok = all_ok && ok;
    if (format == "kv") {
      std::cout << "class=" << e.class_id << " n=" << e.code.length()
                << " k=" << e.code.dimension() << " r=" << p.code_locality << " d=" << d
                << " optimal=" << (ok ? "true" : "false") << "\n";
    } else {
      std::cout << "class " << e.class_id << ": (" << e.code.length() << ","
                << e.code.dimension() << "," << p.code_locality << "), d=" << d
                << ", optimal: " << (ok ? "true" : "false") << "\n";
    }
  }
  return all_ok ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal ternary locally repairable code toolkit"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "Build a parity-check matrix");
  int class_id = 0;
  std::optional<std::size_t> opt_k, opt_r, opt_g, opt_l, opt_n;
  std::string out_path;
  construct->add_option("--class", class_id, "Construction class 1..8")->required();
  construct->add_option("--k", opt_k, "Dimension parameter");
  construct->add_option("--r", opt_r, "Locality parameter");
  construct->add_option("--g", opt_g, "Column deletion count (class 2)");
  construct->add_option("--l", opt_l, "Block count (classes 6, 7)");
  construct->add_option("--n", opt_n, "Length parameter (class 5)");
  construct->add_option("-o,--output", out_path, "Output matrix file")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Verify a parity-check matrix file");
  std::string in_path, format = "text";
  std::optional<long long> declared_r;
  verify->add_option("input", in_path, "Matrix file")->required();
  verify->add_option("--r", declared_r, "Declared locality");
  verify->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "kv"}));

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Classify a parameter triple");
  long long cn = 0, ck = 0, cr = 0;
  std::string cformat = "text";
  classify_cmd->add_option("n", cn)->required();
  classify_cmd->add_option("k", ck)->required();
  classify_cmd->add_option("r", cr)->required();
  classify_cmd->add_option("--format", cformat)->check(CLI::IsMember({"text", "kv"}));

  // search
  auto* search = app.add_subcommand("search", "Exhaustive systematic-form search");
  long long sn = 0, sk = 0, sr = 0;
  std::string cap_str = "3^16", mode_str = "find-first", sformat = "text", witness_path;
  unsigned workers = 1;
  search->add_option("n", sn)->required();
  search->add_option("k", sk)->required();
  search->add_option("r", sr)->required();
  search->add_option("--cap", cap_str, "Candidate cap, integer or 3^e");
  search->add_option("--mode", mode_str)->check(CLI::IsMember({"find-first", "count-all"}));
  search->add_option("--workers", workers, "Worker thread count");
  search->add_option("--format", sformat)->check(CLI::IsMember({"text", "kv"}));
  search->add_option("-o,--output", witness_path, "Witness matrix file");

  // table
  auto* table = app.add_subcommand("table", "Construct and verify the full classification");
  std::string tformat = "text";
  table->add_option("--format", tformat)->check(CLI::IsMember({"text", "kv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (construct->parsed()) {
      lrc3::Gf3Matrix h;
      try {
        h = construct_matrix(class_id, opt_k, opt_r, opt_g, opt_l, opt_n);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      lrc3::write_matrix_file(out_path, h);
      return kExitOk;
    }

    if (verify->parsed()) {
      lrc3::Gf3Matrix h;
      try {
        h = lrc3::read_matrix_file(in_path);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      lrc3::LinearCode code = lrc3::LinearCode::from_parity_check(h);
      if (code.dimension() == 0) {
        std::cerr << "error: k = 0: no nonzero codewords\n";
        return kExitUsage;
      }
      VerifyOutput out = verify_code(code, declared_r);
      print_verify(out, format);
      return out.optimal ? kExitOk : kExitNotOptimal;
    }

    if (classify_cmd->parsed()) {
      lrc3::ClassVerdict v;
      try {
        v = lrc3::classify(cn, ck, cr);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      if (cformat == "kv") {
        std::cout << "n=" << v.n << "\nk=" << v.k << "\nr=" << v.r << "\n";
        std::cout << "d_target=" << v.target_d << "\n";
        std::cout << "classes=" << class_list(v) << "\n";
        std::cout << "exists=" << (v.exists ? "true" : "false") << "\n";
        for (const auto& b : v.explanation)
          std::cout << "explanation=" << b.name << " value=" << b.value.to_string() << "\n";
      } else if (v.exists) {
        std::cout << "class " << class_list(v) << ", d=" << v.target_d << ", exists\n";
      } else {
        std::cout << "no class, d_target=" << v.target_d << ", does not exist";
        if (!v.explanation.empty()) std::cout << " (" << v.explanation.front().name << ")";
        std::cout << "\n";
      }
      return v.exists ? kExitOk : kExitNotOptimal;
    }

    if (search->parsed()) {
      lrc3::SearchTask task;
      task.n = (std::size_t)sn;
      task.k = (std::size_t)sk;
      task.r = (std::size_t)sr;
      try {
        task.cap = parse_cap(cap_str);
        task.target_d = (std::size_t)lrc3::singleton_like_d(sn, sk, sr);
        task.mode = mode_str == "count-all" ? lrc3::SearchTask::Mode::kCountAll
                                            : lrc3::SearchTask::Mode::kFindFirst;
        task.workers = workers;
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      lrc3::SearchResult res;
      try {
        res = lrc3::exists_optimal_lrc(task);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      if (sformat == "kv") {
        std::cout << "found=" << (res.found ? "true" : "false") << "\n";
        std::cout << "examined=" << res.examined << "\n";
        if (task.mode == lrc3::SearchTask::Mode::kCountAll)
          std::cout << "witness_count=" << res.witness_count << "\n";
        std::cout << "elapsed_s=" << res.elapsed.count() << "\n";
      } else if (res.found) {
        std::cout << "FOUND (" << res.examined << " examined, " << res.elapsed.count()
                  << " s)\n";
        if (task.mode == lrc3::SearchTask::Mode::kCountAll)
          std::cout << res.witness_count << " systematic witnesses\n";
      } else {
        std::cout << "NOT FOUND (" << res.examined << " examined)\n";
      }
      if (res.found && !witness_path.empty())
        lrc3::write_matrix_file(witness_path, *res.witness);
      return res.found ? kExitOk : kExitNotOptimal;
    }

    if (table->parsed()) return run_table(tformat);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
