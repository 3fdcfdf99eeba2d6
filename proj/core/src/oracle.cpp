#include "lrc3/oracle.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "lrc3/bounds.hpp"

namespace lrc3 {

namespace {

// Messages with first nonzero digit 1: one representative per scalar pair.
// Hamming weight is scaling-invariant, so these suffice for distance checks.
struct MessageSet {
  std::vector<std::vector<uint8_t>> digits;
  std::vector<std::size_t> weight;
};

MessageSet projective_messages(std::size_t k) {
  MessageSet ms;
  std::vector<uint8_t> d(k, 0);
  uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= 3;
  for (uint64_t t = 1; t < total; ++t) {
    std::size_t i = k;
    while (i > 0) {
      --i;
      d[i] = uint8_t((d[i] + 1) % 3);
      if (d[i] != 0) break;
    }
    uint8_t lead = 0;
    for (auto v : d)
      if (v != 0) {
        lead = v;
        break;
      }
    if (lead != 1) continue;
    std::size_t w = 0;
    for (auto v : d) w += (v != 0);
    ms.digits.push_back(d);
    ms.weight.push_back(w);
  }
  return ms;
}

void decode_candidate(uint64_t index, std::size_t k, std::size_t m,
                      std::vector<uint8_t>& a) {
  // a is the k x m entry block of [I_k | A], row-major; the first entry is
  // the most significant base-3 digit so ascending index = lexicographic A
  a.assign(k * m, 0);
  for (std::size_t pos = k * m; pos-- > 0;) {
    a[pos] = uint8_t(index % 3);
    index /= 3;
  }
}

bool candidate_distance_ok(const std::vector<uint8_t>& a, std::size_t k, std::size_t m,
                           std::size_t target_d, const MessageSet& ms,
                           std::vector<uint8_t>& scratch) {
  if (target_d <= 1) return true;
  for (std::size_t t = 0; t < ms.digits.size(); ++t) {
    if (ms.weight[t] >= target_d) continue;  // identity part already suffices
    const auto& msg = ms.digits[t];
    scratch.assign(m, 0);
    for (std::size_t i = 0; i < k; ++i) {
      uint8_t v = msg[i];
      if (v == 0) continue;
      const uint8_t* row = a.data() + i * m;
      for (std::size_t j = 0; j < m; ++j)
        scratch[j] = gf3_add(scratch[j], gf3_mul(v, row[j]));
    }
    std::size_t w = ms.weight[t];
    for (std::size_t j = 0; j < m; ++j) w += (scratch[j] != 0);
    if (w < target_d) return false;
  }
  return true;
}

bool candidate_locality_ok(const std::vector<uint8_t>& a, std::size_t n, std::size_t k,
                           std::size_t m, std::size_t r, const MessageSet& dual_ms,
                           std::vector<uint8_t>& dw) {
  // H = [-A^T | I_m]; dual words are x.H = (-x.A^T | x)
  std::vector<bool> covered(n, false);
  std::size_t uncovered = n;
  for (std::size_t t = 0; t < dual_ms.digits.size(); ++t) {
    const auto& x = dual_ms.digits[t];
    dw.assign(n, 0);
    std::size_t w = dual_ms.weight[t];  // identity block contributes wt(x)
    for (std::size_t i = 0; i < k; ++i) {
      uint8_t v = 0;
      const uint8_t* row = a.data() + i * m;
      for (std::size_t j = 0; j < m; ++j)
        if (x[j] != 0) v = gf3_add(v, gf3_mul(x[j], row[j]));
      dw[i] = gf3_neg(v);
      w += (dw[i] != 0);
    }
    if (w > r + 1) continue;
    for (std::size_t i = 0; i < k; ++i)
      if (dw[i] != 0 && !covered[i]) {
        covered[i] = true;
        --uncovered;
      }
    for (std::size_t j = 0; j < m; ++j)
      if (x[j] != 0 && !covered[k + j]) {
        covered[k + j] = true;
        --uncovered;
      }
    if (uncovered == 0) return true;
  }
  return uncovered == 0;
}

}  // namespace

SearchResult exists_optimal_lrc(const SearchTask& task) {
  const std::size_t n = task.n, k = task.k, m = n - k;
  if (k < 1 || k >= n) throw std::invalid_argument("exists_optimal_lrc: need 1 <= k <= n-1");
  const std::size_t bits = k * m;
  if (bits > 38) throw std::invalid_argument("exists_optimal_lrc: search space exceeds cap");
  uint64_t total = 1;
  for (std::size_t i = 0; i < bits; ++i) total *= 3;
  if (total > task.cap)
    throw std::invalid_argument("exists_optimal_lrc: 3^" + std::to_string(bits) +
                                " candidates exceed cap");

  const MessageSet ms = projective_messages(k);
  const MessageSet dual_ms = projective_messages(m);

  const auto t0 = std::chrono::steady_clock::now();
  std::atomic<uint64_t> best{UINT64_MAX};
  std::atomic<uint64_t> examined{0};
  std::atomic<uint64_t> count{0};
  const bool count_all = task.mode == SearchTask::Mode::kCountAll;

  const unsigned workers = std::max(1u, task.workers);
  auto worker_fn = [&](uint64_t lo, uint64_t hi) {
    std::vector<uint8_t> a, scratch, dw;
    uint64_t local_examined = 0, local_count = 0;
    for (uint64_t idx = lo; idx < hi; ++idx) {
      if (!count_all && idx >= best.load(std::memory_order_relaxed)) break;
      ++local_examined;
      decode_candidate(idx, k, m, a);
      if (!candidate_distance_ok(a, k, m, task.target_d, ms, scratch)) continue;
      if (!candidate_locality_ok(a, n, k, m, task.r, dual_ms, dw)) continue;
      ++local_count;
      uint64_t cur = best.load(std::memory_order_relaxed);
      while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
      }
      if (!count_all) break;
    }
    examined += local_examined;
    count += local_count;
  };

  if (workers == 1) {
    worker_fn(0, total);
  } else {
    std::vector<std::thread> threads;
    uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      uint64_t lo = w * chunk, hi = std::min(total, lo + chunk);
      if (lo >= hi) break;
      threads.emplace_back(worker_fn, lo, hi);
    }
    for (auto& t : threads) t.join();
  }

  SearchResult res;
  res.examined = examined.load();
  res.witness_count = count.load();
  res.elapsed = std::chrono::steady_clock::now() - t0;
  uint64_t b = best.load();
  if (b != UINT64_MAX) {
    res.found = true;
    std::vector<uint8_t> a;
    decode_candidate(b, k, m, a);
    Gf3Matrix g(k, n);
    for (std::size_t i = 0; i < k; ++i) {
      g.set(i, i, 1);
      for (std::size_t j = 0; j < m; ++j) g.set(i, k + j, a[i * m + j]);
    }
    res.witness = g;
  }
  return res;
}

std::vector<GridRow> scan_parameter_grid(std::size_t n_max, uint64_t cap, unsigned workers) {
  std::vector<GridRow> rows;
  for (std::size_t n = 3; n <= n_max; ++n) {
    for (std::size_t k = 2; k <= n - 1; ++k) {
      // skip spaces the cap cannot cover
      const std::size_t bits = k * (n - k);
      if (bits > 38) continue;
      uint64_t total = 1;
      bool fits = true;
      for (std::size_t i = 0; i < bits; ++i) {
        total *= 3;
        if (total > cap) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      for (std::size_t r = 1; r <= k - 1; ++r) {
        GridRow row;
        row.n = n;
        row.k = k;
        row.r = r;
        row.target_d = singleton_like_d((long long)n, (long long)k, (long long)r);
        ClassVerdict cv = classify((long long)n, (long long)k, (long long)r);
        row.classifier_exists = cv.exists;
        SearchTask task;
        task.n = n;
        task.k = k;
        task.r = r;
        task.target_d = row.target_d < 1 ? 1 : (std::size_t)row.target_d;
        task.cap = cap;
        task.workers = workers;
        if (row.target_d < 1) {
          // the bound value is not attainable by any code; no oracle run needed
          row.oracle_found = false;
        } else {
          row.oracle_found = exists_optimal_lrc(task).found;
        }
        rows.push_back(row);
      }
    }
  }
  return rows;
}

}  // namespace lrc3
