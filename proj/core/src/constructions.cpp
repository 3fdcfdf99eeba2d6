#include "lrc3/constructions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lrc3/class5_fixtures_data.hpp"

namespace lrc3 {

Gf3Matrix tetracode_parity() {
  return Gf3Matrix::from_rows({{0, 1, 1, 1},  //
                               {1, 0, 1, 2}});
}

Gf3Matrix hamming13_parity() {
  return Gf3Matrix::from_rows({{1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0},
                               {1, 1, 2, 2, 2, 1, 0, 0, 0, 0, 1, 1, 1},
                               {1, 2, 1, 2, 0, 0, 1, 2, 0, 1, 0, 1, 2}});
}

Gf3Matrix length8_dim2_parity() {
  return Gf3Matrix::from_rows({{1, 1, 0, 0, 0, 0, 0, 0},
                               {0, 0, 1, 1, 0, 0, 0, 0},
                               {0, 0, 0, 0, 1, 1, 0, 0},
                               {0, 0, 0, 0, 0, 0, 1, 1},
                               {0, 1, 0, 1, 0, 1, 0, 0},
                               {0, 2, 0, 1, 0, 0, 0, 1}});
}

Gf3Matrix extended_qr12_parity() {
  return Gf3Matrix::from_rows({{1, 2, 2, 1, 2, 1, 0, 0, 0, 0, 0, 0},
                               {0, 0, 0, 0, 0, 0, 1, 2, 2, 2, 1, 1},
                               {0, 0, 1, 1, 1, 1, 0, 0, 0, 1, 1, 0},
                               {0, 1, 0, 2, 1, 0, 0, 0, 0, 1, 2, 2},
                               {0, 0, 0, 2, 0, 1, 0, 1, 0, 2, 1, 2},
                               {0, 0, 0, 1, 2, 1, 0, 0, 1, 0, 2, 2}});
}

Gf3Matrix length12_dim5_parity() {
  return Gf3Matrix::from_rows({{1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                               {0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0},
                               {0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0},
                               {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1},
                               {0, 2, 1, 0, 2, 1, 0, 2, 1, 0, 0, 0},
                               {0, 0, 2, 0, 2, 2, 0, 2, 0, 0, 1, 0},
                               {0, 1, 1, 0, 1, 0, 0, 2, 0, 0, 0, 1}});
}

Gf3Matrix class1_parity(std::size_t k, std::size_t r) {
  if (r < 1 || k <= r) throw std::invalid_argument("class1: need k > r >= 1");
  const std::size_t blocks = (k + r - 1) / r;
  Gf3Matrix hat = kronecker(Gf3Matrix::identity(blocks), Gf3Matrix::ones_row(r + 1));
  const std::size_t t = k % r;
  if (t == 0) return hat;
  // delete the last r - t columns; earlier rows keep weight r+1, the last row
  // drops to weight t+1 >= 2
  std::vector<std::size_t> drop;
  for (std::size_t j = hat.cols() - (r - t); j < hat.cols(); ++j) drop.push_back(j);
  return delete_columns(hat, drop);
}

LinearCode class1(std::size_t k, std::size_t r) {
  return LinearCode::from_parity_check(class1_parity(k, r));
}

Gf3Matrix class2_parity(std::size_t g) {
  if (g > 4) throw std::invalid_argument("class2: need 0 <= g <= 4");
  Gf3Matrix h = hamming13_parity();
  if (g == 0) return h;
  std::vector<std::size_t> drop;
  for (std::size_t j = 0; j < g; ++j) drop.push_back(j);
  return delete_columns(h, drop);
}

LinearCode class2(std::size_t g) {
  return LinearCode::from_parity_check(class2_parity(g));
}

Gf3Matrix class3_parity(std::size_t k) {
  if (k < 2) throw std::invalid_argument("class3: need k >= 2");
  Gf3Matrix top = kronecker(Gf3Matrix::identity(k + 1), Gf3Matrix::ones_row(2));
  Gf3Matrix bottom = kronecker(Gf3Matrix::ones_row(k + 1), Gf3Matrix::from_rows({{0, 1}}));
  return vstack(top, bottom);
}

LinearCode class3(std::size_t k) {
  return LinearCode::from_parity_check(class3_parity(k));
}

Gf3Matrix class4_parity() { return length8_dim2_parity(); }

LinearCode class4() { return LinearCode::from_parity_check(class4_parity()); }

Gf3Matrix class6_parity(std::size_t l) {
  if (l < 3) throw std::invalid_argument("class6: need l >= 3");
  Gf3Matrix top = kronecker(Gf3Matrix::identity(l), Gf3Matrix::ones_row(4));
  Gf3Matrix bottom = kronecker(Gf3Matrix::ones_row(l),
                               Gf3Matrix::from_rows({{0, 0, 1, 1}, {0, 1, 0, 1}}));
  return vstack(top, bottom);
}

LinearCode class6(std::size_t l) {
  return LinearCode::from_parity_check(class6_parity(l));
}

Gf3Matrix class7_parity(std::size_t l) {
  if (l < 3) throw std::invalid_argument("class7: need l >= 3");
  Gf3Matrix top = kronecker(Gf3Matrix::identity(l), Gf3Matrix::ones_row(3));
  Gf3Matrix bottom = kronecker(Gf3Matrix::ones_row(l), Gf3Matrix::from_rows({{0, 1, 2}}));
  return vstack(top, bottom);
}

LinearCode class7(std::size_t l) {
  return LinearCode::from_parity_check(class7_parity(l));
}

Gf3Matrix class8_parity() { return length12_dim5_parity(); }

LinearCode class8() { return LinearCode::from_parity_check(class8_parity()); }

const std::vector<std::pair<std::size_t, std::size_t>>& class5_targets() {
  static const std::vector<std::pair<std::size_t, std::size_t>> targets = {
      {12, 6}, {11, 6}, {11, 5}, {10, 6}, {10, 5}, {10, 4}, {9, 6}, {9, 5},
      {9, 4},  {9, 3},  {8, 5},  {8, 4},  {8, 3},  {7, 4},  {7, 3}, {6, 3}};
  return targets;
}

std::vector<Class5Fixture> parse_class5_fixtures(const std::string& text) {
  std::vector<Class5Fixture> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    Class5Fixture f;
    std::string colon;
    if (!(ls >> f.n >> f.k >> colon) || colon != ":")
      throw std::runtime_error("fixture line " + std::to_string(lineno) +
                               ": expected \"n k : ...\"");
    std::string tok;
    while (ls >> tok) {
      auto open = tok.find('(');
      auto close = tok.find(')');
      if (open == std::string::npos || close == std::string::npos || close < open)
        throw std::runtime_error("fixture line " + std::to_string(lineno) + ": bad op token \"" +
                                 tok + "\"");
      std::string name = tok.substr(0, open);
      std::size_t pos = std::stoul(tok.substr(open + 1, close - open - 1));
      SurgeryStep step;
      if (name == "puncture")
        step.op = SurgeryStep::Op::kPuncture;
      else if (name == "shorten")
        step.op = SurgeryStep::Op::kShorten;
      else
        throw std::runtime_error("fixture line " + std::to_string(lineno) + ": unknown op \"" +
                                 name + "\"");
      step.pos = pos;
      f.steps.push_back(step);
    }
    out.push_back(std::move(f));
  }
  return out;
}

const std::vector<Class5Fixture>& class5_fixtures() {
  static const std::vector<Class5Fixture> fixtures =
      parse_class5_fixtures(kClass5FixturesText);
  return fixtures;
}

LinearCode apply_surgery(const LinearCode& base, const std::vector<SurgeryStep>& steps) {
  LinearCode c = base;
  for (const auto& s : steps) {
    if (s.op == SurgeryStep::Op::kPuncture)
      c = puncture(c, {s.pos});
    else
      c = shorten(c, {s.pos});
  }
  return c;
}

LinearCode class5(std::size_t n, std::size_t k) {
  for (const auto& f : class5_fixtures()) {
    if (f.n == n && f.k == k)
      return apply_surgery(LinearCode::from_parity_check(extended_qr12_parity()), f.steps);
  }
  throw std::invalid_argument("class5: (" + std::to_string(n) + "," + std::to_string(k) +
                              ") is not one of the 16 admissible parameter pairs");
}

}  // namespace lrc3
