// One-shot search for the puncture/shorten recipes behind the near-MDS
// family.  Breadth-first over single-coordinate surgery sequences starting
// from the [12,6,6] base code; the first sequence whose result hits
// (n, k, d = n-k, locality = k-1) wins.  Output is the fixture file format;
// redirect into core/data/class5_fixtures.txt.

#include <deque>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lrc3/code.hpp"
#include "lrc3/constructions.hpp"
#include "lrc3/locality.hpp"

using namespace lrc3;

namespace {

std::string step_string(const std::vector<SurgeryStep>& steps) {
  std::string out;
  for (const auto& s : steps) {
    if (!out.empty()) out += " ";
    out += (s.op == SurgeryStep::Op::kPuncture ? "puncture(" : "shorten(") +
           std::to_string(s.pos) + ")";
  }
  return out;
}

bool hits_target(const LinearCode& c, std::size_t n, std::size_t k) {
  if (c.length() != n || c.dimension() != k) return false;
  if (min_distance(c) != n - k) return false;
  return code_locality(c).code_locality == k - 1;
}

// Intermediate codes on a working path stay at d = n'-k'; pruning on that
// keeps the frontier tiny.
bool plausible(const LinearCode& c) {
  if (c.dimension() < 1 || c.dimension() >= c.length()) return false;
  return min_distance(c) == c.length() - c.dimension();
}

std::vector<SurgeryStep> bfs(const LinearCode& base, std::size_t n, std::size_t k,
                             bool prune) {
  struct Node {
    LinearCode code;
    std::vector<SurgeryStep> steps;
  };
  std::deque<Node> frontier{{base, {}}};
  std::map<std::string, bool> seen;
  const std::size_t depth = 12 - n;
  while (!frontier.empty()) {
    Node node = std::move(frontier.front());
    frontier.pop_front();
    if (node.steps.size() == depth) {
      if (hits_target(node.code, n, k)) return node.steps;
      continue;
    }
    for (int op = 0; op < 2; ++op) {
      for (std::size_t pos = 1; pos <= node.code.length(); ++pos) {
        SurgeryStep step{op == 0 ? SurgeryStep::Op::kPuncture : SurgeryStep::Op::kShorten,
                        pos};
        std::optional<LinearCode> next;
        try {
          next = apply_surgery(node.code, {step});
        } catch (const std::exception&) {
          continue;
        }
        if (prune && !plausible(*next)) continue;
        std::string key = next->parity_check().to_string();
        if (seen[key]) continue;
        seen[key] = true;
        Node child{std::move(*next), node.steps};
        child.steps.push_back(step);
        frontier.push_back(std::move(child));
      }
    }
  }
  return {};
}

}  // namespace

int main() {
  LinearCode base = LinearCode::from_parity_check(extended_qr12_parity());
  bool all_found = true;
  for (const auto& [n, k] : class5_targets()) {
    std::vector<SurgeryStep> steps;
    if (n == 12 && k == 6) {
      // base code itself
    } else {
      steps = bfs(base, n, k, /*prune=*/true);
      if (steps.empty() && !hits_target(base, n, k)) steps = bfs(base, n, k, /*prune=*/false);
      if (steps.empty()) {
        std::cerr << "# no sequence found for " << n << " " << k << "\n";
        all_found = false;
        continue;
      }
    }
    std::cout << n << " " << k << " : " << step_string(steps) << "\n";
  }
  return all_found ? 0 : 1;
}
