#include "hom_search.hpp"

#include <algorithm>
#include <limits>

namespace mltg::detail {

namespace {

struct Step {
  bool arrow = true;
  int index = 0;
};

// Arrows first, each next arrow sharing as many already placed endpoints as
// possible, fewest candidates on ties; isolated nodes last.
std::vector<Step> plan(const HomProblem& p) {
  std::vector<Step> steps;
  std::vector<char> node_placed(p.pattern_nodes, 0);
  std::vector<char> arrow_placed(p.pattern_arrows.size(), 0);
  for (std::size_t round = 0; round < p.pattern_arrows.size(); ++round) {
    int best = -1;
    int best_shared = -1;
    std::size_t best_count = std::numeric_limits<std::size_t>::max();
    for (std::size_t a = 0; a < p.pattern_arrows.size(); ++a) {
      if (arrow_placed[a]) continue;
      auto [s, t] = p.pattern_arrows[a];
      int shared = node_placed[s] + (s != t ? node_placed[t] : 0);
      std::size_t count = p.arrow_candidates[a].size();
      if (shared > best_shared || (shared == best_shared && count < best_count)) {
        best = static_cast<int>(a);
        best_shared = shared;
        best_count = count;
      }
    }
    arrow_placed[best] = 1;
    node_placed[p.pattern_arrows[best].first] = 1;
    node_placed[p.pattern_arrows[best].second] = 1;
    steps.push_back({true, best});
  }
  std::vector<int> isolated;
  for (std::size_t v = 0; v < p.pattern_nodes; ++v) {
    if (!node_placed[v]) isolated.push_back(static_cast<int>(v));
  }
  std::stable_sort(isolated.begin(), isolated.end(), [&](int a, int b) {
    return p.node_candidates[a].size() < p.node_candidates[b].size();
  });
  for (int v : isolated) steps.push_back({false, v});
  return steps;
}

class Searcher {
 public:
  Searcher(const HomProblem& p, const std::vector<Step>& steps) : p_(p), steps_(steps) {
    allowed_.assign(p.pattern_nodes, std::vector<char>(p.target_nodes, 0));
    for (std::size_t v = 0; v < p.pattern_nodes; ++v) {
      for (int c : p.node_candidates[v]) allowed_[v][c] = 1;
    }
    state_.nodes.assign(p.pattern_nodes, -1);
    state_.arrows.assign(p.pattern_arrows.size(), -1);
  }

  // Tries candidate `choice` at step `k` and recurses when it is consistent.
  void run_with_choice(std::size_t k, int choice, std::vector<HomAssignment>& out) {
    const Step& step = steps_[k];
    if (step.arrow) {
      auto [ps, pt] = p_.pattern_arrows[step.index];
      auto [ts, tt] = p_.target_arrows[choice];
      bool set_s = false;
      bool set_t = false;
      if (!bind(ps, ts, set_s)) return;
      if (!bind(pt, tt, set_t)) {
        if (set_s) state_.nodes[ps] = -1;
        return;
      }
      state_.arrows[step.index] = choice;
      descend(k + 1, out);
      state_.arrows[step.index] = -1;
      if (set_t) state_.nodes[pt] = -1;
      if (set_s) state_.nodes[ps] = -1;
    } else {
      state_.nodes[step.index] = choice;
      descend(k + 1, out);
      state_.nodes[step.index] = -1;
    }
  }

  void descend(std::size_t k, std::vector<HomAssignment>& out) {
    if (k == steps_.size()) {
      out.push_back(state_);
      return;
    }
    for (int c : candidates(k)) run_with_choice(k, c, out);
  }

  const std::vector<int>& candidates(std::size_t k) const {
    const Step& step = steps_[k];
    return step.arrow ? p_.arrow_candidates[step.index] : p_.node_candidates[step.index];
  }

 private:
  bool bind(int pattern_node, int target_node, bool& newly_set) {
    int& slot = state_.nodes[pattern_node];
    if (slot >= 0) return slot == target_node;
    if (!allowed_[pattern_node][target_node]) return false;
    slot = target_node;
    newly_set = true;
    return true;
  }

  const HomProblem& p_;
  const std::vector<Step>& steps_;
  std::vector<std::vector<char>> allowed_;
  HomAssignment state_;
};

}  // namespace

std::vector<HomAssignment> search_serial(const HomProblem& problem) {
  auto steps = plan(problem);
  std::vector<HomAssignment> out;
  Searcher searcher(problem, steps);
  searcher.descend(0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HomAssignment> search_parallel(const HomProblem& problem) {
  auto steps = plan(problem);
  if (steps.empty()) return search_serial(problem);
  const auto& first = steps.front().arrow ? problem.arrow_candidates[steps.front().index]
                                          : problem.node_candidates[steps.front().index];
  const auto count = static_cast<long>(first.size());
  std::vector<std::vector<HomAssignment>> parts(first.size());
#pragma omp parallel for schedule(dynamic)
  for (long c = 0; c < count; ++c) {
    Searcher searcher(problem, steps);
    searcher.run_with_choice(0, first[c], parts[c]);
  }
  std::vector<HomAssignment> out;
  for (auto& part : parts) {
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mltg::detail
