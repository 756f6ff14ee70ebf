#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace mltg::detail {

/// Index-based homomorphism search problem. Nodes and arrows of both graphs
/// are numbered in name order; candidate lists restrict every pattern element.
struct HomProblem {
  std::size_t pattern_nodes = 0;
  std::size_t target_nodes = 0;
  std::vector<std::pair<int, int>> pattern_arrows;  // (source, target) node indices
  std::vector<std::pair<int, int>> target_arrows;
  std::vector<std::vector<int>> node_candidates;   // per pattern node, ascending
  std::vector<std::vector<int>> arrow_candidates;  // per pattern arrow, ascending
};

struct HomAssignment {
  std::vector<int> nodes;
  std::vector<int> arrows;

  auto operator<=>(const HomAssignment&) const = default;
};

/// All solutions in ascending order. The serial version is the reference
/// for the OpenMP version, which splits on the first search step.
std::vector<HomAssignment> search_serial(const HomProblem& problem);
std::vector<HomAssignment> search_parallel(const HomProblem& problem);

}  // namespace mltg::detail
