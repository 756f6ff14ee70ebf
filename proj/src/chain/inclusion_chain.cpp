#include <ostream>

#include "mltg/chain.hpp"
#include "mltg/error.hpp"

namespace mltg {

InclusionChain::InclusionChain(std::vector<Graph> levels) {
  if (levels.empty()) throw Error(Errc::ChainMismatch, "an inclusion chain needs a host graph");
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (!is_subgraph(levels[i], levels[0])) {
      throw Error(Errc::NotASubgraph, "level " + std::to_string(i) + " is not a subgraph of the host");
    }
  }
  levels_.reserve(levels.size());
  for (auto& g : levels) levels_.push_back(share(std::move(g)));

  std::vector<std::vector<PartialGraphMorphism>> typing(levels_.size());
  for (std::size_t j = 1; j < levels_.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      typing[j].push_back(PartialGraphMorphism::intersection_span(levels_[j], levels_[i]));
    }
  }
  chain_ = share(TypingChain(levels_, std::move(typing)));
}

bool InclusionChain::operator==(const InclusionChain& other) const {
  if (levels_.size() != other.levels_.size()) return false;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (!same_graph(levels_[i], other.levels_[i])) return false;
  }
  return true;
}

InclusionChain inclusion_chain(const Graph& host, std::vector<Graph> levels_above) {
  std::vector<Graph> levels;
  levels.reserve(levels_above.size() + 1);
  levels.push_back(host);
  for (auto& g : levels_above) levels.push_back(std::move(g));
  return InclusionChain(std::move(levels));
}

LevelMap::LevelMap(std::size_t target_depth, std::vector<std::size_t> values)
    : target_depth_(target_depth), values_(std::move(values)) {
  if (values_.empty()) throw Error(Errc::InvalidLevelMap, "a level map needs f(0)");
  if (values_[0] != 0) throw Error(Errc::InvalidLevelMap, "f(0) must be 0");
  if (source_depth() > target_depth_) throw Error(Errc::DepthExceedsTarget, "source depth exceeds target depth");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] > target_depth_) throw Error(Errc::InvalidLevelMap, "level map leaves the target range");
    // Adjacent steps of at least one give the gap law for all pairs.
    if (i > 0 && values_[i] < values_[i - 1] + 1) {
      throw Error(Errc::InvalidLevelMap, "level map violates f(j) - f(i) >= j - i");
    }
  }
}

LevelMap LevelMap::identity(std::size_t n) {
  std::vector<std::size_t> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) v[i] = i;
  return LevelMap(n, std::move(v));
}

bool LevelMap::covers(std::size_t level) const {
  for (auto v : values_) {
    if (v == level) return true;
  }
  return false;
}

bool LevelMap::is_identity() const { return target_depth_ == source_depth(); }

std::ostream& operator<<(std::ostream& os, const LevelMap& f) {
  os << "[";
  for (std::size_t i = 0; i < f.values().size(); ++i) os << (i ? "," : "") << f.values()[i];
  return os << "]";
}

LevelMap compose(const LevelMap& f, const LevelMap& g) {
  if (f.target_depth() != g.source_depth()) throw Error(Errc::ChainMismatch, "level maps are not composable");
  std::vector<std::size_t> v;
  v.reserve(f.values().size());
  for (auto x : f.values()) v.push_back(g(x));
  return LevelMap(g.target_depth(), std::move(v));
}

}  // namespace mltg
