#include "rbsep/hitting_set.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace rbsep {

const char* to_string(Method m) {
  switch (m) {
    case Method::BranchAndBound: return "branch-and-bound";
    case Method::Exhaustive: return "exhaustive";
    case Method::IterativeDeepening: return "iterative-deepening";
  }
  return "unknown";
}

namespace {

// Superset elimination is quadratic; above this many distinct sets we only dedupe.
constexpr std::size_t kSupersetPassLimit = 4000;

}  // namespace

HittingSetSolver::HittingSetSolver(std::size_t universe, std::vector<VertexSet> family)
    : universe_(universe), chosen_(universe), excluded_(universe) {
  for (const auto& s : family)
    if (s.empty()) has_empty_ = true;
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());

  if (family.size() <= kSupersetPassLimit) {
    std::stable_sort(family.begin(), family.end(),
                     [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
    std::vector<VertexSet> kept;
    for (auto& s : family) {
      bool dominated = std::any_of(kept.begin(), kept.end(),
                                   [&](const VertexSet& k) { return k.is_subset_of(s); });
      if (!dominated) kept.push_back(std::move(s));
    }
    family = std::move(kept);
  }
  sets_ = std::move(family);
}

bool HittingSetSolver::collect_unhit(std::vector<std::size_t>& unhit, std::size_t& pick) const {
  unhit.clear();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (sets_[i].intersects(chosen_)) continue;
    const std::size_t avail = sets_[i].size() - sets_[i].intersection_size(excluded_);
    if (avail == 0) return false;
    if (avail < best) {
      best = avail;
      pick = i;
    }
    unhit.push_back(i);
  }
  return true;
}

std::size_t HittingSetSolver::packing_bound(const std::vector<std::size_t>& unhit) const {
  std::vector<std::pair<std::size_t, std::size_t>> by_size;
  by_size.reserve(unhit.size());
  for (std::size_t i : unhit)
    by_size.emplace_back(sets_[i].size() - sets_[i].intersection_size(excluded_), i);
  std::sort(by_size.begin(), by_size.end());
  VertexSet used(universe_);
  std::size_t count = 0;
  for (auto [sz, i] : by_size) {
    VertexSet avail = sets_[i] - excluded_;
    if (!avail.intersects(used)) {
      used |= avail;
      ++count;
    }
  }
  return count;
}

std::size_t HittingSetSolver::root_lower_bound() {
  chosen_ = VertexSet(universe_);
  excluded_ = VertexSet(universe_);
  std::vector<std::size_t> unhit;
  std::size_t pick = 0;
  collect_unhit(unhit, pick);
  return packing_bound(unhit);
}

bool HittingSetSolver::depth_limited(std::size_t budget) {
  ++nodes_;
  std::vector<std::size_t> unhit;
  std::size_t pick = 0;
  if (!collect_unhit(unhit, pick)) return false;
  if (unhit.empty()) return true;
  if (budget == 0 || packing_bound(unhit) > budget) return false;

  const std::vector<Vertex> candidates = (sets_[pick] - excluded_).to_vector();
  std::size_t tried = 0;
  bool found = false;
  for (Vertex x : candidates) {
    chosen_.insert(x);
    if (depth_limited(budget - 1)) {
      found = true;
      break;
    }
    chosen_.erase(x);
    excluded_.insert(x);
    ++tried;
  }
  for (std::size_t i = 0; i < tried; ++i) excluded_.erase(candidates[i]);
  return found;
}

void HittingSetSolver::branch_and_bound() {
  ++nodes_;
  std::vector<std::size_t> unhit;
  std::size_t pick = 0;
  if (!collect_unhit(unhit, pick)) return;
  const std::size_t depth = chosen_.size();
  if (unhit.empty()) {
    if (depth < best_size_) {
      best_ = chosen_;
      best_size_ = depth;
    }
    return;
  }
  if (depth + packing_bound(unhit) >= best_size_) return;

  const std::vector<Vertex> candidates = (sets_[pick] - excluded_).to_vector();
  std::size_t tried = 0;
  for (Vertex x : candidates) {
    chosen_.insert(x);
    branch_and_bound();
    chosen_.erase(x);
    excluded_.insert(x);
    ++tried;
    if (depth + 1 >= best_size_) break;
  }
  for (std::size_t i = 0; i < tried; ++i) excluded_.erase(candidates[i]);
}

std::optional<VertexSet> HittingSetSolver::solve(std::size_t at_least, std::size_t at_most,
                                                 Method method) {
  if (has_empty_) return std::nullopt;
  chosen_ = VertexSet(universe_);
  excluded_ = VertexSet(universe_);

  if (method == Method::BranchAndBound) {
    VertexSet incumbent = greedy();
    best_.reset();
    best_size_ = at_most + 1;
    if (incumbent.size() <= at_most) {
      best_ = incumbent;
      best_size_ = incumbent.size();
    }
    if (best_size_ > at_least) branch_and_bound();
    return best_;
  }

  const std::size_t start = std::max(at_least, root_lower_bound());
  for (std::size_t k = start; k <= at_most; ++k) {
    chosen_ = VertexSet(universe_);
    excluded_ = VertexSet(universe_);
    if (depth_limited(k)) return chosen_;
  }
  return std::nullopt;
}

VertexSet HittingSetSolver::greedy() const {
  VertexSet result(universe_);
  std::vector<bool> hit(sets_.size(), false);
  std::size_t remaining = sets_.size();
  while (remaining > 0) {
    std::vector<std::size_t> gain(universe_, 0);
    for (std::size_t i = 0; i < sets_.size(); ++i)
      if (!hit[i]) sets_[i].for_each([&](Vertex v) { ++gain[v]; });
    auto best = std::max_element(gain.begin(), gain.end());
    if (best == gain.end() || *best == 0) break;
    const auto x = static_cast<Vertex>(best - gain.begin());
    result.insert(x);
    for (std::size_t i = 0; i < sets_.size(); ++i)
      if (!hit[i] && sets_[i].contains(x)) {
        hit[i] = true;
        --remaining;
      }
  }
  return result;
}

}  // namespace rbsep
