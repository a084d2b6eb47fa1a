#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace kas3 {

/// Backtracking enumerator for packings of 3-element sets.
///
/// Items are either required (must be covered exactly once) or optional
/// (covered at most once). A solution is a set of pairwise disjoint sets that
/// covers every required item. The search branches on the uncovered required
/// item with the fewest still-available sets; once every required item is
/// covered, the remaining available sets (which then touch only optional
/// items) are expanded by include/exclude in index order. Every solution is
/// produced exactly once.
///
/// The top-level branch set is exposed so callers can spread the branches
/// over workers and merge in branch order.
class CoverSearch {
 public:
  using Set = std::array<std::uint32_t, 3>;

  CoverSearch(std::size_t item_count, std::vector<Set> sets, std::vector<bool> required);

  std::size_t root_branch_count() const { return root_options_.size(); }

  /// Calls visit(span<const uint32_t> chosen_sets) for every solution in
  /// root branch `branch`. Set indices in `chosen` are in pick order.
  template <class Visit>
  void visit_branch(std::size_t branch, Visit&& visit) const {
    State state{std::vector<char>(item_count_, 0), {}};
    if (root_final_) {
      expand_optional(state, visit);
      return;
    }
    take(state, root_options_[branch]);
    descend(state, visit);
  }

  template <class Visit>
  void visit(Visit&& visit) const {
    for (std::size_t b = 0; b < root_branch_count(); ++b) visit_branch(b, visit);
  }

 private:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  struct State {
    std::vector<char> covered;
    std::vector<std::uint32_t> chosen;
  };

  bool available(const State& s, std::uint32_t set) const {
    const Set& m = sets_[set];
    return !s.covered[m[0]] && !s.covered[m[1]] && !s.covered[m[2]];
  }

  void take(State& s, std::uint32_t set) const {
    for (std::uint32_t item : sets_[set]) s.covered[item] = 1;
    s.chosen.push_back(set);
  }

  void untake(State& s, std::uint32_t set) const {
    for (std::uint32_t item : sets_[set]) s.covered[item] = 0;
    s.chosen.pop_back();
  }

  /// Returns the most constrained uncovered required item, or kNone when all
  /// are covered. `dead` is set when some required item has no option left.
  std::uint32_t pick(const State& s, bool& dead) const;

  template <class Visit>
  void descend(State& s, Visit& visit) const {
    bool dead = false;
    const std::uint32_t item = pick(s, dead);
    if (dead) return;
    if (item == kNone) {
      expand_optional(s, visit);
      return;
    }
    for (std::uint32_t set : item_sets_[item]) {
      if (!available(s, set)) continue;
      take(s, set);
      descend(s, visit);
      untake(s, set);
    }
  }

  template <class Visit>
  void expand_optional(State& s, Visit& visit) const {
    std::vector<std::uint32_t> rest;
    for (std::uint32_t set = 0; set < sets_.size(); ++set)
      if (available(s, set)) rest.push_back(set);
    expand_from(s, rest, 0, visit);
  }

  template <class Visit>
  void expand_from(State& s, const std::vector<std::uint32_t>& rest, std::size_t pos,
                   Visit& visit) const {
    if (pos == rest.size()) {
      visit(std::span<const std::uint32_t>(s.chosen));
      return;
    }
    expand_from(s, rest, pos + 1, visit);
    if (available(s, rest[pos])) {
      take(s, rest[pos]);
      expand_from(s, rest, pos + 1, visit);
      untake(s, rest[pos]);
    }
  }

  std::size_t item_count_;
  std::vector<Set> sets_;
  std::vector<bool> required_;
  std::vector<std::vector<std::uint32_t>> item_sets_;
  std::vector<std::uint32_t> root_options_;
  bool root_final_ = false;
};

}  // namespace kas3
