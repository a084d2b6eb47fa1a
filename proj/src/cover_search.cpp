#include "kas3/cover_search.hpp"

#include "kas3/error.hpp"

namespace kas3 {

CoverSearch::CoverSearch(std::size_t item_count, std::vector<Set> sets, std::vector<bool> required)
    : item_count_(item_count), sets_(std::move(sets)), required_(std::move(required)) {
  if (required_.size() != item_count_)
    throw PreconditionError("cover search: required mask has wrong length");
  item_sets_.resize(item_count_);
  for (std::uint32_t s = 0; s < sets_.size(); ++s) {
    const Set& m = sets_[s];
    if (m[0] == m[1] || m[0] == m[2] || m[1] == m[2])
      throw PreconditionError("cover search: set with repeated item");
    for (std::uint32_t item : m) {
      if (item >= item_count_) throw PreconditionError("cover search: item out of range");
      item_sets_[item].push_back(s);
    }
  }

  State root{std::vector<char>(item_count_, 0), {}};
  bool dead = false;
  const std::uint32_t item = pick(root, dead);
  if (dead) return;
  if (item == kNone) {
    root_final_ = true;
    root_options_.push_back(kNone);
    return;
  }
  root_options_ = item_sets_[item];
}

std::uint32_t CoverSearch::pick(const State& s, bool& dead) const {
  std::uint32_t best = kNone;
  std::size_t best_count = std::numeric_limits<std::size_t>::max();
  for (std::uint32_t item = 0; item < item_count_; ++item) {
    if (!required_[item] || s.covered[item]) continue;
    std::size_t count = 0;
    for (std::uint32_t set : item_sets_[item])
      if (available(s, set)) ++count;
    if (count == 0) {
      dead = true;
      return kNone;
    }
    if (count < best_count) {
      best = item;
      best_count = count;
      if (count == 1) break;
    }
  }
  return best;
}

}  // namespace kas3
