// The worked elements and element families: the swap permutations driven
// by a choice function on the odd integers, the conjugation pattern
// x1 x2^-1 w x1 x2^-1 w^-1 over a high-index word w, the ascending
// trivial example and the alternating essential example, and a pairwise
// distinctness harness that separates elements by comparing collapsed
// projections at every threshold up to a bound.
#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "earring/transfinite.hpp"
#include "earring/words.hpp"

namespace earring::families {

using transfinite::TransfiniteElement;

// Total {0,1}-valued assignment on the odd integers 1, 3, 5, ...
class OddChoice {
 public:
  // Assignment from an arbitrary deterministic rule; nonzero counts as 1.
  static OddChoice from_rule(std::function<int(int)> rule);

  // The listed odds map to 1, every other odd to 0. Throws
  // std::invalid_argument if the set contains an even or nonpositive
  // number.
  static OddChoice from_support(std::set<int> ones);

  // Value at an odd positive integer; throws std::invalid_argument for
  // even or nonpositive input.
  int value(int odd) const;

 private:
  explicit OddChoice(std::function<int(int)> rule) : rule_(std::move(rule)) {}

  std::function<int(int)> rule_;
};

// A permutation of positions given by a rule, together with a horizon:
// horizon(n) bounds the last position whose image is <= n, which keeps
// level-n projections of the induced infinite word finite.
struct SupportedPermutation {
  std::function<int(int)> rule;     // position k >= 1 -> image
  std::function<int(int)> horizon;  // level n >= 1 -> position bound
};

// The block-swap permutation of f: when f(2n-1) = 1 the pair of
// positions (2n-1, 2n) is swapped, otherwise fixed. Its horizon is
// n+1 — an image can lag its position by at most one. f identically 0
// gives the identity permutation.
SupportedPermutation tau_of(const OddChoice& f);

// The infinite positive word x_{tau(1)} x_{tau(2)} x_{tau(3)} ... as a
// lazy element. Every generator occurs at most once, so the declared
// multiplicity is a flat cap of 1.
TransfiniteElement permutation_element(const SupportedPermutation& tau);

// x1 x2^-1 w x1 x2^-1 w^-1 for a word w over generators x3, x4, ....
// The range condition on w is enforced lazily: projecting the result at
// a level where w's projection dips below x3 throws
// std::invalid_argument.
TransfiniteElement cor1_element(TransfiniteElement w);

// The trivial worked example: the conjugation pattern applied to the
// ascending word x3 x4 x5 ....
TransfiniteElement intro_trivial_element();

// The essential worked example: x1 x2^-1 x3 x4^-1 ..., one generator
// per position with alternating signs.
TransfiniteElement intro_essential_element();

// `count` pairwise-inequivalent assignments: any two differ on
// infinitely many odds. Blocks below 6 are left unswapped so that low
// thresholds cannot collapse a differing block; block j >= 6 of the m-th
// assignment follows bit (j-6) mod B of m, with B the bit width needed
// for `count` values.
std::vector<OddChoice> inequivalent_assignments(int count);

// Where one pair of elements came apart: separation_levels[N-1] is the
// smallest level at which the two collapsed projections under threshold
// N differ, or -1 when they agree through the whole depth.
struct PairRecord {
  std::size_t first = 0;  // indices into the harness input list
  std::size_t second = 0;
  std::vector<int> separation_levels;

  friend bool operator==(const PairRecord&, const PairRecord&) = default;
};

struct DistinctnessReport {
  int threshold_max = 0;
  int depth = 0;
  std::size_t element_count = 0;
  std::vector<PairRecord> pairs;  // all pairs first < second, in order

  // True when every pair separated at every threshold.
  bool all_separated() const;
};

// Compares every pair of elements: for each threshold N <= threshold_max
// looks for the smallest level n in {N..depth} where the collapsed
// projections differ. Deterministic given inputs and bounds. Requires a
// nonempty list and depth >= threshold_max >= 1.
DistinctnessReport distinctness_harness(
    const std::vector<TransfiniteElement>& elements, int threshold_max,
    int depth);

// Header line "elements=.. N-max=.. depth=.. pairs=.. unseparated=..",
// then one "pair a=I b=J levels=l1,l2,..." line per pair (-1 marks an
// unseparated threshold).
std::string to_text(const DistinctnessReport& report);

}  // namespace earring::families
