// Infinite words over x1, x2, ... presented lazily: an element is a
// recipe that can produce its level-n projection (the reduced word left
// after erasing every generator above x_n) for any n. All recipes must
// project compatibly — deleting the top generator of the level-(n+1)
// projection must give the level-n projection. Elements also carry
// per-generator occurrence bounds, which is what separates words that
// live in the earring group (every generator appears boundedly often)
// from those that do not; classify_HE turns those bounds plus sampled
// projections into membership evidence.
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "earring/limits.hpp"
#include "earring/words.hpp"

namespace earring::transfinite {

using limits::TruncatedSequence;
using words::Letter;
using words::ReducedWord;

// How often one generator may appear across all projections of an
// element: a hard finite cap, provably unbounded growth, or no claim.
class OccurrenceBound {
 public:
  static OccurrenceBound finite(int count);
  static OccurrenceBound unbounded() { return OccurrenceBound(Kind::Unbounded, 0); }
  static OccurrenceBound unknown() { return OccurrenceBound(Kind::Unknown, 0); }

  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_unbounded() const { return kind_ == Kind::Unbounded; }
  bool is_unknown() const { return kind_ == Kind::Unknown; }

  // Cap for the finite case; throws std::logic_error otherwise.
  int count() const;

  friend bool operator==(const OccurrenceBound&,
                         const OccurrenceBound&) = default;

  // Bound for a concatenation of two words with the given bounds. Finite
  // caps add. Finite + Unbounded stays Unbounded (a bounded factor can
  // cancel only boundedly many letters of the other). Everything else is
  // Unknown: two Unbounded factors may cancel each other entirely, and
  // Unknown absorbs.
  friend OccurrenceBound combine(const OccurrenceBound& a,
                                 const OccurrenceBound& b);

 private:
  enum class Kind { Finite, Unbounded, Unknown };
  OccurrenceBound(Kind kind, int count) : kind_(kind), count_(count) {}

  Kind kind_;
  int count_;
};

// Declared per-generator bounds for an element: index i >= 1 -> bound.
using MultiplicityRule = std::function<OccurrenceBound(int)>;

// An infinite letter sequence with finite shadows: letter_at gives the
// letter at position k >= 1, and horizon(n) is a position P such that
// every letter past P has index > n. The level-n projection therefore
// only ever reads positions 1..horizon(n).
struct LetterStream {
  std::function<Letter(int)> letter_at;
  std::function<int(int)> horizon;  // monotone nondecreasing in n
};

// Scans positions horizon(n)+1 .. horizon(n)+window and returns the
// first one whose letter has index <= n — evidence that the declared
// horizon is wrong — or nullopt if the window is clean.
std::optional<int> horizon_breach(const LetterStream& s, int n, int window);

// Rule giving the whole level-n projection directly, for elements most
// naturally described by their shadows.
using LevelRule = std::function<ReducedWord(int)>;

// Immutable handle to a lazily projected infinite word. Copies share the
// underlying recipe and its projection cache; all operations are safe to
// call concurrently.
class TransfiniteElement {
 public:
  TransfiniteElement() = delete;

 private:
  struct Node;
  explicit TransfiniteElement(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;

  friend TransfiniteElement finite_element(ReducedWord w);
  friend TransfiniteElement stream_element(LetterStream s,
                                           MultiplicityRule multiplicity);
  friend TransfiniteElement level_rule_element(LevelRule rule,
                                               MultiplicityRule multiplicity);
  friend TransfiniteElement product(std::vector<TransfiniteElement> parts);
  friend TransfiniteElement inverse(TransfiniteElement a);
  friend ReducedWord projection_at(const TransfiniteElement& e, int n);
  friend OccurrenceBound multiplicity_of(const TransfiniteElement& e,
                                         int index);
};

// An ordinary finite word, viewed as an infinite one. Its multiplicity
// is exact: the count of each generator in the word.
TransfiniteElement finite_element(ReducedWord w);

// Element read off an infinite letter sequence. The multiplicity rule is
// the caller's declaration; it is trusted here and cross-checked against
// sampled projections by classify_HE.
TransfiniteElement stream_element(LetterStream s,
                                  MultiplicityRule multiplicity);

// Element given by its projections. The rule must be deterministic and
// emit, at level n, a word over indices <= n only (checked on use).
TransfiniteElement level_rule_element(LevelRule rule,
                                      MultiplicityRule multiplicity);

// Group operations, assembled lazily: projections of a product are the
// level-wise products of the parts' projections, and likewise for the
// inverse. Multiplicities combine per index (see OccurrenceBound).
TransfiniteElement product(std::vector<TransfiniteElement> parts);
TransfiniteElement product(TransfiniteElement a, TransfiniteElement b);
TransfiniteElement inverse(TransfiniteElement a);

// The reduced level-n shadow of e; n >= 1. Memoized per element and
// level. Throws std::invalid_argument when a level rule emits an index
// above its level.
ReducedWord projection_at(const TransfiniteElement& e, int n);

// Window of projections at levels 1..depth, as a base-1 sequence. The
// result passes check_compatibility for every well-formed element.
TruncatedSequence to_truncated(const TransfiniteElement& e, int depth);

// Declared occurrence bound of generator `index` in e.
OccurrenceBound multiplicity_of(const TransfiniteElement& e, int index);

// Membership evidence for the earring group at truncation depth D.
//
// Member: every generator up to D carries a finite declared cap, and no
// sampled projection exceeds it. Bounds with cap 0 are left out of the
// map. NotMember: some generator's count grows through at least three
// strictly increasing records over the sampled levels; growth_samples
// lists those records as (level, count) pairs. Unknown: neither kind of
// evidence was found by depth D.
struct MemberEvidence {
  std::map<int, int> bounds;
  int verified_depth = 0;

  friend bool operator==(const MemberEvidence&,
                         const MemberEvidence&) = default;
};
struct NotMemberEvidence {
  int witness_index = 0;
  std::vector<std::pair<int, int>> growth_samples;

  friend bool operator==(const NotMemberEvidence&,
                         const NotMemberEvidence&) = default;
};
struct UnknownMembership {
  int verified_depth = 0;

  friend bool operator==(const UnknownMembership&,
                         const UnknownMembership&) = default;
};
using HEClassification =
    std::variant<MemberEvidence, NotMemberEvidence, UnknownMembership>;

// Classifies e against the bounded-occurrence criterion using levels
// 1..depth; depth >= 2. Declared finite caps are verified against every
// sampled projection before being believed. Growth records for an index
// are taken greedily: a level is recorded whenever its count strictly
// exceeds the previous record (starting above zero); three records
// convict. The smallest convicting index is reported.
HEClassification classify_HE(const TransfiniteElement& e, int depth);

// The standard inverse-limit element that escapes the earring group:
// its level-n projection is the product of commutators
// [x1,x2][x1,x3]...[x1,xn] (empty at level 1), so x1 occurs 2(n-1)
// times at level n while every higher generator occurs at most twice.
TransfiniteElement counterexample_element();

}  // namespace earring::transfinite
