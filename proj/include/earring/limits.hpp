// Finite windows of the tower of free groups connected by the bonding
// maps that kill the top generator. A TruncatedSequence holds one reduced
// word per level n in {base..depth}; the window is compatible when each
// entry is the image of the next one under the bonding map. Compatibility
// failures are reported as values so callers can display them.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "earring/words.hpp"

namespace earring::limits {

using words::ReducedWord;

// Window {base..depth} of a level-indexed sequence of reduced words. The
// entry at level n may only use generator indices in {base..n}; that much
// is enforced at construction. Whether the entries actually form a
// compatible chain is a separate question answered by check_compatibility.
class TruncatedSequence {
 public:
  // entries[k] is the word at level base+k; entries.size() must equal
  // depth-base+1. Throws std::invalid_argument on a malformed window
  // (base < 1, depth < base, size mismatch, or an entry whose letters
  // leave the allowed index range for its level).
  TruncatedSequence(int base, int depth, std::vector<ReducedWord> entries);

  int base() const { return base_; }
  int depth() const { return depth_; }

  // Entry at the given level; throws std::out_of_range outside the window.
  const ReducedWord& at(int level) const;

  friend bool operator==(const TruncatedSequence&,
                         const TruncatedSequence&) = default;

 private:
  int base_;
  int depth_;
  std::vector<ReducedWord> entries_;
};

// Erase every letter with index > n, then reduce what is left. Requires
// n >= 1. Idempotent, and the identity on words whose max index is <= n.
ReducedWord delete_above(const ReducedWord& w, int n);

// The bonding map out of level n+1: kills x_{n+1}, keeps everything
// below. Same action as delete_above(w, n), but insists that w actually
// lives at level n+1 (max index <= n+1) and throws std::invalid_argument
// otherwise.
ReducedWord bonding(const ReducedWord& w, int n);

// First level where the chain condition breaks: the entry at `level` is
// not the bonding image of the entry one level up.
struct CompatibilityViolation {
  int level = 0;         // lower level of the failing adjacent pair
  ReducedWord expected;  // bonding(at(level+1), level)
  ReducedWord found;     // at(level)

  friend bool operator==(const CompatibilityViolation&,
                         const CompatibilityViolation&) = default;
};

// Walk the window bottom-up and verify bonding(at(n+1), n) == at(n) for
// every n in {base..depth-1}. Returns nullopt when the whole window is
// compatible, otherwise the first failing level.
std::optional<CompatibilityViolation> check_compatibility(
    const TruncatedSequence& s);

// Level-wise group operations. Both arguments must share base and depth
// (std::invalid_argument otherwise). Compatible inputs give compatible
// results, since the bonding maps are homomorphisms.
TruncatedSequence pointwise_multiply(const TruncatedSequence& a,
                                     const TruncatedSequence& b);
TruncatedSequence pointwise_invert(const TruncatedSequence& a);

// Text form: header line "base=N depth=D", then one word expression per
// level from base up to depth. Comments ("#" to end of line) and blank
// lines are permitted on input and not produced on output.
std::string to_text(const TruncatedSequence& s);

// Parses the format produced by to_text. Throws std::runtime_error on a
// malformed header or a wrong number of entry lines, dsl::ParseError on a
// bad expression, and std::invalid_argument when an entry leaves its
// level's index range.
TruncatedSequence from_text(std::string_view text);

}  // namespace earring::limits
