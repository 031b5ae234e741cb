// Exact arithmetic in finitely generated free groups: signed generator
// letters, free reduction, multiplication, inversion, occurrence counts.
// Generator indices are 1-based (x1, x2, ...). All values are immutable
// and all operations are pure; everything here is safe to share across
// threads.
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace earring::words {

// A signed generator x_i or x_i^-1.
struct Letter {
  int index = 1;  // generator subscript, >= 1
  int sign = 1;   // +1 or -1

  Letter inverse() const { return {index, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

// True when a and b form a cancelling adjacent pair.
constexpr bool cancels(const Letter& a, const Letter& b) {
  return a.index == b.index && a.sign == -b.sign;
}

// Unreduced letter sequence; may contain cancelling pairs.
using RawWord = std::vector<Letter>;

// A freely reduced word: no adjacent cancelling pair. The empty sequence
// is the group identity. Instances can only be obtained through reduce,
// multiply, invert, or from_reduced, so the invariant always holds.
class ReducedWord {
 public:
  ReducedWord() = default;

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;

  // Wraps a sequence that must already be freely reduced; throws
  // std::invalid_argument otherwise.
  static ReducedWord from_reduced(std::vector<Letter> letters);

 private:
  explicit ReducedWord(std::vector<Letter> letters)
      : letters_(std::move(letters)) {}

  std::vector<Letter> letters_;

  friend ReducedWord reduce(const RawWord&);
  friend ReducedWord multiply(const ReducedWord&, const ReducedWord&);
  friend ReducedWord invert(const ReducedWord&);
};

// The unique fully cancelled form of w. Single left-to-right pass with a
// pushdown of surviving letters; linear time.
ReducedWord reduce(const RawWord& w);

// Reduced form of the concatenation a.b. Both inputs being reduced,
// cancellation can only happen at the seam.
ReducedWord multiply(const ReducedWord& a, const ReducedWord& b);

// Reverse the sequence and flip every sign; multiply(w, invert(w)) is
// the identity.
ReducedWord invert(const ReducedWord& w);

// Number of letters with the given index, counting both signs.
int occurrence_count(const ReducedWord& w, int index);

bool is_trivial(const ReducedWord& w);

// Largest letter index, or 0 for the empty word.
int max_index(const ReducedWord& w);

// Smallest letter index, or 0 for the empty word.
int min_index(const ReducedWord& w);

}  // namespace earring::words
