// The collapse-and-check machinery for the archipelago quotient. Fixing
// a threshold N, every generator x_i with i <= N is rewritten to x_N;
// an element is certified "in kernel" at finite depth when some
// threshold makes all of its collapsed projections vanish through that
// depth, and refuted up to a threshold bound when every threshold leaves
// a nonempty collapsed word somewhere. Certificates name exactly what
// was checked: finite depth is evidence, not proof.
#pragma once

#include <map>
#include <string>
#include <variant>

#include "earring/transfinite.hpp"
#include "earring/words.hpp"

namespace earring::archipelago {

using transfinite::TransfiniteElement;
using words::ReducedWord;

// Defaults for kernel searches; the CLI exposes both as flags.
inline constexpr int kDefaultThresholdMax = 20;
inline constexpr int kDefaultDepth = 50;

// Rewrites every letter of index <= threshold to index `threshold`
// (signs kept), then reduces. A homomorphism for each fixed threshold.
ReducedWord substitute_collapse(const ReducedWord& w, int threshold);

// Rewrites index `threshold` to threshold+1, then reduces. Connects
// consecutive collapses: merge_top(substitute_collapse(w, N), N) equals
// substitute_collapse(w, N+1), which is why a certificate at one
// threshold survives at every larger one.
ReducedWord merge_top(const ReducedWord& w, int threshold);

// The collapsed shadow of e: substitute_collapse applied to the level-n
// projection. Requires level >= threshold >= 1.
ReducedWord collapsed_projection(const TransfiniteElement& e, int threshold,
                                 int level);

// Outcome of checking one threshold through one depth: either every
// collapsed projection in {threshold..depth} vanished, or here is the
// smallest level where one did not, with the surviving word.
struct TrivialThrough {
  int depth = 0;

  friend bool operator==(const TrivialThrough&,
                         const TrivialThrough&) = default;
};
struct WitnessLevel {
  int level = 0;
  ReducedWord word;

  friend bool operator==(const WitnessLevel&, const WitnessLevel&) = default;
};
using KernelCheck = std::variant<TrivialThrough, WitnessLevel>;

// Scans levels threshold..depth in order; requires depth >= threshold.
KernelCheck kernel_check_at(const TransfiniteElement& e, int threshold,
                            int depth);

// Verdict of a bounded kernel search. InKernel carries the first working
// threshold and the depth actually verified; Refuted carries one minimal
// witness per tried threshold; Unknown is reserved for callers that stop
// a scan early and is never produced by kernel_search itself.
struct InKernelVerdict {
  int threshold = 0;
  int verified_depth = 0;

  friend bool operator==(const InKernelVerdict&,
                         const InKernelVerdict&) = default;
};
struct RefutedVerdict {
  int threshold_max = 0;
  int depth = 0;
  std::map<int, WitnessLevel> witnesses;  // threshold -> minimal witness

  friend bool operator==(const RefutedVerdict&,
                         const RefutedVerdict&) = default;
};
struct UnknownVerdict {
  int threshold_max = 0;
  int depth = 0;

  friend bool operator==(const UnknownVerdict&,
                         const UnknownVerdict&) = default;
};
using KernelVerdict =
    std::variant<InKernelVerdict, RefutedVerdict, UnknownVerdict>;

// Tries thresholds 1..threshold_max in increasing order and stops at the
// first that certifies; requires depth >= threshold_max >= 1. Increasing
// order is safe because certificates persist under merge_top.
KernelVerdict kernel_search(const TransfiniteElement& e, int threshold_max,
                            int depth);

// One-record-per-line text form:
//   verdict=in-kernel N=2 depth=50
//   verdict=refuted N-max=20 depth=40
//   witness N=1 level=1 word=x1^2
//   verdict=unknown N-max=20 depth=50
std::string to_text(const KernelVerdict& v);

}  // namespace earring::archipelago
