#include "earring/archipelago.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "earring/dsl.hpp"

namespace earring::archipelago {

namespace {

void check_threshold(int threshold) {
  if (threshold < 1) throw std::invalid_argument("threshold must be >= 1");
}

}  // namespace

ReducedWord substitute_collapse(const ReducedWord& w, int threshold) {
  check_threshold(threshold);
  words::RawWord raw;
  raw.reserve(w.length());
  for (words::Letter letter : w.letters()) {
    if (letter.index <= threshold) letter.index = threshold;
    raw.push_back(letter);
  }
  return words::reduce(raw);
}

ReducedWord merge_top(const ReducedWord& w, int threshold) {
  check_threshold(threshold);
  words::RawWord raw;
  raw.reserve(w.length());
  for (words::Letter letter : w.letters()) {
    if (letter.index == threshold) letter.index = threshold + 1;
    raw.push_back(letter);
  }
  return words::reduce(raw);
}

ReducedWord collapsed_projection(const TransfiniteElement& e, int threshold,
                                 int level) {
  check_threshold(threshold);
  if (level < threshold)
    throw std::invalid_argument("level must be >= threshold");
  return substitute_collapse(transfinite::projection_at(e, level), threshold);
}

KernelCheck kernel_check_at(const TransfiniteElement& e, int threshold,
                            int depth) {
  check_threshold(threshold);
  if (depth < threshold)
    throw std::invalid_argument("depth must be >= threshold");
  for (int n = threshold; n <= depth; ++n) {
    ReducedWord collapsed = collapsed_projection(e, threshold, n);
    if (!collapsed.empty()) return WitnessLevel{n, std::move(collapsed)};
  }
  return TrivialThrough{depth};
}

KernelVerdict kernel_search(const TransfiniteElement& e, int threshold_max,
                            int depth) {
  check_threshold(threshold_max);
  if (depth < threshold_max)
    throw std::invalid_argument("depth must be >= the threshold bound");
  std::map<int, WitnessLevel> witnesses;
  for (int threshold = 1; threshold <= threshold_max; ++threshold) {
    KernelCheck check = kernel_check_at(e, threshold, depth);
    if (std::holds_alternative<TrivialThrough>(check))
      return InKernelVerdict{threshold, depth};
    witnesses.emplace(threshold, std::get<WitnessLevel>(std::move(check)));
  }
  return RefutedVerdict{threshold_max, depth, std::move(witnesses)};
}

std::string to_text(const KernelVerdict& v) {
  std::ostringstream out;
  if (const auto* in = std::get_if<InKernelVerdict>(&v)) {
    out << "verdict=in-kernel N=" << in->threshold
        << " depth=" << in->verified_depth << "\n";
  } else if (const auto* refuted = std::get_if<RefutedVerdict>(&v)) {
    out << "verdict=refuted N-max=" << refuted->threshold_max
        << " depth=" << refuted->depth << "\n";
    for (const auto& [threshold, witness] : refuted->witnesses)
      out << "witness N=" << threshold << " level=" << witness.level
          << " word=" << dsl::format(witness.word) << "\n";
  } else {
    const auto& unknown = std::get<UnknownVerdict>(v);
    out << "verdict=unknown N-max=" << unknown.threshold_max
        << " depth=" << unknown.depth << "\n";
  }
  return out.str();
}

}  // namespace earring::archipelago
