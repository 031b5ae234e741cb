#include "earring/families.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "earring/archipelago.hpp"

namespace earring::families {

using transfinite::LetterStream;
using transfinite::LevelRule;
using transfinite::MultiplicityRule;
using transfinite::OccurrenceBound;
using words::Letter;
using words::ReducedWord;

OddChoice OddChoice::from_rule(std::function<int(int)> rule) {
  if (!rule) throw std::invalid_argument("assignment needs a total rule");
  return OddChoice(std::move(rule));
}

OddChoice OddChoice::from_support(std::set<int> ones) {
  for (int odd : ones)
    if (odd < 1 || odd % 2 == 0)
      throw std::invalid_argument("support must consist of positive odds");
  return OddChoice([ones = std::move(ones)](int odd) {
    return ones.count(odd) ? 1 : 0;
  });
}

int OddChoice::value(int odd) const {
  if (odd < 1 || odd % 2 == 0)
    throw std::invalid_argument("assignment is defined on positive odds only");
  return rule_(odd) ? 1 : 0;
}

SupportedPermutation tau_of(const OddChoice& f) {
  SupportedPermutation tau;
  tau.rule = [f](int k) {
    if (k < 1) throw std::invalid_argument("position must be >= 1");
    const int block_odd = k % 2 == 1 ? k : k - 1;
    if (f.value(block_odd) == 1) return k % 2 == 1 ? k + 1 : k - 1;
    return k;
  };
  // Images lag positions by at most one, so position n+1 is the last
  // that can map to {1..n}.
  tau.horizon = [](int n) {
    if (n < 1) throw std::invalid_argument("level must be >= 1");
    return n + 1;
  };
  return tau;
}

TransfiniteElement permutation_element(const SupportedPermutation& tau) {
  if (!tau.rule || !tau.horizon)
    throw std::invalid_argument("permutation needs total rules");
  LetterStream stream;
  stream.letter_at = [rule = tau.rule](int k) { return Letter{rule(k), +1}; };
  stream.horizon = tau.horizon;
  // Each position contributes one positive letter and positions are
  // permuted, so no generator can appear more than once.
  return stream_element(std::move(stream),
                        [](int) { return OccurrenceBound::finite(1); });
}

TransfiniteElement cor1_element(TransfiniteElement w) {
  // Lazy range guard: same projections as w, but a projection that uses
  // x1 or x2 is refused at the level where it happens.
  LevelRule guarded = [w](int n) {
    ReducedWord p = transfinite::projection_at(w, n);
    if (!p.empty() && words::min_index(p) < 3) {
      std::ostringstream msg;
      msg << "conjugating word uses x" << words::min_index(p) << " at level "
          << n << "; only indices >= 3 are allowed";
      throw std::invalid_argument(msg.str());
    }
    return p;
  };
  MultiplicityRule guarded_mult = [w](int i) {
    return i < 3 ? OccurrenceBound::finite(0)
                 : transfinite::multiplicity_of(w, i);
  };
  TransfiniteElement inner =
      transfinite::level_rule_element(std::move(guarded),
                                      std::move(guarded_mult));
  TransfiniteElement marker = transfinite::finite_element(
      ReducedWord::from_reduced({{1, +1}, {2, -1}}));
  std::vector<TransfiniteElement> parts;
  parts.reserve(4);
  parts.push_back(marker);
  parts.push_back(inner);
  parts.push_back(marker);
  parts.push_back(transfinite::inverse(inner));
  return transfinite::product(std::move(parts));
}

TransfiniteElement intro_trivial_element() {
  LetterStream ascending;
  ascending.letter_at = [](int k) {
    if (k < 1) throw std::invalid_argument("position must be >= 1");
    return Letter{k + 2, +1};
  };
  ascending.horizon = [](int n) { return n > 2 ? n - 2 : 0; };
  TransfiniteElement tail = transfinite::stream_element(
      std::move(ascending), [](int i) {
        return OccurrenceBound::finite(i < 3 ? 0 : 1);
      });
  return cor1_element(std::move(tail));
}

TransfiniteElement intro_essential_element() {
  LetterStream alternating;
  alternating.letter_at = [](int k) {
    if (k < 1) throw std::invalid_argument("position must be >= 1");
    return Letter{k, k % 2 == 1 ? +1 : -1};
  };
  alternating.horizon = [](int n) { return n; };
  return transfinite::stream_element(
      std::move(alternating), [](int) { return OccurrenceBound::finite(1); });
}

std::vector<OddChoice> inequivalent_assignments(int count) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  int bits = 1;
  while ((std::int64_t{1} << bits) < count) ++bits;
  std::vector<OddChoice> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int m = 0; m < count; ++m)
    out.push_back(OddChoice::from_rule([m, bits](int odd) {
      const int block = (odd + 1) / 2;
      if (block < 6) return 0;
      return (m >> ((block - 6) % bits)) & 1;
    }));
  return out;
}

bool DistinctnessReport::all_separated() const {
  for (const PairRecord& pair : pairs)
    for (int level : pair.separation_levels)
      if (level < 0) return false;
  return true;
}

namespace {

// FNV-1a over (index, sign) codes. Fingerprints only steer the search:
// differing fingerprints prove differing words, while matching
// fingerprints are re-checked against the words themselves.
std::uint64_t word_hash(const ReducedWord& w) {
  std::uint64_t h = 1469598103934665603ull;
  for (const Letter& letter : w.letters()) {
    const std::uint64_t code =
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(letter.index))
         << 1) |
        (letter.sign > 0 ? 1u : 0u);
    h = (h ^ code) * 1099511628211ull;
  }
  return h;
}

}  // namespace

DistinctnessReport distinctness_harness(
    const std::vector<TransfiniteElement>& elements, int threshold_max,
    int depth) {
  if (elements.empty())
    throw std::invalid_argument("need at least one element");
  if (threshold_max < 1)
    throw std::invalid_argument("threshold bound must be >= 1");
  if (depth < threshold_max)
    throw std::invalid_argument("depth must be >= the threshold bound");

  const std::size_t count = elements.size();

  // Collapsed-projection fingerprints per element, threshold, level.
  std::vector<std::vector<std::vector<std::uint64_t>>> prints(count);
  for (std::size_t e = 0; e < count; ++e) {
    prints[e].resize(static_cast<std::size_t>(threshold_max));
    for (int threshold = 1; threshold <= threshold_max; ++threshold) {
      auto& levels = prints[e][static_cast<std::size_t>(threshold - 1)];
      levels.reserve(static_cast<std::size_t>(depth - threshold + 1));
      for (int n = threshold; n <= depth; ++n)
        levels.push_back(word_hash(
            archipelago::collapsed_projection(elements[e], threshold, n)));
    }
  }

  DistinctnessReport report;
  report.threshold_max = threshold_max;
  report.depth = depth;
  report.element_count = count;
  report.pairs.reserve(count * (count - 1) / 2);

  for (std::size_t i = 0; i + 1 < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      PairRecord record;
      record.first = i;
      record.second = j;
      record.separation_levels.reserve(
          static_cast<std::size_t>(threshold_max));
      for (int threshold = 1; threshold <= threshold_max; ++threshold) {
        const auto& a = prints[i][static_cast<std::size_t>(threshold - 1)];
        const auto& b = prints[j][static_cast<std::size_t>(threshold - 1)];
        int level = -1;
        for (std::size_t k = 0; k < a.size(); ++k)
          if (a[k] != b[k]) {
            level = threshold + static_cast<int>(k);
            break;
          }
        if (level < 0) {
          // No fingerprint difference; confirm on the words themselves so
          // that an "unseparated" entry never rests on a hash collision.
          for (int n = threshold; n <= depth; ++n) {
            if (!(archipelago::collapsed_projection(elements[i], threshold,
                                                    n) ==
                  archipelago::collapsed_projection(elements[j], threshold,
                                                    n))) {
              level = n;
              break;
            }
          }
        }
        record.separation_levels.push_back(level);
      }
      report.pairs.push_back(std::move(record));
    }
  }
  return report;
}

std::string to_text(const DistinctnessReport& report) {
  std::size_t unseparated = 0;
  for (const PairRecord& pair : report.pairs)
    for (int level : pair.separation_levels)
      if (level < 0) {
        ++unseparated;
        break;
      }
  std::ostringstream out;
  out << "elements=" << report.element_count
      << " N-max=" << report.threshold_max << " depth=" << report.depth
      << " pairs=" << report.pairs.size() << " unseparated=" << unseparated
      << "\n";
  for (const PairRecord& pair : report.pairs) {
    out << "pair a=" << pair.first << " b=" << pair.second << " levels=";
    for (std::size_t k = 0; k < pair.separation_levels.size(); ++k) {
      if (k) out << ",";
      out << pair.separation_levels[k];
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace earring::families
