#include <doctest.h>

#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "earring/archipelago.hpp"
#include "earring/dsl.hpp"
#include "earring/families.hpp"
#include "earring/limits.hpp"
#include "earring/transfinite.hpp"
#include "earring/words.hpp"
#include "support/generators.hpp"
#include "support/reduction_oracle.hpp"

using namespace earring;
using archipelago::InKernelVerdict;
using archipelago::RefutedVerdict;
using archipelago::TrivialThrough;
using archipelago::UnknownVerdict;
using archipelago::WitnessLevel;
using transfinite::TransfiniteElement;
using words::Letter;
using words::RawWord;
using words::ReducedWord;

namespace {

ReducedWord word(const std::string& text) {
  return words::reduce(dsl::evaluate(*dsl::parse(text)));
}

TransfiniteElement finite(const std::string& text) {
  return transfinite::finite_element(word(text));
}

ReducedWord letter_word(int index) {
  return ReducedWord::from_reduced({Letter{index, 1}});
}

// Reduced word over x3, x4, ... — a random word with every index lifted.
ReducedWord random_high_word(test_support::Rng& rng) {
  ReducedWord low = test_support::random_reduced_word(rng, 12, 6);
  std::vector<Letter> lifted;
  for (Letter l : low.letters()) {
    l.index += 2;
    lifted.push_back(l);
  }
  return ReducedWord::from_reduced(std::move(lifted));
}

}  // namespace

TEST_CASE("collapse rewrites low indices to the threshold") {
  CHECK(archipelago::substitute_collapse(word("x1 x2^-1"), 2) == ReducedWord());
  CHECK(archipelago::substitute_collapse(word("x3 x4"), 2) == word("x3 x4"));
  CHECK(archipelago::substitute_collapse(
            word("x1 x2^-1 x3 x4 x1 x2^-1 x4^-1 x3^-1"), 2) == ReducedWord());
  CHECK_THROWS_AS(archipelago::substitute_collapse(word("x1"), 0),
                  std::invalid_argument);
}

TEST_CASE("collapse agrees with the oracle on the rewritten letters") {
  ReducedWord w = word("x1 x2^-1 x3 x4 x1 x2^-1 x4^-1 x3^-1");
  RawWord rewritten;
  for (Letter l : w.letters()) {
    if (l.index <= 2) l.index = 2;
    rewritten.push_back(l);
  }
  CHECK(archipelago::substitute_collapse(w, 2) ==
        test_support::oracle_reduce(rewritten));
}

TEST_CASE("collapse is a homomorphism at every threshold") {
  test_support::Rng rng(91);
  for (int trial = 0; trial < 200; ++trial) {
    ReducedWord u = test_support::random_reduced_word(rng, 30, 8);
    ReducedWord v = test_support::random_reduced_word(rng, 30, 8);
    for (int threshold = 1; threshold <= 5; ++threshold)
      CHECK(archipelago::substitute_collapse(words::multiply(u, v),
                                             threshold) ==
            words::multiply(archipelago::substitute_collapse(u, threshold),
                            archipelago::substitute_collapse(v, threshold)));
  }
}

TEST_CASE("merge_top lifts the threshold index by one") {
  CHECK(archipelago::merge_top(word("x2 x3"), 2) == word("x3 x3"));
  CHECK(archipelago::merge_top(ReducedWord(), 7) == ReducedWord());
  CHECK(archipelago::merge_top(
            archipelago::substitute_collapse(word("x1 x2 x3"), 2), 2) ==
        word("x3 x3 x3"));
}

TEST_CASE("consecutive collapses factor through merge_top") {
  test_support::Rng rng(92);
  for (int trial = 0; trial < 200; ++trial) {
    ReducedWord w = test_support::random_reduced_word(rng, 30, 12);
    for (int threshold = 1; threshold <= 10; ++threshold)
      CHECK(archipelago::merge_top(
                archipelago::substitute_collapse(w, threshold), threshold) ==
            archipelago::substitute_collapse(w, threshold + 1));
  }
}

TEST_CASE("collapsed projections of the worked elements") {
  CHECK(archipelago::collapsed_projection(finite("x1 x2^-1"), 2, 5) ==
        ReducedWord());
  CHECK(archipelago::collapsed_projection(families::intro_essential_element(),
                                          2, 4) == word("x3 x4^-1"));
  // threshold 1 rewrites nothing, so this is the plain projection
  CHECK(archipelago::collapsed_projection(transfinite::counterexample_element(),
                                          1, 3) ==
        word("x1 x2 x1^-1 x2^-1 x1 x3 x1^-1 x3^-1"));
  CHECK_THROWS_AS(archipelago::collapsed_projection(finite("x1"), 3, 2),
                  std::invalid_argument);
}

TEST_CASE("collapsed projections are bonding-compatible above the threshold") {
  std::vector<TransfiniteElement> elements = {
      transfinite::counterexample_element(),
      families::intro_essential_element(), families::intro_trivial_element()};
  for (const TransfiniteElement& e : elements)
    for (int threshold = 1; threshold <= 3; ++threshold)
      for (int n = threshold; n <= 20; ++n)
        CHECK(limits::bonding(
                  archipelago::collapsed_projection(e, threshold, n + 1), n) ==
              archipelago::collapsed_projection(e, threshold, n));
}

TEST_CASE("kernel checks certify the trivial example and refute the essential "
          "one") {
  CHECK(archipelago::kernel_check_at(families::intro_trivial_element(), 2,
                                     50) ==
        archipelago::KernelCheck(TrivialThrough{50}));
  // at threshold 1 nothing collapses, and the level-1 projection is x1^2
  CHECK(archipelago::kernel_check_at(families::intro_trivial_element(), 1,
                                     50) ==
        archipelago::KernelCheck(WitnessLevel{1, word("x1^2")}));
  CHECK(archipelago::kernel_check_at(families::intro_essential_element(), 2,
                                     40) ==
        archipelago::KernelCheck(WitnessLevel{3, word("x3")}));
  CHECK(archipelago::kernel_check_at(finite("1"), 3, 3) ==
        archipelago::KernelCheck(TrivialThrough{3}));
  CHECK_THROWS_AS(archipelago::kernel_check_at(finite("x1"), 3, 2),
                  std::invalid_argument);
}

TEST_CASE("a certificate at one threshold survives at larger ones") {
  for (int threshold = 2; threshold <= 6; ++threshold)
    CHECK(archipelago::kernel_check_at(families::intro_trivial_element(),
                                       threshold, 30) ==
          archipelago::KernelCheck(TrivialThrough{30}));
}

TEST_CASE("kernel search stops at the first certifying threshold") {
  CHECK(archipelago::kernel_search(finite("x1 x2^-1"), 20, 30) ==
        archipelago::KernelVerdict(InKernelVerdict{2, 30}));
  CHECK(archipelago::kernel_search(finite("1"), 20, 50) ==
        archipelago::KernelVerdict(InKernelVerdict{1, 50}));
  CHECK_THROWS_AS(archipelago::kernel_search(finite("x1"), 5, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(archipelago::kernel_search(finite("x1"), 0, 4),
                  std::invalid_argument);
}

TEST_CASE("the essential element is refuted with one minimal witness per "
          "threshold") {
  archipelago::KernelVerdict verdict = archipelago::kernel_search(
      families::intro_essential_element(), 20, 40);
  auto* refuted = std::get_if<RefutedVerdict>(&verdict);
  REQUIRE(refuted != nullptr);
  CHECK(refuted->threshold_max == 20);
  CHECK(refuted->depth == 40);
  REQUIRE(refuted->witnesses.size() == 20);
  for (int threshold = 1; threshold <= 20; ++threshold) {
    // odd thresholds leave x_N exposed at level N; even ones cancel
    // there and the first survivor is x_{N+1} one level up
    const int level = threshold % 2 == 1 ? threshold : threshold + 1;
    CHECK(refuted->witnesses.at(threshold) ==
          WitnessLevel{level, letter_word(level)});
  }
}

TEST_CASE("conjugation-pattern elements over high words land in the kernel") {
  test_support::Rng rng(93);
  for (int trial = 0; trial < 20; ++trial) {
    TransfiniteElement e = families::cor1_element(
        transfinite::finite_element(random_high_word(rng)));
    CHECK(archipelago::kernel_check_at(e, 2, 30) ==
          archipelago::KernelCheck(TrivialThrough{30}));
  }
}

TEST_CASE("verdicts serialize one record per line") {
  CHECK(archipelago::to_text(InKernelVerdict{2, 50}) ==
        "verdict=in-kernel N=2 depth=50\n");
  RefutedVerdict refuted{2, 10,
                         {{1, WitnessLevel{1, word("x1^2")}},
                          {2, WitnessLevel{3, word("x3")}}}};
  CHECK(archipelago::to_text(refuted) ==
        "verdict=refuted N-max=2 depth=10\n"
        "witness N=1 level=1 word=x1^2\n"
        "witness N=2 level=3 word=x3\n");
  CHECK(archipelago::to_text(UnknownVerdict{20, 50}) ==
        "verdict=unknown N-max=20 depth=50\n");
}
