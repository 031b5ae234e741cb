// Expression language for words over the generators x1, x2, ...
//
//   expr   := term+                      (terms juxtaposed, whitespace optional)
//   term   := atom ("^" signed-int)?
//   atom   := "x" digits | "(" expr ")" | "[" expr "," expr "]" | "1"
//
// "[a,b]" is the commutator a b a^-1 b^-1 and "1" is the empty word.
// This grammar is the contract for CLI input and fixture files (UTF-8,
// one expression per line, '#' starts a comment).
#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "earring/words.hpp"

namespace earring::dsl {

class WordExpr;
using WordExprPtr = std::shared_ptr<const WordExpr>;

class WordExpr {
 public:
  struct Generator {
    int index;  // >= 1
  };
  struct Inverse {
    WordExprPtr operand;
  };
  struct Power {
    WordExprPtr base;
    long long exponent;  // any integer; 0 yields the identity
  };
  struct Product {
    std::vector<WordExprPtr> factors;  // empty product is the identity
  };
  struct Commutator {
    WordExprPtr left;
    WordExprPtr right;
  };
  using Node = std::variant<Generator, Inverse, Power, Product, Commutator>;

  explicit WordExpr(Node node) : node_(std::move(node)) {}
  const Node& node() const { return node_; }

  static WordExprPtr generator(int index);
  static WordExprPtr inverse(WordExprPtr operand);
  static WordExprPtr power(WordExprPtr base, long long exponent);
  static WordExprPtr product(std::vector<WordExprPtr> factors);
  static WordExprPtr commutator(WordExprPtr left, WordExprPtr right);

 private:
  Node node_;
};

// Syntax error carrying the 1-based character position of the offending
// input and a description of what was expected.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& expected);
  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

// Exponent magnitudes beyond this are rejected at parse time.
inline constexpr long long kMaxExponent = 1'000'000;

WordExprPtr parse(std::string_view text);

// Structural expansion; powers expand by repetition (negative exponents
// through inversion) and no reduction is performed.
words::RawWord evaluate(const WordExpr& expr);

// Canonical rendering: runs of one signed letter collapse to powers,
// terms are space separated, the empty word prints as "1". Parsing,
// evaluating and reducing the output reproduces the input word.
std::string format(const words::ReducedWord& w);

struct ParsedLine {
  std::size_t line_number;  // 1-based
  WordExprPtr expr;
};

// One expression per line; '#' comments and blank lines are skipped.
// Parse errors are rethrown with the line number prefixed.
std::vector<ParsedLine> parse_lines(std::string_view text);

}  // namespace earring::dsl
