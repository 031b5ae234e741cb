#include "earring/dsl.hpp"

#include <cctype>
#include <utility>

namespace earring::dsl {

WordExprPtr WordExpr::generator(int index) {
  if (index < 1) throw std::invalid_argument("generator index must be >= 1");
  return std::make_shared<WordExpr>(Node{Generator{index}});
}

WordExprPtr WordExpr::inverse(WordExprPtr operand) {
  return std::make_shared<WordExpr>(Node{Inverse{std::move(operand)}});
}

WordExprPtr WordExpr::power(WordExprPtr base, long long exponent) {
  return std::make_shared<WordExpr>(Node{Power{std::move(base), exponent}});
}

WordExprPtr WordExpr::product(std::vector<WordExprPtr> factors) {
  return std::make_shared<WordExpr>(Node{Product{std::move(factors)}});
}

WordExprPtr WordExpr::commutator(WordExprPtr left, WordExprPtr right) {
  return std::make_shared<WordExpr>(
      Node{Commutator{std::move(left), std::move(right)}});
}

ParseError::ParseError(std::size_t position, const std::string& expected)
    : std::runtime_error("parse error at position " + std::to_string(position) +
                         ": " + expected),
      position_(position),
      expected_(expected) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  WordExprPtr run() {
    skip_ws();
    if (at_end()) fail("expected a word expression");
    WordExprPtr e = parse_expr();
    skip_ws();
    if (!at_end()) fail("expected end of input");
    return e;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(pos_ + 1, expected);
  }

  bool starts_atom(char c) const {
    return c == 'x' || c == '(' || c == '[' || c == '1';
  }

  WordExprPtr parse_expr() {
    std::vector<WordExprPtr> terms;
    terms.push_back(parse_term());
    while (true) {
      skip_ws();
      if (at_end() || !starts_atom(peek())) break;
      terms.push_back(parse_term());
    }
    if (terms.size() == 1) return terms.front();
    return WordExpr::product(std::move(terms));
  }

  WordExprPtr parse_term() {
    WordExprPtr atom = parse_atom();
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      long long e = parse_signed_int();
      return WordExpr::power(std::move(atom), e);
    }
    return atom;
  }

  WordExprPtr parse_atom() {
    if (at_end()) fail("expected 'x', '(', '[', or '1'");
    char c = peek();
    if (c == 'x') {
      ++pos_;
      long long index = parse_digits("expected a generator index after 'x'");
      if (index == 0) fail_at(digits_start_, "generator index must be >= 1");
      return WordExpr::generator(static_cast<int>(index));
    }
    if (c == '(') {
      ++pos_;
      skip_ws();
      WordExprPtr inner = parse_expr();
      skip_ws();
      expect(')');
      return inner;
    }
    if (c == '[') {
      ++pos_;
      skip_ws();
      WordExprPtr left = parse_expr();
      skip_ws();
      expect(',');
      skip_ws();
      WordExprPtr right = parse_expr();
      skip_ws();
      expect(']');
      return WordExpr::commutator(std::move(left), std::move(right));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      long long value = parse_digits("expected a digit");
      if (value != 1)
        fail_at(start, "only the identity '1' may appear as a bare number");
      return WordExpr::product({});
    }
    fail("expected 'x', '(', '[', or '1'");
  }

  void expect(char c) {
    if (at_end() || peek() != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  long long parse_signed_int() {
    long long sign = 1;
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      if (peek() == '-') sign = -1;
      ++pos_;
    }
    std::size_t start = pos_;
    long long magnitude = parse_digits("expected an exponent");
    if (magnitude > kMaxExponent)
      fail_at(start, "exponent magnitude exceeds " + std::to_string(kMaxExponent));
    return sign * magnitude;
  }

  long long parse_digits(const std::string& expected) {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail(expected);
    digits_start_ = pos_;
    long long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > kMaxDigitsValue)
        fail_at(digits_start_, "number is too large");
      ++pos_;
    }
    return value;
  }

  [[noreturn]] void fail_at(std::size_t pos, const std::string& expected) const {
    throw ParseError(pos + 1, expected);
  }

  static constexpr long long kMaxDigitsValue = 1'000'000'000;

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t digits_start_ = 0;
};

words::RawWord raw_invert(const words::RawWord& w) {
  words::RawWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

void append(words::RawWord& out, const words::RawWord& part) {
  out.insert(out.end(), part.begin(), part.end());
}

}  // namespace

WordExprPtr parse(std::string_view text) { return Parser(text).run(); }

words::RawWord evaluate(const WordExpr& expr) {
  struct Visitor {
    words::RawWord operator()(const WordExpr::Generator& g) const {
      return {words::Letter{g.index, 1}};
    }
    words::RawWord operator()(const WordExpr::Inverse& i) const {
      return raw_invert(evaluate(*i.operand));
    }
    words::RawWord operator()(const WordExpr::Power& p) const {
      words::RawWord base = evaluate(*p.base);
      if (p.exponent < 0) base = raw_invert(base);
      long long reps = p.exponent < 0 ? -p.exponent : p.exponent;
      words::RawWord out;
      out.reserve(base.size() * static_cast<std::size_t>(reps));
      for (long long r = 0; r < reps; ++r) append(out, base);
      return out;
    }
    words::RawWord operator()(const WordExpr::Product& p) const {
      words::RawWord out;
      for (const auto& f : p.factors) append(out, evaluate(*f));
      return out;
    }
    words::RawWord operator()(const WordExpr::Commutator& c) const {
      words::RawWord a = evaluate(*c.left);
      words::RawWord b = evaluate(*c.right);
      words::RawWord out;
      out.reserve(2 * (a.size() + b.size()));
      append(out, a);
      append(out, b);
      append(out, raw_invert(a));
      append(out, raw_invert(b));
      return out;
    }
  };
  return std::visit(Visitor{}, expr.node());
}

std::string format(const words::ReducedWord& w) {
  if (w.empty()) return "1";
  const auto& letters = w.letters();
  std::string out;
  std::size_t k = 0;
  while (k < letters.size()) {
    std::size_t j = k;
    while (j < letters.size() && letters[j] == letters[k]) ++j;
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(letters[k].index);
    long long exponent = static_cast<long long>(j - k) * letters[k].sign;
    if (exponent != 1) {
      out += '^';
      out += std::to_string(exponent);
    }
    k = j;
  }
  return out;
}

std::vector<ParsedLine> parse_lines(std::string_view text) {
  std::vector<ParsedLine> out;
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(
        start, end == std::string_view::npos ? text.size() - start : end - start);
    ++line_number;
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) {
      try {
        out.push_back({line_number, parse(line)});
      } catch (const ParseError& e) {
        throw ParseError(e.position(), "on line " +
                                           std::to_string(line_number) + ", " +
                                           e.expected());
      }
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace earring::dsl
