#include "earring/limits.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "earring/dsl.hpp"

namespace earring::limits {

namespace {

// Entries must stay inside the generator range {base..level} of the free
// group they are supposed to live in.
void check_entry_range(const ReducedWord& w, int base, int level) {
  for (const words::Letter& letter : w.letters()) {
    if (letter.index < base || letter.index > level) {
      std::ostringstream msg;
      msg << "entry at level " << level << " uses x" << letter.index
          << ", outside the allowed range {" << base << ".." << level << "}";
      throw std::invalid_argument(msg.str());
    }
  }
}

}  // namespace

TruncatedSequence::TruncatedSequence(int base, int depth,
                                     std::vector<ReducedWord> entries)
    : base_(base), depth_(depth), entries_(std::move(entries)) {
  if (base_ < 1) throw std::invalid_argument("base must be >= 1");
  if (depth_ < base_)
    throw std::invalid_argument("depth must be >= base");
  const std::size_t expected = static_cast<std::size_t>(depth_ - base_ + 1);
  if (entries_.size() != expected) {
    std::ostringstream msg;
    msg << "expected " << expected << " entries for levels {" << base_ << ".."
        << depth_ << "}, got " << entries_.size();
    throw std::invalid_argument(msg.str());
  }
  for (int level = base_; level <= depth_; ++level)
    check_entry_range(entries_[static_cast<std::size_t>(level - base_)], base_,
                      level);
}

const ReducedWord& TruncatedSequence::at(int level) const {
  if (level < base_ || level > depth_) {
    std::ostringstream msg;
    msg << "level " << level << " outside window {" << base_ << ".." << depth_
        << "}";
    throw std::out_of_range(msg.str());
  }
  return entries_[static_cast<std::size_t>(level - base_)];
}

ReducedWord delete_above(const ReducedWord& w, int n) {
  if (n < 1) throw std::invalid_argument("level must be >= 1");
  words::RawWord kept;
  kept.reserve(w.length());
  for (const words::Letter& letter : w.letters())
    if (letter.index <= n) kept.push_back(letter);
  return words::reduce(kept);
}

ReducedWord bonding(const ReducedWord& w, int n) {
  if (n < 1) throw std::invalid_argument("level must be >= 1");
  if (words::max_index(w) > n + 1) {
    std::ostringstream msg;
    msg << "word uses x" << words::max_index(w)
        << " but the bonding map out of level " << n + 1 << " only accepts "
        << "indices <= " << n + 1;
    throw std::invalid_argument(msg.str());
  }
  return delete_above(w, n);
}

std::optional<CompatibilityViolation> check_compatibility(
    const TruncatedSequence& s) {
  for (int n = s.base(); n < s.depth(); ++n) {
    ReducedWord expected = bonding(s.at(n + 1), n);
    if (!(expected == s.at(n)))
      return CompatibilityViolation{n, std::move(expected), s.at(n)};
  }
  return std::nullopt;
}

TruncatedSequence pointwise_multiply(const TruncatedSequence& a,
                                     const TruncatedSequence& b) {
  if (a.base() != b.base() || a.depth() != b.depth())
    throw std::invalid_argument("windows must share base and depth");
  std::vector<ReducedWord> entries;
  entries.reserve(static_cast<std::size_t>(a.depth() - a.base() + 1));
  for (int n = a.base(); n <= a.depth(); ++n)
    entries.push_back(words::multiply(a.at(n), b.at(n)));
  return TruncatedSequence(a.base(), a.depth(), std::move(entries));
}

TruncatedSequence pointwise_invert(const TruncatedSequence& a) {
  std::vector<ReducedWord> entries;
  entries.reserve(static_cast<std::size_t>(a.depth() - a.base() + 1));
  for (int n = a.base(); n <= a.depth(); ++n)
    entries.push_back(words::invert(a.at(n)));
  return TruncatedSequence(a.base(), a.depth(), std::move(entries));
}

std::string to_text(const TruncatedSequence& s) {
  std::ostringstream out;
  out << "base=" << s.base() << " depth=" << s.depth() << "\n";
  for (int n = s.base(); n <= s.depth(); ++n)
    out << dsl::format(s.at(n)) << "\n";
  return out.str();
}

namespace {

// Parses "key=<int>" starting at *pos, advancing past it.
int parse_keyed_int(std::string_view text, std::string_view key,
                    std::size_t* pos) {
  while (*pos < text.size() && (text[*pos] == ' ' || text[*pos] == '\t'))
    ++*pos;
  if (text.substr(*pos, key.size()) != key ||
      *pos + key.size() >= text.size() || text[*pos + key.size()] != '=')
    throw std::runtime_error("malformed header: expected \"" +
                             std::string(key) + "=<number>\"");
  *pos += key.size() + 1;
  int value = 0;
  const char* begin = text.data() + *pos;
  const char* end = text.data() + text.size();
  auto [next, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc())
    throw std::runtime_error("malformed header: bad number after \"" +
                             std::string(key) + "=\"");
  *pos = static_cast<std::size_t>(next - text.data());
  return value;
}

}  // namespace

TruncatedSequence from_text(std::string_view text) {
  // Header is the first non-blank, non-comment line.
  std::size_t start = 0;
  std::string_view header;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(
        start, end == std::string_view::npos ? text.size() - start : end - start);
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = line.find_first_not_of(" \t\r") == std::string_view::npos;
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    if (!blank) {
      header = line;
      break;
    }
  }
  if (header.empty()) throw std::runtime_error("missing \"base= depth=\" header");

  std::size_t pos = 0;
  const int base = parse_keyed_int(header, "base", &pos);
  const int depth = parse_keyed_int(header, "depth", &pos);
  if (header.find_first_not_of(" \t\r", pos) != std::string_view::npos)
    throw std::runtime_error("malformed header: trailing text after depth");
  if (base < 1) throw std::invalid_argument("base must be >= 1");
  if (depth < base) throw std::invalid_argument("depth must be >= base");

  std::vector<dsl::ParsedLine> lines =
      dsl::parse_lines(start > text.size() ? std::string_view{}
                                           : text.substr(start));
  const std::size_t expected = static_cast<std::size_t>(depth - base + 1);
  if (lines.size() != expected) {
    std::ostringstream msg;
    msg << "expected " << expected << " entry lines for levels {" << base
        << ".." << depth << "}, got " << lines.size();
    throw std::runtime_error(msg.str());
  }
  std::vector<ReducedWord> entries;
  entries.reserve(lines.size());
  for (const dsl::ParsedLine& line : lines)
    entries.push_back(words::reduce(dsl::evaluate(*line.expr)));
  return TruncatedSequence(base, depth, std::move(entries));
}

}  // namespace earring::limits
