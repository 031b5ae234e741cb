#include "earring/words.hpp"

#include <stdexcept>

namespace earring::words {

namespace {

void check_letter(const Letter& l) {
  if (l.index < 1) throw std::invalid_argument("letter index must be >= 1");
  if (l.sign != 1 && l.sign != -1)
    throw std::invalid_argument("letter sign must be +1 or -1");
}

}  // namespace

ReducedWord ReducedWord::from_reduced(std::vector<Letter> letters) {
  for (std::size_t k = 0; k < letters.size(); ++k) {
    check_letter(letters[k]);
    if (k + 1 < letters.size() && cancels(letters[k], letters[k + 1]))
      throw std::invalid_argument("sequence is not freely reduced");
  }
  return ReducedWord(std::move(letters));
}

ReducedWord reduce(const RawWord& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    check_letter(l);
    if (!out.empty() && cancels(out.back(), l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return ReducedWord(std::move(out));
}

ReducedWord multiply(const ReducedWord& a, const ReducedWord& b) {
  const auto& u = a.letters();
  const auto& v = b.letters();
  std::size_t i = u.size();
  std::size_t j = 0;
  while (i > 0 && j < v.size() && cancels(u[i - 1], v[j])) {
    --i;
    ++j;
  }
  std::vector<Letter> out;
  out.reserve(i + (v.size() - j));
  out.insert(out.end(), u.begin(), u.begin() + static_cast<std::ptrdiff_t>(i));
  out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(j), v.end());
  return ReducedWord(std::move(out));
}

ReducedWord invert(const ReducedWord& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(it->inverse());
  return ReducedWord(std::move(out));
}

int occurrence_count(const ReducedWord& w, int index) {
  if (index < 1) throw std::invalid_argument("generator index must be >= 1");
  int count = 0;
  for (const Letter& l : w.letters())
    if (l.index == index) ++count;
  return count;
}

bool is_trivial(const ReducedWord& w) { return w.empty(); }

int max_index(const ReducedWord& w) {
  int m = 0;
  for (const Letter& l : w.letters())
    if (l.index > m) m = l.index;
  return m;
}

int min_index(const ReducedWord& w) {
  if (w.empty()) return 0;
  int m = w.letters().front().index;
  for (const Letter& l : w.letters())
    if (l.index < m) m = l.index;
  return m;
}

}  // namespace earring::words
