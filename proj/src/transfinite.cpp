#include "earring/transfinite.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace earring::transfinite {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

OccurrenceBound OccurrenceBound::finite(int count) {
  if (count < 0) throw std::invalid_argument("occurrence cap must be >= 0");
  return OccurrenceBound(Kind::Finite, count);
}

int OccurrenceBound::count() const {
  if (kind_ != Kind::Finite)
    throw std::logic_error("count() on a non-finite occurrence bound");
  return count_;
}

OccurrenceBound combine(const OccurrenceBound& a, const OccurrenceBound& b) {
  if (a.is_finite() && b.is_finite())
    return OccurrenceBound::finite(a.count_ + b.count_);
  if ((a.is_finite() && b.is_unbounded()) ||
      (a.is_unbounded() && b.is_finite()))
    return OccurrenceBound::unbounded();
  return OccurrenceBound::unknown();
}

std::optional<int> horizon_breach(const LetterStream& s, int n, int window) {
  const int guard = std::max(0, s.horizon(n));
  for (int k = guard + 1; k <= guard + window; ++k)
    if (s.letter_at(k).index <= n) return k;
  return std::nullopt;
}

struct TransfiniteElement::Node {
  struct Finite {
    ReducedWord word;
  };
  struct Stream {
    LetterStream stream;
    MultiplicityRule multiplicity;
  };
  struct Rule {
    LevelRule rule;
    MultiplicityRule multiplicity;
  };
  struct Prod {
    std::vector<TransfiniteElement> parts;
  };
  struct Inv {
    TransfiniteElement inner;
  };

  std::variant<Finite, Stream, Rule, Prod, Inv> kind;

  // Projection memo, level -> word. Purely an internal shortcut: rules
  // are required to be deterministic, so a duplicated computation during
  // a race stores the same value.
  mutable std::mutex cache_mutex;
  mutable std::map<int, ReducedWord> cache;
};

TransfiniteElement finite_element(ReducedWord w) {
  using Node = TransfiniteElement::Node;
  auto node = std::make_shared<Node>();
  node->kind = Node::Finite{std::move(w)};
  return TransfiniteElement(std::move(node));
}

TransfiniteElement stream_element(LetterStream s,
                                  MultiplicityRule multiplicity) {
  using Node = TransfiniteElement::Node;
  if (!s.letter_at || !s.horizon || !multiplicity)
    throw std::invalid_argument("stream element needs total rules");
  auto node = std::make_shared<Node>();
  node->kind = Node::Stream{std::move(s), std::move(multiplicity)};
  return TransfiniteElement(std::move(node));
}

TransfiniteElement level_rule_element(LevelRule rule,
                                      MultiplicityRule multiplicity) {
  using Node = TransfiniteElement::Node;
  if (!rule || !multiplicity)
    throw std::invalid_argument("level-rule element needs total rules");
  auto node = std::make_shared<Node>();
  node->kind = Node::Rule{std::move(rule), std::move(multiplicity)};
  return TransfiniteElement(std::move(node));
}

TransfiniteElement product(std::vector<TransfiniteElement> parts) {
  using Node = TransfiniteElement::Node;
  auto node = std::make_shared<Node>();
  node->kind = Node::Prod{std::move(parts)};
  return TransfiniteElement(std::move(node));
}

TransfiniteElement product(TransfiniteElement a, TransfiniteElement b) {
  std::vector<TransfiniteElement> parts;
  parts.reserve(2);
  parts.push_back(std::move(a));
  parts.push_back(std::move(b));
  return product(std::move(parts));
}

TransfiniteElement inverse(TransfiniteElement a) {
  using Node = TransfiniteElement::Node;
  auto node = std::make_shared<Node>();
  node->kind = Node::Inv{std::move(a)};
  return TransfiniteElement(std::move(node));
}

ReducedWord projection_at(const TransfiniteElement& e, int n) {
  using Node = TransfiniteElement::Node;
  if (n < 1) throw std::invalid_argument("level must be >= 1");
  const Node& node = *e.node_;
  {
    std::lock_guard<std::mutex> lock(node.cache_mutex);
    auto hit = node.cache.find(n);
    if (hit != node.cache.end()) return hit->second;
  }
  ReducedWord result = std::visit(
      overloaded{
          [&](const Node::Finite& f) { return limits::delete_above(f.word, n); },
          [&](const Node::Stream& s) {
            const int guard = std::max(0, s.stream.horizon(n));
            words::RawWord raw;
            raw.reserve(static_cast<std::size_t>(guard));
            for (int k = 1; k <= guard; ++k) {
              Letter letter = s.stream.letter_at(k);
              if (letter.index <= n) raw.push_back(letter);
            }
            return words::reduce(raw);
          },
          [&](const Node::Rule& r) {
            ReducedWord w = r.rule(n);
            if (words::max_index(w) > n)
              throw std::invalid_argument(
                  "level rule emitted x" +
                  std::to_string(words::max_index(w)) + " at level " +
                  std::to_string(n));
            return w;
          },
          [&](const Node::Prod& p) {
            ReducedWord acc;
            for (const TransfiniteElement& part : p.parts)
              acc = words::multiply(acc, projection_at(part, n));
            return acc;
          },
          [&](const Node::Inv& i) {
            return words::invert(projection_at(i.inner, n));
          },
      },
      node.kind);
  std::lock_guard<std::mutex> lock(node.cache_mutex);
  return node.cache.emplace(n, std::move(result)).first->second;
}

TruncatedSequence to_truncated(const TransfiniteElement& e, int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  std::vector<ReducedWord> entries;
  entries.reserve(static_cast<std::size_t>(depth));
  for (int n = 1; n <= depth; ++n) entries.push_back(projection_at(e, n));
  return TruncatedSequence(1, depth, std::move(entries));
}

OccurrenceBound multiplicity_of(const TransfiniteElement& e, int index) {
  using Node = TransfiniteElement::Node;
  if (index < 1) throw std::invalid_argument("generator index must be >= 1");
  return std::visit(
      overloaded{
          [&](const Node::Finite& f) {
            return OccurrenceBound::finite(
                words::occurrence_count(f.word, index));
          },
          [&](const Node::Stream& s) { return s.multiplicity(index); },
          [&](const Node::Rule& r) { return r.multiplicity(index); },
          [&](const Node::Prod& p) {
            OccurrenceBound acc = OccurrenceBound::finite(0);
            for (const TransfiniteElement& part : p.parts)
              acc = combine(acc, multiplicity_of(part, index));
            return acc;
          },
          [&](const Node::Inv& i) { return multiplicity_of(i.inner, index); },
      },
      e.node_->kind);
}

HEClassification classify_HE(const TransfiniteElement& e, int depth) {
  if (depth < 2) throw std::invalid_argument("depth must be >= 2");

  std::vector<ReducedWord> shadow;
  shadow.reserve(static_cast<std::size_t>(depth));
  for (int n = 1; n <= depth; ++n) shadow.push_back(projection_at(e, n));

  // Believe declared finite caps only after checking them against every
  // sampled projection.
  bool caps_hold = true;
  std::map<int, int> bounds;
  for (int i = 1; i <= depth && caps_hold; ++i) {
    OccurrenceBound bound = multiplicity_of(e, i);
    if (!bound.is_finite()) {
      caps_hold = false;
      break;
    }
    for (const ReducedWord& w : shadow)
      if (words::occurrence_count(w, i) > bound.count()) {
        caps_hold = false;
        break;
      }
    if (caps_hold && bound.count() > 0) bounds[i] = bound.count();
  }
  if (caps_hold) return MemberEvidence{std::move(bounds), depth};

  // Greedy growth records: keep a level whenever its count beats the
  // best so far; zero counts never start a record.
  for (int i = 1; i <= depth; ++i) {
    std::vector<std::pair<int, int>> records;
    int best = 0;
    for (int n = 1; n <= depth; ++n) {
      const int count = words::occurrence_count(shadow[static_cast<std::size_t>(n - 1)], i);
      if (count > best) {
        records.emplace_back(n, count);
        best = count;
      }
    }
    if (records.size() >= 3) return NotMemberEvidence{i, std::move(records)};
  }
  return UnknownMembership{depth};
}

TransfiniteElement counterexample_element() {
  LevelRule rule = [](int n) {
    words::RawWord raw;
    raw.reserve(static_cast<std::size_t>(std::max(0, 4 * (n - 1))));
    for (int k = 2; k <= n; ++k) {
      raw.push_back({1, +1});
      raw.push_back({k, +1});
      raw.push_back({1, -1});
      raw.push_back({k, -1});
    }
    // Adjacent letters always differ in index, so no reduction happens.
    return ReducedWord::from_reduced(std::move(raw));
  };
  MultiplicityRule multiplicity = [](int i) {
    return i == 1 ? OccurrenceBound::unbounded() : OccurrenceBound::finite(2);
  };
  return level_rule_element(std::move(rule), std::move(multiplicity));
}

}  // namespace earring::transfinite
