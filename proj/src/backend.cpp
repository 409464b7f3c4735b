#include "atomreach/backend.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "atomreach/error.hpp"
#include "atomreach/partitions.hpp"

namespace atomreach {

std::uint32_t encode_tuple(std::span<const int> tuple, int base) {
  std::uint32_t code = 0;
  for (int v : tuple) code = code * static_cast<std::uint32_t>(base) + static_cast<std::uint32_t>(v);
  return code;
}

std::vector<int> decode_tuple(std::uint32_t code, int base, int arity) {
  std::vector<int> out(arity);
  for (int i = arity - 1; i >= 0; --i) {
    out[i] = static_cast<int>(code % static_cast<std::uint32_t>(base));
    code /= static_cast<std::uint32_t>(base);
  }
  return out;
}

bool AtomBackend::embeds(const FiniteStructure& s) const {
  for (const auto& [rel, set] : s.tuples) {
    int idx = vocab_.index_of(rel);
    if (idx < 0)
      fail(ErrorKind::VocabularyMismatch,
           "relation '" + rel + "' is not in the vocabulary of " + name_);
    for (const auto& t : set) {
      if (static_cast<int>(t.size()) != vocab_.at(idx).arity)
        fail(ErrorKind::VocabularyMismatch, "arity mismatch for relation '" + rel + "'");
      for (int e : t)
        if (e < 0 || e >= s.size)
          fail(ErrorKind::BadArgument, "tuple element out of range in relation '" + rel + "'");
    }
  }
  // Embeddings are injective, so off-diagonal equality never embeds.
  if (!s.eq_is_diagonal()) return false;
  return embeds_impl(s);
}

bool AtomBackend::eval_relation(const std::string& rel, std::span<const ConcreteAtom> args) const {
  if (!has_concrete_model())
    fail(ErrorKind::CapabilityUnsupported, "backend '" + name_ + "' has no concrete model");
  int idx = vocab_.index_of(rel);
  if (idx < 0)
    fail(ErrorKind::VocabularyMismatch, "relation '" + rel + "' is not in the vocabulary of " + name_);
  if (vocab_.at(idx).arity != static_cast<int>(args.size()))
    fail(ErrorKind::VocabularyMismatch, "arity mismatch for relation '" + rel + "'");
  return eval_impl(idx, args);
}

bool AtomBackend::eval_impl(int, std::span<const ConcreteAtom>) const { no_model(); }

ConcreteAtom AtomBackend::parse_atom(std::string_view) const { no_model(); }

std::string AtomBackend::format_atom(const ConcreteAtom&) const { no_model(); }

void AtomBackend::no_model() const {
  fail(ErrorKind::CapabilityUnsupported, "backend '" + name_ + "' has no concrete model");
}

namespace {

// m x m truth matrix of a binary relation, missing entries false.
std::vector<std::vector<bool>> binary_matrix(const FiniteStructure& s, const std::string& rel) {
  std::vector<std::vector<bool>> m(s.size, std::vector<bool>(s.size, false));
  auto it = s.tuples.find(rel);
  if (it != s.tuples.end())
    for (const auto& t : it->second) m[t[0]][t[1]] = true;
  return m;
}

bool is_reflexive(const std::vector<std::vector<bool>>& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!m[i][i]) return false;
  return true;
}

bool is_transitive(const std::vector<std::vector<bool>>& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!m[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (m[j][k] && !m[i][k]) return false;
    }
  return true;
}

bool is_antisymmetric(const std::vector<std::vector<bool>>& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m[i][j] && m[j][i]) return false;
  return true;
}

std::int64_t parse_int(std::string_view text, const std::string& what) {
  if (text.empty()) fail(ErrorKind::ParseError, "empty " + what);
  std::int64_t v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') fail(ErrorKind::ParseError, "bad " + what + ": " + std::string(text));
    v = v * 10 + (c - '0');
  }
  return v;
}

// ---------------------------------------------------------------------------

class EqualityBackend : public AtomBackend {
 public:
  EqualityBackend() : AtomBackend("equality", Vocabulary()) {}

  void enumerate_structures(int m, const std::function<void(const StructTable&)>& yield) const override {
    StructTable t;
    t.size = m;
    yield(t);
  }

  bool has_concrete_model() const override { return true; }

  ConcreteAtom parse_atom(std::string_view text) const override {
    if (text.empty() || text.front() != '#')
      fail(ErrorKind::ParseError, "equality atoms are written #n: " + std::string(text));
    return ConcreteAtom(parse_int(text.substr(1), "equality atom"));
  }

  std::string format_atom(const ConcreteAtom& a) const override {
    return "#" + std::to_string(a.as_int());
  }

 protected:
  bool embeds_impl(const FiniteStructure&) const override { return true; }

  bool eval_impl(int, std::span<const ConcreteAtom> args) const override {
    return args[0].as_int() == args[1].as_int();
  }
};

// ---------------------------------------------------------------------------

class TotalOrderBackend : public AtomBackend {
 public:
  TotalOrderBackend() : AtomBackend("total_order", Vocabulary({{"le", 2}})) {}

  void enumerate_structures(int m, const std::function<void(const StructTable&)>& yield) const override {
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    do {
      std::vector<int> rank(m);
      for (int r = 0; r < m; ++r) rank[order[r]] = r;
      StructTable t;
      t.size = m;
      t.rels.resize(1);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          if (rank[i] <= rank[j]) t.rels[0].push_back(encode_tuple(std::array{i, j}, m));
      std::sort(t.rels[0].begin(), t.rels[0].end());
      yield(t);
    } while (std::next_permutation(order.begin(), order.end()));
  }

  bool has_concrete_model() const override { return true; }

  ConcreteAtom parse_atom(std::string_view text) const override {
    return ConcreteAtom(Rational::parse(text));
  }

  std::string format_atom(const ConcreteAtom& a) const override { return a.as_rational().str(); }

 protected:
  bool embeds_impl(const FiniteStructure& s) const override {
    auto le = binary_matrix(s, "le");
    if (!is_reflexive(le) || !is_antisymmetric(le) || !is_transitive(le)) return false;
    for (int i = 0; i < s.size; ++i)
      for (int j = i + 1; j < s.size; ++j)
        if (!le[i][j] && !le[j][i]) return false;
    return true;
  }

  bool eval_impl(int rel_index, std::span<const ConcreteAtom> args) const override {
    if (rel_index == 0) return args[0].as_rational() == args[1].as_rational();
    return args[0].as_rational() <= args[1].as_rational();
  }
};

// ---------------------------------------------------------------------------

class EquivalenceBackend : public AtomBackend {
 public:
  EquivalenceBackend() : AtomBackend("equivalence", Vocabulary({{"R", 2}})) {}

  void enumerate_structures(int m, const std::function<void(const StructTable&)>& yield) const override {
    for_each_partition(m, [&](const std::vector<int>& class_of, int) {
      StructTable t;
      t.size = m;
      t.rels.resize(1);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          if (class_of[i] == class_of[j]) t.rels[0].push_back(encode_tuple(std::array{i, j}, m));
      std::sort(t.rels[0].begin(), t.rels[0].end());
      yield(t);
    });
  }

  bool has_concrete_model() const override { return true; }

  ConcreteAtom parse_atom(std::string_view text) const override {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
      fail(ErrorKind::ParseError, "equivalence atoms are written c:m: " + std::string(text));
    return ConcreteAtom(ConcreteAtom(parse_int(text.substr(0, colon), "class id")),
                        ConcreteAtom(parse_int(text.substr(colon + 1), "member id")));
  }

  std::string format_atom(const ConcreteAtom& a) const override {
    return std::to_string(a.first().as_int()) + ":" + std::to_string(a.second().as_int());
  }

 protected:
  bool embeds_impl(const FiniteStructure& s) const override {
    auto r = binary_matrix(s, "R");
    if (!is_reflexive(r) || !is_transitive(r)) return false;
    for (int i = 0; i < s.size; ++i)
      for (int j = 0; j < s.size; ++j)
        if (r[i][j] != r[j][i]) return false;
    return true;
  }

  bool eval_impl(int rel_index, std::span<const ConcreteAtom> args) const override {
    bool same_class = args[0].first().as_int() == args[1].first().as_int();
    if (rel_index != 0) return same_class;
    return same_class && args[0].second().as_int() == args[1].second().as_int();
  }
};

// ---------------------------------------------------------------------------

class PartialOrderBackend : public AtomBackend {
 public:
  PartialOrderBackend() : AtomBackend("partial_order", Vocabulary({{"le", 2}})) {}

  void enumerate_structures(int m, const std::function<void(const StructTable&)>& yield) const override {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    std::vector<std::vector<bool>> lt(m, std::vector<bool>(m, false));
    enumerate_posets(m, pairs, 0, lt, yield);
  }

 protected:
  bool embeds_impl(const FiniteStructure& s) const override {
    auto le = binary_matrix(s, "le");
    return is_reflexive(le) && is_antisymmetric(le) && is_transitive(le);
  }

 private:
  // DFS over unordered pairs, three choices each (i<j, j<i, incomparable).
  // Transitivity is checked as soon as the last pair of a triple is decided,
  // which prunes dead branches early.
  static void enumerate_posets(int m, const std::vector<std::pair<int, int>>& pairs, std::size_t p,
                               std::vector<std::vector<bool>>& lt,
                               const std::function<void(const StructTable&)>& yield) {
    if (p == pairs.size()) {
      StructTable t;
      t.size = m;
      t.rels.resize(1);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          if (i == j || lt[i][j]) t.rels[0].push_back(encode_tuple(std::array{i, j}, m));
      std::sort(t.rels[0].begin(), t.rels[0].end());
      yield(t);
      return;
    }
    auto [i, j] = pairs[p];
    for (int choice = 0; choice < 3; ++choice) {
      if (choice == 0) lt[i][j] = true;
      if (choice == 1) lt[j][i] = true;
      if (triples_ok(i, j, lt)) enumerate_posets(m, pairs, p + 1, lt, yield);
      lt[i][j] = lt[j][i] = false;
    }
  }

  // Pairs are decided in lexicographic order, so when (i,j) with i<j is
  // decided, exactly the triples {a,i,j} with a<i become fully decided.
  static bool triples_ok(int i, int j, const std::vector<std::vector<bool>>& lt) {
    for (int a = 0; a < i; ++a) {
      const int t[3] = {a, i, j};
      for (int x : t)
        for (int y : t)
          for (int z : t) {
            if (x == y || y == z || x == z) continue;
            if (lt[x][y] && lt[y][z] && !lt[x][z]) return false;
          }
    }
    return true;
  }
};

// ---------------------------------------------------------------------------

class GraphBackend : public AtomBackend {
 public:
  GraphBackend() : AtomBackend("graph", Vocabulary({{"E", 2}})) {}

  void enumerate_structures(int m, const std::function<void(const StructTable&)>& yield) const override {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) slots.emplace_back(i, j);
    if (slots.size() >= 62) fail(ErrorKind::WidthExceeded, "too many graph structures to enumerate");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      StructTable t;
      t.size = m;
      t.rels.resize(1);
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if ((mask >> s) & 1) {
          auto [i, j] = slots[s];
          t.rels[0].push_back(encode_tuple(std::array{i, j}, m));
          t.rels[0].push_back(encode_tuple(std::array{j, i}, m));
        }
      }
      std::sort(t.rels[0].begin(), t.rels[0].end());
      yield(t);
    }
  }

  bool has_concrete_model() const override { return true; }

  ConcreteAtom parse_atom(std::string_view text) const override {
    if (text.empty() || text.front() != '#')
      fail(ErrorKind::ParseError, "graph atoms are written #n: " + std::string(text));
    return ConcreteAtom(parse_int(text.substr(1), "graph vertex"));
  }

  std::string format_atom(const ConcreteAtom& a) const override {
    return "#" + std::to_string(a.as_int());
  }

 protected:
  bool embeds_impl(const FiniteStructure& s) const override {
    auto e = binary_matrix(s, "E");
    for (int i = 0; i < s.size; ++i) {
      if (e[i][i]) return false;
      for (int j = 0; j < s.size; ++j)
        if (e[i][j] != e[j][i]) return false;
    }
    return true;
  }

  // BIT model of the Rado graph: for i < j, E(i,j) iff bit i of j is set.
  bool eval_impl(int rel_index, std::span<const ConcreteAtom> args) const override {
    std::int64_t x = args[0].as_int(), y = args[1].as_int();
    if (rel_index == 0) return x == y;
    if (x == y) return false;
    std::int64_t lo = std::min(x, y), hi = std::max(x, y);
    if (lo >= 63) return false;
    return (hi >> lo) & 1;
  }
};

// ---------------------------------------------------------------------------

class TournamentBackend : public AtomBackend {
 public:
  TournamentBackend() : AtomBackend("tournament", Vocabulary({{"E", 2}})) {}

  void enumerate_structures(int m, const std::function<void(const StructTable&)>& yield) const override {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) slots.emplace_back(i, j);
    if (slots.size() >= 62) fail(ErrorKind::WidthExceeded, "too many tournaments to enumerate");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      StructTable t;
      t.size = m;
      t.rels.resize(1);
      for (std::size_t s = 0; s < slots.size(); ++s) {
        auto [i, j] = slots[s];
        if ((mask >> s) & 1)
          t.rels[0].push_back(encode_tuple(std::array{i, j}, m));
        else
          t.rels[0].push_back(encode_tuple(std::array{j, i}, m));
      }
      std::sort(t.rels[0].begin(), t.rels[0].end());
      yield(t);
    }
  }

 protected:
  bool embeds_impl(const FiniteStructure& s) const override {
    auto e = binary_matrix(s, "E");
    for (int i = 0; i < s.size; ++i) {
      if (e[i][i]) return false;
      for (int j = i + 1; j < s.size; ++j)
        if (e[i][j] == e[j][i]) return false;  // exactly one direction
    }
    return true;
  }
};

// ---------------------------------------------------------------------------

// B(x,y,z): x lies strictly between y and z in some linear order.
class BetweennessBackend : public AtomBackend {
 public:
  BetweennessBackend() : AtomBackend("betweenness", Vocabulary({{"B", 3}})) {}

  void enumerate_structures(int m, const std::function<void(const StructTable&)>& yield) const override {
    std::set<std::vector<std::uint32_t>> seen;
    for_each_order(m, [&](const std::vector<int>& rank) {
      auto b = induced(m, rank);
      if (seen.insert(b).second) {
        StructTable t;
        t.size = m;
        t.rels.push_back(b);
        yield(t);
      }
    });
  }

 protected:
  bool embeds_impl(const FiniteStructure& s) const override {
    std::vector<std::uint32_t> target = encoded_tuples(s, "B");
    bool found = false;
    for_each_order(s.size, [&](const std::vector<int>& rank) {
      if (!found && induced(s.size, rank) == target) found = true;
    });
    return found;
  }

 private:
  static std::vector<std::uint32_t> induced(int m, const std::vector<int>& rank) {
    std::vector<std::uint32_t> out;
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        for (int z = 0; z < m; ++z) {
          if (x == y || y == z || x == z) continue;
          if ((rank[y] < rank[x] && rank[x] < rank[z]) ||
              (rank[z] < rank[x] && rank[x] < rank[y]))
            out.push_back(encode_tuple(std::array{x, y, z}, m));
        }
    std::sort(out.begin(), out.end());
    return out;
  }

  static void for_each_order(int m, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    do {
      std::vector<int> rank(m);
      for (int r = 0; r < m; ++r) rank[order[r]] = r;
      fn(rank);
    } while (std::next_permutation(order.begin(), order.end()));
  }

  static std::vector<std::uint32_t> encoded_tuples(const FiniteStructure& s, const std::string& rel) {
    std::vector<std::uint32_t> out;
    auto it = s.tuples.find(rel);
    if (it != s.tuples.end())
      for (const auto& t : it->second) out.push_back(encode_tuple(t, s.size));
    std::sort(out.begin(), out.end());
    return out;
  }

  friend class CyclicBackend;
};

// ---------------------------------------------------------------------------

// K(x,y,z): x, y, z appear in this cyclic order on some circular arrangement.
class CyclicBackend : public AtomBackend {
 public:
  CyclicBackend() : AtomBackend("cyclic", Vocabulary({{"K", 3}})) {}

  void enumerate_structures(int m, const std::function<void(const StructTable&)>& yield) const override {
    std::set<std::vector<std::uint32_t>> seen;
    for_each_order(m, [&](const std::vector<int>& rank) {
      auto k = induced(m, rank);
      if (seen.insert(k).second) {
        StructTable t;
        t.size = m;
        t.rels.push_back(k);
        yield(t);
      }
    });
  }

 protected:
  bool embeds_impl(const FiniteStructure& s) const override {
    std::vector<std::uint32_t> target;
    auto it = s.tuples.find("K");
    if (it != s.tuples.end())
      for (const auto& t : it->second) target.push_back(encode_tuple(t, s.size));
    std::sort(target.begin(), target.end());
    bool found = false;
    for_each_order(s.size, [&](const std::vector<int>& rank) {
      if (!found && induced(s.size, rank) == target) found = true;
    });
    return found;
  }

 private:
  static std::vector<std::uint32_t> induced(int m, const std::vector<int>& rank) {
    std::vector<std::uint32_t> out;
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        for (int z = 0; z < m; ++z) {
          if (x == y || y == z || x == z) continue;
          int p = rank[x], q = rank[y], r = rank[z];
          if ((p < q && q < r) || (r < p && p < q) || (q < r && r < p))
            out.push_back(encode_tuple(std::array{x, y, z}, m));
        }
    std::sort(out.begin(), out.end());
    return out;
  }

  static void for_each_order(int m, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    do {
      std::vector<int> rank(m);
      for (int r = 0; r < m; ++r) rank[order[r]] = r;
      fn(rank);
    } while (std::next_permutation(order.begin(), order.end()));
  }
};

// ---------------------------------------------------------------------------

// Wreath product A (x) B: every A-atom replaced by a copy of B.  Lifted
// relations carry the _a / _b suffix; A's equality lifts to eq_a ("same
// copy"), B's equality lifts to the product's own eq.
class WreathBackend : public AtomBackend {
 public:
  WreathBackend(BackendPtr a, BackendPtr b)
      : AtomBackend("wreath(" + a->name() + "," + b->name() + ")", make_vocab(*a, *b)),
        a_(std::move(a)),
        b_(std::move(b)) {
    for (int i = 0; i < a_->vocabulary().size(); ++i) lifted_.push_back({true, i});
    for (int j = 1; j < b_->vocabulary().size(); ++j) lifted_.push_back({false, j});
  }

  void enumerate_structures(int m, const std::function<void(const StructTable&)>& yield) const override {
    const auto& avoc = a_->vocabulary();
    for_each_partition(m, [&](const std::vector<int>& block_of, int r) {
      std::vector<std::vector<int>> members(r);
      for (int e = 0; e < m; ++e) members[block_of[e]].push_back(e);

      a_->enumerate_structures(r, [&](const StructTable& sa) {
        StructTable t;
        t.size = m;
        t.rels.resize(vocabulary().size() - 1);
        // eq_a: same-block pairs.
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j)
            if (block_of[i] == block_of[j])
              t.rels[0].push_back(encode_tuple(std::array{i, j}, m));
        std::sort(t.rels[0].begin(), t.rels[0].end());
        // A-relations lift uniformly over blocks.
        for (int ai = 1; ai < avoc.size(); ++ai) {
          int arity = avoc.at(ai).arity;
          auto& out = t.rels[ai];
          for (std::uint32_t code : sa.rels[ai - 1]) {
            auto blocks = decode_tuple(code, r, arity);
            std::vector<int> tuple(arity, 0);
            expand_block_tuple(blocks, members, 0, tuple, [&](const std::vector<int>& et) {
              out.push_back(encode_tuple(et, m));
            });
          }
          std::sort(out.begin(), out.end());
        }
        // B-relations block by block, recursively.
        emit_blocks(0, members, t, yield);
      });
    });
  }

  bool has_concrete_model() const override {
    return a_->has_concrete_model() && b_->has_concrete_model();
  }

  ConcreteAtom parse_atom(std::string_view text) const override {
    if (text.size() < 3 || text.front() != '(' || text.back() != ')')
      fail(ErrorKind::ParseError, "wreath atoms are written (a|b): " + std::string(text));
    std::string_view inner = text.substr(1, text.size() - 2);
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      char c = inner[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == '|' && depth == 0)
        return ConcreteAtom(a_->parse_atom(inner.substr(0, i)), b_->parse_atom(inner.substr(i + 1)));
    }
    fail(ErrorKind::ParseError, "wreath atoms are written (a|b): " + std::string(text));
  }

  std::string format_atom(const ConcreteAtom& a) const override {
    return "(" + a_->format_atom(a.first()) + "|" + b_->format_atom(a.second()) + ")";
  }

 protected:
  bool embeds_impl(const FiniteStructure& s) const override {
    // eq_a must be reflexive no matter the partition.
    for (int i = 0; i < s.size; ++i)
      if (!s.holds(eq_a_name(), {i, i})) return false;
    std::vector<int> block_of(s.size, -1);
    return search(s, block_of, 0, 0);
  }

  bool eval_impl(int rel_index, std::span<const ConcreteAtom> args) const override {
    std::vector<ConcreteAtom> firsts, seconds;
    firsts.reserve(args.size());
    seconds.reserve(args.size());
    for (const auto& p : args) {
      firsts.push_back(p.first());
      seconds.push_back(p.second());
    }
    if (rel_index == 0)
      return a_->eval_relation("eq", firsts) && b_->eval_relation("eq", seconds);
    const Lifted& lift = lifted_[rel_index - 1];
    if (lift.from_a) return a_->eval_relation(a_->vocabulary().at(lift.base).name, firsts);
    for (std::size_t i = 0; i + 1 < firsts.size(); ++i) {
      std::array same{firsts[i], firsts[i + 1]};
      if (!a_->eval_relation("eq", same)) return false;
    }
    return b_->eval_relation(b_->vocabulary().at(lift.base).name, seconds);
  }

 private:
  struct Lifted {
    bool from_a;
    int base;
  };

  static Vocabulary make_vocab(const AtomBackend& a, const AtomBackend& b) {
    std::vector<Relation> rels;
    for (int i = 0; i < a.vocabulary().size(); ++i)
      rels.push_back({a.vocabulary().at(i).name + "_a", a.vocabulary().at(i).arity});
    for (int j = 1; j < b.vocabulary().size(); ++j)
      rels.push_back({b.vocabulary().at(j).name + "_b", b.vocabulary().at(j).arity});
    return Vocabulary(std::move(rels));
  }

  const std::string& eq_a_name() const { return vocabulary().at(1).name; }

  static void expand_block_tuple(const std::vector<int>& blocks,
                                 const std::vector<std::vector<int>>& members, std::size_t pos,
                                 std::vector<int>& tuple,
                                 const std::function<void(const std::vector<int>&)>& fn) {
    if (pos == blocks.size()) {
      fn(tuple);
      return;
    }
    for (int e : members[blocks[pos]]) {
      tuple[pos] = e;
      expand_block_tuple(blocks, members, pos + 1, tuple, fn);
    }
  }

  void emit_blocks(std::size_t bi, const std::vector<std::vector<int>>& members, StructTable& t,
                   const std::function<void(const StructTable&)>& yield) const {
    if (bi == members.size()) {
      StructTable out = t;
      for (auto& rel : out.rels) std::sort(rel.begin(), rel.end());
      yield(out);
      return;
    }
    const auto& mem = members[bi];
    const auto& bvoc = b_->vocabulary();
    const int base = 1 + a_->vocabulary().size();  // first B-relation index in t.rels
    b_->enumerate_structures(static_cast<int>(mem.size()), [&](const StructTable& sb) {
      std::vector<std::size_t> marks(bvoc.size() - 1);
      for (int bj = 1; bj < bvoc.size(); ++bj) {
        auto& out = t.rels[base + bj - 2];
        marks[bj - 1] = out.size();
        int arity = bvoc.at(bj).arity;
        for (std::uint32_t code : sb.rels[bj - 1]) {
          auto local = decode_tuple(code, static_cast<int>(mem.size()), arity);
          std::vector<int> tuple(arity);
          for (int p = 0; p < arity; ++p) tuple[p] = mem[local[p]];
          out.push_back(encode_tuple(tuple, t.size));
        }
      }
      emit_blocks(bi + 1, members, t, yield);
      for (int bj = 1; bj < bvoc.size(); ++bj) t.rels[base + bj - 2].resize(marks[bj - 1]);
    });
  }

  // Partition search.  A prefix 0..e is pruned as soon as a fully-assigned
  // lifted-B tuple spans two blocks or eq_a disagrees with the blocks.
  bool search(const FiniteStructure& s, std::vector<int>& block_of, int e, int num_blocks) const {
    if (e == s.size) return final_check(s, block_of, num_blocks);
    for (int bi = 0; bi <= num_blocks && bi < s.size; ++bi) {
      block_of[e] = bi;
      if (prefix_ok(s, block_of, e) &&
          search(s, block_of, e + 1, std::max(num_blocks, bi + 1)))
        return true;
    }
    block_of[e] = -1;
    return false;
  }

  bool prefix_ok(const FiniteStructure& s, const std::vector<int>& block_of, int e) const {
    for (int i = 0; i < e; ++i) {
      bool same = block_of[i] == block_of[e];
      if (s.holds(eq_a_name(), {i, e}) != same) return false;
      if (s.holds(eq_a_name(), {e, i}) != same) return false;
    }
    const auto& voc = vocabulary();
    for (std::size_t li = 0; li < lifted_.size(); ++li) {
      if (lifted_[li].from_a) continue;
      auto it = s.tuples.find(voc.at(static_cast<int>(li) + 1).name);
      if (it == s.tuples.end()) continue;
      for (const auto& t : it->second) {
        int mx = *std::max_element(t.begin(), t.end());
        if (mx != e) continue;  // checked when its last element is placed
        for (int v : t)
          if (block_of[v] != block_of[e]) return false;
      }
    }
    return true;
  }

  bool final_check(const FiniteStructure& s, const std::vector<int>& block_of, int r) const {
    const auto& avoc = a_->vocabulary();
    const auto& bvoc = b_->vocabulary();
    std::vector<std::vector<int>> members(r);
    for (int e = 0; e < s.size; ++e) members[block_of[e]].push_back(e);

    // Quotient over A's vocabulary; relation truth must be block-uniform.
    FiniteStructure quotient;
    quotient.size = r;
    for (int i = 0; i < r; ++i) quotient.tuples["eq"].insert({i, i});
    for (int ai = 1; ai < avoc.size(); ++ai) {
      int arity = avoc.at(ai).arity;
      const std::string lifted_name = avoc.at(ai).name + "_a";
      std::map<std::vector<int>, bool> truth;
      std::vector<int> tuple(arity, 0);
      bool uniform = true;
      for_each_tuple(s.size, arity, tuple, [&](const std::vector<int>& t) {
        std::vector<int> blocks(arity);
        for (int p = 0; p < arity; ++p) blocks[p] = block_of[t[p]];
        bool v = s.holds(lifted_name, t);
        auto [it, inserted] = truth.emplace(blocks, v);
        if (!inserted && it->second != v) uniform = false;
      });
      if (!uniform) return false;
      for (const auto& [blocks, v] : truth)
        if (v) quotient.tuples[avoc.at(ai).name].insert(blocks);
    }
    if (!a_->embeds(quotient)) return false;

    // Each block must embed into B.
    for (const auto& mem : members) {
      FiniteStructure blk;
      blk.size = static_cast<int>(mem.size());
      std::vector<int> local(s.size, -1);
      for (std::size_t p = 0; p < mem.size(); ++p) local[mem[p]] = static_cast<int>(p);
      for (int i = 0; i < blk.size; ++i) blk.tuples["eq"].insert({i, i});
      for (int bj = 1; bj < bvoc.size(); ++bj) {
        const std::string lifted_name = bvoc.at(bj).name + "_b";
        auto it = s.tuples.find(lifted_name);
        if (it == s.tuples.end()) continue;
        for (const auto& t : it->second) {
          if (local[t[0]] < 0) continue;  // within-block by the prefix pruning
          std::vector<int> mapped(t.size());
          for (std::size_t p = 0; p < t.size(); ++p) mapped[p] = local[t[p]];
          blk.tuples[bvoc.at(bj).name].insert(mapped);
        }
      }
      if (!b_->embeds(blk)) return false;
    }
    return true;
  }

  static void for_each_tuple(int n, int arity, std::vector<int>& tuple,
                             const std::function<void(const std::vector<int>&)>& fn, int pos = 0) {
    if (pos == arity) {
      fn(tuple);
      return;
    }
    for (int v = 0; v < n; ++v) {
      tuple[pos] = v;
      for_each_tuple(n, arity, tuple, fn, pos + 1);
    }
  }

  BackendPtr a_;
  BackendPtr b_;
  std::vector<Lifted> lifted_;
};

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BackendPtr make_wreath(BackendPtr a, BackendPtr b) {
  return std::make_shared<WreathBackend>(std::move(a), std::move(b));
}

BackendPtr make_backend(std::string_view spec) {
  spec = trimmed(spec);
  if (spec.starts_with("wreath(") && spec.ends_with(")")) {
    std::string_view inner = spec.substr(7, spec.size() - 8);
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      char c = inner[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0)
        return make_wreath(make_backend(inner.substr(0, i)), make_backend(inner.substr(i + 1)));
    }
    fail(ErrorKind::BadArgument, "wreath backend needs two arguments: " + std::string(spec));
  }
  if (spec == "equality") return std::make_shared<EqualityBackend>();
  if (spec == "total_order") return std::make_shared<TotalOrderBackend>();
  if (spec == "equivalence") return std::make_shared<EquivalenceBackend>();
  if (spec == "partial_order") return std::make_shared<PartialOrderBackend>();
  if (spec == "graph") return std::make_shared<GraphBackend>();
  if (spec == "tournament") return std::make_shared<TournamentBackend>();
  if (spec == "betweenness") return std::make_shared<BetweennessBackend>();
  if (spec == "cyclic") return std::make_shared<CyclicBackend>();
  fail(ErrorKind::BadArgument, "unknown atom backend: " + std::string(spec));
}

}  // namespace atomreach
