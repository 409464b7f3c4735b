#include "atomreach/clause.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "atomreach/error.hpp"

namespace atomreach {

namespace {

// All arity-length argument tuples over 0..base-1 in lexicographic order.
void for_each_args(int base, int arity, const std::function<void(const std::vector<int>&)>& fn) {
  if (base == 0) return;
  std::vector<int> args(arity, 0);
  while (true) {
    fn(args);
    int p = arity - 1;
    while (p >= 0 && args[p] == base - 1) args[p--] = 0;
    if (p < 0) return;
    ++args[p];
  }
}

}  // namespace

bool Clause::holds(int vocab_index, std::span<const int> args) const {
  if (vocab_index == 0) return class_of_[args[0]] == class_of_[args[1]];
  std::uint32_t code = 0;
  for (int p : args) code = code * static_cast<std::uint32_t>(num_classes_) + class_of_[p];
  const auto& set = rels_[vocab_index - 1];
  return std::binary_search(set.begin(), set.end(), code);
}

Clause Clause::restrict_to(std::span<const int> keep, const Vocabulary& vocab) const {
  std::vector<int> new_class(num_classes_, -1);
  std::vector<std::uint8_t> class_of;
  class_of.reserve(keep.size());
  int next = 0;
  for (int p : keep) {
    int c = class_of_[p];
    if (new_class[c] < 0) new_class[c] = next++;
    class_of.push_back(static_cast<std::uint8_t>(new_class[c]));
  }
  std::vector<std::vector<std::uint32_t>> rels;
  rels.reserve(rels_.size());
  for (std::size_t i = 0; i < rels_.size(); ++i) {
    const int arity = vocab.at(static_cast<int>(i) + 1).arity;
    std::vector<std::uint32_t> kept;
    for (std::uint32_t code : rels_[i]) {
      std::vector<int> classes = decode_tuple(code, num_classes_, arity);
      std::uint32_t mapped = 0;
      bool alive = true;
      for (int c : classes) {
        if (new_class[c] < 0) {
          alive = false;
          break;
        }
        mapped = mapped * static_cast<std::uint32_t>(next) + static_cast<std::uint32_t>(new_class[c]);
      }
      if (alive) kept.push_back(mapped);
    }
    std::sort(kept.begin(), kept.end());
    rels.push_back(std::move(kept));
  }
  return Clause(std::move(class_of), next, std::move(rels));
}

FiniteStructure Clause::to_structure(const Vocabulary& vocab) const {
  FiniteStructure s;
  s.size = num_classes_;
  for (int c = 0; c < num_classes_; ++c) s.tuples["eq"].insert({c, c});
  for (int r = 1; r < vocab.size(); ++r) {
    int arity = vocab.at(r).arity;
    auto& set = s.tuples[vocab.at(r).name];
    for (std::uint32_t code : rels_[r - 1]) set.insert(decode_tuple(code, num_classes_, arity));
  }
  return s;
}

std::vector<Literal> Clause::literals(const Vocabulary& vocab) const {
  std::vector<Literal> out;
  if (width_ == 0) return out;  // the empty clause
  for (int r = 0; r < vocab.size(); ++r) {
    for_each_args(width_, vocab.at(r).arity, [&](const std::vector<int>& args) {
      out.push_back({holds(r, args), vocab.at(r).name, args});
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// 0 absent, 1 positive, -1 negative, 2 contradictory.
int find_sign(const RawClause& clause, const std::string& rel, const std::vector<int>& args) {
  int sign = 0;
  for (const auto& lit : clause.literals) {
    if (lit.rel != rel || lit.args != args) continue;
    int s = lit.positive ? 1 : -1;
    if (sign == 0)
      sign = s;
    else if (sign != s)
      return 2;
  }
  return sign;
}

void check_complete(const Vocabulary& vocab, const RawClause& clause) {
  for (const auto& lit : clause.literals) {
    int idx = vocab.index_of(lit.rel);
    if (idx < 0) fail(ErrorKind::VocabularyMismatch, "unknown relation in clause: " + lit.rel);
    if (static_cast<int>(lit.args.size()) != vocab.at(idx).arity)
      fail(ErrorKind::MalformedClause, "arity mismatch in clause literal " + lit.rel);
    for (int a : lit.args)
      if (a < 0 || a >= clause.width)
        fail(ErrorKind::MalformedClause, "literal mentions a variable outside the clause");
  }
  for (int r = 0; r < vocab.size(); ++r) {
    bool ok = true;
    for_each_args(clause.width, vocab.at(r).arity, [&](const std::vector<int>& args) {
      int sign = find_sign(clause, vocab.at(r).name, args);
      if (sign != 1 && sign != -1) ok = false;
    });
    if (!ok)
      fail(ErrorKind::MalformedClause, "clause is not complete for relation " + vocab.at(r).name);
  }
}

std::vector<int> eq_classes(const RawClause& clause, bool& is_equivalence) {
  const int n = clause.width;
  std::vector<std::vector<bool>> eq(n, std::vector<bool>(n, false));
  for (const auto& lit : clause.literals)
    if (lit.rel == "eq" && lit.positive) eq[lit.args[0]][lit.args[1]] = true;
  is_equivalence = true;
  for (int i = 0; i < n; ++i) {
    if (!eq[i][i]) is_equivalence = false;
    for (int j = 0; j < n; ++j) {
      if (eq[i][j] != eq[j][i]) is_equivalence = false;
      if (!eq[i][j]) continue;
      for (int k = 0; k < n; ++k)
        if (eq[j][k] && !eq[i][k]) is_equivalence = false;
    }
  }
  std::vector<int> class_of(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (class_of[i] >= 0) continue;
    class_of[i] = next;
    for (int j = i + 1; j < n; ++j)
      if (eq[i][j] && class_of[j] < 0) class_of[j] = next;
    ++next;
  }
  return class_of;
}

std::vector<int> class_representatives(const std::vector<int>& class_of) {
  std::vector<int> rep;
  for (std::size_t i = 0; i < class_of.size(); ++i)
    if (class_of[i] >= static_cast<int>(rep.size())) rep.push_back(static_cast<int>(i));
  return rep;
}

}  // namespace

bool clause_consistent(const Vocabulary& vocab, const RawClause& clause) {
  check_complete(vocab, clause);
  bool is_equivalence = false;
  std::vector<int> class_of = eq_classes(clause, is_equivalence);
  if (!is_equivalence) return false;
  std::vector<int> rep = class_representatives(class_of);
  bool invariant = true;
  for (int r = 0; r < vocab.size(); ++r) {
    for_each_args(clause.width, vocab.at(r).arity, [&](const std::vector<int>& args) {
      std::vector<int> reps(args.size());
      for (std::size_t p = 0; p < args.size(); ++p) reps[p] = rep[class_of[args[p]]];
      if (find_sign(clause, vocab.at(r).name, args) !=
          find_sign(clause, vocab.at(r).name, reps))
        invariant = false;
    });
  }
  return invariant;
}

FiniteStructure clause_to_structure(const Vocabulary& vocab, const RawClause& clause) {
  if (!clause_consistent(vocab, clause))
    fail(ErrorKind::InconsistentClause, "clause is not consistent");
  bool ignored = false;
  std::vector<int> class_of = eq_classes(clause, ignored);
  int num_classes = clause.width == 0 ? 0 : *std::max_element(class_of.begin(), class_of.end()) + 1;
  std::vector<int> rep = class_representatives(class_of);
  FiniteStructure s;
  s.size = num_classes;
  for (int c = 0; c < num_classes; ++c) s.tuples["eq"].insert({c, c});
  for (int r = 1; r < vocab.size(); ++r) {
    auto& set = s.tuples[vocab.at(r).name];
    for_each_args(num_classes, vocab.at(r).arity, [&](const std::vector<int>& classes) {
      std::vector<int> args(classes.size());
      for (std::size_t p = 0; p < classes.size(); ++p) args[p] = rep[classes[p]];
      if (find_sign(clause, vocab.at(r).name, args) == 1) set.insert(classes);
    });
  }
  return s;
}

Clause canonical_clause(const Vocabulary& vocab, const RawClause& clause) {
  FiniteStructure s = clause_to_structure(vocab, clause);  // also validates
  bool ignored = false;
  std::vector<int> class_of = eq_classes(clause, ignored);
  std::vector<std::uint8_t> classes(class_of.begin(), class_of.end());
  int num_classes = s.size;
  std::vector<std::vector<std::uint32_t>> rels;
  for (int r = 1; r < vocab.size(); ++r) {
    std::vector<std::uint32_t> set;
    for (const auto& t : s.tuples[vocab.at(r).name]) set.push_back(encode_tuple(t, num_classes));
    std::sort(set.begin(), set.end());
    rels.push_back(std::move(set));
  }
  return Clause(std::move(classes), num_classes, std::move(rels));
}

}  // namespace atomreach
