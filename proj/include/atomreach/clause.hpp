#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "atomreach/backend.hpp"
#include "atomreach/structure.hpp"

namespace atomreach {

struct Literal {
  bool positive = true;
  std::string rel;
  std::vector<int> args;  // variable positions

  // Canonical literal order: (relation name, argument indices, sign).
  auto key() const { return std::tie(rel, args, positive); }
  bool operator==(const Literal&) const = default;
  bool operator<(const Literal& o) const { return key() < o.key(); }
};

// An explicit clause as a literal set.  May be incomplete or inconsistent;
// this is the form consistency checking and serialization work on.
struct RawClause {
  int width = 0;
  std::vector<Literal> literals;
};

// A complete consistent clause over `width` variable positions, stored as its
// equality partition plus the relation truth tables on equivalence classes.
// This determines the full literal set, and two clauses are equal exactly
// when their literal sets are.
class Clause {
 public:
  Clause() = default;
  Clause(std::vector<std::uint8_t> class_of, int num_classes,
         std::vector<std::vector<std::uint32_t>> rels)
      : width_(static_cast<int>(class_of.size())),
        num_classes_(num_classes),
        class_of_(std::move(class_of)),
        rels_(std::move(rels)) {}

  int width() const { return width_; }
  int num_classes() const { return num_classes_; }
  int class_of(int position) const { return class_of_[position]; }

  // Truth of the positive literal rel(args); vocab_index 0 is eq.
  bool holds(int vocab_index, std::span<const int> args) const;

  // The clause obtained by dropping every literal that mentions a position
  // outside `keep`; the kept positions are renumbered in the given order.
  Clause restrict_to(std::span<const int> keep, const Vocabulary& vocab) const;

  FiniteStructure to_structure(const Vocabulary& vocab) const;
  std::vector<Literal> literals(const Vocabulary& vocab) const;  // complete, sorted

  auto operator<=>(const Clause&) const = default;

 private:
  int width_ = 0;
  int num_classes_ = 0;
  std::vector<std::uint8_t> class_of_;
  std::vector<std::vector<std::uint32_t>> rels_;  // per non-eq vocabulary relation
};

// Completeness plus consistency of an explicit clause (the equality literals
// form an equivalence and the literal set is invariant under it).
// Incomplete clauses are a malformed-clause error.
bool clause_consistent(const Vocabulary& vocab, const RawClause& clause);

// The finite structure on equality classes induced by a complete consistent
// clause; inconsistent input is an error.
FiniteStructure clause_to_structure(const Vocabulary& vocab, const RawClause& clause);

// Canonical form of a complete consistent clause.
Clause canonical_clause(const Vocabulary& vocab, const RawClause& clause);

}  // namespace atomreach
