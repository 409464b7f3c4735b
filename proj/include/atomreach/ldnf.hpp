#pragma once

#include <vector>

#include "atomreach/clause.hpp"

namespace atomreach {

// Legal disjunctive normal form: a canonical (sorted, deduplicated) set of
// legal complete clauses over the same variables.  The empty set is false;
// the width-0 ldnf holding the empty clause is true.
class Ldnf {
 public:
  Ldnf() = default;
  explicit Ldnf(int width) : width_(width) {}
  Ldnf(int width, std::vector<Clause> clauses);

  int width() const { return width_; }
  bool empty() const { return clauses_.empty(); }
  std::size_t size() const { return clauses_.size(); }
  const std::vector<Clause>& clauses() const { return clauses_; }

  bool contains(const Clause& c) const;

  // Clause-set inclusion; sound and complete for entailment because distinct
  // legal complete clauses denote disjoint orbits.
  bool entails(const Ldnf& other) const;
  Ldnf union_with(const Ldnf& other) const;

  bool operator==(const Ldnf&) const = default;

 private:
  int width_ = 0;
  std::vector<Clause> clauses_;
};

}  // namespace atomreach
