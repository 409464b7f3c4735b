#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "atomreach/structure.hpp"

namespace atomreach {

// First-order formula AST over some vocabulary.  Immutable, cheap to copy.
class Formula {
 public:
  enum class Kind { True, False, Rel, Not, And, Or, Exists, Forall };

  static Formula truth();
  static Formula falsity();
  static Formula rel(std::string name, std::vector<std::string> args);
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula exists(std::string var, Formula body);
  static Formula forall(std::string var, Formula body);

  Kind kind() const;
  const std::string& rel_name() const;
  const std::vector<std::string>& rel_args() const;
  const Formula& child(std::size_t i) const;  // Not: 0; And/Or: 0,1
  const std::string& bound_var() const;
  const Formula& body() const;

  // Free variables in first-occurrence order.
  std::vector<std::string> free_vars() const;
  bool quantifier_free() const;

  std::string str() const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Parses the formula text syntax: rel(v1,v2), eq(a,b), & | !, true/false,
// exists v. / forall v., parentheses.  Identifiers: [a-zA-Z][a-zA-Z0-9_']*.
// Quantifier bodies extend as far right as possible.
// Throws a parse error with line/column on bad input.
Formula parse_formula(std::string_view text);

// Expands the lt(a,b) shorthand to le(a,b) & !eq(a,b) when the vocabulary has
// an order relation le.  Everything else passes through unchanged.
Formula expand_sugar(const Formula& f, const Vocabulary& vocab);

}  // namespace atomreach
