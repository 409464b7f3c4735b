#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace atomreach {

struct Relation {
  std::string name;
  int arity = 0;

  bool operator==(const Relation&) const = default;
};

// Finite relational vocabulary.  The equality relation "eq" (arity 2) is
// always present and always first.
class Vocabulary {
 public:
  Vocabulary();  // just eq
  explicit Vocabulary(std::vector<Relation> extra);  // eq plus the given relations

  const std::vector<Relation>& relations() const { return relations_; }
  int size() const { return static_cast<int>(relations_.size()); }

  // Index of a relation name, -1 if absent.  eq has index 0.
  int index_of(const std::string& name) const;
  const Relation& at(int index) const { return relations_[index]; }

  bool operator==(const Vocabulary&) const = default;

 private:
  std::vector<Relation> relations_;
};

// A finite structure over some vocabulary.  Elements are 0..size-1; relations
// are given extensionally.  A missing relation entry means the empty
// interpretation; eq may be omitted (read as the diagonal).
struct FiniteStructure {
  int size = 0;
  std::map<std::string, std::set<std::vector<int>>> tuples;

  bool holds(const std::string& rel, const std::vector<int>& args) const;
  bool eq_is_diagonal() const;

  // Induced substructure on the given elements (which become 0..k-1 in order).
  FiniteStructure restrict_to(const std::vector<int>& elements) const;

  bool operator==(const FiniteStructure&) const = default;
  auto operator<=>(const FiniteStructure&) const = default;
};

}  // namespace atomreach
