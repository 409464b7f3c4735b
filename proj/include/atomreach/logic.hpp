#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "atomreach/backend.hpp"
#include "atomreach/clause.hpp"
#include "atomreach/formula.hpp"
#include "atomreach/ldnf.hpp"

namespace atomreach {

inline constexpr int kDefaultWidthBudget = 8;

// An ldnf constraining a block of a wider variable list: positions[i] is the
// combined position of the constraint's variable i.
struct LiftedConstraint {
  const Ldnf* constraint;
  std::vector<int> positions;
};

// Normalization engine for one backend: legal-clause enumeration (cached per
// width), ldnf conversion, quantifier elimination, satisfiability.  All
// methods are const and safe to share; the clause cache is internally locked.
class LogicContext {
 public:
  explicit LogicContext(BackendPtr backend, int width_budget = kDefaultWidthBudget);

  const AtomBackend& backend() const { return *backend_; }
  const BackendPtr& backend_ptr() const { return backend_; }
  const Vocabulary& vocab() const { return backend_->vocabulary(); }
  int width_budget() const { return budget_; }

  // Exceeding the width budget is a hard error, never silent truncation.
  void check_width(int width) const;

  // All legal complete clauses over `width` positions, in canonical order.
  const std::vector<Clause>& legal_clauses(int width) const;

  Ldnf full_ldnf(int width) const;
  Ldnf complement(const Ldnf& d) const;

  // Clause-wise restriction dropping one variable position.
  Ldnf eliminate_exists(const Ldnf& d, int position) const;
  Ldnf eliminate_exists(const Ldnf& d, std::span<const std::string> vars,
                        const std::string& var) const;

  // Conjunction of block constraints: the legal clauses over `width` whose
  // restriction to every part's positions lies in that part's ldnf.
  Ldnf conjoin(int width, std::span<const LiftedConstraint> parts) const;

  Ldnf qf_to_ldnf(const Formula& f, std::span<const std::string> vars) const;
  Ldnf fo_to_ldnf(const Formula& f, std::span<const std::string> vars) const;
  bool satisfiable(const Formula& f) const;

  // The unique complete clause realized by a tuple of concrete atoms.
  Clause complete_clause_of(std::span<const ConcreteAtom> atoms) const;

  // Legality via the induced-substructure check (independent of enumeration).
  bool is_legal(const Clause& c) const;
  bool is_legal(const RawClause& c) const;

 private:
  bool eval_on_clause(const Formula& f, const Clause& c,
                      const std::map<std::string, int>& position_of) const;

  BackendPtr backend_;
  int budget_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::shared_ptr<const std::vector<Clause>>> cache_;
};

}  // namespace atomreach
