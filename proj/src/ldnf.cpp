#include "atomreach/ldnf.hpp"

#include <algorithm>

#include "atomreach/error.hpp"

namespace atomreach {

Ldnf::Ldnf(int width, std::vector<Clause> clauses) : width_(width), clauses_(std::move(clauses)) {
  for (const auto& c : clauses_)
    if (c.width() != width_)
      fail(ErrorKind::VariableListMismatch, "clause width differs from ldnf width");
  std::sort(clauses_.begin(), clauses_.end());
  clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
}

bool Ldnf::contains(const Clause& c) const {
  return std::binary_search(clauses_.begin(), clauses_.end(), c);
}

bool Ldnf::entails(const Ldnf& other) const {
  if (width_ != other.width_)
    fail(ErrorKind::VariableListMismatch, "ldnf widths differ in entailment check");
  return std::includes(other.clauses_.begin(), other.clauses_.end(), clauses_.begin(),
                       clauses_.end());
}

Ldnf Ldnf::union_with(const Ldnf& other) const {
  if (width_ != other.width_)
    fail(ErrorKind::VariableListMismatch, "ldnf widths differ in union");
  std::vector<Clause> merged;
  merged.reserve(clauses_.size() + other.clauses_.size());
  std::set_union(clauses_.begin(), clauses_.end(), other.clauses_.begin(), other.clauses_.end(),
                 std::back_inserter(merged));
  Ldnf out(width_);
  out.clauses_ = std::move(merged);
  return out;
}

}  // namespace atomreach
