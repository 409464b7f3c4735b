#pragma once

#include <cstdint>
#include <memory>
#include <variant>

#include "atomreach/rational.hpp"

namespace atomreach {

// A concrete atom of some backend's model.  Integers serve equality atoms and
// graph vertices, rationals the dense order, and pairs both equivalence atoms
// (classId, memberId) and wreath-product atoms (A-part, B-part).
class ConcreteAtom {
 public:
  ConcreteAtom() : value_(std::int64_t{0}) {}
  explicit ConcreteAtom(std::int64_t v) : value_(v) {}
  explicit ConcreteAtom(Rational v) : value_(std::move(v)) {}
  ConcreteAtom(ConcreteAtom first, ConcreteAtom second);

  bool is_int() const { return std::holds_alternative<std::int64_t>(value_); }
  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  bool is_pair() const { return std::holds_alternative<std::shared_ptr<const Pair>>(value_); }

  std::int64_t as_int() const { return std::get<std::int64_t>(value_); }
  const Rational& as_rational() const { return std::get<Rational>(value_); }
  const ConcreteAtom& first() const;
  const ConcreteAtom& second() const;

  bool operator==(const ConcreteAtom& other) const;
  bool operator<(const ConcreteAtom& other) const;  // structural order, for containers

 private:
  struct Pair;
  std::variant<std::int64_t, Rational, std::shared_ptr<const Pair>> value_;
};

}  // namespace atomreach
