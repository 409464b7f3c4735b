#include "atomreach/atom.hpp"

namespace atomreach {

struct ConcreteAtom::Pair {
  ConcreteAtom a;
  ConcreteAtom b;
};

ConcreteAtom::ConcreteAtom(ConcreteAtom first, ConcreteAtom second)
    : value_(std::make_shared<const Pair>(Pair{std::move(first), std::move(second)})) {}

const ConcreteAtom& ConcreteAtom::first() const {
  return std::get<std::shared_ptr<const Pair>>(value_)->a;
}

const ConcreteAtom& ConcreteAtom::second() const {
  return std::get<std::shared_ptr<const Pair>>(value_)->b;
}

namespace {
int kind_rank(const ConcreteAtom& a) {
  if (a.is_int()) return 0;
  if (a.is_rational()) return 1;
  return 2;
}
}  // namespace

bool ConcreteAtom::operator==(const ConcreteAtom& other) const {
  if (kind_rank(*this) != kind_rank(other)) return false;
  if (is_int()) return as_int() == other.as_int();
  if (is_rational()) return as_rational() == other.as_rational();
  return first() == other.first() && second() == other.second();
}

bool ConcreteAtom::operator<(const ConcreteAtom& other) const {
  int ra = kind_rank(*this), rb = kind_rank(other);
  if (ra != rb) return ra < rb;
  if (is_int()) return as_int() < other.as_int();
  if (is_rational()) return as_rational() < other.as_rational();
  if (first() == other.first()) return second() < other.second();
  return first() < other.first();
}

}  // namespace atomreach
