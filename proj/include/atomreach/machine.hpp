#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "atomreach/atom.hpp"
#include "atomreach/ldnf.hpp"

namespace atomreach {

// One indexed component of an FO-definable set: a dimension and an ldnf
// constraint over that many variables.
struct FoComponent {
  int dim = 0;
  Ldnf constraint;

  bool operator==(const FoComponent&) const = default;
};

// FO-definable set: a finite indexed union of constrained tuple sets.
struct FoSet {
  std::map<std::string, FoComponent> components;

  bool has(const std::string& index) const { return components.count(index) > 0; }
  const FoComponent& at(const std::string& index) const { return components.at(index); }

  bool operator==(const FoSet&) const = default;
};

struct DeltaKey {
  std::string from, letter, to;
  auto operator<=>(const DeltaKey&) const = default;
};

struct PushKey {
  std::string from, pop, to, push1, push2;
  auto operator<=>(const PushKey&) const = default;
};

using DeltaMap = std::map<DeltaKey, Ldnf>;

// FO-definable NFA over an FO-definable alphabet.  Absent delta
// entries denote the empty ldnf.  Delta formulas are over the variable blocks
// (source state, letter, target state), in that order.
struct FoNfa {
  FoSet alphabet;
  FoSet states;
  std::map<std::string, Ldnf> finals;  // per state index; absent = empty
  DeltaMap delta;

  bool operator==(const FoNfa&) const = default;
};

// FO-definable pushdown system.  Push rules pop one letter and push exactly
// two; their formulas are over the blocks (source location, popped letter,
// target location, first pushed letter, second pushed letter).
struct FoPds {
  FoSet alphabet;
  FoSet locations;
  std::map<PushKey, Ldnf> push;
  DeltaMap pop;

  bool operator==(const FoPds&) const = default;
};

// A control location with concrete atoms plus a stack word, top first.
struct Configuration {
  std::string location;
  std::vector<ConcreteAtom> state_atoms;
  std::vector<std::pair<std::string, std::vector<ConcreteAtom>>> stack;
};

}  // namespace atomreach
