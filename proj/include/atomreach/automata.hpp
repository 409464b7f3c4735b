#pragma once

#include <set>
#include <string>
#include <vector>

#include "atomreach/logic.hpp"
#include "atomreach/machine.hpp"

namespace atomreach {

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  std::string joined() const;
};

// Checks the assumptions the saturation construction relies on: every
// location is an NFA state with an entailed constraint, locations have no
// incoming transitions, all rule/transition blocks stay inside their
// component constraints, and everything is within the width budget.
ValidationReport validate(const LogicContext& ctx, const FoPds& pds, const FoNfa& nfa);

// Number of orbits: the sum over components of the constraint's clause count.
long long orbit_count(const LogicContext& ctx, const FoSet& set);

// Synchronous product; states are index pairs "<a>,<b>" with concatenated
// variable blocks, the letter block shared.  Accepts the intersection.
FoNfa product_nfa(const LogicContext& ctx, const FoNfa& a, const FoNfa& b);

std::string product_index(const std::string& a, const std::string& b);

// Nonemptiness from the given start components via BFS over orbit states
// (index, legal clause).  Homogeneity makes the orbit graph exact: an orbit
// can take a transition exactly when each of its members can.
bool nfa_nonempty(const LogicContext& ctx, const FoNfa& nfa,
                  const std::set<std::string>& start_indices);

// As above but with explicit per-index sets of start clauses.
bool nfa_nonempty(const LogicContext& ctx, const FoNfa& nfa,
                  const std::map<std::string, Ldnf>& start);

// Word acceptance for concrete atoms, computed symbolically: the complete
// clause of all given atoms is chained through the delta ldnfs, eliminating
// consumed blocks eagerly to keep the width at
// (state block + remaining letter atoms + next state block).
// The empty word is accepted exactly when the start tuple's clause lies in
// the start state's finals; final start states are allowed.
bool nfa_accepts(const LogicContext& ctx, const FoNfa& nfa, const std::string& start_index,
                 std::span<const ConcreteAtom> state_atoms,
                 std::span<const std::pair<std::string, std::vector<ConcreteAtom>>> word);

}  // namespace atomreach
