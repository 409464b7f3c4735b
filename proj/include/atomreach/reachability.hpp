#pragma once

#include <optional>

#include "atomreach/saturation.hpp"

namespace atomreach {

// Configuration membership in the backward reachability set of the NFA's
// language: saturate, then accept the configuration's stack word from its
// location state.  Needs a concrete model for the configuration atoms.
bool prestar_member(const LogicContext& ctx, const FoPds& pds, const FoNfa& nfa,
                    const Configuration& config);

// Same, against an already saturated automaton.
bool prestar_member_saturated(const LogicContext& ctx, const FoNfa& saturated,
                              const Configuration& config);

// The {q} x Gamma* target automaton: the PDS locations plus a dim-0 sink that
// accepts any stack suffix; q's component and the sink are final.
FoNfa location_target_nfa(const LogicContext& ctx, const FoPds& pds, const std::string& q);

// Location-to-location reachability: does some configuration (from, bottom)
// reach {to} x Gamma*?  An absent atom tuple means "any": the query is then
// answered by satisfiability over the orbit, which also works for backends
// without a concrete model.
bool reach_decision(const LogicContext& ctx, const FoPds& pds, const std::string& from,
                    const std::string& bottom_letter,
                    const std::optional<std::vector<ConcreteAtom>>& bottom_atoms,
                    const std::string& to);

// Regular-target decision reachability: do some b in L(B), c in L(C) satisfy
// c ->* b?  Computed by saturating B and intersecting with C; the product is
// started from the diagonal location states.
bool decision_reachability(const LogicContext& ctx, const FoPds& pds, const FoNfa& b,
                           const FoNfa& c);

}  // namespace atomreach
