#pragma once

#include "atomreach/automata.hpp"

namespace atomreach {

struct SaturationResult {
  FoNfa automaton;
  int iterations = 0;
  // Clauses added per triple beyond the initial delta plus pop rules.
  std::map<DeltaKey, int> added_clauses;
};

// The forced transitions of alpha: for each (l,k,l'), the disjunction over
// matching push rules and intermediate states (l'', l''', k', k'') of
//   exists x'', y', y'', x''' .
//     push(x,y,x'',y',y'') /\ alpha(x'',y',x''') /\ alpha(x''',y'',x'),
// normalized to ldnf.  The nfa argument supplies the state dimensions.
DeltaMap forced(const LogicContext& ctx, const FoPds& pds, const FoNfa& nfa,
                const DeltaMap& alpha);

// Saturation fixpoint: delta' starts as delta united with the pop rules and
// grows by forced(delta') until nothing new is forced (clause-set inclusion,
// exact by ldnf canonicity).  The result recognizes the backward reachability
// set of the input NFA's configuration language.
// Refuses to run unless validate(pds, nfa) is clean.
SaturationResult saturate(const LogicContext& ctx, const FoPds& pds, const FoNfa& nfa);

}  // namespace atomreach
