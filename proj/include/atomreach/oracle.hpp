#pragma once

#include <array>
#include <set>

#include "atomreach/reachability.hpp"

namespace atomreach {

// A finite slice of a backend's concrete model, used as explicit-state ground
// truth.  Atoms must be pairwise distinct.
struct FiniteUniverse {
  BackendPtr backend;
  std::vector<ConcreteAtom> atoms;
};

// Default universes, sized to realize all clauses of width <= 3:
// equality #0..#3, total order 0..3, equivalence 2 classes x 2 members,
// graph vertices #0..#5.  Other backends have no concrete model.
FiniteUniverse default_universe(const BackendPtr& backend);

// One instantiated element: a component index with a tuple of atom ordinals.
struct ExplicitItem {
  std::string index;
  std::vector<int> atoms;

  auto operator<=>(const ExplicitItem&) const = default;
};

struct ExplicitNfa {
  std::vector<ExplicitItem> states;   // ids are positions
  std::vector<ExplicitItem> letters;  // ids are positions
  std::set<int> finals;
  std::set<std::array<int, 3>> delta;  // (state, letter, state)
};

// Rule ids refer to the accompanying ExplicitNfa's state/letter lists.
struct ExplicitPds {
  std::set<int> locations;               // state ids
  std::set<std::array<int, 5>> push;     // (state, letter, state, letter, letter)
  std::set<std::array<int, 3>> pop;      // (state, letter, state)
};

std::vector<ExplicitItem> instantiate_set(const LogicContext& ctx, const FiniteUniverse& universe,
                                          const FoSet& set);
ExplicitNfa instantiate_nfa(const LogicContext& ctx, const FiniteUniverse& universe,
                            const FoNfa& nfa);
ExplicitPds instantiate_pds(const LogicContext& ctx, const FiniteUniverse& universe,
                            const FoPds& pds, const ExplicitNfa& nfa);

// Textbook explicit-state saturation, run literally on the finite sets.
ExplicitNfa explicit_saturate(const ExplicitPds& pds, const ExplicitNfa& nfa);

bool explicit_accepts(const ExplicitNfa& nfa, int state, std::span<const int> word);

// Membership of an explicit configuration in the backward reachability set,
// via explicit saturation (exact on the finite instantiation).
bool explicit_prestar_member(const ExplicitPds& pds, const ExplicitNfa& nfa, int state,
                             std::span<const int> word);

struct CrossCheckReport {
  std::vector<std::string> violations;
  long long configs_checked = 0;
  long long explicit_accepted = 0;
  int symbolic_samples = 0;
  bool dim0 = false;

  bool ok() const { return violations.empty(); }
};

// Instantiates (pds, nfa) over the universe, saturates both explicitly and
// symbolically, and checks, for every configuration with stack length up to
// stack_bound: explicit membership implies symbolic membership.  The finite
// system is a sub-system of the infinite one, so only this direction holds
// in general; for dim-0 (classical) inputs the two saturations must coincide
// exactly.  A bounded sample of configurations is additionally pushed through
// the full symbolic acceptance path.
CrossCheckReport cross_check(const LogicContext& ctx, const FiniteUniverse& universe,
                             const FoPds& pds, const FoNfa& nfa, int stack_bound,
                             int symbolic_sample_limit = 48);

}  // namespace atomreach
