#include "atomreach/reachability.hpp"

#include "atomreach/error.hpp"

namespace atomreach {

namespace {

std::vector<int> iota_block(int begin, int count) {
  std::vector<int> out(count);
  for (int i = 0; i < count; ++i) out[i] = begin + i;
  return out;
}

constexpr const char* kSinkState = "sink$";  // '$' cannot appear in identifiers

}  // namespace

bool prestar_member_saturated(const LogicContext& ctx, const FoNfa& saturated,
                              const Configuration& config) {
  return nfa_accepts(ctx, saturated, config.location, config.state_atoms, config.stack);
}

bool prestar_member(const LogicContext& ctx, const FoPds& pds, const FoNfa& nfa,
                    const Configuration& config) {
  SaturationResult result = saturate(ctx, pds, nfa);
  return prestar_member_saturated(ctx, result.automaton, config);
}

FoNfa location_target_nfa(const LogicContext& ctx, const FoPds& pds, const std::string& q) {
  if (!pds.locations.has(q))
    fail(ErrorKind::BadArgument, "unknown location '" + q + "'");
  FoNfa out;
  out.alphabet = pds.alphabet;
  out.states = pds.locations;
  out.states.components[kSinkState] = {0, ctx.full_ldnf(0)};
  out.finals[q] = pds.locations.at(q).constraint;
  out.finals[kSinkState] = ctx.full_ldnf(0);
  const FoComponent& target = pds.locations.at(q);
  for (const auto& [letter, comp] : pds.alphabet.components) {
    std::vector<LiftedConstraint> parts{{&target.constraint, iota_block(0, target.dim)},
                                        {&comp.constraint, iota_block(target.dim, comp.dim)}};
    Ldnf from_q = ctx.conjoin(target.dim + comp.dim, parts);
    if (!from_q.empty()) out.delta[{q, letter, kSinkState}] = std::move(from_q);
    if (!comp.constraint.empty())
      out.delta[{kSinkState, letter, kSinkState}] = comp.constraint;
  }
  return out;
}

bool reach_decision(const LogicContext& ctx, const FoPds& pds, const std::string& from,
                    const std::string& bottom_letter,
                    const std::optional<std::vector<ConcreteAtom>>& bottom_atoms,
                    const std::string& to) {
  if (!pds.locations.has(from))
    fail(ErrorKind::BadArgument, "unknown location '" + from + "'");
  if (!pds.alphabet.has(bottom_letter))
    fail(ErrorKind::BadArgument, "unknown letter '" + bottom_letter + "'");

  FoNfa target = location_target_nfa(ctx, pds, to);
  SaturationResult sat = saturate(ctx, pds, target);
  const FoNfa& aut = sat.automaton;

  const int d_from = aut.states.at(from).dim;
  const int d_letter = aut.alphabet.at(bottom_letter).dim;
  std::optional<Clause> letter_clause;
  if (bottom_atoms) {
    if (static_cast<int>(bottom_atoms->size()) != d_letter)
      fail(ErrorKind::BadArgument, "bottom letter tuple dimension mismatch");
    letter_clause = ctx.complete_clause_of(*bottom_atoms);
  }

  // The stack is the single bottom letter, so acceptance means one saturated
  // transition from `from` into a final clause, with the letter block matching
  // the given atoms (or any letter in the component when "any").
  std::vector<int> src = iota_block(0, d_from);
  std::vector<int> let = iota_block(d_from, d_letter);
  for (const auto& [key, d] : aut.delta) {
    if (key.from != from || key.letter != bottom_letter) continue;
    auto fin = aut.finals.find(key.to);
    if (fin == aut.finals.end()) continue;
    const int d_to = aut.states.at(key.to).dim;
    std::vector<int> tgt = iota_block(d_from + d_letter, d_to);
    for (const auto& clause : d.clauses()) {
      if (letter_clause && !(clause.restrict_to(let, ctx.vocab()) == *letter_clause)) continue;
      if (!pds.locations.at(from).constraint.contains(clause.restrict_to(src, ctx.vocab())))
        continue;
      if (fin->second.contains(clause.restrict_to(tgt, ctx.vocab()))) return true;
    }
  }
  return false;
}

bool decision_reachability(const LogicContext& ctx, const FoPds& pds, const FoNfa& b,
                           const FoNfa& c) {
  SaturationResult sat = saturate(ctx, pds, b);
  FoNfa prod = product_nfa(ctx, sat.automaton, c);

  std::map<std::string, Ldnf> start;
  for (const auto& [loc, comp] : pds.locations.components) {
    if (!c.states.has(loc)) continue;
    if (c.states.at(loc).dim != comp.dim)
      fail(ErrorKind::BadArgument,
           "location '" + loc + "' has a different dimension in the C automaton");
    const std::string index = product_index(loc, loc);
    const FoComponent& pc = prod.states.at(index);
    // Both runs read the same configuration, so the two state blocks carry
    // the same atoms: keep the diagonal clauses within the location orbit.
    std::vector<int> first = iota_block(0, comp.dim);
    std::vector<Clause> diag;
    for (const auto& clause : pc.constraint.clauses()) {
      bool diagonal = true;
      for (int i = 0; i < comp.dim; ++i) {
        if (clause.class_of(i) != clause.class_of(comp.dim + i)) {
          diagonal = false;
          break;
        }
      }
      if (!diagonal) continue;
      if (!comp.constraint.contains(clause.restrict_to(first, ctx.vocab()))) continue;
      diag.push_back(clause);
    }
    if (!diag.empty()) start[index] = Ldnf(pc.dim, std::move(diag));
  }
  if (start.empty()) return false;
  return nfa_nonempty(ctx, prod, start);
}

}  // namespace atomreach
