#include "atomreach/automata.hpp"

#include <algorithm>
#include <deque>

#include "atomreach/error.hpp"

namespace atomreach {

std::string ValidationReport::joined() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v;
  }
  return out;
}

namespace {

std::vector<int> iota_block(int begin, int count) {
  std::vector<int> out(count);
  for (int i = 0; i < count; ++i) out[i] = begin + i;
  return out;
}

void check_entry_blocks(const LogicContext& ctx, const std::string& what, const Ldnf& d,
                        const std::vector<std::pair<const FoComponent*, int>>& blocks,
                        ValidationReport& report) {
  int total = 0;
  for (const auto& [comp, offset] : blocks) total += comp->dim;
  if (d.width() != total) {
    report.violations.push_back(what + ": formula width " + std::to_string(d.width()) +
                                " does not match the block dimensions " + std::to_string(total));
    return;
  }
  for (const auto& [comp, offset] : blocks) {
    std::vector<int> positions = iota_block(offset, comp->dim);
    for (const auto& clause : d.clauses()) {
      if (!comp->constraint.contains(clause.restrict_to(positions, ctx.vocab()))) {
        report.violations.push_back(what + ": a clause leaves the component constraint");
        return;
      }
    }
  }
}

}  // namespace

ValidationReport validate(const LogicContext& ctx, const FoPds& pds, const FoNfa& nfa) {
  ValidationReport report;

  if (!(pds.alphabet == nfa.alphabet))
    report.violations.push_back("the NFA alphabet differs from the PDS alphabet");

  for (const auto& [name, comp] : pds.alphabet.components)
    if (comp.dim > ctx.width_budget())
      report.violations.push_back("letter '" + name + "' exceeds the width budget");
  for (const auto& [name, comp] : nfa.states.components)
    if (comp.dim > ctx.width_budget())
      report.violations.push_back("state '" + name + "' exceeds the width budget");

  // P is part of Q: same indices, matching dimensions, entailed constraints.
  for (const auto& [loc, comp] : pds.locations.components) {
    if (!nfa.states.has(loc)) {
      report.violations.push_back("location '" + loc + "' is not an NFA state");
      continue;
    }
    const FoComponent& state = nfa.states.at(loc);
    if (state.dim != comp.dim) {
      report.violations.push_back("location '" + loc + "' has a different dimension as a state");
      continue;
    }
    if (!comp.constraint.entails(state.constraint))
      report.violations.push_back("location constraint of '" + loc +
                                  "' is not entailed by the state constraint");
  }

  // Locations must not have incoming transitions.
  for (const auto& [key, d] : nfa.delta) {
    if (d.empty()) continue;
    if (pds.locations.has(key.to))
      report.violations.push_back("incoming transition to P-state '" + key.to + "'");
  }

  for (const auto& [key, d] : nfa.delta) {
    if (!nfa.states.has(key.from) || !nfa.alphabet.has(key.letter) || !nfa.states.has(key.to)) {
      report.violations.push_back("transition (" + key.from + "," + key.letter + "," + key.to +
                                  ") references an undeclared index");
      continue;
    }
    check_entry_blocks(ctx, "transition (" + key.from + "," + key.letter + "," + key.to + ")", d,
                       {{&nfa.states.at(key.from), 0},
                        {&nfa.alphabet.at(key.letter), nfa.states.at(key.from).dim},
                        {&nfa.states.at(key.to),
                         nfa.states.at(key.from).dim + nfa.alphabet.at(key.letter).dim}},
                       report);
  }

  for (const auto& [state, d] : nfa.finals) {
    if (!nfa.states.has(state)) {
      report.violations.push_back("final marker on undeclared state '" + state + "'");
      continue;
    }
    if (d.width() != nfa.states.at(state).dim)
      report.violations.push_back("final constraint width mismatch on '" + state + "'");
    else if (!d.entails(nfa.states.at(state).constraint))
      report.violations.push_back("final constraint of '" + state +
                                  "' is not entailed by the state constraint");
  }

  for (const auto& [key, d] : pds.pop) {
    if (!pds.locations.has(key.from) || !pds.alphabet.has(key.letter) ||
        !pds.locations.has(key.to)) {
      report.violations.push_back("pop rule (" + key.from + "," + key.letter + "," + key.to +
                                  ") references an undeclared index");
      continue;
    }
    check_entry_blocks(ctx, "pop rule (" + key.from + "," + key.letter + "," + key.to + ")", d,
                       {{&pds.locations.at(key.from), 0},
                        {&pds.alphabet.at(key.letter), pds.locations.at(key.from).dim},
                        {&pds.locations.at(key.to),
                         pds.locations.at(key.from).dim + pds.alphabet.at(key.letter).dim}},
                       report);
  }

  for (const auto& [key, d] : pds.push) {
    if (!pds.locations.has(key.from) || !pds.alphabet.has(key.pop) ||
        !pds.locations.has(key.to) || !pds.alphabet.has(key.push1) ||
        !pds.alphabet.has(key.push2)) {
      report.violations.push_back("push rule (" + key.from + "," + key.pop + "," + key.to + "," +
                                  key.push1 + "," + key.push2 +
                                  ") references an undeclared index");
      continue;
    }
    int off = 0;
    std::vector<std::pair<const FoComponent*, int>> blocks;
    for (const FoComponent* comp :
         {&pds.locations.at(key.from), &pds.alphabet.at(key.pop), &pds.locations.at(key.to),
          &pds.alphabet.at(key.push1), &pds.alphabet.at(key.push2)}) {
      blocks.emplace_back(comp, off);
      off += comp->dim;
    }
    check_entry_blocks(ctx,
                       "push rule (" + key.from + "," + key.pop + "," + key.to + "," + key.push1 +
                           "," + key.push2 + ")",
                       d, blocks, report);
  }

  return report;
}

long long orbit_count(const LogicContext& ctx, const FoSet& set) {
  long long total = 0;
  for (const auto& [name, comp] : set.components) {
    ctx.check_width(comp.dim);
    total += static_cast<long long>(comp.constraint.size());
  }
  return total;
}

std::string product_index(const std::string& a, const std::string& b) { return a + "," + b; }

FoNfa product_nfa(const LogicContext& ctx, const FoNfa& a, const FoNfa& b) {
  if (!(a.alphabet == b.alphabet))
    fail(ErrorKind::AlphabetMismatch, "product of NFAs over different alphabets");
  FoNfa out;
  out.alphabet = a.alphabet;

  for (const auto& [la, ca] : a.states.components) {
    for (const auto& [lb, cb] : b.states.components) {
      const int dim = ca.dim + cb.dim;
      std::vector<LiftedConstraint> parts{{&ca.constraint, iota_block(0, ca.dim)},
                                          {&cb.constraint, iota_block(ca.dim, cb.dim)}};
      out.states.components[product_index(la, lb)] = {dim, ctx.conjoin(dim, parts)};

      auto fa = a.finals.find(la);
      auto fb = b.finals.find(lb);
      if (fa != a.finals.end() && fb != b.finals.end()) {
        std::vector<LiftedConstraint> fparts{{&fa->second, iota_block(0, ca.dim)},
                                             {&fb->second, iota_block(ca.dim, cb.dim)}};
        Ldnf fin = ctx.conjoin(dim, fparts);
        if (!fin.empty()) out.finals[product_index(la, lb)] = std::move(fin);
      }
    }
  }

  for (const auto& [ka, da] : a.delta) {
    for (const auto& [kb, db] : b.delta) {
      if (ka.letter != kb.letter) continue;
      const int d_sa = a.states.at(ka.from).dim, d_sb = b.states.at(kb.from).dim;
      const int d_k = a.alphabet.at(ka.letter).dim;
      const int d_ta = a.states.at(ka.to).dim, d_tb = b.states.at(kb.to).dim;
      const int width = d_sa + d_sb + d_k + d_ta + d_tb;

      std::vector<int> pos_a = iota_block(0, d_sa);
      for (int p : iota_block(d_sa + d_sb, d_k)) pos_a.push_back(p);
      for (int p : iota_block(d_sa + d_sb + d_k, d_ta)) pos_a.push_back(p);
      std::vector<int> pos_b = iota_block(d_sa, d_sb);
      for (int p : iota_block(d_sa + d_sb, d_k)) pos_b.push_back(p);
      for (int p : iota_block(d_sa + d_sb + d_k + d_ta, d_tb)) pos_b.push_back(p);

      std::vector<LiftedConstraint> parts{{&da, std::move(pos_a)}, {&db, std::move(pos_b)}};
      Ldnf conj = ctx.conjoin(width, parts);
      if (!conj.empty())
        out.delta[{product_index(ka.from, kb.from), ka.letter, product_index(ka.to, kb.to)}] =
            std::move(conj);
    }
  }
  return out;
}

bool nfa_nonempty(const LogicContext& ctx, const FoNfa& nfa,
                  const std::set<std::string>& start_indices) {
  std::map<std::string, Ldnf> start;
  for (const auto& index : start_indices) {
    if (!nfa.states.has(index))
      fail(ErrorKind::BadArgument, "unknown start state '" + index + "'");
    start[index] = nfa.states.at(index).constraint;
  }
  return nfa_nonempty(ctx, nfa, start);
}

bool nfa_nonempty(const LogicContext& ctx, const FoNfa& nfa,
                  const std::map<std::string, Ldnf>& start) {
  // Orbit-state edges, read off the delta clauses by restriction.
  struct Edge {
    Clause source;
    std::string to;
    Clause target;
  };
  std::map<std::string, std::vector<Edge>> edges;
  for (const auto& [key, d] : nfa.delta) {
    const int d_from = nfa.states.at(key.from).dim;
    const int d_letter = nfa.alphabet.at(key.letter).dim;
    const int d_to = nfa.states.at(key.to).dim;
    std::vector<int> src = iota_block(0, d_from);
    std::vector<int> tgt = iota_block(d_from + d_letter, d_to);
    for (const auto& clause : d.clauses())
      edges[key.from].push_back(
          {clause.restrict_to(src, ctx.vocab()), key.to, clause.restrict_to(tgt, ctx.vocab())});
  }

  std::map<std::string, std::set<Clause>> visited;
  std::deque<std::pair<std::string, Clause>> queue;
  auto is_final = [&](const std::string& index, const Clause& c) {
    auto it = nfa.finals.find(index);
    return it != nfa.finals.end() && it->second.contains(c);
  };
  for (const auto& [index, d] : start) {
    for (const auto& c : d.clauses()) {
      if (is_final(index, c)) return true;
      if (visited[index].insert(c).second) queue.emplace_back(index, c);
    }
  }
  while (!queue.empty()) {
    auto [index, clause] = queue.front();
    queue.pop_front();
    auto it = edges.find(index);
    if (it == edges.end()) continue;
    for (const auto& edge : it->second) {
      if (!(edge.source == clause)) continue;
      if (is_final(edge.to, edge.target)) return true;
      if (visited[edge.to].insert(edge.target).second) queue.emplace_back(edge.to, edge.target);
    }
  }
  return false;
}

bool nfa_accepts(const LogicContext& ctx, const FoNfa& nfa, const std::string& start_index,
                 std::span<const ConcreteAtom> state_atoms,
                 std::span<const std::pair<std::string, std::vector<ConcreteAtom>>> word) {
  if (!nfa.states.has(start_index))
    fail(ErrorKind::BadArgument, "unknown start state '" + start_index + "'");
  if (static_cast<int>(state_atoms.size()) != nfa.states.at(start_index).dim)
    fail(ErrorKind::BadArgument, "state tuple dimension mismatch at '" + start_index + "'");

  std::vector<int> letter_dims;
  std::vector<ConcreteAtom> all_atoms(state_atoms.begin(), state_atoms.end());
  for (const auto& [letter, atoms] : word) {
    if (!nfa.alphabet.has(letter))
      fail(ErrorKind::BadArgument, "unknown letter '" + letter + "'");
    if (static_cast<int>(atoms.size()) != nfa.alphabet.at(letter).dim)
      fail(ErrorKind::BadArgument, "letter tuple dimension mismatch at '" + letter + "'");
    letter_dims.push_back(static_cast<int>(atoms.size()));
    all_atoms.insert(all_atoms.end(), atoms.begin(), atoms.end());
  }

  const Clause tau0 = ctx.complete_clause_of(all_atoms);
  std::map<std::string, Ldnf> reach;
  reach[start_index] = Ldnf(tau0.width(), {tau0});

  int rest = 0;
  for (int d : letter_dims) rest += d;

  for (std::size_t step = 0; step < word.size(); ++step) {
    const std::string& letter = word[step].first;
    const int d_k = letter_dims[step];
    rest -= d_k;

    std::map<std::string, Ldnf> next;
    for (const auto& [from, d] : reach) {
      const int d_from = nfa.states.at(from).dim;
      for (const auto& [key, trans] : nfa.delta) {
        if (key.from != from || key.letter != letter || trans.empty()) continue;
        const int d_to = nfa.states.at(key.to).dim;
        const int width = d_from + d_k + rest + d_to;

        std::vector<int> pos_reach = iota_block(0, d_from + d_k + rest);
        std::vector<int> pos_trans = iota_block(0, d_from + d_k);
        for (int p : iota_block(d_from + d_k + rest, d_to)) pos_trans.push_back(p);
        std::vector<LiftedConstraint> parts{{&d, std::move(pos_reach)},
                                            {&trans, std::move(pos_trans)}};
        Ldnf conj = ctx.conjoin(width, parts);
        if (conj.empty()) continue;

        // Project to (new state block, remaining letters), dropping the
        // consumed state and letter blocks; exact by homogeneity.
        std::vector<int> keep = iota_block(d_from + d_k + rest, d_to);
        for (int p : iota_block(d_from + d_k, rest)) keep.push_back(p);
        std::vector<Clause> projected;
        projected.reserve(conj.size());
        for (const auto& c : conj.clauses()) projected.push_back(c.restrict_to(keep, ctx.vocab()));
        Ldnf moved(d_to + rest, std::move(projected));

        auto it = next.find(key.to);
        if (it == next.end())
          next.emplace(key.to, std::move(moved));
        else
          it->second = it->second.union_with(moved);
      }
    }
    reach = std::move(next);
    if (reach.empty()) return false;
  }

  for (const auto& [index, d] : reach) {
    auto it = nfa.finals.find(index);
    if (it == nfa.finals.end()) continue;
    for (const auto& c : d.clauses())
      if (it->second.contains(c)) return true;
  }
  return false;
}

}  // namespace atomreach
