#include "atomreach/oracle.hpp"

#include <algorithm>

#include "atomreach/error.hpp"

namespace atomreach {

FiniteUniverse default_universe(const BackendPtr& backend) {
  FiniteUniverse u;
  u.backend = backend;
  const std::string& name = backend->name();
  std::vector<std::string> literals;
  if (name == "equality") {
    literals = {"#0", "#1", "#2", "#3"};
  } else if (name == "total_order") {
    literals = {"0", "1", "2", "3"};
  } else if (name == "equivalence") {
    literals = {"0:0", "0:1", "1:0", "1:1"};
  } else if (name == "graph") {
    literals = {"#0", "#1", "#2", "#3", "#4", "#5"};
  } else {
    fail(ErrorKind::CapabilityUnsupported,
         "no default universe for backend '" + name + "'");
  }
  for (const auto& lit : literals) u.atoms.push_back(backend->parse_atom(lit));
  return u;
}

namespace {

void for_each_ordinal_tuple(int universe_size, int dim,
                            const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> tuple(dim, 0);
  if (dim == 0) {
    fn(tuple);
    return;
  }
  if (universe_size == 0) return;
  while (true) {
    fn(tuple);
    int p = dim - 1;
    while (p >= 0 && tuple[p] == universe_size - 1) tuple[p--] = 0;
    if (p < 0) return;
    ++tuple[p];
  }
}

std::vector<ConcreteAtom> atoms_of(const FiniteUniverse& universe, const std::vector<int>& tuple) {
  std::vector<ConcreteAtom> out;
  out.reserve(tuple.size());
  for (int i : tuple) out.push_back(universe.atoms[i]);
  return out;
}

int item_id(const std::vector<ExplicitItem>& items, const ExplicitItem& item) {
  auto it = std::lower_bound(items.begin(), items.end(), item);
  if (it == items.end() || !(*it == item)) return -1;
  return static_cast<int>(it - items.begin());
}

}  // namespace

std::vector<ExplicitItem> instantiate_set(const LogicContext& ctx, const FiniteUniverse& universe,
                                          const FoSet& set) {
  std::vector<ExplicitItem> items;
  for (const auto& [index, comp] : set.components) {
    for_each_ordinal_tuple(static_cast<int>(universe.atoms.size()), comp.dim,
                           [&](const std::vector<int>& tuple) {
                             Clause c = ctx.complete_clause_of(atoms_of(universe, tuple));
                             if (comp.constraint.contains(c)) items.push_back({index, tuple});
                           });
  }
  std::sort(items.begin(), items.end());
  return items;
}

ExplicitNfa instantiate_nfa(const LogicContext& ctx, const FiniteUniverse& universe,
                            const FoNfa& nfa) {
  ExplicitNfa out;
  out.states = instantiate_set(ctx, universe, nfa.states);
  out.letters = instantiate_set(ctx, universe, nfa.alphabet);

  for (int sid = 0; sid < static_cast<int>(out.states.size()); ++sid) {
    const ExplicitItem& item = out.states[sid];
    auto fin = nfa.finals.find(item.index);
    if (fin == nfa.finals.end()) continue;
    Clause c = ctx.complete_clause_of(atoms_of(universe, item.atoms));
    if (fin->second.contains(c)) out.finals.insert(sid);
  }

  for (const auto& [key, d] : nfa.delta) {
    if (d.empty()) continue;
    for (int sid = 0; sid < static_cast<int>(out.states.size()); ++sid) {
      if (out.states[sid].index != key.from) continue;
      for (int lid = 0; lid < static_cast<int>(out.letters.size()); ++lid) {
        if (out.letters[lid].index != key.letter) continue;
        for (int tid = 0; tid < static_cast<int>(out.states.size()); ++tid) {
          if (out.states[tid].index != key.to) continue;
          std::vector<ConcreteAtom> all = atoms_of(universe, out.states[sid].atoms);
          for (const auto& a : atoms_of(universe, out.letters[lid].atoms)) all.push_back(a);
          for (const auto& a : atoms_of(universe, out.states[tid].atoms)) all.push_back(a);
          if (d.contains(ctx.complete_clause_of(all))) out.delta.insert({sid, lid, tid});
        }
      }
    }
  }
  return out;
}

ExplicitPds instantiate_pds(const LogicContext& ctx, const FiniteUniverse& universe,
                            const FoPds& pds, const ExplicitNfa& nfa) {
  ExplicitPds out;
  for (const ExplicitItem& item : instantiate_set(ctx, universe, pds.locations)) {
    int id = item_id(nfa.states, item);
    if (id < 0)
      fail(ErrorKind::ValidationFailed,
           "instantiated location is not an instantiated state: " + item.index);
    out.locations.insert(id);
  }

  for (const auto& [key, d] : pds.pop) {
    if (d.empty()) continue;
    for (int sid : out.locations) {
      if (nfa.states[sid].index != key.from) continue;
      for (int lid = 0; lid < static_cast<int>(nfa.letters.size()); ++lid) {
        if (nfa.letters[lid].index != key.letter) continue;
        for (int tid : out.locations) {
          if (nfa.states[tid].index != key.to) continue;
          std::vector<ConcreteAtom> all = atoms_of(universe, nfa.states[sid].atoms);
          for (const auto& a : atoms_of(universe, nfa.letters[lid].atoms)) all.push_back(a);
          for (const auto& a : atoms_of(universe, nfa.states[tid].atoms)) all.push_back(a);
          if (d.contains(ctx.complete_clause_of(all))) out.pop.insert({sid, lid, tid});
        }
      }
    }
  }

  for (const auto& [key, d] : pds.push) {
    if (d.empty()) continue;
    for (int sid : out.locations) {
      if (nfa.states[sid].index != key.from) continue;
      for (int lid = 0; lid < static_cast<int>(nfa.letters.size()); ++lid) {
        if (nfa.letters[lid].index != key.pop) continue;
        for (int tid : out.locations) {
          if (nfa.states[tid].index != key.to) continue;
          for (int l1 = 0; l1 < static_cast<int>(nfa.letters.size()); ++l1) {
            if (nfa.letters[l1].index != key.push1) continue;
            for (int l2 = 0; l2 < static_cast<int>(nfa.letters.size()); ++l2) {
              if (nfa.letters[l2].index != key.push2) continue;
              std::vector<ConcreteAtom> all = atoms_of(universe, nfa.states[sid].atoms);
              for (const auto& a : atoms_of(universe, nfa.letters[lid].atoms)) all.push_back(a);
              for (const auto& a : atoms_of(universe, nfa.states[tid].atoms)) all.push_back(a);
              for (const auto& a : atoms_of(universe, nfa.letters[l1].atoms)) all.push_back(a);
              for (const auto& a : atoms_of(universe, nfa.letters[l2].atoms)) all.push_back(a);
              if (d.contains(ctx.complete_clause_of(all)))
                out.push.insert({sid, lid, tid, l1, l2});
            }
          }
        }
      }
    }
  }
  return out;
}

ExplicitNfa explicit_saturate(const ExplicitPds& pds, const ExplicitNfa& nfa) {
  ExplicitNfa out = nfa;
  for (const auto& rule : pds.pop) out.delta.insert(rule);
  bool changed = true;
  while (changed) {
    changed = false;
    std::set<std::array<int, 3>> forced;
    for (const auto& rule : pds.push) {
      auto [p, a, q, b, c] = std::tuple{rule[0], rule[1], rule[2], rule[3], rule[4]};
      for (const auto& t1 : out.delta) {
        if (t1[0] != q || t1[1] != b) continue;
        for (const auto& t2 : out.delta) {
          if (t2[0] != t1[2] || t2[1] != c) continue;
          forced.insert({p, a, t2[2]});
        }
      }
    }
    for (const auto& t : forced) {
      if (out.delta.insert(t).second) changed = true;
    }
  }
  return out;
}

bool explicit_accepts(const ExplicitNfa& nfa, int state, std::span<const int> word) {
  std::set<int> current{state};
  for (int letter : word) {
    std::set<int> next;
    for (const auto& t : nfa.delta)
      if (current.count(t[0]) && t[1] == letter) next.insert(t[2]);
    current = std::move(next);
    if (current.empty()) return false;
  }
  for (int s : current)
    if (nfa.finals.count(s)) return true;
  return false;
}

bool explicit_prestar_member(const ExplicitPds& pds, const ExplicitNfa& nfa, int state,
                             std::span<const int> word) {
  return explicit_accepts(explicit_saturate(pds, nfa), state, word);
}

namespace {

bool all_dims_zero(const FoPds& pds, const FoNfa& nfa) {
  for (const auto& [name, comp] : pds.alphabet.components)
    if (comp.dim != 0) return false;
  for (const auto& [name, comp] : nfa.states.components)
    if (comp.dim != 0) return false;
  return true;
}

std::string describe_config(const FiniteUniverse& universe, const ExplicitNfa& nfa, int state,
                            std::span<const int> word) {
  std::string out = nfa.states[state].index;
  if (!nfa.states[state].atoms.empty()) {
    out += "(";
    for (std::size_t i = 0; i < nfa.states[state].atoms.size(); ++i) {
      if (i) out += ",";
      out += universe.backend->format_atom(universe.atoms[nfa.states[state].atoms[i]]);
    }
    out += ")";
  }
  out += " |";
  for (int lid : word) {
    out += " " + nfa.letters[lid].index + "(";
    for (std::size_t i = 0; i < nfa.letters[lid].atoms.size(); ++i) {
      if (i) out += ",";
      out += universe.backend->format_atom(universe.atoms[nfa.letters[lid].atoms[i]]);
    }
    out += ")";
  }
  return out;
}

}  // namespace

CrossCheckReport cross_check(const LogicContext& ctx, const FiniteUniverse& universe,
                             const FoPds& pds, const FoNfa& nfa, int stack_bound,
                             int symbolic_sample_limit) {
  for (std::size_t i = 0; i < universe.atoms.size(); ++i)
    for (std::size_t j = i + 1; j < universe.atoms.size(); ++j)
      if (universe.atoms[i] == universe.atoms[j])
        fail(ErrorKind::BadArgument, "universe atoms must be pairwise distinct");

  CrossCheckReport report;
  report.dim0 = all_dims_zero(pds, nfa);

  SaturationResult sat = saturate(ctx, pds, nfa);
  ExplicitNfa inst = instantiate_nfa(ctx, universe, nfa);
  ExplicitPds inst_pds = instantiate_pds(ctx, universe, pds, inst);
  ExplicitNfa sat_inst = instantiate_nfa(ctx, universe, sat.automaton);
  ExplicitNfa exp_sat = explicit_saturate(inst_pds, inst);

  // Saturation keeps states and finals, so the two instantiations must agree
  // on everything but the transitions.
  if (sat_inst.states != inst.states || sat_inst.letters != inst.letters ||
      sat_inst.finals != inst.finals)
    report.violations.push_back("instantiation of the saturated automaton drifted");

  // The finite instantiation is a sub-system of the infinite system, so every
  // explicitly saturated transition must appear in the instantiated symbolic
  // saturation; for dim-0 systems the two must coincide.
  for (const auto& t : exp_sat.delta) {
    if (!sat_inst.delta.count(t))
      report.violations.push_back("explicit transition missing from symbolic saturation: (" +
                                  exp_sat.states[t[0]].index + "," + exp_sat.letters[t[1]].index +
                                  "," + exp_sat.states[t[2]].index + ")");
  }
  if (report.dim0) {
    for (const auto& t : sat_inst.delta) {
      if (!exp_sat.delta.count(t))
        report.violations.push_back("symbolic transition missing from explicit saturation: (" +
                                    sat_inst.states[t[0]].index + "," +
                                    sat_inst.letters[t[1]].index + "," +
                                    sat_inst.states[t[2]].index + ")");
    }
  }

  // Per-configuration membership comparison over all stacks up to the bound.
  const int letters = static_cast<int>(inst.letters.size());
  long long projected = 1, total = 1;
  for (int len = 1; len <= stack_bound; ++len) {
    projected *= std::max(letters, 1);
    total += projected;
    if (total > 2000000)
      fail(ErrorKind::BadArgument,
           "stack bound and universe produce too many configurations to enumerate");
  }
  std::vector<std::vector<int>> words{{}};
  std::vector<std::vector<int>> frontier{{}};
  for (int len = 1; len <= stack_bound; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier) {
      for (int l = 0; l < letters; ++l) {
        std::vector<int> ext = w;
        ext.push_back(l);
        next.push_back(ext);
      }
    }
    words.insert(words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }

  int sampled = 0;
  for (int loc : inst_pds.locations) {
    for (const auto& word : words) {
      ++report.configs_checked;
      bool explicit_in = explicit_accepts(exp_sat, loc, word);
      bool symbolic_in = explicit_accepts(sat_inst, loc, word);
      if (explicit_in) ++report.explicit_accepted;
      if (explicit_in && !symbolic_in)
        report.violations.push_back("explicitly reachable but not symbolically: " +
                                    describe_config(universe, inst, loc, word));
      if (report.dim0 && symbolic_in && !explicit_in)
        report.violations.push_back("symbolically reachable but not explicitly: " +
                                    describe_config(universe, inst, loc, word));

      // Push a bounded sample through the genuine symbolic acceptance path.
      if (sampled < symbolic_sample_limit && (explicit_in || report.configs_checked % 7 == 0)) {
        Configuration config;
        config.location = inst.states[loc].index;
        config.state_atoms = atoms_of(universe, inst.states[loc].atoms);
        for (int lid : word)
          config.stack.emplace_back(inst.letters[lid].index,
                                    atoms_of(universe, inst.letters[lid].atoms));
        bool fits = true;
        int width = static_cast<int>(config.state_atoms.size());
        int max_state = 0;
        for (const auto& [name, comp] : nfa.states.components)
          max_state = std::max(max_state, comp.dim);
        for (const auto& [letter, atoms] : config.stack) width += static_cast<int>(atoms.size());
        if (width + 2 * max_state > ctx.width_budget()) fits = false;
        if (fits) {
          ++sampled;
          bool genuine = prestar_member_saturated(ctx, sat.automaton, config);
          if (explicit_in && !genuine)
            report.violations.push_back("explicitly reachable but symbolic acceptance says no: " +
                                        describe_config(universe, inst, loc, word));
          if (report.dim0 && genuine != explicit_in)
            report.violations.push_back("dim-0 symbolic/explicit mismatch: " +
                                        describe_config(universe, inst, loc, word));
          if (genuine && !symbolic_in && !report.dim0) {
            // Fine: the run may need atoms outside the universe.
          }
        }
      }
    }
  }
  report.symbolic_samples = sampled;
  return report;
}

}  // namespace atomreach
