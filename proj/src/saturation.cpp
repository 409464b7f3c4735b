#include "atomreach/saturation.hpp"

#include "atomreach/error.hpp"

namespace atomreach {

namespace {

std::vector<int> iota_block(int begin, int count) {
  std::vector<int> out(count);
  for (int i = 0; i < count; ++i) out[i] = begin + i;
  return out;
}

}  // namespace

DeltaMap forced(const LogicContext& ctx, const FoPds& pds, const FoNfa& nfa,
                const DeltaMap& alpha) {
  // Index the transitions by (source, letter) so the rule loop only visits
  // matching chains; preserves the map's deterministic order.
  std::map<std::pair<std::string, std::string>, std::vector<std::pair<std::string, const Ldnf*>>>
      by_source;
  for (const auto& [key, d] : alpha) {
    if (!d.empty()) by_source[{key.from, key.letter}].emplace_back(key.to, &d);
  }
  static const std::vector<std::pair<std::string, const Ldnf*>> kNone;
  auto matches = [&](const std::string& from,
                     const std::string& letter) -> const auto& {
    auto it = by_source.find({from, letter});
    return it == by_source.end() ? kNone : it->second;
  };

  DeltaMap out;
  for (const auto& [rule, rule_ldnf] : pds.push) {
    if (rule_ldnf.empty()) continue;
    const int d_l = nfa.states.at(rule.from).dim;
    const int d_k = nfa.alphabet.at(rule.pop).dim;
    const int d_l2 = nfa.states.at(rule.to).dim;
    const int d_k1 = nfa.alphabet.at(rule.push1).dim;
    const int d_k2 = nfa.alphabet.at(rule.push2).dim;

    for (const auto& [mid_to, alpha1_ptr] : matches(rule.to, rule.push1)) {
      const Ldnf& alpha1 = *alpha1_ptr;
      const int d_l3 = nfa.states.at(mid_to).dim;

      for (const auto& [last_to, alpha2_ptr] : matches(mid_to, rule.push2)) {
        const Ldnf& alpha2 = *alpha2_ptr;
        const int d_lp = nfa.states.at(last_to).dim;

        // Free blocks first (x, y, x'), then the bound blocks (x'', y', y'',
        // x'''), each block disjoint.
        const int free_width = d_l + d_k + d_lp;
        const int base2 = free_width;            // x''
        const int base_y1 = base2 + d_l2;        // y'
        const int base_y2 = base_y1 + d_k1;      // y''
        const int base3 = base_y2 + d_k2;        // x'''
        const int width = base3 + d_l3;

        std::vector<int> pos_push = iota_block(0, d_l + d_k);
        for (int p : iota_block(base2, d_l2 + d_k1 + d_k2)) pos_push.push_back(p);
        std::vector<int> pos_a1 = iota_block(base2, d_l2);
        for (int p : iota_block(base_y1, d_k1)) pos_a1.push_back(p);
        for (int p : iota_block(base3, d_l3)) pos_a1.push_back(p);
        std::vector<int> pos_a2 = iota_block(base3, d_l3);
        for (int p : iota_block(base_y2, d_k2)) pos_a2.push_back(p);
        for (int p : iota_block(d_l + d_k, d_lp)) pos_a2.push_back(p);

        std::vector<LiftedConstraint> parts{{&rule_ldnf, std::move(pos_push)},
                                            {&alpha1, std::move(pos_a1)},
                                            {&alpha2, std::move(pos_a2)}};
        Ldnf conj = ctx.conjoin(width, parts);
        if (conj.empty()) continue;

        std::vector<int> keep = iota_block(0, free_width);
        std::vector<Clause> projected;
        projected.reserve(conj.size());
        for (const auto& c : conj.clauses()) projected.push_back(c.restrict_to(keep, ctx.vocab()));
        Ldnf entry(free_width, std::move(projected));

        DeltaKey key{rule.from, rule.pop, last_to};
        auto it = out.find(key);
        if (it == out.end())
          out.emplace(key, std::move(entry));
        else
          it->second = it->second.union_with(entry);
      }
    }
  }
  return out;
}

SaturationResult saturate(const LogicContext& ctx, const FoPds& pds, const FoNfa& nfa) {
  ValidationReport report = validate(ctx, pds, nfa);
  if (!report.ok())
    fail(ErrorKind::ValidationFailed, "saturation input is invalid: " + report.joined());

  DeltaMap initial = nfa.delta;
  for (const auto& [key, d] : pds.pop) {
    if (d.empty()) continue;
    auto it = initial.find(key);
    if (it == initial.end())
      initial.emplace(key, d);
    else
      it->second = it->second.union_with(d);
  }

  SaturationResult result;
  DeltaMap current = initial;
  while (true) {
    ++result.iterations;
    DeltaMap f = forced(ctx, pds, nfa, current);
    bool changed = false;
    for (const auto& [key, d] : f) {
      auto it = current.find(key);
      if (it == current.end()) {
        if (!d.empty()) {
          current.emplace(key, d);
          changed = true;
        }
      } else if (!d.entails(it->second)) {
        it->second = it->second.union_with(d);
        changed = true;
      }
    }
    if (!changed) break;
  }

  for (const auto& [key, d] : current) {
    std::size_t before = 0;
    auto it = initial.find(key);
    if (it != initial.end()) before = it->second.size();
    if (d.size() > before) result.added_clauses[key] = static_cast<int>(d.size() - before);
  }

  result.automaton = nfa;
  result.automaton.delta = std::move(current);
  return result;
}

}  // namespace atomreach
