#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "atomreach/backend.hpp"

namespace atomreach::test {

// Test-only oracle: enumerate every assignment of every relation over m
// elements and keep the structures that embed.  Exponential in m^arity, so
// only usable for tiny sizes and binary vocabularies, which is exactly what
// the cross-checks need.
inline std::vector<FiniteStructure> naive_embeddable_structures(const AtomBackend& backend,
                                                                int m) {
  const Vocabulary& vocab = backend.vocabulary();
  std::vector<std::vector<std::vector<int>>> all_tuples;  // per non-eq relation
  for (int r = 1; r < vocab.size(); ++r) {
    std::vector<std::vector<int>> tuples;
    int arity = vocab.at(r).arity;
    std::vector<int> t(arity, 0);
    if (m > 0) {
      while (true) {
        tuples.push_back(t);
        int p = arity - 1;
        while (p >= 0 && t[p] == m - 1) t[p--] = 0;
        if (p < 0) break;
        ++t[p];
      }
    }
    all_tuples.push_back(std::move(tuples));
  }

  std::size_t total_bits = 0;
  for (const auto& tuples : all_tuples) total_bits += tuples.size();
  std::vector<FiniteStructure> result;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total_bits); ++mask) {
    FiniteStructure s;
    s.size = m;
    for (int i = 0; i < m; ++i) s.tuples["eq"].insert({i, i});
    std::size_t bit = 0;
    for (int r = 1; r < vocab.size(); ++r) {
      auto& set = s.tuples[vocab.at(r).name];
      for (const auto& t : all_tuples[r - 1]) {
        if ((mask >> bit) & 1) set.insert(t);
        ++bit;
      }
    }
    if (backend.embeds(s)) result.push_back(std::move(s));
  }
  return result;
}

}  // namespace atomreach::test
