#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "atomreach/machine.hpp"
#include "atomreach/saturation.hpp"

namespace atomreach {

// Variable names for a sequence of blocks, e.g. {{'x',2},{'y',1}} gives
// x1 x2 y1.
std::vector<std::string> block_names(std::span<const std::pair<char, int>> blocks);
std::vector<std::string> generic_names(int width);  // v1..vn

std::string literal_str(const Literal& lit, std::span<const std::string> names);

// A clause as a conjunction of all its literals in canonical order; the empty
// clause renders as "true".
std::string clause_str(const Vocabulary& vocab, const Clause& clause,
                       std::span<const std::string> names);

// An ldnf as parseable formula text ("false" when empty).
std::string ldnf_formula(const Vocabulary& vocab, const Ldnf& d,
                         std::span<const std::string> names);

nlohmann::json ldnf_json(const Vocabulary& vocab, const Ldnf& d,
                         std::span<const std::string> names);
nlohmann::json nfa_json(const std::string& backend_name, const Vocabulary& vocab,
                        const FoNfa& nfa);
nlohmann::json saturation_json(const std::string& backend_name, const Vocabulary& vocab,
                               const SaturationResult& result);

}  // namespace atomreach
