#include "atomreach/serialize.hpp"

namespace atomreach {

std::vector<std::string> block_names(std::span<const std::pair<char, int>> blocks) {
  std::vector<std::string> names;
  for (const auto& [prefix, count] : blocks)
    for (int i = 1; i <= count; ++i) names.push_back(std::string(1, prefix) + std::to_string(i));
  return names;
}

std::vector<std::string> generic_names(int width) {
  std::vector<std::string> names;
  names.reserve(width);
  for (int i = 1; i <= width; ++i) names.push_back("v" + std::to_string(i));
  return names;
}

std::string literal_str(const Literal& lit, std::span<const std::string> names) {
  std::string out = lit.positive ? "" : "!";
  out += lit.rel + "(";
  for (std::size_t i = 0; i < lit.args.size(); ++i) {
    if (i) out += ",";
    out += names[lit.args[i]];
  }
  return out + ")";
}

std::string clause_str(const Vocabulary& vocab, const Clause& clause,
                       std::span<const std::string> names) {
  if (clause.width() == 0) return "true";
  std::string out;
  for (const Literal& lit : clause.literals(vocab)) {
    if (!out.empty()) out += " & ";
    out += literal_str(lit, names);
  }
  return out;
}

std::string ldnf_formula(const Vocabulary& vocab, const Ldnf& d,
                         std::span<const std::string> names) {
  if (d.empty()) return "false";
  if (d.size() == 1) return clause_str(vocab, d.clauses().front(), names);
  std::string out;
  for (const Clause& c : d.clauses()) {
    if (!out.empty()) out += " | ";
    out += "(" + clause_str(vocab, c, names) + ")";
  }
  return out;
}

nlohmann::json ldnf_json(const Vocabulary& vocab, const Ldnf& d,
                         std::span<const std::string> names) {
  nlohmann::json clauses = nlohmann::json::array();
  for (const Clause& c : d.clauses()) {
    nlohmann::json lits = nlohmann::json::array();
    for (const Literal& lit : c.literals(vocab)) lits.push_back(literal_str(lit, names));
    clauses.push_back(std::move(lits));
  }
  return clauses;
}

namespace {

nlohmann::json foset_json(const Vocabulary& vocab, const FoSet& set) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [index, comp] : set.components) {
    out[index] = {{"dim", comp.dim},
                  {"clauses", ldnf_json(vocab, comp.constraint, generic_names(comp.dim))}};
  }
  return out;
}

}  // namespace

nlohmann::json nfa_json(const std::string& backend_name, const Vocabulary& vocab,
                        const FoNfa& nfa) {
  nlohmann::json out;
  out["atoms"] = backend_name;
  out["alphabet"] = foset_json(vocab, nfa.alphabet);
  out["states"] = foset_json(vocab, nfa.states);
  nlohmann::json finals = nlohmann::json::object();
  for (const auto& [index, d] : nfa.finals)
    finals[index] = ldnf_json(vocab, d, generic_names(d.width()));
  out["finals"] = std::move(finals);
  nlohmann::json delta = nlohmann::json::array();
  for (const auto& [key, d] : nfa.delta) {
    delta.push_back({{"from", key.from},
                     {"letter", key.letter},
                     {"to", key.to},
                     {"clauses", ldnf_json(vocab, d, generic_names(d.width()))}});
  }
  out["delta"] = std::move(delta);
  return out;
}

nlohmann::json saturation_json(const std::string& backend_name, const Vocabulary& vocab,
                               const SaturationResult& result) {
  nlohmann::json out = nfa_json(backend_name, vocab, result.automaton);
  out["iterations"] = result.iterations;
  nlohmann::json added = nlohmann::json::array();
  for (const auto& [key, count] : result.added_clauses) {
    added.push_back(
        {{"from", key.from}, {"letter", key.letter}, {"to", key.to}, {"count", count}});
  }
  out["added"] = std::move(added);
  return out;
}

}  // namespace atomreach
