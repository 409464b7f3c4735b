#include "atomreach/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "atomreach/error.hpp"
#include "atomreach/oracle.hpp"
#include "atomreach/reachability.hpp"
#include "atomreach/serialize.hpp"
#include "atomreach/specfile.hpp"

namespace atomreach {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::BadArgument, "cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Splits on top-level commas (parentheses nest, for wreath atoms).
std::vector<std::string> split_atoms(std::string_view text) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty() || !parts.empty()) parts.push_back(current);
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<ConcreteAtom> parse_atom_list(const AtomBackend& backend, std::string_view text) {
  std::vector<ConcreteAtom> atoms;
  text = trim(text);
  if (text.empty()) return atoms;
  for (const std::string& part : split_atoms(text)) atoms.push_back(backend.parse_atom(trim(part)));
  return atoms;
}

// "<name>" or "<name>(<atoms>)".
std::pair<std::string, std::vector<ConcreteAtom>> parse_item(const AtomBackend& backend,
                                                             std::string_view text) {
  text = trim(text);
  auto paren = text.find('(');
  if (paren == std::string_view::npos) return {std::string(text), {}};
  if (text.back() != ')') fail(ErrorKind::ParseError, "unbalanced parentheses: " + std::string(text));
  std::string name(trim(text.substr(0, paren)));
  return {name, parse_atom_list(backend, text.substr(paren + 1, text.size() - paren - 2))};
}

// "<loc>[(<atoms>)] | <letter>(<atoms>) <letter>(<atoms>) ..."
Configuration parse_config(const AtomBackend& backend, std::string_view text) {
  int depth = 0;
  std::size_t bar = std::string_view::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == '|' && depth == 0) {
      bar = i;
      break;
    }
  }
  Configuration config;
  std::string_view loc_part = bar == std::string_view::npos ? text : text.substr(0, bar);
  auto [loc, atoms] = parse_item(backend, loc_part);
  config.location = loc;
  config.state_atoms = std::move(atoms);
  if (bar == std::string_view::npos) return config;

  std::string_view rest = trim(text.substr(bar + 1));
  std::size_t pos = 0;
  while (pos < rest.size()) {
    while (pos < rest.size() && std::isspace(static_cast<unsigned char>(rest[pos]))) ++pos;
    if (pos >= rest.size()) break;
    std::size_t start = pos;
    int d = 0;
    while (pos < rest.size() && (d > 0 || !std::isspace(static_cast<unsigned char>(rest[pos])))) {
      if (rest[pos] == '(') ++d;
      if (rest[pos] == ')') --d;
      ++pos;
    }
    auto [letter, latoms] = parse_item(backend, rest.substr(start, pos - start));
    config.stack.emplace_back(letter, std::move(latoms));
  }
  return config;
}

const FoPds& find_pds(const SpecFile& spec, const std::string& name) {
  auto it = spec.pds.find(name);
  if (it == spec.pds.end()) fail(ErrorKind::BadArgument, "no pds named '" + name + "'");
  return it->second;
}

const FoNfa& find_nfa(const SpecFile& spec, const std::string& name) {
  auto it = spec.nfas.find(name);
  if (it == spec.nfas.end()) fail(ErrorKind::BadArgument, "no nfa named '" + name + "'");
  return it->second;
}

std::string saturation_text(const SpecFile& spec, const std::string& pds_name,
                            const std::string& nfa_name, const SaturationResult& result) {
  const Vocabulary& vocab = spec.backend->vocabulary();
  const FoNfa& nfa = result.automaton;
  std::string out = "saturated nfa " + nfa_name + " for pds " + pds_name + "\n";
  for (const auto& [state, comp] : nfa.states.components) {
    out += "state " + state + "(" + std::to_string(comp.dim) + ")";
    if (nfa.finals.count(state)) out += " final";
    out += ";\n";
  }
  for (const auto& [key, d] : nfa.delta) {
    std::pair<char, int> blocks[] = {{'x', nfa.states.at(key.from).dim},
                                     {'y', nfa.alphabet.at(key.letter).dim},
                                     {'p', nfa.states.at(key.to).dim}};
    out += "delta (" + key.from + "," + key.letter + "," + key.to + "): " +
           ldnf_formula(vocab, d, block_names(blocks)) + "\n";
  }
  out += "iterations: " + std::to_string(result.iterations) + "\n";
  for (const auto& [key, count] : result.added_clauses)
    out += "added (" + key.from + "," + key.letter + "," + key.to + "): " +
           std::to_string(count) + "\n";
  return out;
}

void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) fail(ErrorKind::BadArgument, "cannot write file: " + out_path);
  file << text;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"symbolic backward reachability for FO-definable pushdown systems"};
  app.name("atomreach");
  app.require_subcommand(1);

  int max_width = kDefaultWidthBudget;
  std::string file, pds_name, nfa_name, config_text, from_loc, to_loc, bottom_text;
  std::string b_name, c_name, set_name, universe_text, out_path;
  bool json = false, atoms_flag = false;
  int width_arg = 2, stack_bound = 3;

  auto add_common = [&](CLI::App* sub, bool with_pds) {
    sub->add_option("file", file, "spec file")->required();
    sub->add_option("--max-width", max_width, "width budget (default 8)");
    if (with_pds) sub->add_option("--pds", pds_name, "pds name")->required();
  };

  CLI::App* check = app.add_subcommand("check", "parse a spec file and validate every pair");
  add_common(check, false);

  CLI::App* saturate_cmd =
      app.add_subcommand("saturate", "saturate an NFA against a PDS and print the result");
  add_common(saturate_cmd, true);
  saturate_cmd->add_option("--nfa", nfa_name, "nfa name")->required();
  saturate_cmd->add_flag("--json", json, "JSON output");
  saturate_cmd->add_option("-o,--output", out_path, "write the output to a file");

  CLI::App* member = app.add_subcommand("member", "backward-reachability membership of a configuration");
  add_common(member, true);
  member->add_option("--nfa", nfa_name, "nfa name")->required();
  member->add_option("--config", config_text, "configuration \"<loc>(<atoms>) | <letter>(<atoms>) ...\"")
      ->required();

  CLI::App* reach = app.add_subcommand("reach", "location-to-location reachability");
  add_common(reach, true);
  reach->add_option("--from", from_loc, "start location")->required();
  reach->add_option("--bottom", bottom_text, "bottom letter \"<letter>(<atoms>|any)\"")->required();
  reach->add_option("--to", to_loc, "target location")->required();

  CLI::App* decide = app.add_subcommand("decide", "regular-target decision reachability");
  add_common(decide, true);
  decide->add_option("--b", b_name, "target-language NFA")->required();
  decide->add_option("--c", c_name, "source-language NFA")->required();

  CLI::App* orbits = app.add_subcommand("orbits", "orbit counts");
  orbits->add_option("file", file, "spec file")->required();
  orbits->add_option("--max-width", max_width, "width budget (default 8)");
  orbits->add_option("--set", set_name, "named set: <pds>.alphabet, <pds>.locations, <nfa>.states");
  orbits->add_flag("--atoms", atoms_flag, "count orbits of atom tuples");
  orbits->add_option("--width", width_arg, "tuple width for --atoms");

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "explicit-state cross-validation");
  add_common(oracle_cmd, true);
  oracle_cmd->add_option("--nfa", nfa_name, "nfa name")->required();
  oracle_cmd->add_option("--universe", universe_text, "comma-separated concrete atoms");
  oracle_cmd->add_option("--stack-bound", stack_bound, "maximum stack length (default 3)");
  oracle_cmd->add_flag("--json", json, "JSON report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    SpecFile spec = parse_spec(read_file(file), max_width);
    LogicContext ctx(spec.backend, max_width);

    if (check->parsed()) {
      bool all_ok = true;
      for (const auto& [name, nfa] : spec.nfas) {
        ValidationReport report = validate(ctx, spec.pds.at(spec.nfa_pds.at(name)), nfa);
        if (report.ok()) {
          out << "nfa " << name << ": ok\n";
        } else {
          all_ok = false;
          for (const auto& v : report.violations) out << "nfa " << name << ": " << v << "\n";
        }
      }
      out << (all_ok ? "ok" : "invalid") << "\n";
      return all_ok ? 0 : 2;
    }

    if (saturate_cmd->parsed()) {
      SaturationResult result = saturate(ctx, find_pds(spec, pds_name), find_nfa(spec, nfa_name));
      if (json) {
        write_output(
            saturation_json(spec.backend_name, spec.backend->vocabulary(), result).dump(2) + "\n",
            out_path, out);
      } else {
        write_output(saturation_text(spec, pds_name, nfa_name, result), out_path, out);
      }
      return 0;
    }

    if (member->parsed()) {
      Configuration config = parse_config(*spec.backend, config_text);
      bool yes =
          prestar_member(ctx, find_pds(spec, pds_name), find_nfa(spec, nfa_name), config);
      out << (yes ? "yes" : "no") << "\n";
      return yes ? 0 : 1;
    }

    if (reach->parsed()) {
      std::string_view text = trim(bottom_text);
      std::optional<std::vector<ConcreteAtom>> atoms;
      std::string letter;
      auto paren = text.find('(');
      if (paren == std::string_view::npos) {
        letter = std::string(text);
      } else {
        letter = std::string(trim(text.substr(0, paren)));
        std::string_view inner = text.substr(paren + 1, text.size() - paren - 2);
        if (trim(inner) != "any") atoms = parse_atom_list(*spec.backend, inner);
      }
      bool yes = reach_decision(ctx, find_pds(spec, pds_name), from_loc, letter, atoms, to_loc);
      out << (yes ? "yes" : "no") << "\n";
      return yes ? 0 : 1;
    }

    if (decide->parsed()) {
      bool yes = decision_reachability(ctx, find_pds(spec, pds_name), find_nfa(spec, b_name),
                                       find_nfa(spec, c_name));
      out << (yes ? "yes" : "no") << "\n";
      return yes ? 0 : 1;
    }

    if (orbits->parsed()) {
      if (atoms_flag) {
        out << ctx.full_ldnf(width_arg).size() << "\n";
        return 0;
      }
      auto dot = set_name.find('.');
      if (dot == std::string::npos)
        fail(ErrorKind::BadArgument, "--set needs <machine>.<alphabet|locations|states>");
      std::string machine = set_name.substr(0, dot), kind = set_name.substr(dot + 1);
      const FoSet* set = nullptr;
      if (kind == "alphabet")
        set = &find_pds(spec, machine).alphabet;
      else if (kind == "locations")
        set = &find_pds(spec, machine).locations;
      else if (kind == "states")
        set = &find_nfa(spec, machine).states;
      else
        fail(ErrorKind::BadArgument, "unknown set kind '" + kind + "'");
      out << orbit_count(ctx, *set) << "\n";
      return 0;
    }

    if (oracle_cmd->parsed()) {
      FiniteUniverse universe;
      if (universe_text.empty()) {
        universe = default_universe(spec.backend);
      } else {
        universe.backend = spec.backend;
        universe.atoms = parse_atom_list(*spec.backend, universe_text);
      }
      CrossCheckReport report = cross_check(ctx, universe, find_pds(spec, pds_name),
                                            find_nfa(spec, nfa_name), stack_bound);
      if (json) {
        nlohmann::json j;
        j["configs_checked"] = report.configs_checked;
        j["explicit_accepted"] = report.explicit_accepted;
        j["symbolic_samples"] = report.symbolic_samples;
        j["dim0"] = report.dim0;
        j["violations"] = report.violations;
        out << j.dump(2) << "\n";
      } else {
        out << "configs checked: " << report.configs_checked << "\n";
        out << "explicitly accepted: " << report.explicit_accepted << "\n";
        out << "symbolic samples: " << report.symbolic_samples << "\n";
        for (const auto& v : report.violations) out << "violation: " << v << "\n";
        out << (report.ok() ? "ok" : "failed") << "\n";
      }
      return report.ok() ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::WidthExceeded ? 3 : 2;
  }
  return 2;
}

}  // namespace atomreach
