#include "atomreach/specfile.hpp"

#include <cctype>

#include "atomreach/error.hpp"
#include "atomreach/serialize.hpp"

namespace atomreach {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1, col = 1;

  void advance() {
    if (pos < text.size()) {
      if (text[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++pos;
    }
  }

  void skip_ws() {
    while (pos < text.size()) {
      char c = text[pos];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#') {  // line comment
        while (pos < text.size() && text[pos] != '\n') advance();
      } else {
        break;
      }
    }
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  [[noreturn]] void error(const std::string& message) const {
    fail(ErrorKind::ParseError,
         "spec parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + message);
  }

  bool try_punct(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!try_punct(c)) error(std::string("expected '") + c + "'");
  }

  void expect_arrow() {
    skip_ws();
    if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '>') {
      advance();
      advance();
      return;
    }
    error("expected '->'");
  }

  std::string ident() {
    skip_ws();
    if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
      error("expected identifier");
    std::string out;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
            text[pos] == '\'')) {
      out += text[pos];
      advance();
    }
    return out;
  }

  int integer() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      error("expected integer");
    int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      advance();
    }
    return v;
  }

  bool try_keyword(std::string_view kw) {
    skip_ws();
    std::size_t save_pos = pos;
    int save_line = line, save_col = col;
    std::string id;
    if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
              text[pos] == '\'')) {
        id += text[pos];
        advance();
      }
    }
    if (id == kw) return true;
    pos = save_pos;
    line = save_line;
    col = save_col;
    return false;
  }

  // Backend names may nest: wreath(equality,wreath(equality,equality)).
  std::string backend_ref() {
    std::string out = ident();
    if (try_punct('(')) {
      out += '(' + backend_ref();
      while (try_punct(',')) out += ',' + backend_ref();
      expect(')');
      out += ')';
    }
    return out;
  }

  // The raw text up to the next ';' (formulas contain none).
  std::string_view until_semicolon() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ';') advance();
    if (pos >= text.size()) error("expected ';' after formula");
    return text.substr(start, pos - start);
  }
};

class SpecParser {
 public:
  SpecParser(std::string_view text, int width_budget) : cursor_{text}, budget_(width_budget) {}

  SpecFile run() {
    if (!cursor_.try_keyword("atoms")) cursor_.error("spec must start with an atoms declaration");
    spec_.backend_name = cursor_.backend_ref();
    spec_.backend = make_backend(spec_.backend_name);
    ctx_ = std::make_unique<LogicContext>(spec_.backend, budget_);
    while (!cursor_.eof()) {
      if (cursor_.try_keyword("pds")) {
        parse_pds();
      } else if (cursor_.try_keyword("nfa")) {
        parse_nfa();
      } else {
        cursor_.error("expected 'pds' or 'nfa' block");
      }
    }
    return std::move(spec_);
  }

 private:
  Ldnf parse_rule_formula(std::span<const std::pair<char, int>> blocks) {
    int start_line = cursor_.line;
    std::string_view slice = cursor_.until_semicolon();
    std::vector<std::string> names = block_names(blocks);
    try {
      Formula f = expand_sugar(parse_formula(slice), ctx_->vocab());
      return ctx_->fo_to_ldnf(f, names);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::WidthExceeded) throw;
      fail(e.kind(), "line " + std::to_string(start_line) + ": " + e.what());
    }
  }

  void parse_pds() {
    std::string name = cursor_.ident();
    if (spec_.pds.count(name) || spec_.nfas.count(name))
      cursor_.error("duplicate machine name '" + name + "'");
    FoPds pds;
    cursor_.expect('{');
    while (!cursor_.try_punct('}')) {
      if (cursor_.try_keyword("letter")) {
        std::string letter = cursor_.ident();
        cursor_.expect('(');
        int dim = cursor_.integer();
        cursor_.expect(')');
        cursor_.expect(';');
        if (pds.alphabet.has(letter)) cursor_.error("duplicate letter '" + letter + "'");
        ctx_->check_width(dim);
        pds.alphabet.components[letter] = {dim, ctx_->full_ldnf(dim)};
      } else if (cursor_.try_keyword("loc")) {
        std::string loc = cursor_.ident();
        cursor_.expect('(');
        int dim = cursor_.integer();
        cursor_.expect(')');
        cursor_.expect(';');
        if (pds.locations.has(loc)) cursor_.error("duplicate location '" + loc + "'");
        ctx_->check_width(dim);
        pds.locations.components[loc] = {dim, ctx_->full_ldnf(dim)};
      } else if (cursor_.try_keyword("push")) {
        std::string from = location(pds, cursor_.ident());
        std::string pop = letter(pds, cursor_.ident());
        cursor_.expect_arrow();
        std::string to = location(pds, cursor_.ident());
        std::string push1 = letter(pds, cursor_.ident());
        std::string push2 = letter(pds, cursor_.ident());
        cursor_.expect(':');
        std::pair<char, int> blocks[] = {{'x', pds.locations.at(from).dim},
                                         {'y', pds.alphabet.at(pop).dim},
                                         {'p', pds.locations.at(to).dim},
                                         {'u', pds.alphabet.at(push1).dim},
                                         {'v', pds.alphabet.at(push2).dim}};
        Ldnf d = parse_rule_formula(blocks);
        cursor_.expect(';');
        if (d.empty()) continue;
        PushKey key{from, pop, to, push1, push2};
        auto it = pds.push.find(key);
        if (it == pds.push.end())
          pds.push.emplace(key, std::move(d));
        else
          it->second = it->second.union_with(d);
      } else if (cursor_.try_keyword("pop")) {
        std::string from = location(pds, cursor_.ident());
        std::string pop = letter(pds, cursor_.ident());
        cursor_.expect_arrow();
        std::string to = location(pds, cursor_.ident());
        cursor_.expect(':');
        std::pair<char, int> blocks[] = {{'x', pds.locations.at(from).dim},
                                         {'y', pds.alphabet.at(pop).dim},
                                         {'p', pds.locations.at(to).dim}};
        Ldnf d = parse_rule_formula(blocks);
        cursor_.expect(';');
        if (d.empty()) continue;
        DeltaKey key{from, pop, to};
        auto it = pds.pop.find(key);
        if (it == pds.pop.end())
          pds.pop.emplace(key, std::move(d));
        else
          it->second = it->second.union_with(d);
      } else {
        cursor_.error("expected letter, loc, push, pop, or '}'");
      }
    }
    spec_.pds.emplace(std::move(name), std::move(pds));
  }

  void parse_nfa() {
    std::string name = cursor_.ident();
    if (spec_.pds.count(name) || spec_.nfas.count(name))
      cursor_.error("duplicate machine name '" + name + "'");
    if (!cursor_.try_keyword("for")) cursor_.error("expected 'for' after the NFA name");
    std::string pds_name = cursor_.ident();
    auto pit = spec_.pds.find(pds_name);
    if (pit == spec_.pds.end()) cursor_.error("unknown pds '" + pds_name + "'");
    FoNfa nfa;
    nfa.alphabet = pit->second.alphabet;

    cursor_.expect('{');
    while (!cursor_.try_punct('}')) {
      if (cursor_.try_keyword("state")) {
        std::string state = cursor_.ident();
        cursor_.expect('(');
        int dim = cursor_.integer();
        cursor_.expect(')');
        if (nfa.states.has(state)) cursor_.error("duplicate state '" + state + "'");
        ctx_->check_width(dim);
        nfa.states.components[state] = {dim, ctx_->full_ldnf(dim)};
        if (cursor_.try_keyword("final")) {
          if (cursor_.try_punct(':')) {
            std::pair<char, int> blocks[] = {{'x', dim}};
            Ldnf d = parse_rule_formula(blocks);
            if (!d.empty()) nfa.finals[state] = std::move(d);
          } else {
            nfa.finals[state] = nfa.states.at(state).constraint;
          }
        }
        cursor_.expect(';');
      } else if (cursor_.try_keyword("trans")) {
        std::string from = state_of(nfa, cursor_.ident());
        std::string let = cursor_.ident();
        if (!nfa.alphabet.has(let)) cursor_.error("unknown letter '" + let + "'");
        cursor_.expect_arrow();
        std::string to = state_of(nfa, cursor_.ident());
        cursor_.expect(':');
        std::pair<char, int> blocks[] = {{'x', nfa.states.at(from).dim},
                                         {'y', nfa.alphabet.at(let).dim},
                                         {'p', nfa.states.at(to).dim}};
        Ldnf d = parse_rule_formula(blocks);
        cursor_.expect(';');
        if (d.empty()) continue;
        DeltaKey key{from, let, to};
        auto it = nfa.delta.find(key);
        if (it == nfa.delta.end())
          nfa.delta.emplace(key, std::move(d));
        else
          it->second = it->second.union_with(d);
      } else {
        cursor_.error("expected state, trans, or '}'");
      }
    }
    spec_.nfa_pds.emplace(name, std::move(pds_name));
    spec_.nfas.emplace(std::move(name), std::move(nfa));
  }

  std::string location(const FoPds& pds, std::string name) {
    if (!pds.locations.has(name)) cursor_.error("unknown location '" + name + "'");
    return name;
  }

  std::string letter(const FoPds& pds, std::string name) {
    if (!pds.alphabet.has(name)) cursor_.error("unknown letter '" + name + "'");
    return name;
  }

  std::string state_of(const FoNfa& nfa, std::string name) {
    if (!nfa.states.has(name)) cursor_.error("unknown state '" + name + "'");
    return name;
  }

  Cursor cursor_;
  int budget_;
  SpecFile spec_;
  std::unique_ptr<LogicContext> ctx_;
};

}  // namespace

SpecFile parse_spec(std::string_view text, int width_budget) {
  return SpecParser(text, width_budget).run();
}

std::string serialize_spec(const SpecFile& spec) {
  const Vocabulary& vocab = spec.backend->vocabulary();
  std::string out = "atoms " + spec.backend_name + "\n";

  for (const auto& [name, pds] : spec.pds) {
    out += "\npds " + name + " {\n";
    for (const auto& [letter, comp] : pds.alphabet.components)
      out += "  letter " + letter + "(" + std::to_string(comp.dim) + ");\n";
    for (const auto& [loc, comp] : pds.locations.components)
      out += "  loc " + loc + "(" + std::to_string(comp.dim) + ");\n";
    for (const auto& [key, d] : pds.push) {
      std::pair<char, int> blocks[] = {{'x', pds.locations.at(key.from).dim},
                                       {'y', pds.alphabet.at(key.pop).dim},
                                       {'p', pds.locations.at(key.to).dim},
                                       {'u', pds.alphabet.at(key.push1).dim},
                                       {'v', pds.alphabet.at(key.push2).dim}};
      out += "  push " + key.from + " " + key.pop + " -> " + key.to + " " + key.push1 + " " +
             key.push2 + " : " + ldnf_formula(vocab, d, block_names(blocks)) + ";\n";
    }
    for (const auto& [key, d] : pds.pop) {
      std::pair<char, int> blocks[] = {{'x', pds.locations.at(key.from).dim},
                                       {'y', pds.alphabet.at(key.letter).dim},
                                       {'p', pds.locations.at(key.to).dim}};
      out += "  pop " + key.from + " " + key.letter + " -> " + key.to + " : " +
             ldnf_formula(vocab, d, block_names(blocks)) + ";\n";
    }
    out += "}\n";
  }

  for (const auto& [name, nfa] : spec.nfas) {
    out += "\nnfa " + name + " for " + spec.nfa_pds.at(name) + " {\n";
    for (const auto& [state, comp] : nfa.states.components) {
      out += "  state " + state + "(" + std::to_string(comp.dim) + ")";
      auto fin = nfa.finals.find(state);
      if (fin != nfa.finals.end()) {
        if (fin->second == comp.constraint) {
          out += " final";
        } else {
          std::pair<char, int> blocks[] = {{'x', comp.dim}};
          out += " final : " + ldnf_formula(vocab, fin->second, block_names(blocks));
        }
      }
      out += ";\n";
    }
    for (const auto& [key, d] : nfa.delta) {
      std::pair<char, int> blocks[] = {{'x', nfa.states.at(key.from).dim},
                                       {'y', nfa.alphabet.at(key.letter).dim},
                                       {'p', nfa.states.at(key.to).dim}};
      out += "  trans " + key.from + " " + key.letter + " -> " + key.to + " : " +
             ldnf_formula(vocab, d, block_names(blocks)) + ";\n";
    }
    out += "}\n";
  }
  return out;
}

}  // namespace atomreach
