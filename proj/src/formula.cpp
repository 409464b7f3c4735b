#include "atomreach/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "atomreach/error.hpp"

namespace atomreach {

struct Formula::Node {
  Kind kind;
  std::string rel;                // Rel
  std::vector<std::string> args;  // Rel
  std::vector<Formula> kids;      // Not (1), And/Or (2)
  std::string var;                // quantifiers
};

Formula Formula::truth() { return Formula(std::make_shared<Node>(Node{Kind::True, {}, {}, {}, {}})); }
Formula Formula::falsity() { return Formula(std::make_shared<Node>(Node{Kind::False, {}, {}, {}, {}})); }

Formula Formula::rel(std::string name, std::vector<std::string> args) {
  return Formula(std::make_shared<Node>(Node{Kind::Rel, std::move(name), std::move(args), {}, {}}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<Node>(Node{Kind::Not, {}, {}, {std::move(f)}, {}}));
}

Formula Formula::conjunction(Formula a, Formula b) {
  return Formula(std::make_shared<Node>(Node{Kind::And, {}, {}, {std::move(a), std::move(b)}, {}}));
}

Formula Formula::disjunction(Formula a, Formula b) {
  return Formula(std::make_shared<Node>(Node{Kind::Or, {}, {}, {std::move(a), std::move(b)}, {}}));
}

Formula Formula::exists(std::string var, Formula body) {
  return Formula(
      std::make_shared<Node>(Node{Kind::Exists, {}, {}, {std::move(body)}, std::move(var)}));
}

Formula Formula::forall(std::string var, Formula body) {
  return Formula(
      std::make_shared<Node>(Node{Kind::Forall, {}, {}, {std::move(body)}, std::move(var)}));
}

Formula::Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::rel_name() const { return node_->rel; }
const std::vector<std::string>& Formula::rel_args() const { return node_->args; }
const Formula& Formula::child(std::size_t i) const { return node_->kids[i]; }
const std::string& Formula::bound_var() const { return node_->var; }
const Formula& Formula::body() const { return node_->kids[0]; }

namespace {

void collect_free(const Formula& f, std::set<std::string>& bound,
                  std::vector<std::string>& order, std::set<std::string>& seen) {
  switch (f.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return;
    case Formula::Kind::Rel:
      for (const auto& v : f.rel_args())
        if (!bound.count(v) && seen.insert(v).second) order.push_back(v);
      return;
    case Formula::Kind::Not:
      collect_free(f.child(0), bound, order, seen);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      collect_free(f.child(0), bound, order, seen);
      collect_free(f.child(1), bound, order, seen);
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      bool inserted = bound.insert(f.bound_var()).second;
      collect_free(f.body(), bound, order, seen);
      if (inserted) bound.erase(f.bound_var());
      return;
    }
  }
}

}  // namespace

std::vector<std::string> Formula::free_vars() const {
  std::set<std::string> bound, seen;
  std::vector<std::string> order;
  collect_free(*this, bound, order, seen);
  return order;
}

bool Formula::quantifier_free() const {
  switch (kind()) {
    case Kind::True:
    case Kind::False:
    case Kind::Rel:
      return true;
    case Kind::Not:
      return child(0).quantifier_free();
    case Kind::And:
    case Kind::Or:
      return child(0).quantifier_free() && child(1).quantifier_free();
    default:
      return false;
  }
}

std::string Formula::str() const {
  switch (kind()) {
    case Kind::True:
      return "true";
    case Kind::False:
      return "false";
    case Kind::Rel: {
      std::string out = rel_name() + "(";
      for (std::size_t i = 0; i < rel_args().size(); ++i) {
        if (i) out += ",";
        out += rel_args()[i];
      }
      return out + ")";
    }
    case Kind::Not:
      return "!(" + child(0).str() + ")";
    case Kind::And:
      return "(" + child(0).str() + " & " + child(1).str() + ")";
    case Kind::Or:
      return "(" + child(0).str() + " | " + child(1).str() + ")";
    case Kind::Exists:
      return "exists " + bound_var() + ". " + body().str();
    case Kind::Forall:
      return "forall " + bound_var() + ". " + body().str();
  }
  return "";
}

// ---------------------------------------------------------------------------
// Recursive-descent parser for the formula text syntax.

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
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance();
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
    fail(ErrorKind::ParseError, "formula parse error at " + std::to_string(line) + ":" +
                                    std::to_string(col) + ": " + message);
  }

  bool try_punct(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!try_punct(c)) error(std::string("expected '") + c + "'");
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  std::string ident() {
    skip_ws();
    if (pos >= text.size() || !ident_start(text[pos])) error("expected identifier");
    std::string out;
    while (pos < text.size() && ident_char(text[pos])) {
      out += text[pos];
      advance();
    }
    return out;
  }
};

Formula parse_disj(Cursor& c);

Formula parse_unary(Cursor& c) {
  if (c.try_punct('!')) return Formula::negation(parse_unary(c));
  if (c.try_punct('(')) {
    Formula f = parse_disj(c);
    c.expect(')');
    return f;
  }
  std::string id = c.ident();
  if (id == "true") return Formula::truth();
  if (id == "false") return Formula::falsity();
  if (id == "exists" || id == "forall") {
    std::string var = c.ident();
    c.expect('.');
    Formula body = parse_disj(c);  // quantifier scope extends maximally
    return id == "exists" ? Formula::exists(std::move(var), std::move(body))
                          : Formula::forall(std::move(var), std::move(body));
  }
  c.expect('(');
  std::vector<std::string> args;
  args.push_back(c.ident());
  while (c.try_punct(',')) args.push_back(c.ident());
  c.expect(')');
  return Formula::rel(std::move(id), std::move(args));
}

Formula parse_conj(Cursor& c) {
  Formula f = parse_unary(c);
  while (c.try_punct('&')) f = Formula::conjunction(std::move(f), parse_unary(c));
  return f;
}

Formula parse_disj(Cursor& c) {
  Formula f = parse_conj(c);
  while (c.try_punct('|')) f = Formula::disjunction(std::move(f), parse_conj(c));
  return f;
}

}  // namespace

Formula parse_formula(std::string_view text) {
  Cursor c{text};
  Formula f = parse_disj(c);
  if (!c.eof()) c.error("trailing input after formula");
  return f;
}

Formula expand_sugar(const Formula& f, const Vocabulary& vocab) {
  switch (f.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return f;
    case Formula::Kind::Rel:
      if (f.rel_name() == "lt" && f.rel_args().size() == 2 && vocab.index_of("lt") < 0 &&
          vocab.index_of("le") >= 0) {
        return Formula::conjunction(Formula::rel("le", f.rel_args()),
                                    Formula::negation(Formula::rel("eq", f.rel_args())));
      }
      return f;
    case Formula::Kind::Not:
      return Formula::negation(expand_sugar(f.child(0), vocab));
    case Formula::Kind::And:
      return Formula::conjunction(expand_sugar(f.child(0), vocab),
                                  expand_sugar(f.child(1), vocab));
    case Formula::Kind::Or:
      return Formula::disjunction(expand_sugar(f.child(0), vocab),
                                  expand_sugar(f.child(1), vocab));
    case Formula::Kind::Exists:
      return Formula::exists(f.bound_var(), expand_sugar(f.body(), vocab));
    case Formula::Kind::Forall:
      return Formula::forall(f.bound_var(), expand_sugar(f.body(), vocab));
  }
  return f;
}

}  // namespace atomreach
