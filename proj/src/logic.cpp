#include "atomreach/logic.hpp"

#include <algorithm>
#include <optional>

#include "atomreach/error.hpp"
#include "atomreach/partitions.hpp"

namespace atomreach {

LogicContext::LogicContext(BackendPtr backend, int width_budget)
    : backend_(std::move(backend)), budget_(width_budget) {
  if (budget_ < 0) fail(ErrorKind::BadArgument, "negative width budget");
}

void LogicContext::check_width(int width) const {
  if (width > budget_)
    fail(ErrorKind::WidthExceeded, "formula width " + std::to_string(width) +
                                       " exceeds the width budget " + std::to_string(budget_));
}

const std::vector<Clause>& LogicContext::legal_clauses(int width) const {
  check_width(width);
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(width);
  if (it != cache_.end()) return *it->second;
  auto clauses = std::make_shared<std::vector<Clause>>();
  for_each_partition(width, [&](const std::vector<int>& class_of, int num_classes) {
    std::vector<std::uint8_t> classes(class_of.begin(), class_of.end());
    backend_->enumerate_structures(num_classes, [&](const StructTable& t) {
      clauses->push_back(Clause(classes, num_classes, t.rels));
    });
  });
  std::sort(clauses->begin(), clauses->end());
  auto [pos, inserted] = cache_.emplace(width, std::move(clauses));
  return *pos->second;
}

Ldnf LogicContext::full_ldnf(int width) const { return Ldnf(width, legal_clauses(width)); }

Ldnf LogicContext::complement(const Ldnf& d) const {
  const auto& all = legal_clauses(d.width());
  std::vector<Clause> rest;
  rest.reserve(all.size() - d.size());
  std::set_difference(all.begin(), all.end(), d.clauses().begin(), d.clauses().end(),
                      std::back_inserter(rest));
  return Ldnf(d.width(), std::move(rest));
}

Ldnf LogicContext::eliminate_exists(const Ldnf& d, int position) const {
  if (position < 0 || position >= d.width())
    fail(ErrorKind::UnknownVariable, "no such variable position to eliminate");
  std::vector<int> keep;
  keep.reserve(d.width() - 1);
  for (int i = 0; i < d.width(); ++i)
    if (i != position) keep.push_back(i);
  std::vector<Clause> out;
  out.reserve(d.size());
  for (const auto& c : d.clauses()) out.push_back(c.restrict_to(keep, vocab()));
  return Ldnf(d.width() - 1, std::move(out));
}

Ldnf LogicContext::eliminate_exists(const Ldnf& d, std::span<const std::string> vars,
                                    const std::string& var) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == var) return eliminate_exists(d, static_cast<int>(i));
  fail(ErrorKind::UnknownVariable, "variable '" + var + "' is not among the ldnf variables");
}

Ldnf LogicContext::conjoin(int width, std::span<const LiftedConstraint> parts) const {
  const auto& all = legal_clauses(width);
  std::vector<Clause> out;
  for (const auto& clause : all) {
    bool keep = true;
    for (const auto& part : parts) {
      if (!part.constraint->contains(clause.restrict_to(part.positions, vocab()))) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(clause);
  }
  return Ldnf(width, std::move(out));
}

bool LogicContext::eval_on_clause(const Formula& f, const Clause& c,
                                  const std::map<std::string, int>& position_of) const {
  switch (f.kind()) {
    case Formula::Kind::True:
      return true;
    case Formula::Kind::False:
      return false;
    case Formula::Kind::Rel: {
      int idx = vocab().index_of(f.rel_name());
      if (idx < 0)
        fail(ErrorKind::VocabularyMismatch,
             "relation '" + f.rel_name() + "' is not in the vocabulary of " + backend_->name());
      if (vocab().at(idx).arity != static_cast<int>(f.rel_args().size()))
        fail(ErrorKind::VocabularyMismatch, "arity mismatch for relation '" + f.rel_name() + "'");
      std::vector<int> args;
      args.reserve(f.rel_args().size());
      for (const auto& v : f.rel_args()) {
        auto it = position_of.find(v);
        if (it == position_of.end())
          fail(ErrorKind::UnknownVariable, "unknown variable '" + v + "' in formula");
        args.push_back(it->second);
      }
      return c.holds(idx, args);
    }
    case Formula::Kind::Not:
      return !eval_on_clause(f.child(0), c, position_of);
    case Formula::Kind::And:
      return eval_on_clause(f.child(0), c, position_of) &&
             eval_on_clause(f.child(1), c, position_of);
    case Formula::Kind::Or:
      return eval_on_clause(f.child(0), c, position_of) ||
             eval_on_clause(f.child(1), c, position_of);
    default:
      fail(ErrorKind::BadArgument, "quantifier in a quantifier-free context");
  }
}

Ldnf LogicContext::qf_to_ldnf(const Formula& f, std::span<const std::string> vars) const {
  if (!f.quantifier_free()) fail(ErrorKind::BadArgument, "formula is not quantifier-free");
  const int width = static_cast<int>(vars.size());
  check_width(width);
  std::map<std::string, int> position_of;
  for (int i = 0; i < width; ++i) {
    if (!position_of.emplace(vars[i], i).second)
      fail(ErrorKind::BadArgument, "duplicate variable '" + vars[i] + "'");
  }
  std::vector<Clause> satisfied;
  for (const auto& clause : legal_clauses(width))
    if (eval_on_clause(f, clause, position_of)) satisfied.push_back(clause);
  return Ldnf(width, std::move(satisfied));
}

namespace {

struct Prenexed {
  std::vector<std::pair<bool, std::string>> prefix;  // (is_exists, fresh name), outermost first
  Formula matrix = Formula::truth();
};

// Prenexing with polarity tracking; bound variables are renamed to fresh
// canonical names (q$1, q$2, ...) so the later literal-dropping elimination
// can never capture.
Prenexed prenex(const Formula& f, bool positive, std::map<std::string, std::string>& env,
                int& fresh) {
  switch (f.kind()) {
    case Formula::Kind::True:
      return {{}, positive ? Formula::truth() : Formula::falsity()};
    case Formula::Kind::False:
      return {{}, positive ? Formula::falsity() : Formula::truth()};
    case Formula::Kind::Rel: {
      std::vector<std::string> args;
      args.reserve(f.rel_args().size());
      for (const auto& v : f.rel_args()) {
        auto it = env.find(v);
        args.push_back(it == env.end() ? v : it->second);
      }
      Formula lit = Formula::rel(f.rel_name(), std::move(args));
      return {{}, positive ? lit : Formula::negation(lit)};
    }
    case Formula::Kind::Not:
      return prenex(f.child(0), !positive, env, fresh);
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      Prenexed a = prenex(f.child(0), positive, env, fresh);
      Prenexed b = prenex(f.child(1), positive, env, fresh);
      bool conj = (f.kind() == Formula::Kind::And) == positive;
      Prenexed out;
      out.prefix = std::move(a.prefix);
      out.prefix.insert(out.prefix.end(), b.prefix.begin(), b.prefix.end());
      out.matrix = conj ? Formula::conjunction(std::move(a.matrix), std::move(b.matrix))
                        : Formula::disjunction(std::move(a.matrix), std::move(b.matrix));
      return out;
    }
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      std::string name = "q$" + std::to_string(++fresh);
      auto saved = env.find(f.bound_var()) != env.end()
                       ? std::optional<std::string>(env[f.bound_var()])
                       : std::nullopt;
      env[f.bound_var()] = name;
      Prenexed inner = prenex(f.body(), positive, env, fresh);
      if (saved)
        env[f.bound_var()] = *saved;
      else
        env.erase(f.bound_var());
      bool is_exists = (f.kind() == Formula::Kind::Exists) == positive;
      Prenexed out;
      out.prefix.emplace_back(is_exists, std::move(name));
      out.prefix.insert(out.prefix.end(), inner.prefix.begin(), inner.prefix.end());
      out.matrix = std::move(inner.matrix);
      return out;
    }
  }
  fail(ErrorKind::BadArgument, "unreachable formula kind");
}

}  // namespace

Ldnf LogicContext::fo_to_ldnf(const Formula& f, std::span<const std::string> vars) const {
  std::map<std::string, std::string> env;
  int fresh = 0;
  Prenexed p = prenex(f, true, env, fresh);
  std::vector<std::string> all_vars(vars.begin(), vars.end());
  for (const auto& [is_exists, name] : p.prefix) all_vars.push_back(name);
  check_width(static_cast<int>(all_vars.size()));
  Ldnf d = qf_to_ldnf(p.matrix, all_vars);
  for (std::size_t i = p.prefix.size(); i-- > 0;) {
    const int position = static_cast<int>(vars.size() + i);
    if (p.prefix[i].first) {
      d = eliminate_exists(d, position);
    } else {
      d = complement(eliminate_exists(complement(d), position));
    }
  }
  return d;
}

bool LogicContext::satisfiable(const Formula& f) const {
  std::vector<std::string> vars = f.free_vars();
  return !fo_to_ldnf(f, vars).empty();
}

Clause LogicContext::complete_clause_of(std::span<const ConcreteAtom> atoms) const {
  const int n = static_cast<int>(atoms.size());
  check_width(n);
  std::vector<std::uint8_t> class_of(n, 0);
  std::vector<int> reps;
  for (int i = 0; i < n; ++i) {
    int cls = -1;
    for (std::size_t c = 0; c < reps.size(); ++c) {
      std::array pair{atoms[reps[c]], atoms[i]};
      if (backend_->eval_relation("eq", pair)) {
        cls = static_cast<int>(c);
        break;
      }
    }
    if (cls < 0) {
      cls = static_cast<int>(reps.size());
      reps.push_back(i);
    }
    class_of[i] = static_cast<std::uint8_t>(cls);
  }
  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<std::uint32_t>> rels;
  for (int r = 1; r < vocab().size(); ++r) {
    const int arity = vocab().at(r).arity;
    std::vector<std::uint32_t> set;
    std::vector<int> tuple(arity, 0);
    while (m > 0) {
      std::vector<ConcreteAtom> args;
      args.reserve(arity);
      for (int p : tuple) args.push_back(atoms[reps[p]]);
      if (backend_->eval_relation(vocab().at(r).name, args))
        set.push_back(encode_tuple(tuple, m));
      int p = arity - 1;
      while (p >= 0 && tuple[p] == m - 1) tuple[p--] = 0;
      if (p < 0) break;
      ++tuple[p];
    }
    std::sort(set.begin(), set.end());
    rels.push_back(std::move(set));
  }
  return Clause(std::move(class_of), m, std::move(rels));
}

bool LogicContext::is_legal(const Clause& c) const {
  return backend_->embeds(c.to_structure(vocab()));
}

bool LogicContext::is_legal(const RawClause& c) const {
  if (!clause_consistent(vocab(), c)) return false;
  return backend_->embeds(clause_to_structure(vocab(), c));
}

}  // namespace atomreach
