#include "atomreach/structure.hpp"

#include "atomreach/error.hpp"

namespace atomreach {

Vocabulary::Vocabulary() { relations_.push_back({"eq", 2}); }

Vocabulary::Vocabulary(std::vector<Relation> extra) {
  relations_.push_back({"eq", 2});
  for (auto& rel : extra) {
    if (rel.name == "eq") continue;
    if (rel.arity < 1) fail(ErrorKind::BadArgument, "relation arity must be >= 1");
    if (index_of(rel.name) >= 0)
      fail(ErrorKind::BadArgument, "duplicate relation name: " + rel.name);
    relations_.push_back(std::move(rel));
  }
}

int Vocabulary::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < relations_.size(); ++i)
    if (relations_[i].name == name) return static_cast<int>(i);
  return -1;
}

bool FiniteStructure::holds(const std::string& rel, const std::vector<int>& args) const {
  auto it = tuples.find(rel);
  if (it == tuples.end()) return rel == "eq" && args.size() == 2 && args[0] == args[1];
  return it->second.count(args) > 0;
}

bool FiniteStructure::eq_is_diagonal() const {
  auto it = tuples.find("eq");
  if (it == tuples.end()) return true;
  if (static_cast<int>(it->second.size()) != size) return false;
  for (const auto& t : it->second) {
    if (t.size() != 2 || t[0] != t[1]) return false;
  }
  return true;
}

FiniteStructure FiniteStructure::restrict_to(const std::vector<int>& elements) const {
  std::vector<int> position(size, -1);
  for (std::size_t i = 0; i < elements.size(); ++i) position[elements[i]] = static_cast<int>(i);
  FiniteStructure out;
  out.size = static_cast<int>(elements.size());
  for (const auto& [rel, set] : tuples) {
    std::set<std::vector<int>> kept;
    for (const auto& t : set) {
      std::vector<int> mapped;
      mapped.reserve(t.size());
      bool ok = true;
      for (int e : t) {
        if (position[e] < 0) {
          ok = false;
          break;
        }
        mapped.push_back(position[e]);
      }
      if (ok) kept.insert(std::move(mapped));
    }
    out.tuples[rel] = std::move(kept);
  }
  return out;
}

}  // namespace atomreach
