#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "atomreach/atom.hpp"
#include "atomreach/structure.hpp"

namespace atomreach {

// Compact structure on `size` distinct elements: per non-eq vocabulary
// relation (in vocabulary order, eq omitted), the sorted list of tuples that
// hold, each encoded big-endian in base `size`.
struct StructTable {
  int size = 0;
  std::vector<std::vector<std::uint32_t>> rels;
};

std::uint32_t encode_tuple(std::span<const int> tuple, int base);
std::vector<int> decode_tuple(std::uint32_t code, int base, int arity);

// A homogeneous atom structure: a finite relational vocabulary, the induced
// substructure decision, an enumerator of embeddable structures, and an
// optional concrete model (atom literals plus relation evaluation).
class AtomBackend {
 public:
  virtual ~AtomBackend() = default;

  const std::string& name() const { return name_; }
  const Vocabulary& vocabulary() const { return vocab_; }

  // Induced-substructure decision.  False if eq is present and not the
  // diagonal; unknown relations or wrong arities are a vocabulary mismatch.
  bool embeds(const FiniteStructure& s) const;

  // Yields every relation table on m distinct elements whose structure (with
  // diagonal eq) embeds.  Deterministic order.
  virtual void enumerate_structures(int m,
                                    const std::function<void(const StructTable&)>& yield) const = 0;

  virtual bool has_concrete_model() const { return false; }
  virtual ConcreteAtom parse_atom(std::string_view text) const;
  virtual std::string format_atom(const ConcreteAtom& atom) const;
  bool eval_relation(const std::string& rel, std::span<const ConcreteAtom> args) const;

 protected:
  AtomBackend(std::string name, Vocabulary vocab)
      : name_(std::move(name)), vocab_(std::move(vocab)) {}

  virtual bool embeds_impl(const FiniteStructure& s) const = 0;
  virtual bool eval_impl(int rel_index, std::span<const ConcreteAtom> args) const;
  [[noreturn]] void no_model() const;

 private:
  std::string name_;
  Vocabulary vocab_;
};

using BackendPtr = std::shared_ptr<const AtomBackend>;

// Backend by name: equality, total_order, equivalence, partial_order, graph,
// tournament, betweenness, cyclic, or wreath(<a>,<b>) (nestable).
BackendPtr make_backend(std::string_view spec);

BackendPtr make_wreath(BackendPtr a, BackendPtr b);

}  // namespace atomreach
