#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "mds/polynomial.hpp"

namespace mds::poly {

struct GroebnerOptions {
  // Maximum number of S-pairs processed before BudgetExceeded is thrown.
  std::size_t pair_budget = 200000;
};

// Default options, honouring the MDS_PAIR_BUDGET environment variable.
GroebnerOptions default_groebner_options();

// Reduced Groebner basis: monic elements sorted by descending leading monomial.
struct GroebnerBasis {
  TermOrder order;
  std::vector<Polynomial> elements;
  std::vector<Monomial> leading;
  std::size_t pairs_processed = 0;

  bool is_unit() const { return elements.size() == 1 && leading[0].is_one(); }
};

class Ideal {
 public:
  Ideal() = default;
  Ideal(std::size_t nvars, std::vector<Polynomial> generators);

  std::size_t num_vars() const { return nvars_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  // Cached reduced Groebner basis for the given order (computed once).
  const GroebnerBasis& groebner(const TermOrder& order, const GroebnerOptions& opts) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::vector<std::size_t>, std::shared_ptr<const GroebnerBasis>> by_order;
  };
  std::size_t nvars_ = 0;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Buchberger's algorithm with the Gebauer-Moeller criteria and sugar selection.
// When stop_at_unit is set the computation returns {1} as soon as a nonzero
// constant appears.
GroebnerBasis buchberger(const Ideal& ideal, const TermOrder& order, const GroebnerOptions& opts = {},
                         bool stop_at_unit = false);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

bool ideal_membership(const Polynomial& f, const Ideal& ideal, const GroebnerOptions& opts = {});

bool contains_one(const Ideal& ideal, const GroebnerOptions& opts = {});

// f lies in the radical of the ideal (Rabinowitsch: 1 in I + <y f - 1>).
bool radical_membership(const Polynomial& f, const Ideal& ideal, const GroebnerOptions& opts = {});

// Krull dimension of K[T]/I: the largest variable subset independent modulo
// the leading ideal. Throws PreconditionError for the unit ideal.
std::size_t krull_dimension(const Ideal& ideal, const GroebnerOptions& opts = {});

Ideal substitute_zero(const Ideal& ideal, const std::vector<std::size_t>& vars);

}  // namespace mds::poly
