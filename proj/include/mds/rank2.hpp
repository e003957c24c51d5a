#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mds/engine.hpp"

namespace mds::rank2 {

using engine::IndexSet;

// Ordering helpers for a rank-2 presentation with pointed effective cone.
class Rank2Order {
 public:
  explicit Rank2Order(const cox::CoxPresentation& p);

  bool leq(const IntVector& a, const IntVector& b) const;
  // Rays of a two-dimensional chamber, smallest first.
  std::pair<IntVector, IntVector> bounds(const geom::Cone& chamber) const;
  // w <= every class of the chamber, resp. w >= every class.
  bool below(const IntVector& w, const geom::Cone& chamber) const;
  bool above(const IntVector& w, const geom::Cone& chamber) const;
  // Every class of a is <= every class of b.
  bool chamber_leq(const geom::Cone& a, const geom::Cone& b) const;

 private:
  int orientation_ = 1;
};

struct NonSemistableLocus {
  IndexSet below;  // i with w_i <= lambda
  IndexSet above;  // i with w_i >= lambda
};

NonSemistableLocus non_semistable_locus_rank2(const cox::CoxPresentation& p, const geom::Cone& lambda);

// Index set A with B(lambda) = p(X^ cap V(T_i : i in A)); empty for the ample chamber.
IndexSet stable_base_locus_rank2(const cox::CoxPresentation& p, const geom::Cone& ample, const geom::Cone& lambda);

enum class Verdict { applies, inconclusive };

struct Rank2Report {
  std::size_t h_plus = 0;
  std::size_t h_minus = 0;
  std::size_t c = 0;
  geom::Cone ample_chamber;
  Verdict verdict = Verdict::inconclusive;
};

// min(h+, h-) > c implies that Mori chambers and SBL chambers coincide.
Rank2Report check_main2(const cox::CoxPresentation& p, const geom::Cone& ample,
                        const poly::GroebnerOptions& opts = {});

// Every generator degree spans a wall of the SBL decomposition (with the
// boundary rays of Eff counted as walls).
bool check_crit1(const cox::CoxPresentation& p, const engine::Analysis& a, std::size_t ample);

struct PairVerdict {
  std::size_t smaller;  // chamber indices, smaller <= larger in the order
  std::size_t larger;
  bool holds;
};

struct MainConditionsReport {
  std::vector<PairVerdict> pairs;
  bool all_hold = true;  // implies MCD = SBLD
};

// Strict inclusions of the loci V(T_i : w_i <= lambda) minus V(T_i : w_i >= lambda_A)
// along each side of the ample chamber, decided by radical membership.
MainConditionsReport check_main_conditions(const cox::CoxPresentation& p, const engine::Analysis& a,
                                           std::size_t ample, const poly::GroebnerOptions& opts = {});

// SBL partition of the chambers computed through the rank-2 description and
// radical membership (independent of orbit cone signatures).
std::vector<IndexSet> sbl_partition_rank2(const cox::CoxPresentation& p, const engine::Analysis& a,
                                          std::size_t ample, const poly::GroebnerOptions& opts = {});

// Checks V(I + <T_i : i in a>) subset V(I + <T_j : j in b>) union V(I + <T_l : l in c_1>) union ...
// Each entry of `removed` is one coordinate set; the union of their vanishing loci is removed.
bool locus_contained(const cox::CoxPresentation& p, const IndexSet& a, const IndexSet& b,
                     const std::vector<IndexSet>& removed, const poly::GroebnerOptions& opts = {});

}  // namespace mds::rank2
