#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mds/cone.hpp"
#include "mds/cox.hpp"
#include "mds/groebner.hpp"

namespace mds::engine {

using IndexSet = std::vector<std::size_t>;  // sorted, 0-based variable indices

// A face gamma_0 of the positive orthant in Q^r, given by the indices of the
// coordinates allowed to be nonzero.
struct FFace {
  IndexSet indices;
  geom::Cone face_cone(std::size_t r) const;
  bool operator==(const FFace& o) const = default;
};

// Distinct orbit cones Q(gamma_0) with the F-faces mapping onto each.
struct OrbitConeSet {
  std::size_t rank = 0;
  std::vector<geom::Cone> cones;         // sorted, distinct
  std::vector<std::vector<FFace>> witnesses;  // parallel to cones

  std::size_t size() const { return cones.size(); }
};

struct GitFan {
  std::vector<geom::Cone> chambers;  // maximal chambers, sorted
  // For each chamber, indices into the orbit cone set of the cones containing it.
  std::vector<IndexSet> signatures;
  std::size_t size() const { return chambers.size(); }
};

struct Bunch {
  IndexSet members;  // indices into the orbit cone set
};

struct SblSignature {
  IndexSet members;  // bunch members (orbit cone indices) containing the class
  bool operator==(const SblSignature& o) const = default;
};

struct StableBaseLocusReport {
  std::vector<FFace> strata;  // relevant faces whose image misses the class
  // Minimal coordinate sets whose vanishing loci cover the closure.
  std::vector<IndexSet> closure_components;
  std::string human_form;
};

struct TripleReport {
  std::size_t ample;  // chamber indices
  std::size_t first;
  std::size_t second;
};

struct AmpleAnalysis {
  std::size_t ample;  // chamber index
  std::vector<IndexSet> partition;  // classes of chamber indices with equal SBL signature
  std::vector<TripleReport> triples;
};

struct ComparisonReport {
  std::size_t git_chamber_count = 0;
  std::vector<AmpleAnalysis> per_ample;
  std::vector<TripleReport> triples;
};

struct FFaceOptions {
  // Maximal r for the full 2^r sweep.
  std::size_t max_sweep_vars = 12;
  poly::GroebnerOptions groebner;
};

bool is_fface(const cox::CoxPresentation& p, const IndexSet& indices, const poly::GroebnerOptions& opts = {});

// All F-faces (full sweep) or the F-faces among the listed candidates.
std::vector<FFace> enumerate_ffaces(const cox::CoxPresentation& p, const FFaceOptions& opts = {},
                                    const std::optional<std::vector<IndexSet>>& candidates = std::nullopt);

OrbitConeSet orbit_cones(const cox::CoxPresentation& p, const std::vector<FFace>& ffaces);

geom::Cone effective_cone(const cox::CoxPresentation& p);
geom::Cone moving_cone(const cox::CoxPresentation& p);

// Intersection of all orbit cones containing w (and the effective cone).
geom::Cone git_chamber(const OrbitConeSet& omega, const geom::Cone& eff, const IntVector& w);

GitFan git_fan(const OrbitConeSet& omega, const geom::Cone& eff);

Bunch bunch(const OrbitConeSet& omega, const geom::Cone& lambda);

SblSignature sbl_signature(const OrbitConeSet& omega, const Bunch& phi, const IntVector& w);
bool same_sbl(const OrbitConeSet& omega, const Bunch& phi, const IntVector& w1, const IntVector& w2);
// Equality of the intersections of the bunch members containing w1 and w2;
// equivalent to same_sbl.
bool same_sbl_by_intersections(const OrbitConeSet& omega, const Bunch& phi, const IntVector& w1, const IntVector& w2);
// Sufficient (not necessary) condition for chambers l1, l2 to share a stable
// base locus given the ample chamber lambda: cone(lambda u l1) meets the
// interior of l2 and cone(lambda u l2) meets the interior of l1.
bool same_sbl_sufficient(const geom::Cone& lambda, const geom::Cone& l1, const geom::Cone& l2);

StableBaseLocusReport stable_base_locus(const cox::CoxPresentation& p, const OrbitConeSet& omega, const Bunch& phi,
                                        const IntVector& w);

// Classes of chamber indices sharing an SBL signature, ordered by first member.
std::vector<IndexSet> sbl_decomposition(const GitFan& fan, const OrbitConeSet& omega, const Bunch& phi);

// Full pipeline results for one presentation.
struct Analysis {
  std::vector<FFace> ffaces;
  OrbitConeSet omega;
  geom::Cone eff;
  geom::Cone mov;
  GitFan fan;

  std::optional<std::size_t> chamber_containing(const IntVector& w) const;  // interior point lookup
  std::vector<std::size_t> movable_chambers() const;
};

Analysis analyze(const cox::CoxPresentation& p, const FFaceOptions& opts = {},
                 const std::optional<std::vector<IndexSet>>& candidates = std::nullopt);

// Ample candidates are the chambers inside Mov; with widen set, every chamber.
ComparisonReport find_triples(const Analysis& a, bool widen = false);
AmpleAnalysis analyze_ample(const Analysis& a, std::size_t ample);

std::string to_string(const IndexSet& s, const cox::CoxPresentation& p);

}  // namespace mds::engine
