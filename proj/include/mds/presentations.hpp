#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mds/cox.hpp"
#include "mds/engine.hpp"

namespace mds::presentations {

using engine::IndexSet;

std::size_t hamming(const IndexSet& a, const IndexSet& b);

// Variable name of the Pluecker coordinate p_I, e.g. "T02".
std::string pluecker_name(const IndexSet& subset);

// All (r+1)-subsets of {0..n} in lexicographic order.
std::vector<IndexSet> subsets(std::size_t n, std::size_t size);

// Quadratic Pluecker relations of G(r, n), deduplicated up to sign. Variables
// are ordered as subsets(n, r + 1); the ring may have extra leading variables
// (offset) such as the blow-up coordinate.
std::vector<poly::Polynomial> pluecker_relations(std::size_t r, std::size_t n, std::size_t offset = 0,
                                                 std::size_t total_vars = 0);

// Cox ring of the blow-up of G(r, n) at a point: variables S, T_I, with
// deg S = (0,1) and deg T_I = (1, -d(I, {0..r})).
cox::CoxPresentation gen_grassmannian_blowup(std::size_t r, std::size_t n);

// Polynomial Cox ring of the toric variety with the given rays (columns of p).
cox::CoxPresentation gen_toric_from_rays(const IntMatrix& p, const std::string& label = "toric");

// Toric Cox ring with a given grading matrix.
cox::CoxPresentation gen_toric_from_grading(const IntMatrix& q, const std::string& label);

// Complete intersection of two random relations supported on the
// degree-(2,2) monomials of the rank-2 grading used for the rank-2 sharpness
// example. Coefficients are drawn from {-9..9} minus 0 with mt19937_64.
cox::CoxPresentation gen_rank2_sharp(long seed);
// The generator's required facts: the three expected orbit faces are
// F-faces and {T1,T2,T7} is not.
bool rank2_sharp_facts_hold(const cox::CoxPresentation& p);
// First seed at or after `seed` whose draw satisfies the required facts.
long rank2_sharp_seed(long seed);

// Picard rank two Fano-type families. Parameters follow the case inequalities.
cox::CoxPresentation gen_fhn16_no3(long a);
cox::CoxPresentation gen_fhn16_no6(long a, long b, long c, std::size_t m);
cox::CoxPresentation gen_fhn16_no8(const std::vector<long>& a, std::size_t m);
cox::CoxPresentation gen_fhn16_no12(long a, long b, long c, std::size_t m);

// Complete toric fan data (rays as matrix columns, maximal cones as 0-based index lists).
struct ToricFan {
  IntMatrix rays;
  std::vector<IndexSet> maximal_cones;
};

// The seven Picard rank three gradings at sample parameters (index 1..7),
// with their fans.
cox::CoxPresentation gen_rank3_smooth(int index);
ToricFan rank3_smooth_fan(int index);

// True when every maximal cone is generated by part of a lattice basis.
bool smoothness_check(const ToricFan& fan);

// Ample chamber of a complete toric variety: intersection over maximal cones
// sigma of cone(w_i : i not in sigma).
geom::Cone toric_ample_cone(const IntMatrix& grading, const ToricFan& fan);

struct Expectation {
  std::string key;
  std::string value;
  std::string source;  // "reported" (published value) or "computed" (independently derived)
};

struct CorpusEntry {
  std::string id;
  cox::CoxPresentation presentation;
  std::vector<Expectation> expectations;
  // Explicit F-face candidates for quick runs; empty means full sweep.
  std::optional<std::vector<IndexSet>> targeted_faces;

  std::optional<std::string> expect(const std::string& key) const;
};

std::vector<CorpusEntry> corpus();
std::optional<CorpusEntry> corpus_entry(const std::string& id);

std::string print_expectations(const CorpusEntry& e);
std::vector<Expectation> parse_expectations(const std::string& text);

// Writes <dir>/<id>.cox and <dir>/<id>.expect for every entry.
void write_corpus(const std::string& dir);

}  // namespace mds::presentations
