#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mds/arith.hpp"
#include "mds/groebner.hpp"
#include "mds/matrix.hpp"
#include "mds/polynomial.hpp"

namespace mds::cox {

// Graded presentation R = K[T_1..T_r]/I of a Cox ring.
struct CoxPresentation {
  std::string label;
  std::vector<std::string> var_names;
  IntMatrix grading;  // k x r, column i is deg T_i
  std::vector<poly::Polynomial> relations;
  // Prime components <T_i : i in component> of the irrelevant ideal (0-based).
  std::vector<std::vector<std::size_t>> irrelevant;
  bool projective = true;
  std::optional<long> seed;

  std::size_t num_vars() const { return var_names.size(); }
  std::size_t rank() const { return grading.rows(); }
  IntVector degree(std::size_t i) const { return grading.column(i); }
  std::vector<IntVector> degrees() const { return grading.columns(); }
  poly::Ideal ideal() const { return poly::Ideal(num_vars(), relations); }

  bool operator==(const CoxPresentation& other) const;
};

class CoxParseError : public std::runtime_error {
 public:
  CoxParseError(const std::string& msg, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Parses the sectioned text format ([meta], [vars], [grading], [relations],
// [irrelevant]); validates the result.
CoxPresentation parse(std::string_view text);
CoxPresentation parse_file(const std::string& path);
std::string print(const CoxPresentation& p);

// Checks full row rank of the grading, homogeneity of every relation and
// pointedness of the effective cone for projective rank-2 inputs. Throws
// PreconditionError describing the first violation.
void validate(const CoxPresentation& p);

IntVector degree_of_monomial(const CoxPresentation& p, const poly::Monomial& m);

// Total preorder on classes of a rank-2 grading with pointed effective cone:
// w <= w2 iff s * det[w w2] >= 0, where s orients the lexicographically
// smallest canonical extreme ray of Eff as the minimum.
bool rank2_leq(const CoxPresentation& p, const IntVector& w, const IntVector& w2);

// r minus the Krull dimension of K[T]/I.
std::size_t codim_canonical_embedding(const CoxPresentation& p, const poly::GroebnerOptions& opts = {});

}  // namespace mds::cox
