#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mds/arith.hpp"

namespace mds {

// Dense integer matrix stored as a list of rows.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  explicit IntMatrix(std::vector<IntVector> rows);
  static IntMatrix from_ints(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  const IntVector& row(std::size_t i) const { return rows_[i]; }
  const std::vector<IntVector>& row_list() const { return rows_; }
  IntVector column(std::size_t j) const;
  std::vector<IntVector> columns() const;

  IntMatrix transpose() const;

  bool operator==(const IntMatrix& other) const = default;

 private:
  std::vector<IntVector> rows_;
  std::size_t cols_ = 0;
};

std::string to_string(const IntMatrix& m);

// Rank over the rationals.
std::size_t rank(const std::vector<IntVector>& vectors);
std::size_t rank(const IntMatrix& m);

// Reduced row echelon form over Q of the span of the given vectors; each
// nonzero row is returned as a primitive integer vector with positive pivot.
std::vector<IntVector> canonical_span_basis(const std::vector<IntVector>& vectors, std::size_t dim);

// Basis of {x : v . x = 0 for all v}, canonical as in canonical_span_basis.
std::vector<IntVector> orthogonal_complement(const std::vector<IntVector>& vectors, std::size_t dim);

// Orthogonal projection of v onto the complement of span(basis), scaled to a
// primitive integer vector.
IntVector project_out(const IntVector& v, const std::vector<IntVector>& basis);

// Row Hermite normal form (nonzero rows only): positive pivots, entries above
// a pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& m);

// Lattice basis of {x in Z^n : m x = 0}, returned in Hermite normal form.
IntMatrix integer_kernel(const IntMatrix& m);

// Gale dual: rows form a saturated basis of the integer kernel of p.
// Throws PreconditionError if p does not have full row rank.
IntMatrix gale_dual(const IntMatrix& p);

Int determinant(const std::vector<IntVector>& square);

}  // namespace mds
