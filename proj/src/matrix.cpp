#include "mds/matrix.hpp"

#include <algorithm>
#include <utility>

namespace mds {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows, IntVector(cols)), cols_(cols) {}

IntMatrix::IntMatrix(std::vector<IntVector> rows) : rows_(std::move(rows)) {
  cols_ = rows_.empty() ? 0 : rows_.front().size();
  for (const auto& r : rows_)
    if (r.size() != cols_) throw DimensionMismatch("IntMatrix: ragged rows");
}

IntMatrix IntMatrix::from_ints(const std::vector<std::vector<long>>& rows) {
  std::vector<IntVector> out;
  for (const auto& r : rows) {
    IntVector v;
    for (long x : r) v.emplace_back(x);
    out.push_back(std::move(v));
  }
  return IntMatrix(std::move(out));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = rows_[i][j];
  return c;
}

std::vector<IntVector> IntMatrix::columns() const {
  std::vector<IntVector> out;
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = rows_[i][j];
  return t;
}

std::string to_string(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += ',';
    s += '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ',';
      s += m(i, j).get_str();
    }
    s += ']';
  }
  return s + "]";
}

namespace {

// In-place reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatVector>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Rat inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return pivots;
}

std::vector<RatVector> to_rational_rows(const std::vector<IntVector>& vectors) {
  std::vector<RatVector> a;
  for (const auto& v : vectors) a.push_back(to_rational(v));
  return a;
}

// Integer row echelon form by unimodular row operations on the first
// `cols` columns; the operations are applied to whole rows.
void integer_echelon(std::vector<IntVector>& a, std::size_t cols, std::vector<std::size_t>* pivots) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    while (true) {
      std::size_t best = a.size();
      for (std::size_t i = r; i < a.size(); ++i) {
        if (a[i][c] == 0) continue;
        if (best == a.size() || abs(a[i][c]) < abs(a[best][c])) best = i;
      }
      if (best == a.size()) break;
      std::swap(a[r], a[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (a[i][c] == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
        for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= q * a[r][j];
        if (a[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (a[r][c] == 0) continue;
    if (pivots) pivots->push_back(c);
    ++r;
  }
}

}  // namespace

std::size_t rank(const std::vector<IntVector>& vectors) {
  if (vectors.empty()) return 0;
  auto a = to_rational_rows(vectors);
  return rref(a, vectors.front().size()).size();
}

std::size_t rank(const IntMatrix& m) { return rank(m.row_list()); }

std::vector<IntVector> canonical_span_basis(const std::vector<IntVector>& vectors, std::size_t dim) {
  auto a = to_rational_rows(vectors);
  for (const auto& v : a)
    if (v.size() != dim) throw DimensionMismatch("span basis: length mismatch");
  rref(a, dim);
  std::vector<IntVector> out;
  for (const auto& row : a) out.push_back(primitive_from_rational(row));
  return out;
}

std::vector<IntVector> orthogonal_complement(const std::vector<IntVector>& vectors, std::size_t dim) {
  auto a = to_rational_rows(vectors);
  for (const auto& v : a)
    if (v.size() != dim) throw DimensionMismatch("orthogonal complement: length mismatch");
  auto pivots = rref(a, dim);
  std::vector<bool> is_pivot(dim, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<IntVector> kernel;
  for (std::size_t f = 0; f < dim; ++f) {
    if (is_pivot[f]) continue;
    RatVector x(dim);
    x[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -a[i][f];
    kernel.push_back(primitive_from_rational(x));
  }
  return canonical_span_basis(kernel, dim);
}

IntVector project_out(const IntVector& v, const std::vector<IntVector>& basis) {
  if (basis.empty()) return make_primitive(v);
  // Solve (B B^T) c = B v and subtract B^T c.
  const std::size_t k = basis.size();
  std::vector<RatVector> sys(k, RatVector(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) sys[i][j] = Rat(dot(basis[i], basis[j]));
    sys[i][k] = Rat(dot(basis[i], v));
  }
  rref(sys, k + 1);
  RatVector out = to_rational(v);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[j] -= sys[i][k] * basis[i][j];
  return primitive_from_rational(out);
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  auto a = m.row_list();
  std::vector<std::size_t> pivots;
  integer_echelon(a, m.cols(), &pivots);
  a.resize(pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    std::size_t c = pivots[i];
    if (a[i][c] < 0)
      for (auto& x : a[i]) x = -x;
    for (std::size_t j = 0; j < i; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a[j][c].get_mpz_t(), a[i][c].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t t = 0; t < a[j].size(); ++t) a[j][t] -= q * a[i][t];
    }
  }
  if (a.empty()) return IntMatrix(0, m.cols());
  return IntMatrix(std::move(a));
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const std::size_t n = m.cols();
  const std::size_t k = m.rows();
  std::vector<IntVector> aug(n, IntVector(k + n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = m(j, i);
    aug[i][k + i] = 1;
  }
  std::vector<std::size_t> pivots;
  integer_echelon(aug, k, &pivots);
  std::vector<IntVector> kernel;
  for (std::size_t i = pivots.size(); i < n; ++i) kernel.emplace_back(aug[i].begin() + k, aug[i].end());
  if (kernel.empty()) return IntMatrix(0, n);
  return hermite_normal_form(IntMatrix(std::move(kernel)));
}

IntMatrix gale_dual(const IntMatrix& p) {
  if (rank(p) != p.rows()) throw PreconditionError("gale_dual: matrix is rank deficient");
  return integer_kernel(p);
}

Int determinant(const std::vector<IntVector>& square) {
  const std::size_t n = square.size();
  for (const auto& r : square)
    if (r.size() != n) throw DimensionMismatch("determinant: matrix not square");
  auto a = to_rational_rows(square);
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det.get_num();
}

}  // namespace mds
