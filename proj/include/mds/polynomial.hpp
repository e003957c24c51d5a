#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mds/arith.hpp"

namespace mds::poly {

inline constexpr std::size_t kMaxVariables = 24;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::size_t nvars, const std::vector<unsigned>& exponents);
  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t num_vars() const { return nvars_; }
  unsigned operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Precondition: *this divides other.
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  // Indices of variables with positive exponent.
  std::vector<std::size_t> support() const;

  bool operator==(const Monomial& other) const;
  // Lexicographic comparison on exponents, used for containers only.
  bool operator<(const Monomial& other) const;

 private:
  std::array<std::uint16_t, kMaxVariables> exp_{};
  std::uint32_t degree_ = 0;
  std::uint8_t nvars_ = 0;
};

// Degree reverse lexicographic order with a variable permutation:
// order[0] is the largest variable. Auxiliary variables go last.
class TermOrder {
 public:
  TermOrder() = default;
  explicit TermOrder(std::size_t nvars);
  explicit TermOrder(std::vector<std::size_t> permutation);

  std::size_t num_vars() const { return perm_.size(); }
  const std::vector<std::size_t>& permutation() const { return perm_; }
  // True when a is strictly larger than b.
  bool greater(const Monomial& a, const Monomial& b) const;
  bool operator==(const TermOrder& other) const = default;

 private:
  std::vector<std::size_t> perm_;
};

struct Term {
  Monomial monomial;
  Rat coeff;
};

// Polynomial over Q in a fixed number of variables. Terms are kept sorted
// in descending default degrevlex order with nonzero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, const Rat& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t num_vars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Rat& c) const;
  Polynomial times(const Monomial& m) const;

  Rat evaluate(const std::vector<Rat>& point) const;
  // Sets the listed variables to zero.
  Polynomial substitute_zero(const std::vector<std::size_t>& vars) const;
  // Sets the listed variables to the given values.
  Polynomial substitute(const std::vector<std::size_t>& vars, const std::vector<Rat>& values) const;
  // Re-indexes into a ring with new_nvars variables; map[i] is the new index
  // of variable i. Variables occurring in the polynomial must be mapped.
  Polynomial remap(std::size_t new_nvars, const std::vector<std::size_t>& map) const;
  // Largest monomial dividing every term.
  Monomial monomial_content() const;
  Polynomial divided_by(const Monomial& m) const;
  std::vector<std::size_t> variables() const;
  // Divides by the leading coefficient (no-op on zero).
  Polynomial monic() const;

  bool operator==(const Polynomial& o) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t offset) : std::runtime_error(msg), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Parses expressions such as "3*T1^2*T8^2 - T4*T9" or "1/2*x*y + (x - y)^2".
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& var_names);

std::string to_string(const Polynomial& p, const std::vector<std::string>& var_names);
std::string to_string(const Monomial& m, const std::vector<std::string>& var_names);

}  // namespace mds::poly
