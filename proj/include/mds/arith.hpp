#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mds {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

// Error raised when operands live in ambient spaces of different dimension.
class DimensionMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical precondition of an operation does not hold.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A Groebner computation ran out of its pair budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Int dot(const IntVector& a, const IntVector& b);
Rat dot(const RatVector& a, const RatVector& b);

bool is_zero(const IntVector& v);

// Divides by the gcd of the entries. The zero vector is returned unchanged.
IntVector make_primitive(IntVector v);

// make_primitive, then flips the sign so the first nonzero entry is positive.
IntVector sign_normalize(IntVector v);

// Clears denominators and returns the primitive integer multiple (same direction).
IntVector primitive_from_rational(const RatVector& v);

RatVector to_rational(const IntVector& v);

IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a);
IntVector scale(const Int& s, const IntVector& v);

int sign(const Int& x);

// "(a,b,c)"
std::string to_string(const IntVector& v);

// Parses "a,b,c" (optional surrounding parentheses) into an integer vector.
IntVector parse_int_vector(std::string_view text);

}  // namespace mds
