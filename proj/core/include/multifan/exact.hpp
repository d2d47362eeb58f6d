#ifndef MULTIFAN_EXACT_HPP
#define MULTIFAN_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace multifan {

// All geometric decisions in this library are made in exact arithmetic.
// Integers are arbitrary precision, rationals are always in lowest terms.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Domain error thrown on precondition violations and degenerate inputs.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/** Dense row-major matrix of arbitrary-precision integers. */
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> entries;  // rows * cols, row-major

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

  Int& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

  IntVec column(std::size_t c) const;

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(const std::vector<IntVec>& columns);

  bool operator==(const IntMatrix&) const = default;
};

bool is_zero(const IntVec& v);
Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const RatVec& b);
RatVec to_rational(const IntVec& v);
IntVec mat_vec(const IntMatrix& m, const IntVec& v);
IntVec add(const IntVec& a, const IntVec& b);
IntVec negate(const IntVec& v);

std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

struct PrimitiveRay {
  IntVec vector;  // gcd of entries is 1
  Int scale;      // positive; scale * vector == input
};

/// Factors a nonzero integer vector as scale * primitive.  Throws "zero ray"
/// on the zero vector.
PrimitiveRay primitive(const IntVec& v);
bool is_primitive(const IntVec& v);

/// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);

/// Solves sum_i a_i * generators[i] = v exactly.  Returns the coefficient
/// vector iff v lies in the positive hull of the generators (boundary
/// included), absence otherwise (also when v is outside the linear span).
/// The generators must be linearly independent; throws "not simplicial" if
/// they are not.
std::optional<std::vector<Rat>> solve_nonneg(const std::vector<IntVec>& generators,
                                             const RatVec& v);

/// Extends a primitive vector v to a basis of the integer lattice: returns an
/// n x n integer matrix with |det| = 1 whose first column is v.  The last
/// n-1 coordinates of x in this basis represent the class of x in Z^n / Z*v.
IntMatrix unimodular_extension(const IntVec& v);

/// Exact inverse of a matrix with determinant +-1.
IntMatrix inverse_unimodular(const IntMatrix& m);

/// Diagonal of the Smith normal form: nonnegative, each entry dividing the
/// next.  Trailing zeros correspond to the rank deficiency.
std::vector<Int> smith_normal_form(IntMatrix m);

}  // namespace multifan

#endif  // MULTIFAN_EXACT_HPP
