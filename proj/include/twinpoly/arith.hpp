// Exact scalar types and small dense-vector helpers shared by all modules.
//
// Everything downstream computes over GMP-backed big integers and big
// rationals; Eigen provides the dense vector/matrix containers.  No
// floating point anywhere.

#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <boost/functional/hash.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace twinpoly {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = Vector<Int>;
using IntMatrix = Matrix<Int>;
using RationalVector = Vector<Rational>;
using RationalMatrix = Matrix<Rational>;

// ---------------------------------------------------------------------------
// Errors

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed poset files / JSON.
struct ParseError : Error {
  using Error::Error;
};

// Instance exceeds a documented desk-scale bound.
struct CapacityError : Error {
  using Error::Error;
};

// Input not full-dimensional where the operation requires it.
struct DimensionError : Error {
  using Error::Error;
};

// H-representation with a nontrivial recession cone.
struct UnboundedError : Error {
  using Error::Error;
};

// Precondition violations: size mismatch, label out of range,
// origin not interior, and the like.
struct DomainError : Error {
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Scalar helpers

inline Int numerator_of(const Rational& r) {
  return Int(boost::multiprecision::numerator(r));
}

inline Int denominator_of(const Rational& r) {
  return Int(boost::multiprecision::denominator(r));
}

inline bool is_integral(const Rational& r) { return denominator_of(r) == 1; }

// Canonical "num/den" rendering, denominator always explicit.
inline std::string rational_to_string(const Rational& r) {
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

// Accepts "p/q" or a bare integer; validates and canonicalizes.
Rational rational_from_string(const std::string& text);

// ---------------------------------------------------------------------------
// Vector helpers (expression-friendly, templated on the Eigen derived type)

template <typename DerivedA, typename DerivedB>
int lex_compare(const Eigen::MatrixBase<DerivedA>& a,
                const Eigen::MatrixBase<DerivedB>& b) {
  const Eigen::Index n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a[i] < b[i]) return -1;
    if (b[i] < a[i]) return 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

struct LexLess {
  template <typename A, typename B>
  bool operator()(const A& a, const B& b) const {
    return lex_compare(a, b) < 0;
  }
};

// gcd of all entries (nonnegative); 0 for the zero vector.
template <typename Derived>
Int content(const Eigen::MatrixBase<Derived>& v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    g = boost::multiprecision::gcd(g, Int(v[i]));
  return g;
}

// Divides out the content, leaving a primitive integer vector.
// The zero vector stays zero.
inline void make_primitive(IntVector& v) {
  Int g = content(v);
  if (g > 1)
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] /= g;
}

// Clears denominators: returns (u, t) with v == u / t, t > 0 minimal.
std::pair<IntVector, Int> clear_denominators(const RationalVector& v);

inline RationalVector to_rational(const IntVector& v) {
  RationalVector r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return r;
}

// True iff every coordinate is an integer.
inline bool is_lattice_point(const RationalVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_integral(v[i])) return false;
  return true;
}

struct IntVectorHash {
  std::size_t operator()(const IntVector& v) const {
    std::size_t h = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) boost::hash_combine(h, v[i]);
    return h;
  }
};

struct IntVectorEq {
  bool operator()(const IntVector& a, const IntVector& b) const {
    return lex_compare(a, b) == 0;
  }
};

}  // namespace twinpoly
