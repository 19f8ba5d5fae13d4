#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopflab {

struct CyclotomicField;

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class CoercionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact element of Q(zeta_L), stored as the residue of a rational
/// polynomial modulo the L-th cyclotomic polynomial.
///
/// Binary operations between scalars of different orders coerce both sides
/// into Q(zeta_lcm). Elements of degree-one fields (L = 1, 2) are plain
/// rationals and mix freely with every order.
class CycScalar {
 public:
  CycScalar();
  CycScalar(long value);  // NOLINT(google-explicit-constructor)
  CycScalar(const mpq_class& value);  // NOLINT(google-explicit-constructor)

  /// zeta_L^k in Q(zeta_L).
  static CycScalar root_of_unity(int order, long k);
  /// Builds sum coeffs[k] zeta_L^k, reducing modulo Phi_L.
  static CycScalar from_powers(int order, const std::vector<mpq_class>& coeffs);

  int order() const;
  int degree() const;
  /// Coefficients on 1, zeta, ..., zeta^{deg-1}.
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the value lies in Q.
  bool is_rational() const;
  /// Value as a rational; throws CoercionError if not rational.
  mpq_class to_rational() const;

  /// Image under zeta_L -> zeta_M^{M/L}; requires L | M.
  CycScalar embed(int target_order) const;
  /// Multiplicative inverse; throws DivisionByZero on zero.
  CycScalar inverse() const;
  CycScalar pow(long e) const;

  CycScalar operator-() const;
  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  CycScalar& operator*=(const CycScalar& o);
  CycScalar& operator/=(const CycScalar& o);

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
  friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }
  friend bool operator==(const CycScalar& a, const CycScalar& b);
  friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

  /// a += b * c without temporaries when orders agree.
  void add_product(const CycScalar& b, const CycScalar& c);

  std::string to_string() const;

 private:
  explicit CycScalar(const CyclotomicField* f);
  void coerce_pair(CycScalar& other);

  const CyclotomicField* field_;
  std::vector<mpq_class> c_;

  friend struct CyclotomicField;
};

std::ostream& operator<<(std::ostream& os, const CycScalar& s);

/// Integer coefficients of Phi_L, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(int order);

std::int64_t lcm_order(std::int64_t a, std::int64_t b);

/// (n)_q = 1 + q + ... + q^{n-1}.
CycScalar q_number(int n, const CycScalar& q);
/// (n)_q! = (1)_q (2)_q ... (n)_q.
CycScalar q_factorial(int n, const CycScalar& q);
/// (n)_q! / ((k)_q! (n-k)_q!); throws DivisionByZero when a denominator
/// vanishes at this q.
CycScalar q_binomial(int n, int k, const CycScalar& q);

/// Multiplicative order of a root of unity, 0 if s is not one.
int root_order(const CycScalar& s);

}  // namespace hopflab
