#include "hopflab/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace hopflab {

struct CyclotomicField {
  int order = 1;
  int degree = 1;
  std::vector<long> phi;
  // xpow[k] = x^k mod Phi_L, for 0 <= k < max(order, 2*degree - 1).
  std::vector<std::vector<long>> xpow;

  static const CyclotomicField* get(int order);
};

namespace {

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den) {
  // den is monic.
  const int dn = static_cast<int>(den.size()) - 1;
  const int nn = static_cast<int>(num.size()) - 1;
  std::vector<long> quot(nn - dn + 1, 0);
  for (int i = nn; i >= dn; --i) {
    long c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (int i = 0; i < dn; ++i) {
    if (num[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return quot;
}

std::vector<long> compute_phi(int order);

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<int, std::unique_ptr<CyclotomicField>>& registry() {
  static std::map<int, std::unique_ptr<CyclotomicField>> r;
  return r;
}

std::map<int, std::vector<long>>& phi_cache() {
  static std::map<int, std::vector<long>> c;
  return c;
}

std::vector<long> compute_phi(int order) {
  auto& cache = phi_cache();
  if (auto it = cache.find(order); it != cache.end()) return it->second;
  std::vector<long> num(order + 1, 0);
  num[0] = -1;
  num[order] = 1;
  for (int d = 1; d < order; ++d) {
    if (order % d == 0) num = poly_divide_exact(num, compute_phi(d));
  }
  cache[order] = num;
  return num;
}

}  // namespace

const CyclotomicField* CyclotomicField::get(int order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& reg = registry();
  if (auto it = reg.find(order); it != reg.end()) return it->second.get();
  auto f = std::make_unique<CyclotomicField>();
  f->order = order;
  f->phi = compute_phi(order);
  f->degree = static_cast<int>(f->phi.size()) - 1;
  const int d = f->degree;
  const int count = std::max(order, 2 * d - 1);
  f->xpow.assign(count, std::vector<long>(d, 0));
  std::vector<long> cur(d, 0);
  cur[0] = 1;
  for (int k = 0; k < count; ++k) {
    f->xpow[k] = cur;
    // cur *= x mod phi (phi monic)
    long top = cur[d - 1];
    for (int j = d - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int j = 0; j < d; ++j) cur[j] -= top * f->phi[j];
    }
  }
  const CyclotomicField* out = f.get();
  reg.emplace(order, std::move(f));
  return out;
}

const std::vector<long>& cyclotomic_polynomial(int order) {
  return CyclotomicField::get(order)->phi;
}

std::int64_t lcm_order(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

CycScalar::CycScalar() : CycScalar(CyclotomicField::get(1)) {}

CycScalar::CycScalar(const CyclotomicField* f) : field_(f), c_(f->degree) {}

CycScalar::CycScalar(long value) : CycScalar(CyclotomicField::get(1)) { c_[0] = value; }

CycScalar::CycScalar(const mpq_class& value) : CycScalar(CyclotomicField::get(1)) {
  c_[0] = value;
  c_[0].canonicalize();
}

CycScalar CycScalar::root_of_unity(int order, long k) {
  const CyclotomicField* f = CyclotomicField::get(order);
  CycScalar s(f);
  long e = k % order;
  if (e < 0) e += order;
  const auto& row = f->xpow[e];
  for (int j = 0; j < f->degree; ++j) s.c_[j] = row[j];
  return s;
}

CycScalar CycScalar::from_powers(int order, const std::vector<mpq_class>& coeffs) {
  const CyclotomicField* f = CyclotomicField::get(order);
  CycScalar s(f);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    const auto& row = f->xpow[k % order];
    for (int j = 0; j < f->degree; ++j) {
      if (row[j] != 0) s.c_[j] += coeffs[k] * row[j];
    }
  }
  return s;
}

int CycScalar::order() const { return field_->order; }
int CycScalar::degree() const { return field_->degree; }

bool CycScalar::is_zero() const {
  for (const auto& x : c_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

bool CycScalar::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (sgn(c_[i]) != 0) return false;
  }
  return true;
}

bool CycScalar::is_one() const { return is_rational() && c_[0] == 1; }

mpq_class CycScalar::to_rational() const {
  if (!is_rational()) throw CoercionError("scalar is not rational: " + to_string());
  return c_[0];
}

CycScalar CycScalar::embed(int target_order) const {
  const int L = order();
  if (target_order < 1 || target_order % L != 0) {
    throw CoercionError("cannot embed Q(zeta_" + std::to_string(L) + ") into Q(zeta_" +
                        std::to_string(target_order) + ")");
  }
  const CyclotomicField* g = CyclotomicField::get(target_order);
  CycScalar out(g);
  if (field_->degree == 1) {
    out.c_[0] = c_[0];
    return out;
  }
  const int step = target_order / L;
  for (int k = 0; k < field_->degree; ++k) {
    if (sgn(c_[k]) == 0) continue;
    const auto& row = g->xpow[(static_cast<long>(k) * step) % target_order];
    for (int j = 0; j < g->degree; ++j) {
      if (row[j] != 0) out.c_[j] += c_[k] * row[j];
    }
  }
  return out;
}

void CycScalar::coerce_pair(CycScalar& other) {
  if (field_ == other.field_) return;
  if (other.field_->degree == 1 || field_->degree == 1) return;
  const int m = static_cast<int>(lcm_order(order(), other.order()));
  if (order() != m) *this = embed(m);
  if (other.order() != m) other = other.embed(m);
}

CycScalar CycScalar::operator-() const {
  CycScalar r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  if (field_ == o.field_ || o.field_->degree == 1) {
    if (o.field_->degree == 1) {
      c_[0] += o.c_[0];
    } else {
      for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    }
    return *this;
  }
  if (field_->degree == 1) {
    mpq_class v = c_[0];
    *this = o;
    c_[0] += v;
    return *this;
  }
  CycScalar b(o);
  coerce_pair(b);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) { return *this += -o; }

CycScalar& CycScalar::operator*=(const CycScalar& o) {
  if (o.field_->degree == 1) {
    if (field_->degree == 1) {
      c_[0] *= o.c_[0];
      if (o.field_->order > field_->order) field_ = o.field_;
    } else {
      for (auto& x : c_) x *= o.c_[0];
    }
    return *this;
  }
  if (field_->degree == 1) {
    mpq_class v = c_[0];
    *this = o;
    for (auto& x : c_) x *= v;
    return *this;
  }
  CycScalar b(o);
  coerce_pair(b);
  const int d = field_->degree;
  std::vector<mpq_class> prod(2 * d - 1);
  for (int i = 0; i < d; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      prod[i + j] += c_[i] * b.c_[j];
    }
  }
  for (int j = 0; j < d; ++j) c_[j] = prod[j];
  for (int k = d; k < 2 * d - 1; ++k) {
    if (sgn(prod[k]) == 0) continue;
    const auto& row = field_->xpow[k];
    for (int j = 0; j < d; ++j) {
      if (row[j] != 0) c_[j] += prod[k] * row[j];
    }
  }
  return *this;
}

void CycScalar::add_product(const CycScalar& b, const CycScalar& c) {
  if (b.field_->degree == 1 && c.field_->degree == 1 && field_->degree == 1) {
    mpq_class t = b.c_[0] * c.c_[0];
    c_[0] += t;
    if (b.field_->order > field_->order) field_ = b.field_;
    if (c.field_->order > field_->order) field_ = c.field_;
    return;
  }
  *this += b * c;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic scalar");
  const int d = field_->degree;
  if (d == 1) {
    CycScalar r(field_);
    r.c_[0] = 1 / c_[0];
    return r;
  }
  // Columns: this * x^j reduced; solve M v = e_0.
  std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d + 1));
  for (int j = 0; j < d; ++j) {
    CycScalar xj = root_of_unity(order(), j);
    CycScalar col = *this * xj;
    for (int i = 0; i < d; ++i) m[i][j] = col.c_[i];
  }
  m[0][d] = 1;
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int r = col; r < d; ++r) {
      if (sgn(m[r][col]) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) throw DivisionByZero("singular multiplication matrix");
    std::swap(m[piv], m[col]);
    mpq_class inv = 1 / m[col][col];
    for (int j = col; j <= d; ++j) m[col][j] *= inv;
    for (int r = 0; r < d; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      mpq_class f = m[r][col];
      for (int j = col; j <= d; ++j) m[r][j] -= f * m[col][j];
    }
  }
  CycScalar r(field_);
  for (int i = 0; i < d; ++i) r.c_[i] = m[i][d];
  return r;
}

CycScalar& CycScalar::operator/=(const CycScalar& o) { return *this *= o.inverse(); }

CycScalar CycScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycScalar result(field_);
  result.c_[0] = 1;
  CycScalar base(*this);
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  if (a.field_ == b.field_ || (a.field_->degree == 1 && b.field_->degree == 1)) {
    return a.c_ == b.c_;
  }
  if (a.field_->degree == 1) return b.is_rational() && b.c_[0] == a.c_[0];
  if (b.field_->degree == 1) return a.is_rational() && a.c_[0] == b.c_[0];
  CycScalar x(a), y(b);
  x.coerce_pair(y);
  return x.c_ == y.c_;
}

std::string CycScalar::to_string() const {
  if (is_rational()) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < degree(); ++k) {
    if (sgn(c_[k]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << c_[k].get_str();
    } else {
      if (c_[k] != 1) os << "(" << c_[k].get_str() << ")*";
      os << "z" << order();
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycScalar& s) { return os << s.to_string(); }

CycScalar q_number(int n, const CycScalar& q) {
  CycScalar sum(0L), p(1L);
  for (int i = 0; i < n; ++i) {
    sum += p;
    p *= q;
  }
  return sum;
}

CycScalar q_factorial(int n, const CycScalar& q) {
  CycScalar f(1L);
  for (int j = 1; j <= n; ++j) f *= q_number(j, q);
  return f;
}

CycScalar q_binomial(int n, int k, const CycScalar& q) {
  if (k < 0 || k > n) throw std::invalid_argument("q_binomial requires 0 <= k <= n");
  CycScalar den = q_factorial(k, q) * q_factorial(n - k, q);
  if (den.is_zero()) {
    throw DivisionByZero("q_binomial(" + std::to_string(n) + "," + std::to_string(k) +
                         "): degenerate q");
  }
  return q_factorial(n, q) / den;
}

int root_order(const CycScalar& s) {
  const int bound = static_cast<int>(lcm_order(2, s.order()));
  for (int n = 1; n <= bound; ++n) {
    if (bound % n != 0) continue;
    if (s.pow(n).is_one()) return n;
  }
  return 0;
}

}  // namespace hopflab
