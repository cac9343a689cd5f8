#ifndef FQZETA_RATFUNC_HPP
#define FQZETA_RATFUNC_HPP

// Reduced rational functions num/den over GF(q) and their power-series
// expansion at t = 0.

#include <string>
#include <utility>
#include <vector>

#include "fqzeta/error.hpp"
#include "fqzeta/poly.hpp"

namespace fqzeta {

/// Canonical fraction: den monic, gcd(num, den) = 1, zero is 0/1.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(FieldPtr field) : num_(field), den_(Poly::one(field)) {}
  explicit RatFunc(Poly num) : num_(std::move(num)), den_(Poly::one(num_.field())) {}
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

  /// Wraps an already reduced pair without re-running the gcd.
  static RatFunc from_reduced(Poly num, Poly den) {
    RatFunc r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  const FieldPtr& field() const noexcept { return den_.field(); }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }

  RatFunc operator-() const { return from_reduced(-num_, den_); }

  friend RatFunc operator+(const RatFunc& x, const RatFunc& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.den_ == y.den_) return RatFunc(x.num_ + y.num_, x.den_);
    const Poly g = gcd(x.den_, y.den_);
    const Poly xd = x.den_ / g;
    const Poly yd = y.den_ / g;
    return RatFunc(x.num_ * yd + y.num_ * xd, x.den_ * yd);
  }

  friend RatFunc operator-(const RatFunc& x, const RatFunc& y) { return x + (-y); }

  friend RatFunc operator*(const RatFunc& x, const RatFunc& y) {
    if (x.is_zero()) return x;
    if (y.is_zero()) return y;
    // Cross-cancel first so the products stay reduced.
    const Poly g1 = gcd(x.num_, y.den_);
    const Poly g2 = gcd(y.num_, x.den_);
    Poly num = (x.num_ / g1) * (y.num_ / g2);
    Poly den = (x.den_ / g2) * (y.den_ / g1);
    const FieldElem lc = den.lead();
    if (lc != Field::one()) {
      const FieldElem li = den.F().inv(lc);
      num = num.scaled(li);
      den = den.scaled(li);
    }
    return from_reduced(std::move(num), std::move(den));
  }

  RatFunc inverse() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero rational function");
    return RatFunc(den_, num_);
  }

  friend RatFunc operator/(const RatFunc& x, const RatFunc& y) { return x * y.inverse(); }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  RatFunc scaled(FieldElem c) const { return from_reduced(num_.scaled(c), c == Field::zero() ? Poly::one(field()) : den_); }

  RatFunc pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    // gcd(num, den) = 1 is preserved by powers.
    return from_reduced(num_.pow(static_cast<std::uint64_t>(e)), den_.pow(static_cast<std::uint64_t>(e)));
  }

  /// Re-run canonicalization; idempotent.
  RatFunc reduced() const { return RatFunc(num_, den_); }

  friend bool operator==(const RatFunc& x, const RatFunc& y) { return x.num_ == y.num_ && x.den_ == y.den_; }

  std::string to_string() const { return "(" + num_.to_string() + ")/(" + den_.to_string() + ")"; }

 private:
  void reduce() {
    if (den_.is_zero()) throw Error(Errc::DivisionByZero, "rational function with zero denominator");
    if (num_.is_zero()) {
      num_ = Poly(den_.field());
      den_ = Poly::one(den_.field());
      return;
    }
    const Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    const FieldElem lc = den_.lead();
    if (lc != Field::one()) {
      const FieldElem li = den_.F().inv(lc);
      num_ = num_.scaled(li);
      den_ = den_.scaled(li);
    }
  }

  Poly num_;
  Poly den_;
};

/// Inverse of a power series with nonzero constant term, mod t^n.
inline Poly series_inverse(const Poly& f, std::size_t n) {
  if (f.coeff(0) == Field::zero()) throw Error(Errc::PoleAtZero, "series inverse of a series without constant term");
  const Field& F = f.F();
  std::vector<FieldElem> g(n, Field::zero());
  if (n == 0) return Poly(f.field());
  const FieldElem c0inv = F.inv(f.coeff(0));
  g[0] = c0inv;
  for (std::size_t k = 1; k < n; ++k) {
    FieldElem acc = Field::zero();
    const std::size_t top = std::min<std::size_t>(k, f.size() - 1);
    for (std::size_t i = 1; i <= top; ++i) acc = F.add(acc, F.mul(f.coeff(i), g[k - i]));
    g[k] = F.neg(F.mul(acc, c0inv));
  }
  return Poly(f.field(), std::move(g));
}

/// Coefficients of t^0 .. t^{n-1} in the expansion of x at t = 0.
inline std::vector<FieldElem> series_at_zero(const RatFunc& x, std::size_t n) {
  if (x.den().coeff(0) == Field::zero())
    throw Error(Errc::PoleAtZero, "rational function has a pole at t = 0");
  const Poly s = (x.num().truncated(n) * series_inverse(x.den(), n)).truncated(n);
  std::vector<FieldElem> out(n, Field::zero());
  for (std::size_t i = 0; i < n; ++i) out[i] = s.coeff(i);
  return out;
}

}  // namespace fqzeta

#endif  // FQZETA_RATFUNC_HPP
