#ifndef FQZETA_LAURENT_HPP
#define FQZETA_LAURENT_HPP

// Truncated expansions in 1/t, i.e. elements of F_q((1/t)) known up to an
// explicit precision.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "fqzeta/error.hpp"
#include "fqzeta/ratfunc.hpp"

namespace fqzeta {

/// sum_{e >= v} c_e t^{-e}, with every coefficient for e <= precision known
/// and nothing claimed beyond it. `lead_exponent()` is v; a value that is zero
/// through the precision reports v = precision + 1.
class LaurentTail {
 public:
  LaurentTail() = default;
  LaurentTail(FieldPtr field, std::int64_t lead_exponent, std::vector<FieldElem> coeffs, std::int64_t precision)
      : field_(std::move(field)), v_(lead_exponent), c_(std::move(coeffs)), n_(precision) {
    normalize();
  }

  static LaurentTail zero(FieldPtr field, std::int64_t precision) { return LaurentTail(std::move(field), 0, {}, precision); }
  static LaurentTail one(FieldPtr field, std::int64_t precision) {
    return LaurentTail(std::move(field), 0, {Field::one()}, precision);
  }

  const FieldPtr& field() const noexcept { return field_; }
  std::int64_t lead_exponent() const noexcept { return v_; }
  std::int64_t precision() const noexcept { return n_; }
  const std::vector<FieldElem>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }

  /// Coefficient of t^{-e}; throws if e lies beyond the known precision.
  FieldElem coeff(std::int64_t e) const {
    if (e > n_) throw Error(Errc::InvalidArgument, "coefficient of t^-" + std::to_string(e) + " beyond precision " + std::to_string(n_));
    if (e < v_) return Field::zero();
    const auto idx = static_cast<std::size_t>(e - v_);
    return idx < c_.size() ? c_[idx] : Field::zero();
  }

  LaurentTail truncated(std::int64_t precision) const {
    if (precision > n_) throw Error(Errc::InvalidArgument, "cannot raise precision by truncation");
    return LaurentTail(field_, v_, c_, precision);
  }

  LaurentTail operator-() const {
    LaurentTail r = *this;
    for (auto& x : r.c_) x = field_->neg(x);
    return r;
  }

  friend LaurentTail operator+(const LaurentTail& x, const LaurentTail& y) {
    const FieldPtr& f = x.field_ ? x.field_ : y.field_;
    const std::int64_t prec = std::min(x.n_, y.n_);
    const std::int64_t v = std::min(x.v_, y.v_);
    if (v > prec) return zero(f, prec);
    std::vector<FieldElem> c(static_cast<std::size_t>(prec - v + 1), Field::zero());
    for (std::int64_t e = v; e <= prec; ++e) c[e - v] = f->add(x.coeff(e), y.coeff(e));
    return LaurentTail(f, v, std::move(c), prec);
  }

  friend LaurentTail operator-(const LaurentTail& x, const LaurentTail& y) { return x + (-y); }

  /// The product is known through min(N_x + v_y, N_y + v_x).
  friend LaurentTail operator*(const LaurentTail& x, const LaurentTail& y) {
    const FieldPtr& f = x.field_ ? x.field_ : y.field_;
    const std::int64_t prec = std::min(x.n_ + y.v_, y.n_ + x.v_);
    const std::int64_t v = x.v_ + y.v_;
    if (x.is_zero() || y.is_zero() || v > prec) return zero(f, prec);
    const auto len = static_cast<std::size_t>(prec - v + 1);
    const Poly px(f, x.c_);
    const Poly py(f, y.c_);
    const Poly prod = (px.truncated(len) * py.truncated(len)).truncated(len);
    return LaurentTail(f, v, prod.coeffs(), prec);
  }

  LaurentTail& operator+=(const LaurentTail& o) { return *this = *this + o; }
  LaurentTail& operator-=(const LaurentTail& o) { return *this = *this - o; }
  LaurentTail& operator*=(const LaurentTail& o) { return *this = *this * o; }

  LaurentTail scaled(FieldElem c) const {
    LaurentTail r = *this;
    for (auto& x : r.c_) x = field_->mul(x, c);
    r.normalize();
    return r;
  }

  /// Equality of all coefficients through min(precision, both precisions).
  bool equals_through(const LaurentTail& o, std::int64_t precision) const {
    if (precision > n_ || precision > o.n_) return false;
    for (std::int64_t e = std::min(v_, o.v_); e <= precision; ++e)
      if (coeff(e) != o.coeff(e)) return false;
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].v == 0) continue;
      if (!out.empty()) out += " + ";
      out += std::to_string(c_[i].v) + "*t^" + std::to_string(-(v_ + static_cast<std::int64_t>(i)));
    }
    if (out.empty()) out = "0";
    return out + " + O(t^" + std::to_string(-(n_ + 1)) + ")";
  }

 private:
  void normalize() {
    if (static_cast<std::int64_t>(c_.size()) > n_ - v_ + 1) c_.resize(static_cast<std::size_t>(std::max<std::int64_t>(0, n_ - v_ + 1)));
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].v == 0) ++lead;
    if (lead == c_.size()) {
      c_.clear();
      v_ = n_ + 1;
      return;
    }
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    v_ += static_cast<std::int64_t>(lead);
    while (!c_.empty() && c_.back().v == 0) c_.pop_back();
  }

  FieldPtr field_;
  std::int64_t v_ = 1;
  std::vector<FieldElem> c_;
  std::int64_t n_ = 0;
};

/// Expansion of x in 1/t, exact through t^{-precision}.
inline LaurentTail laurent_at_infinity(const RatFunc& x, std::int64_t precision) {
  const FieldPtr& f = x.field();
  if (x.is_zero()) return LaurentTail::zero(f, precision);
  const int g = x.num().degree();
  const int e = x.den().degree();
  const std::int64_t v = e - g;
  if (v > precision) return LaurentTail::zero(f, precision);
  const auto len = static_cast<std::size_t>(precision - v + 1);
  // Reverse the coefficient lists: u = 1/t turns both into power series in u.
  std::vector<FieldElem> rn(x.num().coeffs().rbegin(), x.num().coeffs().rend());
  std::vector<FieldElem> rd(x.den().coeffs().rbegin(), x.den().coeffs().rend());
  const Poly num_u(f, std::move(rn));
  const Poly den_u(f, std::move(rd));
  const Poly series = (num_u.truncated(len) * series_inverse(den_u, len)).truncated(len);
  return LaurentTail(f, v, series.coeffs(), precision);
}

inline LaurentTail laurent_at_infinity(const Poly& p, std::int64_t precision) { return laurent_at_infinity(RatFunc(p), precision); }

}  // namespace fqzeta

#endif  // FQZETA_LAURENT_HPP
