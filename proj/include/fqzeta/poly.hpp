#ifndef FQZETA_POLY_HPP
#define FQZETA_POLY_HPP

// Dense univariate polynomials in t over GF(q), the brackets [n] = t^{q^n} - t,
// and enumeration of the monic polynomials of a fixed degree.

#include <cstdint>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "fqzeta/error.hpp"
#include "fqzeta/finite_field.hpp"

namespace fqzeta {

class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<FieldElem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

  static Poly constant(FieldPtr field, FieldElem c) { return Poly(std::move(field), {c}); }
  static Poly one(FieldPtr field) { return constant(std::move(field), Field::one()); }

  /// c * t^e
  static Poly monomial(FieldPtr field, FieldElem c, std::size_t e) {
    std::vector<FieldElem> v(e + 1, Field::zero());
    v[e] = c;
    return Poly(std::move(field), std::move(v));
  }

  /// t - c
  static Poly linear(FieldPtr field, FieldElem c) {
    const FieldElem nc = field->neg(c);
    return Poly(std::move(field), {nc, Field::one()});
  }

  /// Builds a polynomial with integer coefficients reduced into F_p.
  static Poly from_ints(FieldPtr field, const std::vector<std::int64_t>& ints) {
    std::vector<FieldElem> v;
    v.reserve(ints.size());
    for (auto n : ints) v.push_back(field->from_int(n));
    return Poly(std::move(field), std::move(v));
  }

  const FieldPtr& field() const noexcept { return field_; }
  const Field& F() const { return *field_; }

  /// Degree, or -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::size_t size() const noexcept { return c_.size(); }
  const std::vector<FieldElem>& coeffs() const noexcept { return c_; }

  FieldElem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Field::zero(); }
  FieldElem lead() const noexcept { return c_.empty() ? Field::zero() : c_.back(); }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == Field::one(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }

  Poly operator-() const {
    Poly r(field_);
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = F().neg(c_[i]);
    return r;
  }

  Poly& operator+=(const Poly& o) {
    adopt_field(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Field::zero());
    const auto* add = F().add_table();
    const int q = F().q();
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i].v = add[c_[i].v * q + o.c_[i].v];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o) { return *this += -o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    const FieldPtr& f = a.field_ ? a.field_ : b.field_;
    if (a.is_zero() || b.is_zero()) return Poly(f);
    check_same(a, b);
    const Field& F = *f;
    const std::size_t n = a.c_.size(), m = b.c_.size();
    std::vector<FieldElem> out(n + m - 1, Field::zero());
    if (F.is_prime_field()) {
      // Delay the reduction: products are below p^2 <= 2^16, so the sums
      // stay well inside 64 bits.
      const std::uint64_t p = static_cast<std::uint64_t>(F.p());
      std::vector<std::uint64_t> acc(n + m - 1, 0);
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t ai = a.c_[i].v;
        if (ai == 0) continue;
        std::uint64_t* dst = acc.data() + i;
        for (std::size_t j = 0; j < m; ++j) dst[j] += ai * b.c_[j].v;
      }
      for (std::size_t k = 0; k < acc.size(); ++k) out[k].v = static_cast<std::uint8_t>(acc[k] % p);
    } else {
      const auto* add = F.add_table();
      const auto* mul = F.mul_table();
      const int q = F.q();
      for (std::size_t i = 0; i < n; ++i) {
        if (a.c_[i].v == 0) continue;
        const std::uint8_t* row = mul + a.c_[i].v * q;
        for (std::size_t j = 0; j < m; ++j) out[i + j].v = add[out[i + j].v * q + row[b.c_[j].v]];
      }
    }
    return Poly(f, std::move(out));
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(FieldElem c) const {
    if (c == Field::zero()) return Poly(field_);
    Poly r(field_, c_);
    for (auto& x : r.c_) x = F().mul(x, c);
    return r;
  }

  /// this * t^k
  Poly shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<FieldElem> v(k, Field::zero());
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(field_, std::move(v));
  }

  /// this mod t^n
  Poly truncated(std::size_t n) const {
    if (c_.size() <= n) return *this;
    return Poly(field_, std::vector<FieldElem>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n)));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(F().inv(lead()));
  }

  Poly pow(std::uint64_t e) const {
    Poly result = one(field_);
    Poly base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return result;
  }

  FieldElem eval(FieldElem x) const {
    FieldElem r = Field::zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = F().add(F().mul(r, x), *it);
    return r;
  }

  /// P(t + theta).
  Poly compose_shift(FieldElem theta) const {
    Poly r(field_);
    const Poly lin(field_, {theta, Field::one()});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + constant(field_, *it);
    return r;
  }

  /// Quotient and remainder; deg(remainder) < deg(divisor).
  friend std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    check_same(a, b);
    const Field& F = *b.field_;
    if (a.degree() < b.degree()) return {Poly(b.field_), a};
    std::vector<FieldElem> r = a.c_;
    const std::size_t db = b.c_.size() - 1;
    std::vector<FieldElem> quo(r.size() - db, Field::zero());
    const FieldElem lead_inv = F.inv(b.lead());
    const bool monic = b.lead() == Field::one();
    const auto* add = F.add_table();
    const auto* mul = F.mul_table();
    const int q = F.q();
    for (std::size_t k = r.size(); k-- > db;) {
      if (r[k].v == 0) continue;
      const FieldElem c = monic ? r[k] : F.mul(r[k], lead_inv);
      quo[k - db] = c;
      const std::uint8_t* row = mul + F.neg(c).v * q;
      const std::size_t base = k - db;
      for (std::size_t i = 0; i <= db; ++i) r[base + i].v = add[r[base + i].v * q + row[b.c_[i].v]];
    }
    r.resize(db);
    return {Poly(b.field_, std::move(quo)), Poly(b.field_, std::move(r))};
  }

  friend Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

  /// Exact division; throws InvalidArgument when b does not divide a.
  friend Poly exact_div(const Poly& a, const Poly& b) {
    auto [quo, rem] = divrem(a, b);
    if (!rem.is_zero()) throw Error(Errc::InvalidArgument, "exact_div: nonzero remainder");
    return quo;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_ != b.c_) return false;
    if (a.is_zero()) return true;
    return a.field_ == b.field_ || (a.field_->p() == b.field_->p() && a.field_->s() == b.field_->s());
  }

  /// Human-readable form, ascending exponents, coefficients as field encodings.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].v == 0) continue;
      if (!out.empty()) out += " + ";
      const std::string cs = std::to_string(c_[i].v);
      if (i == 0) {
        out += cs;
      } else {
        if (c_[i].v != 1) out += cs + "*";
        out += (i == 1) ? std::string("t") : "t^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().v == 0) c_.pop_back();
  }

  void adopt_field(const Poly& o) {
    if (!field_) field_ = o.field_;
    else if (o.field_) check_same(*this, o);
  }

  static void check_same(const Poly& a, const Poly& b) {
    if (a.field_ && b.field_ && a.field_ != b.field_ &&
        (a.field_->p() != b.field_->p() || a.field_->s() != b.field_->s()))
      throw Error(Errc::FieldMismatch, "polynomials over different fields");
  }

  FieldPtr field_;
  std::vector<FieldElem> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// [n] = t^{q^n} - t.
inline Poly bracket(int n, const FieldPtr& field) {
  if (n < 1) throw Error(Errc::InvalidArgument, "bracket requires n >= 1");
  std::size_t deg = 1;
  for (int i = 0; i < n; ++i) deg *= static_cast<std::size_t>(field->q());
  std::vector<FieldElem> v(deg + 1, Field::zero());
  v[deg] = Field::one();
  v[1] = field->neg(Field::one());
  return Poly(field, std::move(v));
}

/// Upper bound on how many monic polynomials a single enumeration may visit.
struct EnumerationBudget {
  std::uint64_t max_monics = 1'000'000;
};

/// q^d, or throws BudgetExceeded if it passes the budget.
inline std::uint64_t checked_monic_count(int d, int q, const EnumerationBudget& budget) {
  if (d < 0) throw Error(Errc::InvalidArgument, "negative degree");
  std::uint64_t n = 1;
  for (int i = 0; i < d; ++i) {
    n *= static_cast<std::uint64_t>(q);
    if (n > budget.max_monics)
      throw Error(Errc::BudgetExceeded, std::to_string(q) + "^" + std::to_string(d) + " monic polynomials exceed budget " +
                                            std::to_string(budget.max_monics));
  }
  return n;
}

/// The monic polynomials of degree d, in a fixed order: the polynomial at
/// position k has lower coefficients given by the base-q digits of k
/// (little-endian), so index ranges partition the set for parallel work.
class MonicPolys {
 public:
  MonicPolys(int d, FieldPtr field, EnumerationBudget budget = {})
      : d_(d), field_(std::move(field)), count_(checked_monic_count(d, field_->q(), budget)) {}

  std::uint64_t size() const noexcept { return count_; }
  int degree() const noexcept { return d_; }

  Poly at(std::uint64_t index) const {
    if (index >= count_) throw Error(Errc::InvalidArgument, "monic index out of range");
    std::vector<FieldElem> v(d_ + 1, Field::zero());
    v[d_] = Field::one();
    const auto q = static_cast<std::uint64_t>(field_->q());
    for (int i = 0; i < d_; ++i) {
      v[i] = FieldElem{static_cast<std::uint8_t>(index % q)};
      index /= q;
    }
    return Poly(field_, std::move(v));
  }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Poly;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Poly;

    iterator() = default;
    iterator(const MonicPolys* owner, std::uint64_t index) : owner_(owner), index_(index) {}
    Poly operator*() const { return owner_->at(index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++index_;
      return tmp;
    }
    friend bool operator==(const iterator& x, const iterator& y) { return x.index_ == y.index_; }

   private:
    const MonicPolys* owner_ = nullptr;
    std::uint64_t index_ = 0;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, count_); }

 private:
  int d_;
  FieldPtr field_;
  std::uint64_t count_;
};

inline MonicPolys monic_polys(int d, const FieldPtr& field, EnumerationBudget budget = {}) {
  return MonicPolys(d, field, budget);
}

}  // namespace fqzeta

#endif  // FQZETA_POLY_HPP
