#ifndef FQZETA_FINITE_FIELD_HPP
#define FQZETA_FINITE_FIELD_HPP

// Finite fields GF(q), q = p^s, with table-driven arithmetic.
//
// An element is stored as the integer sum c_0 + c_1 p + ... + c_{s-1} p^{s-1}
// of its coordinates in the power basis 1, x, ..., x^{s-1} of
// F_p[x]/(modulus). The encoding is canonical, so equality of elements is
// equality of coordinate vectors, and the prime subfield F_p is exactly the
// set of encodings below p.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fqzeta/error.hpp"

namespace fqzeta {

/// Size limits accepted by make_field. Raising them past kHardMaxQ is refused
/// because elements are stored in one byte.
struct FieldLimits {
  int max_q = 64;
  int max_p = 31;
};

inline constexpr int kHardMaxQ = 256;

struct FieldElem {
  std::uint8_t v = 0;

  friend constexpr bool operator==(FieldElem, FieldElem) = default;
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace detail {

// Dense polynomials over F_p with int coefficients, little-endian. Only used
// while building a field, so clarity beats speed here.
inline void trim(std::vector<int>& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int inv_mod_p(int x, int p) {
  // p is small; Fermat is plenty.
  int r = 1, b = x % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline std::vector<int> rem_mod_p(std::vector<int> f, const std::vector<int>& g, int p) {
  trim(f);
  const int dg = static_cast<int>(g.size()) - 1;
  const int lead_inv = inv_mod_p(g.back(), p);
  while (static_cast<int>(f.size()) - 1 >= dg && !f.empty()) {
    const int shift = static_cast<int>(f.size()) - 1 - dg;
    const int c = f.back() * lead_inv % p;
    for (int i = 0; i <= dg; ++i) f[shift + i] = ((f[shift + i] - c * g[i]) % p + p) % p;
    trim(f);
  }
  return f;
}

// Monic polynomial of degree `deg` whose lower coefficients are the base-p
// digits of `index`.
inline std::vector<int> monic_from_index(int deg, std::int64_t index, int p) {
  std::vector<int> f(deg + 1, 0);
  f[deg] = 1;
  for (int i = 0; i < deg; ++i) {
    f[i] = static_cast<int>(index % p);
    index /= p;
  }
  return f;
}

inline bool is_irreducible_mod_p(const std::vector<int>& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg <= 1) return deg == 1;
  for (int dg = 1; 2 * dg <= deg; ++dg) {
    std::int64_t count = 1;
    for (int i = 0; i < dg; ++i) count *= p;
    for (std::int64_t idx = 0; idx < count; ++idx)
      if (rem_mod_p(f, monic_from_index(dg, idx, p), p).empty()) return false;
  }
  return true;
}

}  // namespace detail

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  int p() const noexcept { return p_; }
  int s() const noexcept { return s_; }
  int q() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return s_ == 1; }

  /// Monic modulus over F_p, little-endian, size s+1. For s = 1 this is x.
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  static constexpr FieldElem zero() noexcept { return FieldElem{0}; }
  static constexpr FieldElem one() noexcept { return FieldElem{1}; }

  FieldElem add(FieldElem x, FieldElem y) const noexcept { return FieldElem{add_[x.v * q_ + y.v]}; }
  FieldElem sub(FieldElem x, FieldElem y) const noexcept { return add(x, neg(y)); }
  FieldElem neg(FieldElem x) const noexcept { return FieldElem{neg_[x.v]}; }
  FieldElem mul(FieldElem x, FieldElem y) const noexcept { return FieldElem{mul_[x.v * q_ + y.v]}; }

  FieldElem inv(FieldElem x) const {
    if (x.v == 0) throw Error(Errc::DivisionByZero, "inverse of zero in GF(" + std::to_string(q_) + ")");
    return FieldElem{inv_[x.v]};
  }
  FieldElem div(FieldElem x, FieldElem y) const { return mul(x, inv(y)); }

  FieldElem pow(FieldElem x, std::uint64_t e) const noexcept {
    FieldElem r = one();
    while (e > 0) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }

  /// Image of an integer under Z -> F_p -> GF(q).
  FieldElem from_int(std::int64_t n) const noexcept {
    const std::int64_t r = ((n % p_) + p_) % p_;
    return FieldElem{static_cast<std::uint8_t>(r)};
  }

  bool in_prime_field(FieldElem x) const noexcept { return x.v < p_; }

  std::vector<int> coords(FieldElem x) const {
    std::vector<int> c(s_);
    int v = x.v;
    for (int i = 0; i < s_; ++i) {
      c[i] = v % p_;
      v /= p_;
    }
    return c;
  }

  FieldElem from_coords(std::span<const int> c) const {
    if (static_cast<int>(c.size()) != s_)
      throw Error(Errc::InvalidArgument, "expected " + std::to_string(s_) + " coordinates");
    int v = 0;
    for (int i = s_ - 1; i >= 0; --i) {
      if (c[i] < 0 || c[i] >= p_) throw Error(Errc::InvalidArgument, "coordinate out of range");
      v = v * p_ + c[i];
    }
    return FieldElem{static_cast<std::uint8_t>(v)};
  }

  /// All q elements in encoding order: zero first, then ascending by the
  /// coordinate vector read from the highest basis power down.
  std::vector<FieldElem> elements() const {
    std::vector<FieldElem> out(q_);
    for (int i = 0; i < q_; ++i) out[i] = FieldElem{static_cast<std::uint8_t>(i)};
    return out;
  }

  // Raw tables for inner loops (row-major, q*q).
  const std::uint8_t* add_table() const noexcept { return add_.data(); }
  const std::uint8_t* mul_table() const noexcept { return mul_.data(); }

  std::string name() const {
    return s_ == 1 ? "GF(" + std::to_string(p_) + ")"
                   : "GF(" + std::to_string(p_) + "^" + std::to_string(s_) + ")";
  }

  friend FieldPtr make_field(int p, int s, FieldLimits limits);

 private:
  Field(int p, int s, std::vector<int> modulus) : p_(p), s_(s), q_(1), modulus_(std::move(modulus)) {
    for (int i = 0; i < s_; ++i) q_ *= p_;
    build_tables();
  }

  void build_tables() {
    const std::size_t qq = static_cast<std::size_t>(q_) * q_;
    add_.assign(qq, 0);
    mul_.assign(qq, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    auto encode = [&](const std::vector<int>& c) {
      int v = 0;
      for (int i = s_ - 1; i >= 0; --i) v = v * p_ + (i < static_cast<int>(c.size()) ? c[i] : 0);
      return static_cast<std::uint8_t>(v);
    };
    for (int x = 0; x < q_; ++x) {
      const auto cx = coords(FieldElem{static_cast<std::uint8_t>(x)});
      std::vector<int> nx(s_);
      for (int i = 0; i < s_; ++i) nx[i] = (p_ - cx[i]) % p_;
      neg_[x] = encode(nx);
      for (int y = 0; y < q_; ++y) {
        const auto cy = coords(FieldElem{static_cast<std::uint8_t>(y)});
        std::vector<int> sum(s_);
        for (int i = 0; i < s_; ++i) sum[i] = (cx[i] + cy[i]) % p_;
        add_[x * q_ + y] = encode(sum);
        std::vector<int> prod(2 * s_, 0);
        for (int i = 0; i < s_; ++i)
          for (int j = 0; j < s_; ++j) prod[i + j] = (prod[i + j] + cx[i] * cy[j]) % p_;
        mul_[x * q_ + y] = encode(detail::rem_mod_p(prod, modulus_, p_));
      }
    }
    for (int x = 1; x < q_; ++x)
      for (int y = 1; y < q_; ++y)
        if (mul_[x * q_ + y] == 1) {
          inv_[x] = static_cast<std::uint8_t>(y);
          break;
        }
  }

  int p_;
  int s_;
  int q_;
  std::vector<int> modulus_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::uint8_t> inv_;
};

/// Builds GF(p^s) with the lexicographically first monic irreducible of
/// degree s as modulus (candidates ordered by their lower coefficients read
/// as a base-p integer, most significant coefficient first).
inline FieldPtr make_field(int p, int s, FieldLimits limits = {}) {
  if (!is_prime(p)) throw Error(Errc::NonPrimeP, std::to_string(p) + " is not prime");
  if (s < 1) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
  if (limits.max_q > kHardMaxQ) throw Error(Errc::UnsupportedSize, "max_q above hard limit 256");
  if (p > limits.max_p) throw Error(Errc::UnsupportedSize, "p = " + std::to_string(p) + " exceeds limit");
  std::int64_t q = 1;
  for (int i = 0; i < s; ++i) {
    q *= p;
    if (q > limits.max_q)
      throw Error(Errc::UnsupportedSize, std::to_string(p) + "^" + std::to_string(s) + " exceeds limit " +
                                             std::to_string(limits.max_q));
  }
  std::int64_t count = q;  // number of monic polynomials of degree s
  for (std::int64_t idx = 0; idx < count; ++idx) {
    auto f = detail::monic_from_index(s, idx, p);
    if (detail::is_irreducible_mod_p(f, p)) return FieldPtr(new Field(p, s, std::move(f)));
  }
  throw Error(Errc::UnsupportedSize, "no irreducible polynomial found");  // unreachable
}

/// Splits q into p^s, or throws InvalidArgument when q is not a prime power.
inline std::pair<int, int> prime_power_split(std::int64_t q) {
  if (q < 2) throw Error(Errc::InvalidArgument, "q must be a prime power >= 2");
  std::int64_t p = 2;
  while (q % p != 0) ++p;
  int s = 0;
  std::int64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++s;
  }
  if (r != 1) throw Error(Errc::InvalidArgument, std::to_string(q) + " is not a prime power");
  return {static_cast<int>(p), s};
}

inline FieldPtr make_field_q(std::int64_t q, FieldLimits limits = {}) {
  auto [p, s] = prime_power_split(q);
  return make_field(p, s, limits);
}

}  // namespace fqzeta

#endif  // FQZETA_FINITE_FIELD_HPP
