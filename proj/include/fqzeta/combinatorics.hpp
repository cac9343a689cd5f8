#ifndef FQZETA_COMBINATORICS_HPP
#define FQZETA_COMBINATORICS_HPP

// Base-p digits, binomial and multinomial coefficients mod p via Lucas'
// theorem, and the index quantities that drive the shuffle recursion:
// r_a, j_max, phi, i_j, l_j, f_{a,j}, c_{a,j} and t_a.

#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "fqzeta/error.hpp"
#include "fqzeta/finite_field.hpp"

namespace fqzeta {

/// Residue in [0, p). Coefficients of relations live here.
struct FpCoeff {
  int value = 0;

  friend constexpr bool operator==(FpCoeff, FpCoeff) = default;
  friend constexpr auto operator<=>(FpCoeff, FpCoeff) = default;
};

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  if (a != 0 && b > std::numeric_limits<std::int64_t>::max() / a)
    throw Error(Errc::UnsupportedSize, "64-bit overflow in index arithmetic");
  return a * b;
}

inline std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

inline int mod_p(std::int64_t x, int p) { return static_cast<int>(((x % p) + p) % p); }

struct DigitBinomTable {
  // fact[p][n] = n! mod p and inv_fact[p][n] = (n!)^{-1} mod p for n < p.
  std::vector<std::vector<int>> fact, inv_fact;

  DigitBinomTable() : fact(kHardMaxQ + 1), inv_fact(kHardMaxQ + 1) {
    for (int p = 2; p <= kHardMaxQ; ++p) {
      if (!is_prime(p)) continue;
      fact[p].assign(p, 1);
      inv_fact[p].assign(p, 1);
      for (int n = 1; n < p; ++n) fact[p][n] = fact[p][n - 1] * n % p;
      for (int n = 0; n < p; ++n) inv_fact[p][n] = inv_mod_p(fact[p][n], p);
    }
  }
};

inline const DigitBinomTable& digit_binom_table() {
  static const DigitBinomTable table;
  return table;
}

// binom(n, k) mod p for digits n, k < p.
inline int small_binom_mod_p(int n, int k, int p) {
  if (k < 0 || k > n) return 0;
  const auto& t = digit_binom_table();
  return t.fact[p][n] * t.inv_fact[p][k] % p * t.inv_fact[p][n - k] % p;
}

}  // namespace detail

/// (-1)^e as a residue mod p.
inline FpCoeff sign_mod_p(std::int64_t e, int p) { return FpCoeff{(e % 2 == 0) ? 1 % p : p - 1}; }

inline FpCoeff fp_mul(FpCoeff x, FpCoeff y, int p) { return FpCoeff{x.value * y.value % p}; }
inline FpCoeff fp_add(FpCoeff x, FpCoeff y, int p) { return FpCoeff{(x.value + y.value) % p}; }

inline FpCoeff fp_inv(FpCoeff x, int p) {
  if (x.value % p == 0) throw Error(Errc::DivisionByZero, "inverse of 0 in F_p");
  return FpCoeff{detail::inv_mod_p(x.value, p)};
}

/// Little-endian base-p digits. Zero maps to {0}.
inline std::vector<int> base_p_digits(std::int64_t n, int p) {
  if (n < 0) throw Error(Errc::InvalidArgument, "base_p_digits of a negative number");
  if (n == 0) return {0};
  std::vector<int> d;
  while (n > 0) {
    d.push_back(static_cast<int>(n % p));
    n /= p;
  }
  return d;
}

/// Sum of base-b digits; used for the digit-sum function l(k).
inline std::int64_t digit_sum(std::int64_t n, std::int64_t base) {
  std::int64_t s = 0;
  for (; n > 0; n /= base) s += n % base;
  return s;
}

/// binom(n, k) mod p, digit by digit.
inline FpCoeff lucas_binom(std::int64_t n, std::int64_t k, int p) {
  if (n < 0 || k < 0 || k > n) return FpCoeff{0};
  int r = 1 % p;
  while (k > 0 || n > 0) {
    const int nd = static_cast<int>(n % p);
    const int kd = static_cast<int>(k % p);
    if (kd > nd) return FpCoeff{0};
    r = r * detail::small_binom_mod_p(nd, kd, p) % p;
    n /= p;
    k /= p;
  }
  return FpCoeff{r};
}

/// Multinomial coefficient n! / (parts_0! parts_1! ...) mod p, as a product
/// of binomials over prefix sums.
inline FpCoeff lucas_multinom(std::int64_t n, std::span<const std::int64_t> parts, int p) {
  std::int64_t total = 0;
  for (auto k : parts) {
    if (k < 0) throw Error(Errc::PartsSumMismatch, "negative part");
    total += k;
  }
  if (total != n) throw Error(Errc::PartsSumMismatch, "parts sum to " + std::to_string(total) + ", expected " + std::to_string(n));
  FpCoeff r{1 % p};
  std::int64_t prefix = 0;
  for (auto k : parts) {
    prefix += k;
    r = fp_mul(r, lucas_binom(prefix, k, p), p);
    if (r.value == 0) break;
  }
  return r;
}

/// The index data attached to a positive integer a for a field of size q = p^s.
struct IndexProfile {
  std::int64_t a = 1;
  int q = 2;
  int p = 2;
  int s = 1;
  int m = 0;                   // smallest m with a <= p^m
  std::int64_t p_m = 1;        // p^m
  std::int64_t r_a = 1;        // (q-1) p^m, the recursion length
  std::int64_t j_max = 0;      // floor((r_a - a)/(q-1))
  std::int64_t t_a = 1;        // number of nonzero f_{a,j}
  std::vector<int> digits_a_minus_1;  // m base-p digits of a-1 (empty when a = 1)
};

inline IndexProfile index_profile(std::int64_t a, int p, int s) {
  if (a < 1) throw Error(Errc::InvalidArgument, "index_profile requires a >= 1");
  if (!is_prime(p)) throw Error(Errc::NonPrimeP, std::to_string(p) + " is not prime");
  IndexProfile prof;
  prof.a = a;
  prof.p = p;
  prof.s = s;
  prof.q = static_cast<int>(detail::ipow(p, s));
  prof.m = 0;
  prof.p_m = 1;
  while (prof.p_m < a) {
    prof.p_m = detail::checked_mul(prof.p_m, p);
    ++prof.m;
  }
  prof.r_a = detail::checked_mul(prof.q - 1, prof.p_m);
  prof.j_max = (prof.r_a - a) / (prof.q - 1);
  // a-1 < p^m always has exactly m digits when a > 1 because a-1 >= p^{m-1}.
  std::int64_t rest = a - 1;
  for (int i = 0; i < prof.m; ++i) {
    prof.digits_a_minus_1.push_back(static_cast<int>(rest % p));
    rest /= p;
  }
  prof.t_a = 1;
  for (int d : prof.digits_a_minus_1) prof.t_a = detail::checked_mul(prof.t_a, p - d);
  return prof;
}

inline IndexProfile index_profile(std::int64_t a, const Field& field) { return index_profile(a, field.p(), field.s()); }

/// phi(j) = r_a - a - j(q-1), defined for 0 <= j <= j_max.
inline std::int64_t phi(const IndexProfile& prof, std::int64_t j) {
  if (j < 0 || j > prof.j_max) throw Error(Errc::JOutOfRange, "phi: j = " + std::to_string(j));
  return prof.r_a - prof.a - j * (prof.q - 1);
}

namespace detail {
inline void check_j(const IndexProfile& prof, std::int64_t j, const char* what) {
  if (j < 0 || j > prof.p_m - prof.a) throw Error(Errc::JOutOfRange, std::string(what) + ": j = " + std::to_string(j));
}
}  // namespace detail

/// The unique i in [0, q-1) with j + i p^m = 0 mod (q-1).
inline std::int64_t i_of_j(const IndexProfile& prof, std::int64_t j) {
  detail::check_j(prof, j, "i_of_j");
  const std::int64_t qm1 = prof.q - 1;
  if (qm1 == 1) return 0;
  const std::int64_t pm = prof.p_m % qm1;
  for (std::int64_t i = 0; i < qm1; ++i)
    if ((j + i * pm) % qm1 == 0) return i;
  throw Error(Errc::JOutOfRange, "no solution for i_j");  // unreachable: p^m is a unit mod q-1
}

/// l_j = (j + i_j p^m)/(q-1).
inline std::int64_t l_of_j(const IndexProfile& prof, std::int64_t j) {
  const std::int64_t i = i_of_j(prof, j);
  return (j + i * prof.p_m) / (prof.q - 1);
}

/// f_{a,j} = binom(p^m - a, j) (-1)^j in F_p.
inline FpCoeff f_aj(const IndexProfile& prof, std::int64_t j) {
  detail::check_j(prof, j, "f_aj");
  return fp_mul(lucas_binom(prof.p_m - prof.a, j, prof.p), sign_mod_p(j, prof.p), prof.p);
}

/// c_{a,j} = ceil(j(q-1)/j_max)^{-1} binom(r_a - a, j(q-1)); prime q only.
inline FpCoeff c_aj(const IndexProfile& prof, std::int64_t j) {
  if (prof.s != 1)
    throw Error(Errc::NonPrimeQ, "c_{a,j} is only defined for prime q (q = " + std::to_string(prof.q) + ")");
  if (j < 0 || j > prof.j_max || (j > 0 && prof.j_max == 0))
    throw Error(Errc::JOutOfRange, "c_aj: j = " + std::to_string(j));
  if (j == 0) return FpCoeff{1 % prof.p};
  const std::int64_t num = j * (prof.q - 1);
  const std::int64_t ceil_div = (num + prof.j_max - 1) / prof.j_max;
  const FpCoeff denom{detail::mod_p(ceil_div, prof.p)};
  return fp_mul(fp_inv(denom, prof.p), lucas_binom(prof.r_a - prof.a, num, prof.p), prof.p);
}

}  // namespace fqzeta

#endif  // FQZETA_COMBINATORICS_HPP
