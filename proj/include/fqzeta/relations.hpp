#ifndef FQZETA_RELATIONS_HPP
#define FQZETA_RELATIONS_HPP

// Relation sets S(a, b): the F_p-coefficient pairs (f_i, a_i) with
//
//   Delta_d(a, b) = sum_i f_i S_d(a_i, a + b - a_i)   for all d >= 0,
//
// equivalently zeta(a) zeta(b) = zeta(a+b) + zeta(a,b) + zeta(b,a)
//                                + sum_i f_i zeta(a_i, a+b-a_i).
//
// Four independent routes produce S(a, b):
//   * solve_initial: partial fractions of Delta_1(a, b) at t = 0,
//   * relation_by_recursion: seed + increments of period r_a,
//   * closed_formula_general / closed_formula_q2: explicit sums of binomials,
//   * closed_formula_symmetric: the two-sided H_{a,b} + H_{b,a} formula.
// verify_depth and verify_zeta check a produced set independently.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fqzeta/combinatorics.hpp"
#include "fqzeta/error.hpp"
#include "fqzeta/finite_field.hpp"
#include "fqzeta/laurent.hpp"
#include "fqzeta/poly.hpp"
#include "fqzeta/powersums.hpp"
#include "fqzeta/ratfunc.hpp"

namespace fqzeta {

struct RelationTerm {
  FpCoeff coeff;
  std::int64_t index = 0;

  friend bool operator==(const RelationTerm&, const RelationTerm&) = default;
};

struct RelationSet {
  int q = 2;
  int p = 2;
  std::int64_t a = 1;
  std::int64_t b = 1;
  std::vector<RelationTerm> terms;  // strictly descending index, nonzero coefficients

  std::int64_t weight() const noexcept { return a + b; }
  bool empty() const noexcept { return terms.empty(); }

  friend bool operator==(const RelationSet&, const RelationSet&) = default;

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (i) out += ", ";
      out += "(" + std::to_string(terms[i].coeff.value) + "," + std::to_string(terms[i].index) + ")";
    }
    return out + "}";
  }
};

enum class Method { Initial, Recursion, Closed, ClosedQ2, Symmetric };

constexpr std::string_view method_name(Method m) noexcept {
  switch (m) {
    case Method::Initial: return "initial";
    case Method::Recursion: return "recursion";
    case Method::Closed: return "closed";
    case Method::ClosedQ2: return "closed-q2";
    case Method::Symmetric: return "symmetric";
  }
  return "?";
}

/// Methods that apply to a field of size q, in report order.
inline std::vector<Method> applicable_methods(int q) {
  std::vector<Method> ms{Method::Initial, Method::Recursion, Method::Closed, Method::Symmetric};
  if (q == 2) ms.push_back(Method::ClosedQ2);
  return ms;
}

/// Sorts by descending index, sums coefficients of equal indices in F_p and
/// drops zeros.
inline std::vector<RelationTerm> normalize_terms(std::vector<RelationTerm> terms, int p) {
  std::map<std::int64_t, int, std::greater<>> acc;
  for (const auto& t : terms) acc[t.index] = (acc[t.index] + t.coeff.value) % p;
  std::vector<RelationTerm> out;
  for (const auto& [idx, c] : acc)
    if (c != 0) out.push_back({FpCoeff{c}, idx});
  return out;
}

inline RelationSet make_relation_set(const Field& field, std::int64_t a, std::int64_t b, std::vector<RelationTerm> terms) {
  return RelationSet{field.q(), field.p(), a, b, normalize_terms(std::move(terms), field.p())};
}

namespace detail {

inline void check_ab(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw Error(Errc::InvalidArgument, "relation indices must be positive");
}

// Visits every (q-1)-tuple k = (k_1, ..., k_{q-1}) of nonnegative integers
// with sum n whose multinomial coefficient is nonzero mod p. Tuples with a
// vanishing coefficient are pruned part by part (Lucas: a carry kills it).
template <class Fn>
void for_each_composition(std::int64_t n, int parts, int p, Fn&& fn) {
  std::vector<std::int64_t> k(parts, 0);
  std::function<void(int, std::int64_t, int)> rec = [&](int pos, std::int64_t remaining, int coeff) {
    if (pos == parts - 1) {
      k[pos] = remaining;
      fn(static_cast<const std::vector<std::int64_t>&>(k), FpCoeff{coeff});
      return;
    }
    for (std::int64_t x = 0; x <= remaining; ++x) {
      const int c = lucas_binom(remaining, x, p).value;
      if (c == 0) continue;
      k[pos] = x;
      rec(pos + 1, remaining - x, coeff * c % p);
    }
  };
  rec(0, n, 1 % p);
}

inline std::int64_t smallest_power_at_least(std::int64_t n, int p) {
  std::int64_t pm = 1;
  while (pm < n) pm = checked_mul(pm, p);
  return pm;
}

}  // namespace detail

// sigma and tau for the one-sided closed formula; k[j-1] holds k_j.
inline std::int64_t sigma_closed(const std::vector<std::int64_t>& k) {
  std::int64_t s = 0;
  for (std::size_t j = 2; j <= k.size(); ++j) s += static_cast<std::int64_t>(j - 1) * k[j - 1];
  return s;
}

inline std::int64_t tau_closed(const std::vector<std::int64_t>& k, int q) {
  std::int64_t s = 0;
  for (int j = 1; j <= q - 2; ++j) s += static_cast<std::int64_t>(q - 1 - j) * k[j - 1];
  return s;
}

// sigma for the symmetric formula: sum_{j=1}^{q-1} j k_j, with k[j-1] = k_j.
inline std::int64_t sigma_symmetric(const std::vector<std::int64_t>& k) {
  std::int64_t s = 0;
  for (std::size_t j = 1; j <= k.size(); ++j) s += static_cast<std::int64_t>(j) * k[j - 1];
  return s;
}

/// True when every index c satisfies (q-1) | (a + b - c).
inline bool satisfies_parity(const RelationSet& rs) {
  for (const auto& t : rs.terms)
    if ((rs.a + rs.b - t.index) % (rs.q - 1) != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// g_t and recursion increments

/// g_t = 1 + sum_{j=1}^{p^m-a} f_{a,j} t^{r_a - (j + i_j p^m)}.
inline Poly g_poly(std::int64_t a, const FieldPtr& field) {
  const IndexProfile prof = index_profile(a, *field);
  std::vector<FieldElem> c(static_cast<std::size_t>(prof.r_a + 1), Field::zero());
  c[0] = Field::one();
  for (std::int64_t j = 1; j <= prof.p_m - a; ++j) {
    const FpCoeff f = f_aj(prof, j);
    if (f.value == 0) continue;
    const std::int64_t e = prof.r_a - (j + i_of_j(prof, j) * prof.p_m);
    c[static_cast<std::size_t>(e)] = field->add(c[static_cast<std::size_t>(e)], field->from_int(f.value));
  }
  return Poly(field, std::move(c));
}

/// -(t^{q-1} - 1)^{p^m - a} [1]^a S_1(a), computed with rational functions.
/// Throws InvalidArgument if the result is not a polynomial.
inline Poly g_poly_direct(std::int64_t a, PowerSums& ps) {
  const FieldPtr& field = ps.field();
  const IndexProfile prof = index_profile(a, *field);
  const Poly tq1 = Poly::monomial(field, Field::one(), static_cast<std::size_t>(field->q() - 1)) - Poly::one(field);
  const RatFunc value = RatFunc(-tq1.pow(static_cast<std::uint64_t>(prof.p_m - a)) *
                                bracket(1, field).pow(static_cast<std::uint64_t>(a))) *
                        ps.S(1, static_cast<int>(a));
  if (!value.is_polynomial()) throw Error(Errc::InvalidArgument, "g_t is not a polynomial");
  return value.num();
}

/// T(a, b + r_a): the t_a terms added when b grows by r_a, with indices
/// a + b + (j + i_j p^m).
inline std::vector<RelationTerm> recursion_increment(std::int64_t a, std::int64_t b, const Field& field) {
  detail::check_ab(a, b);
  const IndexProfile prof = index_profile(a, field);
  std::vector<RelationTerm> out;
  for (std::int64_t j = 0; j <= prof.p_m - a; ++j) {
    const FpCoeff f = f_aj(prof, j);
    if (f.value == 0) continue;
    out.push_back({f, a + b + j + i_of_j(prof, j) * prof.p_m});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.index > y.index; });
  return out;
}

/// T_a = {(f_{a,j}, phi(l_j))}, the b-independent form of the increment.
inline std::vector<RelationTerm> increment_phi_form(std::int64_t a, const Field& field) {
  const IndexProfile prof = index_profile(a, field);
  std::vector<RelationTerm> out;
  for (std::int64_t j = 0; j <= prof.p_m - a; ++j) {
    const FpCoeff f = f_aj(prof, j);
    if (f.value == 0) continue;
    out.push_back({f, phi(prof, l_of_j(prof, j))});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.index > y.index; });
  return out;
}

// ---------------------------------------------------------------------------
// Method 1: partial fractions at t = 0

/// h_0 = ([1]^n Delta_1(a,b)) * ([1]^n / t^n)^{-1} mod t^n with n = a + b; the
/// coefficient of t^k in h_0 is the coefficient of S_1(n - k).
inline RelationSet solve_initial(PowerSums& ps, std::int64_t a, std::int64_t b) {
  detail::check_ab(a, b);
  const FieldPtr& field = ps.field();
  if (a == b && field->p() == 2) return make_relation_set(*field, a, b, {});
  const std::int64_t n = a + b;
  const auto un = static_cast<std::uint64_t>(n);
  const RatFunc delta = ps.delta(1, static_cast<int>(a), static_cast<int>(b));
  const RatFunc scaled = delta * RatFunc(bracket(1, field).pow(un));
  if (!scaled.is_polynomial()) throw Error(Errc::InvalidArgument, "[1]^n Delta_1(a,b) is not a polynomial");
  // [1]/t = t^{q-1} - 1
  const Poly unit = Poly::monomial(field, Field::one(), static_cast<std::size_t>(field->q() - 1)) - Poly::one(field);
  const auto inv = series_at_zero(RatFunc(Poly::one(field), unit.pow(un)), static_cast<std::size_t>(n));
  const auto x = series_at_zero(scaled, static_cast<std::size_t>(n));
  const Poly h0 = (Poly(field, x) * Poly(field, inv)).truncated(static_cast<std::size_t>(n));
  std::vector<RelationTerm> terms;
  for (std::int64_t k = 0; k < n; ++k) {
    const FieldElem c = h0.coeff(static_cast<std::size_t>(k));
    if (c == Field::zero()) continue;
    if (!field->in_prime_field(c))
      throw Error(Errc::CoefficientNotInPrimeField,
                  "coefficient of S_1(" + std::to_string(n - k) + ") in Delta_1(" + std::to_string(a) + "," + std::to_string(b) + ")");
    terms.push_back({FpCoeff{c.v}, n - k});
  }
  return make_relation_set(*field, a, b, std::move(terms));
}

// ---------------------------------------------------------------------------
// Method 2: recursion with period r_a

inline RelationSet relation_by_recursion(PowerSums& ps, std::int64_t a, std::int64_t b) {
  detail::check_ab(a, b);
  const Field& field = *ps.field();
  const IndexProfile prof = index_profile(a, field);
  const std::int64_t r = prof.r_a;
  const std::int64_t b0 = (b - 1) % r + 1;
  const std::int64_t steps = (b - b0) / r;
  std::vector<RelationTerm> terms = solve_initial(ps, a, b0).terms;
  for (std::int64_t step = 0; step < steps; ++step) {
    const std::int64_t cur = b0 + step * r;
    for (const auto& t : recursion_increment(a, cur, field)) {
      for (const auto& old : terms)
        if (old.index == t.index)
          throw Error(Errc::IndexCollision, "index " + std::to_string(t.index) + " appears twice while extending S(" +
                                                std::to_string(a) + "," + std::to_string(cur) + ")");
      terms.push_back(t);
    }
  }
  return make_relation_set(field, a, b, std::move(terms));
}

// ---------------------------------------------------------------------------
// Method 3: one-sided closed formulas

/// f(t) = sum over (i_3, k, i_1, i_2) of
///   binom(p^m-a, i_3) multinom(a; k) binom(a-b, i_1) binom(sigma+i_1, i_2)
///   (-1)^{b+i_1+i_3} t^{i_2 + i_3(q-1)}
/// with (q-1) | sigma+i_1-i_2 > 0, (q-1) | tau+a-b-i_1 and exponent < a; then
/// Delta_1(a, b) = sum_i f_i S_1(a - i). For a < b the roles are swapped.
inline RelationSet closed_formula_general(const Field& field, std::int64_t a, std::int64_t b) {
  detail::check_ab(a, b);
  if (a == b && field.p() == 2) return make_relation_set(field, a, b, {});
  const std::int64_t big = std::max(a, b), small = std::min(a, b);
  const int p = field.p();
  const int q = field.q();
  const std::int64_t qm1 = q - 1;
  const std::int64_t pm = detail::smallest_power_at_least(big, p);
  const std::int64_t diff = big - small;
  const auto len = static_cast<std::size_t>(big);

  std::vector<int> inner(len, 0);  // coefficient of t^{i_2} before the (t^{q-1}-1) factor
  detail::for_each_composition(big, q - 1, p, [&](const std::vector<std::int64_t>& k, FpCoeff multinom) {
    const std::int64_t sigma = sigma_closed(k);
    const std::int64_t tau = tau_closed(k, q);
    for (std::int64_t i1 = 0; i1 <= diff; ++i1) {
      if ((tau + diff - i1) % qm1 != 0) continue;
      const int c1 = lucas_binom(diff, i1, p).value;
      if (c1 == 0) continue;
      const std::int64_t e = sigma + i1;
      const int sign = sign_mod_p(small + i1, p).value;
      const int base = multinom.value * c1 % p * sign % p;
      for (std::int64_t i2 = e % qm1; i2 < e && i2 < big; i2 += qm1) {
        const int c2 = lucas_binom(e, i2, p).value;
        if (c2 == 0) continue;
        inner[static_cast<std::size_t>(i2)] = (inner[static_cast<std::size_t>(i2)] + base * c2) % p;
      }
    }
  });

  const std::int64_t outer_deg = pm - big;
  std::vector<int> f(len, 0);
  for (std::int64_t i3 = 0; i3 <= outer_deg && i3 * qm1 < big; ++i3) {
    const int c3 = lucas_binom(outer_deg, i3, p).value * sign_mod_p(i3, p).value % p;
    if (c3 == 0) continue;
    const std::int64_t shift = i3 * qm1;
    for (std::int64_t i2 = 0; i2 + shift < big; ++i2)
      f[static_cast<std::size_t>(i2 + shift)] = (f[static_cast<std::size_t>(i2 + shift)] + c3 * inner[static_cast<std::size_t>(i2)]) % p;
  }

  std::vector<RelationTerm> terms;
  for (std::int64_t i = 0; i < big; ++i)
    if (f[static_cast<std::size_t>(i)] != 0) terms.push_back({FpCoeff{f[static_cast<std::size_t>(i)]}, big - i});
  return make_relation_set(field, a, b, std::move(terms));
}

/// q = 2 only: f_k = sum_{i+j=k, i <= 2^m-a, j <= a-b-1} binom(2^m-a, i) binom(a-b, j) mod 2
/// for a > b, and Delta_1(a, b) = sum_k f_k S_1(a - k).
inline RelationSet closed_formula_q2(const Field& field, std::int64_t a, std::int64_t b) {
  detail::check_ab(a, b);
  if (field.q() != 2) throw Error(Errc::QNotTwo, "closed_formula_q2 needs q = 2, got " + std::to_string(field.q()));
  if (a == b) return make_relation_set(field, a, b, {});
  const std::int64_t big = std::max(a, b), small = std::min(a, b);
  const std::int64_t pm = detail::smallest_power_at_least(big, 2);
  std::vector<RelationTerm> terms;
  for (std::int64_t k = 0; k < big; ++k) {
    int fk = 0;
    for (std::int64_t i = 0; i <= std::min(k, pm - big); ++i) {
      const std::int64_t j = k - i;
      if (j > big - small - 1) continue;
      fk ^= lucas_binom(pm - big, i, 2).value & lucas_binom(big - small, j, 2).value;
    }
    if (fk) terms.push_back({FpCoeff{1}, big - k});
  }
  return make_relation_set(field, a, b, std::move(terms));
}

// ---------------------------------------------------------------------------
// Method 4: symmetric closed formula

/// Coefficients of H_{x,y}(t), t^0 .. t^{y-1}:
///   sum_{j, k} binom(p^m - x, j) multinom(x; k) (-1)^{x+j+1} t^{j(q-1) + sigma(k) - x}
/// over (q-1) | sigma(k) and j(q-1) + sigma(k) < x + y, where p^m >= x + y.
inline std::vector<int> symmetric_H(const Field& field, std::int64_t x, std::int64_t y) {
  const int p = field.p();
  const int q = field.q();
  const std::int64_t qm1 = q - 1;
  const std::int64_t pm = detail::smallest_power_at_least(x + y, p);
  const std::int64_t outer = pm - x;
  std::vector<int> h(static_cast<std::size_t>(y), 0);
  detail::for_each_composition(x, q - 1, p, [&](const std::vector<std::int64_t>& k, FpCoeff multinom) {
    const std::int64_t sigma = sigma_symmetric(k);
    if (sigma % qm1 != 0) return;
    for (std::int64_t j = 0; j <= outer && j * qm1 + sigma < x + y; ++j) {
      const int c = lucas_binom(outer, j, p).value;
      if (c == 0) continue;
      const auto e = static_cast<std::size_t>(j * qm1 + sigma - x);
      h[e] = (h[e] + c * multinom.value % p * sign_mod_p(x + j + 1, p).value) % p;
    }
  });
  return h;
}

/// Delta_1(a, b) = sum_i f_i S_1(b - i) + sum_j g_j S_1(a - j) with f = H_{a,b},
/// g = H_{b,a}; coinciding indices are summed.
inline RelationSet closed_formula_symmetric(const Field& field, std::int64_t a, std::int64_t b) {
  detail::check_ab(a, b);
  std::vector<RelationTerm> terms;
  const auto f = symmetric_H(field, a, b);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i]) terms.push_back({FpCoeff{f[i]}, b - static_cast<std::int64_t>(i)});
  const auto g = symmetric_H(field, b, a);
  for (std::size_t j = 0; j < g.size(); ++j)
    if (g[j]) terms.push_back({FpCoeff{g[j]}, a - static_cast<std::int64_t>(j)});
  return make_relation_set(field, a, b, std::move(terms));
}

inline RelationSet compute_relation(PowerSums& ps, std::int64_t a, std::int64_t b, Method method) {
  switch (method) {
    case Method::Initial: return solve_initial(ps, a, b);
    case Method::Recursion: return relation_by_recursion(ps, a, b);
    case Method::Closed: return closed_formula_general(*ps.field(), a, b);
    case Method::ClosedQ2: return closed_formula_q2(*ps.field(), a, b);
    case Method::Symmetric: return closed_formula_symmetric(*ps.field(), a, b);
  }
  throw Error(Errc::InvalidArgument, "unknown method");
}

// ---------------------------------------------------------------------------
// Verification

namespace detail {
inline void check_relset_field(const RelationSet& rs, const Field& field) {
  if (rs.q != field.q()) throw Error(Errc::FieldMismatch, "relation set for q = " + std::to_string(rs.q));
  for (const auto& t : rs.terms)
    if (t.index < 1 || t.index >= rs.weight())
      throw Error(Errc::InvalidArgument, "term index " + std::to_string(t.index) + " outside [1, a+b-1]");
}
}  // namespace detail

/// Exact check of Delta_d(a, b) = sum f_i S_d(a_i, a+b-a_i). Both sides are
/// brought over the common denominator L_d^{a+b}, so the comparison is a
/// polynomial identity.
inline bool verify_depth(PowerSums& ps, const RelationSet& rs, int d) {
  const Field& field = *ps.field();
  detail::check_relset_field(rs, field);
  if (d < 0) throw Error(Errc::InvalidArgument, "negative depth");
  // S_0 = 1 and the inner sum of S_0(x, y) is empty: both sides vanish.
  if (d == 0) return true;
  const int a = static_cast<int>(rs.a), b = static_cast<int>(rs.b), w = a + b;
  const Poly lhs = ps.numerator(d, a) * ps.numerator(d, b) - ps.numerator(d, w);
  Poly rhs(ps.field());
  for (const auto& t : rs.terms) {
    const int ai = static_cast<int>(t.index);
    rhs += (ps.numerator(d, ai) * ps.lower_numerator(d, w - ai)).scaled(field.from_int(t.coeff.value));
  }
  return lhs == rhs;
}

/// The same check done with reduced rational functions and the memoized
/// nested sums. Slower; kept as a second route.
inline bool verify_depth_direct(PowerSums& ps, const RelationSet& rs, int d) {
  const Field& field = *ps.field();
  detail::check_relset_field(rs, field);
  const int a = static_cast<int>(rs.a), b = static_cast<int>(rs.b), w = a + b;
  const RatFunc lhs = ps.delta(d, a, b);
  RatFunc rhs(ps.field());
  for (const auto& t : rs.terms) {
    const int tuple[2] = {static_cast<int>(t.index), w - static_cast<int>(t.index)};
    rhs += ps.S_depth(d, tuple).scaled(field.from_int(t.coeff.value));
  }
  return lhs == rhs;
}

struct ZetaTerm {
  FpCoeff coeff;
  MultizetaKey key;

  friend bool operator==(const ZetaTerm&, const ZetaTerm&) = default;
};

/// zeta(a) zeta(b) = sum of rhs terms (depth <= 2, weight a + b).
struct ShuffleIdentity {
  int q = 2;
  int p = 2;
  std::int64_t a = 1;
  std::int64_t b = 1;
  std::vector<ZetaTerm> rhs;

  std::string to_string() const {
    std::string out = "zeta(" + std::to_string(a) + ")zeta(" + std::to_string(b) + ") =";
    bool first = true;
    for (const auto& t : rhs) {
      out += first ? " " : " + ";
      first = false;
      if (t.coeff.value != 1) out += std::to_string(t.coeff.value) + "*";
      out += "zeta(";
      for (std::size_t i = 0; i < t.key.tuple.size(); ++i) out += (i ? "," : "") + std::to_string(t.key.tuple[i]);
      out += ")";
    }
    if (first) out += " 0";
    return out;
  }
};

/// Builds the full identity from a relation set: zeta(a+b) + zeta(a,b) +
/// zeta(b,a) + sum f_i zeta(a_i, a+b-a_i), with equal tuples merged in F_p.
inline ShuffleIdentity shuffle_identity(const RelationSet& rs) {
  const int p = rs.p;
  std::map<std::vector<int>, int> acc;
  const int a = static_cast<int>(rs.a), b = static_cast<int>(rs.b);
  auto add = [&](std::vector<int> key, int c) { acc[std::move(key)] = (acc[key] + c) % p; };
  add({a + b}, 1);
  add({a, b}, 1);
  add({b, a}, 1);
  for (const auto& t : rs.terms) add({static_cast<int>(t.index), a + b - static_cast<int>(t.index)}, t.coeff.value);
  ShuffleIdentity id{rs.q, rs.p, rs.a, rs.b, {}};
  for (const auto& [key, c] : acc)
    if (c != 0) id.rhs.push_back({FpCoeff{c}, MultizetaKey{key}});
  std::sort(id.rhs.begin(), id.rhs.end(), [](const ZetaTerm& x, const ZetaTerm& y) {
    if (x.key.depth() != y.key.depth()) return x.key.depth() < y.key.depth();
    return x.key.tuple > y.key.tuple;
  });
  return id;
}

/// Identity for (a, b) using solve_initial as the reference relation set.
inline ShuffleIdentity shuffle_identity(PowerSums& ps, std::int64_t a, std::int64_t b) {
  return shuffle_identity(solve_initial(ps, a, b));
}

/// True iff zeta(a) zeta(b) - rhs vanishes through t^{-precision}.
inline bool verify_zeta(PowerSums& ps, const ShuffleIdentity& id, std::int64_t precision) {
  const FieldPtr& field = ps.field();
  if (id.q != field->q()) throw Error(Errc::FieldMismatch, "identity for q = " + std::to_string(id.q));
  const int za[1] = {static_cast<int>(id.a)};
  const int zb[1] = {static_cast<int>(id.b)};
  LaurentTail diff = ps.zeta(za, precision) * ps.zeta(zb, precision);
  for (const auto& t : id.rhs) diff -= ps.zeta(t.key, precision).scaled(field->from_int(t.coeff.value));
  return diff.precision() >= precision && diff.lead_exponent() > precision;
}

}  // namespace fqzeta

#endif  // FQZETA_RELATIONS_HPP
