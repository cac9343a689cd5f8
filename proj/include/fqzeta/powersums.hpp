#ifndef FQZETA_POWERSUMS_HPP
#define FQZETA_POWERSUMS_HPP

// Power sums S_d(s) over monic polynomials of degree d, their nested versions
// S_d(s_1, ..., s_r), the defect Delta_d(a, b) = S_d(a) S_d(b) - S_d(a+b), and
// truncated multizeta values in F_q((1/t)).
//
// Internally every S_d(s) is kept as N_{d,s} / L_d^s where L_d is the lcm of
// all monic polynomials of degree d. Because L_{d'} divides L_d for d' < d,
// identities between depth-d sums reduce to polynomial identities over the
// common denominator L_d^w.

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fqzeta/error.hpp"
#include "fqzeta/laurent.hpp"
#include "fqzeta/poly.hpp"
#include "fqzeta/ratfunc.hpp"

namespace fqzeta {

/// Key of a nested power sum S_d(s_1, ..., s_r).
struct PowerSumKey {
  int d = 0;
  std::vector<int> tuple;

  friend bool operator==(const PowerSumKey&, const PowerSumKey&) = default;
  friend auto operator<=>(const PowerSumKey&, const PowerSumKey&) = default;
};

/// A multizeta index (s_1, ..., s_r).
struct MultizetaKey {
  std::vector<int> tuple;

  int depth() const noexcept { return static_cast<int>(tuple.size()); }
  int weight() const noexcept { return std::accumulate(tuple.begin(), tuple.end(), 0); }

  friend bool operator==(const MultizetaKey&, const MultizetaKey&) = default;
  friend auto operator<=>(const MultizetaKey&, const MultizetaKey&) = default;
};

namespace detail {

inline void check_tuple(std::span<const int> tuple) {
  if (tuple.empty()) throw Error(Errc::InvalidArgument, "empty exponent tuple");
  for (int s : tuple)
    if (s < 1) throw Error(Errc::InvalidArgument, "exponents must be positive");
}

// base^0, base^1, ... computed on demand by repeated multiplication.
class PowerLadder {
 public:
  PowerLadder() = default;
  explicit PowerLadder(Poly base) : base_(std::move(base)) { pw_.push_back(Poly::one(base_.field())); }

  const Poly& get(std::size_t e) {
    while (pw_.size() <= e) pw_.push_back(pw_.back() * base_);
    return pw_[e];
  }

 private:
  Poly base_;
  std::vector<Poly> pw_;
};

}  // namespace detail

/// Smallest D such that every multizeta term with d_1 > D has 1/t-valuation
/// above `precision`. Uses v(S_d(s)) >= s*d + q^d - 1 for d >= 1: the sum over
/// the lower coefficients kills every term of the 1/t-expansion of 1/a^s whose
/// power of the lower part is below q^d - 1.
inline int zeta_truncation_degree(int s1, int q, std::int64_t precision) {
  int d = 0;
  for (;;) {
    const int next = d + 1;
    std::int64_t qd = 1;
    for (int i = 0; i < next; ++i) {
      qd *= q;
      if (qd > precision + 1) break;
    }
    if (static_cast<std::int64_t>(s1) * next + qd - 1 > precision) return d;
    d = next;
  }
}

/// Cached power-sum engine for one field. All public members are safe to call
/// from several threads; the caches are guarded by one mutex and results do
/// not depend on call order.
class PowerSums {
 public:
  explicit PowerSums(FieldPtr field, EnumerationBudget budget = {}) : field_(std::move(field)), budget_(budget) {}

  const FieldPtr& field() const noexcept { return field_; }
  const EnumerationBudget& budget() const noexcept { return budget_; }

  /// L_d, the lcm of the monic polynomials of degree d.
  Poly denominator_base(int d) {
    std::lock_guard lock(mu_);
    return degree_data(d).lcm;
  }

  /// N_{d,s} with S_d(s) = N_{d,s} / L_d^s (not reduced). s = 0 is allowed.
  Poly numerator(int d, int s) {
    std::lock_guard lock(mu_);
    return numerator_locked(d, s);
  }

  /// M_{d,s} with sum_{d' < d} S_{d'}(s) = M_{d,s} / L_d^s.
  Poly lower_numerator(int d, int s) {
    std::lock_guard lock(mu_);
    return lower_numerator_locked(d, s);
  }

  /// S_d(s) as a reduced rational function.
  RatFunc S(int d, int s) {
    std::lock_guard lock(mu_);
    return S_locked(d, s);
  }

  /// S_d(s_1, ..., s_r), memoized over (d, suffix).
  RatFunc S_depth(int d, std::span<const int> tuple) {
    detail::check_tuple(tuple);
    std::lock_guard lock(mu_);
    return S_depth_locked(d, std::vector<int>(tuple.begin(), tuple.end()));
  }

  /// Same value as S_depth, recomputed from scratch by summing 1/a^s over the
  /// monic polynomials with rational-function arithmetic and no caching.
  RatFunc S_depth_uncached(int d, std::span<const int> tuple) const {
    detail::check_tuple(tuple);
    RatFunc head = brute_S(d, tuple[0]);
    if (tuple.size() == 1) return head;
    RatFunc inner(field_);
    for (int dd = 0; dd < d; ++dd) inner += S_depth_uncached(dd, tuple.subspan(1));
    return head * inner;
  }

  /// Delta_d(a, b) = S_d(a) S_d(b) - S_d(a + b).
  RatFunc delta(int d, int a, int b) {
    if (a < 1 || b < 1) throw Error(Errc::InvalidArgument, "Delta_d needs positive exponents");
    std::lock_guard lock(mu_);
    return S_locked(d, a) * S_locked(d, b) - S_locked(d, a + b);
  }

  /// Partial sum of the multizeta value over d_1 <= D, with D chosen so the
  /// result is exact through t^{-precision}. The returned tail carries that
  /// precision.
  LaurentTail zeta(std::span<const int> tuple, std::int64_t precision) {
    detail::check_tuple(tuple);
    if (precision < 1) throw Error(Errc::InvalidArgument, "zeta precision must be >= 1");
    const int max_d = zeta_truncation_degree(tuple[0], field_->q(), precision);
    return zeta_partial(tuple, max_d, precision);
  }

  /// Sum over d_1 <= max_d of S_{d_1}(s_1) ... S_{d_r}(s_r) expanded in 1/t.
  LaurentTail zeta_partial(std::span<const int> tuple, int max_d, std::int64_t precision) {
    detail::check_tuple(tuple);
    checked_monic_count(max_d, field_->q(), budget_);
    std::lock_guard lock(mu_);
    // level[k][d] = expansion of S_d(s_k, ..., s_r)
    const std::size_t r = tuple.size();
    std::vector<std::vector<LaurentTail>> level(r);
    for (std::size_t k = r; k-- > 0;) {
      level[k].reserve(max_d + 1);
      LaurentTail below = LaurentTail::zero(field_, precision);
      for (int d = 0; d <= max_d; ++d) {
        LaurentTail head = laurent_locked(d, tuple[k], precision);
        if (k + 1 < r) {
          head = (head * below).truncated(precision);
          below += level[k + 1][d];
        }
        level[k].push_back(std::move(head));
      }
    }
    LaurentTail total = LaurentTail::zero(field_, precision);
    for (const auto& x : level[0]) total += x;
    return total;
  }

  LaurentTail zeta(const MultizetaKey& key, std::int64_t precision) { return zeta(std::span<const int>(key.tuple), precision); }

 private:
  struct DegreeData {
    Poly lcm;
    std::vector<detail::PowerLadder> cofactor_powers;  // (L_d / a)^k per monic a
    std::vector<Poly> numerators;                       // N_{d,s}, s = 0, 1, ...
    std::vector<detail::PowerLadder> ratio_powers;      // (L_d / L_{d'})^k, d' < d
    std::map<int, Poly> lower;                          // M_{d,s}
  };

  DegreeData& degree_data(int d) {
    if (d < 0) throw Error(Errc::InvalidArgument, "negative degree");
    auto it = data_.find(d);
    if (it != data_.end()) return it->second;
    MonicPolys monics(d, field_, budget_);
    DegreeData dd;
    dd.lcm = Poly::one(field_);
    for (const Poly& a : monics) {
      const Poly g = gcd(dd.lcm, a);
      dd.lcm = dd.lcm * (a / g);
    }
    dd.cofactor_powers.reserve(monics.size());
    for (const Poly& a : monics) dd.cofactor_powers.emplace_back(exact_div(dd.lcm, a));
    return data_.emplace(d, std::move(dd)).first->second;
  }

  const Poly& numerator_locked(int d, int s) {
    if (s < 0) throw Error(Errc::InvalidArgument, "negative exponent");
    DegreeData& dd = degree_data(d);
    while (static_cast<int>(dd.numerators.size()) <= s) {
      const auto k = dd.numerators.size();
      Poly sum(field_);
      for (auto& ladder : dd.cofactor_powers) sum += ladder.get(k);
      dd.numerators.push_back(std::move(sum));
    }
    return dd.numerators[static_cast<std::size_t>(s)];
  }

  const Poly& lower_numerator_locked(int d, int s) {
    DegreeData& dd = degree_data(d);
    auto it = dd.lower.find(s);
    if (it != dd.lower.end()) return it->second;
    if (dd.ratio_powers.empty())
      for (int dl = 0; dl < d; ++dl) dd.ratio_powers.emplace_back(exact_div(dd.lcm, degree_data(dl).lcm));
    Poly sum(field_);
    for (int dl = 0; dl < d; ++dl) sum += numerator_locked(dl, s) * dd.ratio_powers[dl].get(static_cast<std::size_t>(s));
    return dd.lower.emplace(s, std::move(sum)).first->second;
  }

  RatFunc S_locked(int d, int s) {
    const auto key = std::make_pair(d, s);
    auto it = s_cache_.find(key);
    if (it != s_cache_.end()) return it->second;
    const Poly num = numerator_locked(d, s);
    RatFunc value(num, degree_data(d).lcm.pow(static_cast<std::uint64_t>(s)));
    return s_cache_.emplace(key, std::move(value)).first->second;
  }

  // Z_d(tuple) = sum_{d' < d} S_{d'}(tuple)
  RatFunc lower_sum_locked(int d, const std::vector<int>& tuple) {
    if (d <= 0) return RatFunc(field_);
    PowerSumKey key{d, tuple};
    auto it = z_cache_.find(key);
    if (it != z_cache_.end()) return it->second;
    RatFunc value = lower_sum_locked(d - 1, tuple) + S_depth_locked(d - 1, tuple);
    return z_cache_.emplace(std::move(key), std::move(value)).first->second;
  }

  RatFunc S_depth_locked(int d, const std::vector<int>& tuple) {
    if (tuple.size() == 1) return S_locked(d, tuple[0]);
    PowerSumKey key{d, tuple};
    auto it = depth_cache_.find(key);
    if (it != depth_cache_.end()) return it->second;
    const std::vector<int> tail(tuple.begin() + 1, tuple.end());
    RatFunc value = S_locked(d, tuple[0]) * lower_sum_locked(d, tail);
    return depth_cache_.emplace(std::move(key), std::move(value)).first->second;
  }

  LaurentTail laurent_locked(int d, int s, std::int64_t precision) {
    const auto key = std::make_tuple(d, s, precision);
    auto it = laurent_cache_.find(key);
    if (it != laurent_cache_.end()) return it->second;
    LaurentTail value = laurent_at_infinity(S_locked(d, s), precision);
    return laurent_cache_.emplace(key, std::move(value)).first->second;
  }

  RatFunc brute_S(int d, int s) const {
    RatFunc sum(field_);
    for (const Poly& a : MonicPolys(d, field_, budget_)) sum += RatFunc(Poly::one(field_), a.pow(static_cast<std::uint64_t>(s)));
    return sum;
  }

  FieldPtr field_;
  EnumerationBudget budget_;
  std::mutex mu_;
  std::map<int, DegreeData> data_;
  std::map<std::pair<int, int>, RatFunc> s_cache_;
  std::map<PowerSumKey, RatFunc> depth_cache_;
  std::map<PowerSumKey, RatFunc> z_cache_;
  std::map<std::tuple<int, int, std::int64_t>, LaurentTail> laurent_cache_;
};

// Convenience wrappers that spin up a one-shot engine.

inline RatFunc S_d(int d, int s, const FieldPtr& field, EnumerationBudget budget = {}) {
  PowerSums ps(field, budget);
  return ps.S(d, s);
}

inline RatFunc S_d_depth(int d, std::span<const int> tuple, const FieldPtr& field, EnumerationBudget budget = {}) {
  PowerSums ps(field, budget);
  return ps.S_depth(d, tuple);
}

inline RatFunc Delta_d(int d, int a, int b, const FieldPtr& field, EnumerationBudget budget = {}) {
  PowerSums ps(field, budget);
  return ps.delta(d, a, b);
}

inline LaurentTail zeta_truncated(std::span<const int> tuple, const FieldPtr& field, std::int64_t precision,
                                  EnumerationBudget budget = {}) {
  PowerSums ps(field, budget);
  return ps.zeta(tuple, precision);
}

}  // namespace fqzeta

#endif  // FQZETA_POWERSUMS_HPP
