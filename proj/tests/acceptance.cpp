#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fqzeta/fqzeta.hpp"

using namespace fqzeta;

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<RelationTerm> ones(const std::vector<std::int64_t>& indices) {
  std::vector<RelationTerm> out;
  for (auto i : indices) out.push_back({FpCoeff{1}, i});
  return out;
}

// Coefficient vector f_0..f_{a-1} with Delta(a,b) = sum f_k S_1(a-k).
std::vector<int> dense_f(const RelationSet& rs) {
  std::vector<int> f(static_cast<std::size_t>(rs.a), 0);
  for (const auto& t : rs.terms)
    if (t.index <= rs.a) f[static_cast<std::size_t>(rs.a - t.index)] = t.coeff.value;
  return f;
}

bool only_low_indices(const RelationSet& rs) {
  for (const auto& t : rs.terms)
    if (t.index > rs.a) return false;
  return true;
}

bool criterion1(std::string& detail) {
  const auto g17 = g_poly(17, make_field_q(9)).to_string();
  const auto g19 = g_poly(19, make_field_q(2)).to_string();
  detail = "g(17,q=9) = " + g17 + "; g(19,q=2) = " + g19;
  return g17 == "1 + 2*t^72 + 2*t^80 + t^152" && g19 == "1 + t^19 + t^20 + t^23 + t^24 + t^27 + t^28 + t^31";
}

bool criterion2(std::string& detail) {
  auto field = make_field_q(2);
  PowerSums ps(field);
  const auto expected = ones({20, 16, 12, 8});
  bool ok = true;
  for (Method m : applicable_methods(2)) {
    const auto rs = compute_relation(ps, 19, 20, m);
    detail += std::string(method_name(m)) + "=" + rs.to_string() + " ";
    ok = ok && rs.terms == expected;
  }
  return ok;
}

bool criterion3(std::string& detail) {
  auto field = make_field_q(2);
  bool ok = true;
  for (std::int64_t b : {1, 4, 20}) {
    std::vector<std::int64_t> k;
    for (const auto& t : recursion_increment(19, b, *field)) {
      ok = ok && t.coeff.value == 1;
      k.push_back(t.index - b);
    }
    std::sort(k.begin(), k.end());
    ok = ok && k == std::vector<std::int64_t>{19, 20, 23, 24, 27, 28, 31, 32};
  }
  detail = "b in {1,4,20}";
  return ok;
}

// Criteria 4 and 7 share the sweep.
bool criteria4and7(std::string& d4, std::string& d7, bool& ok7) {
  std::size_t pairs = 0, mismatches = 0, parity_violations = 0;
  for (int q : {2, 3, 4, 5}) {
    auto field = make_field_q(q);
    PowerSums ps(field);
    for (std::int64_t a = 1; a <= 30; ++a)
      for (std::int64_t b = 1; b <= a; ++b) {
        ++pairs;
        const auto ref = solve_initial(ps, a, b);
        for (Method m : applicable_methods(q))
          if (compute_relation(ps, a, b, m) != ref) ++mismatches;
        for (const auto& t : ref.terms)
          if ((b + (a - t.index)) % (q - 1) != 0) ++parity_violations;
      }
  }
  d4 = std::to_string(pairs) + " pairs, " + std::to_string(mismatches) + " mismatches";
  d7 = std::to_string(parity_violations) + " violations";
  ok7 = parity_violations == 0;
  return mismatches == 0;
}

bool criterion5(std::string& detail) {
  std::size_t checks = 0, failures = 0;
  for (int q : {2, 3}) {
    auto field = make_field_q(q);
    PowerSums ps(field);
    for (std::int64_t a = 1; a <= 29; ++a)
      for (std::int64_t b = 1; b <= a && a + b <= 30; ++b) {
        const auto rs = solve_initial(ps, a, b);
        for (int d = 1; d <= 3; ++d) {
          ++checks;
          if (!verify_depth(ps, rs, d)) ++failures;
        }
      }
  }
  detail = std::to_string(checks) + " checks, " + std::to_string(failures) + " failures";
  return failures == 0;
}

bool criterion6(std::string& detail) {
  bool ok = true;
  int checked = 0;
  auto note = [&](bool cond, const std::string& what) {
    ++checked;
    if (!cond) {
      ok = false;
      detail += "failed: " + what + "; ";
    }
  };
  for (auto [q, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 1}, {3, 2}, {4, 1}, {5, 1}}) {
    auto field = make_field_q(q);
    PowerSums ps(field);
    const std::int64_t a = ipow(q, n);
    const auto rs = solve_initial(ps, a, a - 1);
    note(rs.terms == std::vector<RelationTerm>{{FpCoeff{field->p() - 1}, a}}, "S(q^n,q^n-1) q=" + std::to_string(q));
    note(ps.delta(1, static_cast<int>(a), static_cast<int>(a - 1)) == -ps.S(1, static_cast<int>(a)), "Delta = -S_1");
  }

  auto f2 = make_field_q(2);
  PowerSums ps(f2);
  for (int n = 1; n <= 4; ++n) {
    const std::int64_t N = ipow(2, n);
    // Family: Delta(2^n+1, 2^n-1), f_k = 1 for k < 2^n, f_{2^n} = 0.
    {
      const auto rs = closed_formula_q2(*f2, N + 1, N - 1);
      const auto f = dense_f(rs);
      bool good = only_low_indices(rs) && f[static_cast<std::size_t>(N)] == 0;
      for (std::int64_t k = 0; k < N; ++k) good = good && f[static_cast<std::size_t>(k)] == 1;
      note(good && rs == solve_initial(ps, N + 1, N - 1), "(2^n+1, 2^n-1) n=" + std::to_string(n));
    }
    // Family: Delta(2^n+1, 2^{n-1}).
    if (n >= 2) {
      const auto rs = closed_formula_q2(*f2, N + 1, N / 2);
      const auto f = dense_f(rs);
      bool good = only_low_indices(rs) && f[0] == 1 && f[static_cast<std::size_t>(N)] == 0;
      for (std::int64_t k = 1; k < N; ++k) good = good && f[static_cast<std::size_t>(k)] == (k >= N / 2 ? 1 : 0);
      note(good && rs == solve_initial(ps, N + 1, N / 2), "(2^n+1, 2^(n-1)) n=" + std::to_string(n));
    }
    // Family: a = 2^n, b < 2^n.
    for (std::int64_t b = 1; b < N; ++b) {
      const auto rs = closed_formula_q2(*f2, N, b);
      const auto f = dense_f(rs);
      bool good = only_low_indices(rs);
      for (std::int64_t k = 0; k < N; ++k)
        good = good && f[static_cast<std::size_t>(k)] == (k <= N - b - 1 ? lucas_binom(N - b, k, 2).value : 0);
      note(good && rs == solve_initial(ps, N, b), "(2^n, b) n=" + std::to_string(n) + " b=" + std::to_string(b));
    }
    // Family: b = a-1 with 2^{n-1} < a <= 2^n; nonzero count is t_a.
    for (std::int64_t a = N / 2 + 1; a <= N; ++a) {
      if (a < 2) continue;
      const auto rs = closed_formula_q2(*f2, a, a - 1);
      const auto f = dense_f(rs);
      bool good = only_low_indices(rs);
      for (std::int64_t k = 0; k < a; ++k)
        good = good && f[static_cast<std::size_t>(k)] == (k <= N - a ? lucas_binom(N - a, k, 2).value : 0);
      good = good && static_cast<std::int64_t>(rs.terms.size()) == index_profile(a, *f2).t_a;
      note(good && rs == solve_initial(ps, a, a - 1), "(a, a-1) a=" + std::to_string(a));
    }
    // Delta(2^n, 2^n - 1) = S(2^n, 2^n - 1) and Delta(2^n + 1, 2^n) = sum_{i=2}^{2^n+1} S(i, 2^{n+1}+1-i).
    if (n >= 2) note(solve_initial(ps, N, N - 1).terms == ones({N}), "S(2^n,2^n-1)");
    {
      std::vector<std::int64_t> idx;
      for (std::int64_t i = N + 1; i >= 2; --i) idx.push_back(i);
      note(solve_initial(ps, N + 1, N).terms == ones(idx), "S(2^n+1,2^n) n=" + std::to_string(n));
    }
  }
  detail = std::to_string(checked) + " structural checks" + (detail.empty() ? "" : "; " + detail);
  return ok;
}

bool criterion8(std::string& detail) {
  std::size_t checked = 0, failures = 0;
  for (int q : {2, 3, 4, 5, 9}) {
    auto field = make_field_q(q);
    for (std::int64_t a = 1; a <= 200; ++a) {
      const auto prof = index_profile(a, *field);
      std::int64_t nonzero = 0;
      for (std::int64_t j = 0; j <= prof.p_m - prof.a; ++j)
        if (f_aj(prof, j).value != 0) ++nonzero;
      ++checked;
      if (nonzero != prof.t_a) ++failures;
    }
  }
  detail = std::to_string(checked) + " values of a, " + std::to_string(failures) + " failures";
  return failures == 0;
}

bool criterion9(std::string& detail) {
  std::mt19937 rng(20240917);
  std::uniform_int_distribution<int> pick_q(0, 1), pick_ab(1, 8);
  int failures = 0;
  std::ostringstream cases;
  auto f2 = make_field_q(2), f3 = make_field_q(3);
  PowerSums ps2(f2), ps3(f3);
  for (int i = 0; i < 20; ++i) {
    const int q = pick_q(rng) ? 3 : 2;
    const int a = pick_ab(rng), b = pick_ab(rng);
    PowerSums& ps = q == 2 ? ps2 : ps3;
    const bool pass = verify_zeta(ps, shuffle_identity(ps, a, b), 40);
    cases << "(" << q << "," << a << "," << b << ")" << (pass ? "" : "!") << " ";
    if (!pass) ++failures;
  }
  detail = cases.str() + "failures " + std::to_string(failures);
  return failures == 0;
}

bool criterion10(std::string& detail) {
  const std::vector<std::tuple<int, int, int>> cases{{2, 19, 20}, {2, 9, 5}, {2, 16, 7}, {3, 3, 2}, {3, 7, 4},
                                                     {3, 10, 5}, {4, 5, 3}, {4, 9, 6}, {5, 7, 3}, {5, 11, 4}};
  std::size_t flips = 0, survived = 0;
  for (auto [q, a, b] : cases) {
    auto field = make_field_q(q);
    PowerSums ps(field);
    const int p = field->p();
    const auto rs = solve_initial(ps, a, b);
    if (!verify_depth(ps, rs, 1)) ++survived;
    // Every coordinate in [1, a+b-1], present or absent, changed to every other value.
    for (std::int64_t idx = 1; idx < a + b; ++idx) {
      int current = 0;
      for (const auto& t : rs.terms)
        if (t.index == idx) current = t.coeff.value;
      for (int v = 0; v < p; ++v) {
        if (v == current) continue;
        auto bad = rs;
        bad.terms.erase(std::remove_if(bad.terms.begin(), bad.terms.end(), [&](auto& t) { return t.index == idx; }),
                        bad.terms.end());
        if (v) bad.terms.push_back({FpCoeff{v}, idx});
        bad.terms = normalize_terms(bad.terms, p);
        ++flips;
        if (verify_depth(ps, bad, 1)) ++survived;
      }
    }
  }
  detail = std::to_string(cases.size()) + " cases, " + std::to_string(flips) + " single-coefficient changes, " +
           std::to_string(survived) + " accepted";
  return survived == 0;
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int id, bool pass, const std::string& detail, double seconds) {
    std::printf("[%s] criterion %d: %s (%.2fs)\n", pass ? "PASS" : "FAIL", id, detail.c_str(), seconds);
    std::fflush(stdout);
    if (!pass) ++failed;
  };
  auto timed = [&](int id, const std::function<bool(std::string&)>& fn) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
      pass = fn(detail);
    } catch (const std::exception& e) {
      detail += std::string(" exception: ") + e.what();
    }
    report(id, pass, detail, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  };

  timed(1, criterion1);
  timed(2, criterion2);
  timed(3, criterion3);
  {
    const auto start = std::chrono::steady_clock::now();
    std::string d4, d7;
    bool ok4 = false, ok7 = false;
    try {
      ok4 = criteria4and7(d4, d7, ok7);
    } catch (const std::exception& e) {
      d4 += std::string(" exception: ") + e.what();
      d7 = d4;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(4, ok4, d4, secs);
    timed(5, criterion5);
    timed(6, criterion6);
    report(7, ok7, d7 + " (same sweep as criterion 4)", 0.0);
  }
  timed(8, criterion8);
  timed(9, criterion9);
  timed(10, criterion10);
  std::printf("%s: %d of 10 criteria failed\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}
