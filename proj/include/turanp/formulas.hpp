#pragma once

#include <turanp/bigcount.hpp>
#include <turanp/constructions.hpp>
#include <turanp/error.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Closed forms for ex(n,F) and ex_p(n,F). Each result carries the window in
// which the underlying theorem is proved; values are returned outside the
// window too, flagged with in_window = false. Thresholds stated only as
// "n sufficiently large" are never given a concrete value, so those results
// always report in_window = false.

namespace turanp {

/// A term the closed form leaves open, e.g. ex(s+4+b, B_{5,s}) for small b.
struct UnspecifiedTerm {
  std::string description;
  std::int64_t base_n = 0;
  int s = 0;
};

struct FormulaResult {
  BigCount value;
  bool in_window = false;
  std::string window;
  std::string source;
  /// When set, `value` holds only the specified part of the sum.
  std::optional<UnspecifiedTerm> unspecified;
  /// Maximising indices (ex_star_forest only), 1-based.
  std::vector<int> argmax;
};

namespace detail {

inline FormulaResult make_result(BigCount value, bool in_window, std::string window, std::string source) {
  FormulaResult r;
  r.value = std::move(value);
  r.in_window = in_window;
  r.window = std::move(window);
  r.source = std::move(source);
  return r;
}

inline std::string unspecified_window(std::int64_t pattern_order) {
  return "n >= n0(F) (unspecified; necessarily n >= " + std::to_string(pattern_order) + ")";
}

struct ForestSummary {
  std::int64_t b = 0;  // sum floor(ell_i/2) - 1
  std::int64_t order = 0;
  bool all_odd = true;
  bool all_three = true;
  bool all_equal = true;
};

inline ForestSummary summarise(const std::vector<int>& lengths) {
  require(!lengths.empty(), "linear forest needs at least one component");
  ForestSummary f;
  f.b = -1;
  for (int len : lengths) {
    require(len >= 2, "linear forest component lengths must be >= 2");
    f.b += len / 2;
    f.order += len;
    f.all_odd = f.all_odd && len % 2 == 1;
    f.all_three = f.all_three && len == 3;
    f.all_equal = f.all_equal && len == lengths.front();
  }
  return f;
}

inline void require_exponent(unsigned p, unsigned minimum) {
  require(p >= minimum, "exponent p must be at least " + std::to_string(minimum) + " here, got " + std::to_string(p));
}

// Edge count C(b,2) + b(n-b) + c of K_b + E_{n-b} (+ one edge).
inline BigCount split_edges(std::int64_t n, std::int64_t b, bool extra) {
  return binom2(b) + BigCount(b) * (n - b) + (extra ? 1 : 0);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Classical Turan numbers

/// ex(n,P_ell) = a*C(ell-1,2) + C(b,2) with n = a(ell-1) + b, 0 <= b < ell-1.
inline FormulaResult ex_path(std::int64_t n, int ell) {
  detail::require(ell >= 2, "ex_path needs ell >= 2");
  detail::require(n >= 0, "ex_path needs n >= 0");
  const std::int64_t a = n / (ell - 1);
  const std::int64_t b = n % (ell - 1);
  return detail::make_result(BigCount(a) * binom2(ell - 1) + binom2(b), true, "all n", "Faudree-Schelp");
}

/// floor(n(ell-2)/2), the Erdos-Gallai bound (ell/2 - 1)n.
inline BigCount eg_bound(std::int64_t n, int ell) {
  detail::require(ell >= 2, "eg_bound needs ell >= 2");
  return BigCount(n) * (ell - 2) / 2;
}

/// ex(n,kP_3) = C(k-1,2) + (k-1)(n-k+1) + floor((n-k+1)/2).
inline FormulaResult ex_kP3(std::int64_t n, std::int64_t k) {
  detail::require(k >= 1, "ex_kP3 needs k >= 1");
  detail::require(n >= k, "ex_kP3 needs n >= k");
  const std::int64_t rest = n - k + 1;
  BigCount value = binom2(k - 1) + BigCount(k - 1) * rest + rest / 2;
  if (k == 1) return detail::make_result(std::move(value), true, "all n", "Faudree-Schelp");
  return detail::make_result(std::move(value), n > 5 * k - 1, "n > 5k-1 = " + std::to_string(5 * k - 1),
                             "Yuan-Zhang");
}

/// ex(n,F) = C(b,2) + b(n-b) + c for a linear forest F (not all components P_3).
inline FormulaResult ex_linear_forest(std::int64_t n, const std::vector<int>& lengths) {
  const auto f = detail::summarise(lengths);
  if (lengths.size() == 1) return ex_path(n, lengths.front());
  if (f.all_three) throw Error("ex_linear_forest: F = kP_3 is handled by ex_kP3");
  const std::int64_t k = static_cast<std::int64_t>(lengths.size());
  BigCount value = detail::split_edges(n, f.b, f.all_odd);
  if (f.all_equal && lengths.front() == 2) {
    // 2n > 5k - 2  <=>  n > 5k/2 - 1
    return detail::make_result(std::move(value), 2 * n > 5 * k - 2, "n > 5k/2 - 1", "Erdos-Gallai");
  }
  if (f.all_equal && lengths.front() >= 4) {
    const std::int64_t ell = lengths.front();
    BigCount central = 1;
    for (std::int64_t i = 0; i < ell / 2; ++i) central = central * (ell - i) / (i + 1);
    const BigCount bound = BigCount(2 * ell) + BigCount(2 * k * ell * ((ell + 1) / 2 + 1)) * central;
    return detail::make_result(std::move(value), BigCount(n) >= bound, "n >= " + to_decimal(bound), "Bushaw-Kettle");
  }
  return detail::make_result(std::move(value), false, detail::unspecified_window(f.order), "Lidicky-Liu-Palmer");
}

/// ex(n,F) for a star forest: max over i of (i-1)(n-i+1) + C(i-1,2) + floor((r_i-1)(n-i+1)/2).
inline FormulaResult ex_star_forest(std::int64_t n, std::vector<int> degrees) {
  detail::require(!degrees.empty(), "ex_star_forest needs k >= 1");
  for (int r : degrees) detail::require(r >= 1, "star degrees must be >= 1");
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  const std::int64_t k = static_cast<std::int64_t>(degrees.size());
  detail::require(n >= k, "ex_star_forest needs n >= k");
  BigCount best = -1;
  std::vector<int> argmax;
  for (std::int64_t i = 1; i <= k; ++i) {
    const std::int64_t rest = n - i + 1;
    const BigCount term = BigCount(i - 1) * rest + binom2(i - 1) +
                          BigCount(degrees[static_cast<std::size_t>(i - 1)] - 1) * rest / 2;
    if (term > best) {
      best = term;
      argmax.clear();
    }
    if (term == best) argmax.push_back(static_cast<int>(i));
  }
  std::int64_t order = k;
  for (int r : degrees) order += r;
  FormulaResult out;
  if (k == 1) {
    out = detail::make_result(best, n >= degrees.front(), "n >= r", "Caro-Yuster (S_r)");
  } else {
    out = detail::make_result(best, false, detail::unspecified_window(order), "Lidicky-Liu-Palmer");
  }
  out.argmax = std::move(argmax);
  return out;
}

/// ex(n,B_{4,s}), n = a(s+3) + b.
inline FormulaResult ex_broom4(std::int64_t n, int s) {
  detail::require(s >= 1, "ex_broom4 needs s >= 1");
  detail::require(n >= s + 4, "ex_broom4 needs n >= s+4");
  const std::int64_t a = n / (s + 3);
  const std::int64_t b = n % (s + 3);
  BigCount value;
  if (s >= 3 && b >= 2 && b <= s) {
    value = BigCount(a - 1) * binom2(s + 3) + BigCount(s + 1) * (s + 3 + b) / 2;
  } else {
    value = BigCount(a) * binom2(s + 3) + binom2(b);
  }
  return detail::make_result(std::move(value), true, "n >= s+4", "Sun-Wang");
}

/// ex(n,B_{5,s}), n = a(s+4) + b. For 1 <= b <= s only the reduction
/// (a-1)C(s+4,2) + ex(s+4+b, B_{5,s}) is known; the base term is reported
/// as unspecified and excluded from `value`.
inline FormulaResult ex_broom5_partial(std::int64_t n, int s) {
  detail::require(s >= 1, "ex_broom5_partial needs s >= 1");
  detail::require(n >= s + 5, "ex_broom5_partial needs n >= s+5");
  const std::int64_t a = n / (s + 4);
  const std::int64_t b = n % (s + 4);
  if (b >= 1 && b <= s) {
    auto out = detail::make_result(BigCount(a - 1) * binom2(s + 4), true, "n >= s+5", "Sun-Wang");
    out.unspecified = UnspecifiedTerm{"ex(" + std::to_string(s + 4 + b) + ", B_{5," + std::to_string(s) + "})",
                                      s + 4 + b, s};
    return out;
  }
  return detail::make_result(BigCount(a) * binom2(s + 4) + binom2(b), true, "n >= s+5", "Sun-Wang");
}

// ---------------------------------------------------------------------------
// Degree-power Turan numbers

/// e_p(H(n,F)) from the degree multiset of K_b + E_{n-b} (+ one edge).
inline BigCount ep_split(std::int64_t n, std::int64_t b, bool extra, unsigned p) {
  if (extra) return BigCount(b) * big_pow(n - 1, p) + BigCount(n - b - 2) * big_pow(b, p) + 2 * big_pow(b + 1, p);
  return BigCount(b) * big_pow(n - 1, p) + BigCount(n - b) * big_pow(b, p);
}

/// ex_p(n,P_ell): 0 for P_2, n or n-1 for P_3, e_p(H(n,ell)) for ell >= 4.
inline FormulaResult exp_path(std::int64_t n, int ell, unsigned p) {
  detail::require(ell >= 2, "exp_path needs ell >= 2");
  detail::require(n >= 0, "exp_path needs n >= 0");
  if (ell == 2) {
    detail::require_exponent(p, 1);
    return detail::make_result(0, true, "all n", "Caro-Yuster");
  }
  if (ell == 3) {
    detail::require_exponent(p, 1);
    return detail::make_result(n % 2 == 1 ? n - 1 : n, true, "all n", "Caro-Yuster");
  }
  detail::require_exponent(p, 2);
  detail::require(n >= ell, "exp_path needs n >= ell for ell >= 4");
  const std::int64_t b = ell / 2 - 1;
  return detail::make_result(ep_split(n, b, ell % 2 == 1, p), false, detail::unspecified_window(ell), "Caro-Yuster");
}

/// ex_p(n,S_r): n(n-1)^p for n <= r-1, else the near (r-1)-regular value.
inline FormulaResult exp_star(std::int64_t n, int r, unsigned p) {
  detail::require(r >= 1, "exp_star needs r >= 1");
  detail::require(n >= 0, "exp_star needs n >= 0");
  detail::require_exponent(p, 1);
  BigCount value;
  if (n <= r - 1) {
    value = BigCount(n) * big_pow(n - 1, p);
  } else if ((static_cast<std::int64_t>(r - 1) * n) % 2 == 1) {
    value = BigCount(n - 1) * big_pow(r - 1, p) + big_pow(r - 2, p);
  } else {
    value = BigCount(n) * big_pow(r - 1, p);
  }
  return detail::make_result(std::move(value), true, "all n", "Caro-Yuster");
}

/// ex_p(n,F) = e_p(G(n,k,r_k)) for a star forest with k >= 2:
///   (k-1)(n-1)^p + (n-k+1)(r_k+k-2)^p                       unless both odd,
///   (k-1)(n-1)^p + (n-k)(r_k+k-2)^p + (r_k+k-3)^p           if r_k-1 and n-k+1 are odd.
/// "One of r_k-1 and n-k+1 is even" includes the case where both are even.
inline FormulaResult exp_star_forest(std::int64_t n, std::vector<int> degrees, unsigned p) {
  detail::require(degrees.size() >= 2, "exp_star_forest needs k >= 2 (use exp_star for one star)");
  for (int r : degrees) detail::require(r >= 1, "star degrees must be >= 1");
  detail::require_exponent(p, 2);
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  const std::int64_t k = static_cast<std::int64_t>(degrees.size());
  const std::int64_t rk = degrees.back();
  detail::require(n - k + 1 > rk - 1, "exp_star_forest needs n - k + 1 > r_k - 1");
  BigCount value = BigCount(k - 1) * big_pow(n - 1, p);
  if ((rk - 1) % 2 == 1 && (n - k + 1) % 2 == 1) {
    value += BigCount(n - k) * big_pow(rk + k - 2, p) + big_pow(rk + k - 3, p);
  } else {
    value += BigCount(n - k + 1) * big_pow(rk + k - 2, p);
  }
  std::int64_t order = k;
  for (int r : degrees) order += r;
  return detail::make_result(std::move(value), false, detail::unspecified_window(order), "degree-power star forest theorem");
}

/// ex_p(n,F) = e_p(H(n,F)) for a linear forest with k >= 2, F != kP_3.
inline FormulaResult exp_linear_forest(std::int64_t n, const std::vector<int>& lengths, unsigned p) {
  detail::require(lengths.size() >= 2, "exp_linear_forest needs k >= 2 (use exp_path for one path)");
  const auto f = detail::summarise(lengths);
  if (f.all_three) throw Error("exp_linear_forest: F = kP_3 is handled by exp_kP3");
  detail::require_exponent(p, 2);
  detail::require(n >= f.order, "exp_linear_forest needs n >= |V(F)|");
  return detail::make_result(ep_split(n, f.b, f.all_odd, p), false, detail::unspecified_window(f.order),
                             "degree-power linear forest theorem");
}

/// ex_p(n,kP_3) = e_p(K_{k-1} + M_{n-k+1}), summed over the construction's
/// degree multiset: (k-1)(n-1)^p + 2 floor((n-k+1)/2) k^p + ((n-k+1) mod 2)(k-1)^p.
inline FormulaResult exp_kP3(std::int64_t n, std::int64_t k, unsigned p) {
  detail::require(k >= 2, "exp_kP3 needs k >= 2");
  detail::require_exponent(p, 2);
  detail::require(n >= k, "exp_kP3 needs n >= k");
  return detail::make_result(profile_power_sum(k_join_matching_profile(n, k), p), false,
                             detail::unspecified_window(3 * k), "degree-power kP_3 corollary");
}

/// e_p(K_1 + M_{n-1}): (n-1)^p + (n-1)2^p for odd n, (n-1)^p + (n-2)2^p + 1 for even n.
inline BigCount ep_k1_matching(std::int64_t n, unsigned p) {
  return profile_power_sum(k_join_matching_profile(n, 2), p);
}

/// ex_p(n,B_{ell,s}) for ell in {4,5,6,7}.
inline FormulaResult exp_broom(std::int64_t n, int ell, int s, unsigned p) {
  detail::require(ell >= 4 && ell <= 7, "exp_broom covers ell in {4,5,6,7}");
  detail::require(s >= 0, "exp_broom needs s >= 0");
  detail::require_exponent(p, 2);
  auto square_window = [&](std::int64_t root, std::string text, BigCount value) {
    return detail::make_result(std::move(value), n > root * root,
                               "n > " + text + "^2 = " + std::to_string(root * root), "degree-power broom theorem");
  };
  switch (ell) {
    case 4: {
      if (s == 0) return exp_path(n, 4, p);
      detail::require(n >= 2, "exp_broom needs n >= 2");
      return detail::make_result(big_pow(n - 1, p) + (n - 1), n > 2 * (s + 4),
                                 "n > 2(s+4) = " + std::to_string(2 * (s + 4)), "Caro-Yuster");
    }
    case 5: {
      if (s == 0) return square_window(2 * s + 10, "(2s+10)", exp_path(n, 5, p).value);
      detail::require(n >= 2, "exp_broom needs n >= 2");
      return square_window(2 * s + 10, "(2s+10)", ep_k1_matching(n, p));
    }
    case 6: return square_window(2 * s + 12, "(2s+12)", exp_path(n, 6, p).value);
    default: return square_window(3 * s + 31, "(3s+31)", exp_path(n, 7, p).value);
  }
}

/// e_p(T_r(n)); equals ex_p(n,K_{r+1}) for p in {1,2,3}.
inline FormulaResult exp_turan_clique(std::int64_t n, int r, unsigned p) {
  detail::require(r >= 1, "exp_turan_clique needs r >= 1");
  detail::require(n >= 0, "exp_turan_clique needs n >= 0");
  detail::require_exponent(p, 1);
  const std::int64_t base = n / r;
  const std::int64_t big_parts = n % r;
  const std::int64_t small_parts = r - big_parts;
  BigCount value = BigCount(big_parts) * (base + 1) * big_pow(n - base - 1, p) +
                   BigCount(small_parts) * base * big_pow(n - base, p);
  return detail::make_result(std::move(value), p <= 3, "p in {1,2,3}", "Caro-Yuster");
}

// ---------------------------------------------------------------------------
// Lemma instances

enum class LemmaVariant {
  k1_matching,  // (a): K_1 + M_{m-1}, ell = 5
  h_path,       // (b): H(m,ell), ell >= 5
};

namespace detail {

inline BigCount lemma_extremal(LemmaVariant variant, int ell, std::int64_t m, unsigned p) {
  if (variant == LemmaVariant::k1_matching) return ep_k1_matching(m, p);
  return ep_split(m, ell / 2 - 1, ell % 2 == 1, p);
}

inline void require_variant(LemmaVariant variant, int ell) {
  require(ell >= 5, "lemma instances need ell >= 5");
  if (variant == LemmaVariant::k1_matching) require(ell == 5, "variant (a) is stated for ell = 5");
}

}  // namespace detail

/// e_p(X(n1)) + e_p(X(n2)) < e_p(X(n1+n2)) for the variant's family X.
inline bool lemma_superadd_check(int ell, std::int64_t n1, std::int64_t n2, unsigned p, LemmaVariant variant) {
  detail::require_variant(variant, ell);
  detail::require_exponent(p, 2);
  detail::require(n1 >= ell && n2 >= ell, "superadditivity needs n1, n2 >= ell");
  return detail::lemma_extremal(variant, ell, n1, p) + detail::lemma_extremal(variant, ell, n2, p) <
         detail::lemma_extremal(variant, ell, n1 + n2, p);
}

/// e_p(X(h)) + hstar * d^p < e_p(X(h + hstar)); hstar * d^p bounds e_p(G*)
/// for any G* on hstar vertices with maximum degree at most d.
inline bool lemma_absorb_check(int ell, int s, std::int64_t h, std::int64_t hstar, std::int64_t d, unsigned p,
                               LemmaVariant variant) {
  detail::require_variant(variant, ell);
  detail::require_exponent(p, 2);
  detail::require(s >= 0, "absorption needs s >= 0");
  detail::require(d >= 0, "absorption needs d >= 0");
  detail::require(h >= ell, "absorption needs h >= ell");
  detail::require(hstar > 0, "absorption needs hstar > 0");
  const std::int64_t n = h + hstar;
  const std::int64_t root = ell + s + d;
  detail::require(n > root * root, "absorption needs n = h + hstar > (ell+s+d)^2 = " + std::to_string(root * root));
  return detail::lemma_extremal(variant, ell, h, p) + BigCount(hstar) * big_pow(d, p) <
         detail::lemma_extremal(variant, ell, n, p);
}

}  // namespace turanp
