#ifndef TLAB_INEQUALITY_HPP
#define TLAB_INEQUALITY_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <type_traits>
#include <vector>

#include "tlab/errors.hpp"
#include "tlab/rational.hpp"
#include "tlab/record.hpp"

namespace tlab {

// All closed forms are templates over an exact field so that the grid sweeps
// can run on SmallRational and fall back to Rational cell by cell.

namespace detail {

template <class F> F nonzero(const F &x, const char *what) {
  if (x == F(0))
    throw InvalidInput(std::string("zero denominator in ") + what);
  return x;
}

template <class F> F half(long long p) { return F(p) / F(2); }

} // namespace detail

/// 1.5/(delta + .5) - 1/(d_u + .5) - 1/(d_w + .5) + .5/(d_u + d_w - 2k + .5)
template <class F>
  requires(!std::is_integral_v<F>)
F q_sink(const F &delta, const F &d_u, const F &d_w, const F &k) {
  const F h = detail::half<F>(1);
  const F a = detail::nonzero<F>(delta + h, "q_sink");
  const F b = detail::nonzero<F>(d_u + h, "q_sink");
  const F c = detail::nonzero<F>(d_w + h, "q_sink");
  const F e = detail::nonzero<F>(d_u + d_w - F(2) * k + h, "q_sink");
  return detail::half<F>(3) / a - F(1) / b - F(1) / c + h / e;
}

/// ell + .5 - k/(delta + .5) - (ell (delta + 1.5 - k) + .5 k)/(delta + 2 - ell)
template <class F>
  requires(!std::is_integral_v<F>)
F q_avg(const F &delta, const F &ell, const F &k) {
  const F h = detail::half<F>(1);
  const F a = detail::nonzero<F>(delta + h, "q_avg");
  const F b = detail::nonzero<F>(delta + F(2) - ell, "q_avg");
  return ell + h - k / a - (ell * (delta + detail::half<F>(3) - k) + h * k) / b;
}

/// For odd delta >= 5 and ell = k = (delta + 1)/2, with D' = (delta - 1)/2:
///
///     ell + .5 - k/(delta + .5) - ceil(ell k / D') (D'(delta + 1.5 - k) + .5 k)/(k (delta + 2 - D'))
inline Rational odd_delta_margin(int delta) {
  if (delta < 5 || delta % 2 == 0)
    throw InvalidInput("odd_delta_margin needs an odd delta >= 5");
  const Rational d = delta;
  const Rational k(delta + 1, 2);
  const Rational dp(delta - 1, 2);
  const BigInt buckets = ceil_div(k * k / dp);
  const Rational bucket = (dp * (d + Rational(3, 2) - k) + k / 2) / (k * (d + 2 - dp));
  return k + Rational(1, 2) - k / (d + Rational(1, 2)) - Rational(buckets) * bucket;
}

struct GridViolation {
  Json point;
  Rational lhs;
  Rational rhs;
};

/// Outcome of a finite exact sweep. Every violation is a strict failure of
/// lhs >= rhs (or lhs > rhs for strict claims); only the first
/// kListedViolations are kept verbatim, violation_count has them all.
struct GridReport {
  static constexpr std::size_t kListedViolations = 100;

  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<GridViolation> violations;
  Json ranges = Json::object();

  bool pass() const { return violation_count == 0; }

  void add_violation(Json point, Rational lhs, Rational rhs) {
    ++violation_count;
    if (violations.size() < kListedViolations)
      violations.push_back({std::move(point), std::move(lhs), std::move(rhs)});
  }

  Json to_json() const {
    Json j;
    j["suite"] = name;
    j["ranges"] = ranges;
    j["checked"] = checked;
    j["violation_count"] = violation_count;
    Json v = Json::array();
    for (const auto &x : violations)
      v.push_back({{"point", x.point}, {"lhs", tlab::to_json(x.lhs)}, {"rhs", tlab::to_json(x.rhs)}});
    j["violations"] = std::move(v);
    j["pass"] = pass();
    return j;
  }
};

namespace detail {

// lo, lo + step, ... up to hi, and hi itself when the lattice misses it.
inline std::vector<Rational> grid_points(const Rational &lo, const Rational &hi,
                                         const Rational &step) {
  if (step <= 0)
    throw InvalidInput("grid step must be positive");
  std::vector<Rational> out;
  for (Rational x = lo; x <= hi; x += step)
    out.push_back(x);
  if (!out.empty() && out.back() != hi && lo <= hi)
    out.push_back(hi);
  return out;
}

inline std::vector<SmallRational> to_small(const std::vector<Rational> &xs) {
  std::vector<SmallRational> out;
  out.reserve(xs.size());
  for (const auto &x : xs)
    out.push_back(SmallRational::from_rational(x));
  return out;
}

} // namespace detail

struct ClaimsGridOptions {
  /// Lowers the k range below (delta + 1)/2 by this much; a positive value
  /// probes how sharp the k hypothesis is.
  Rational k_widen = 0;
  /// d_u and d_w run from delta + 1 to delta + 1 + d_span.
  int d_span = 20;
};

/// Sweeps q_sink >= 0 for integer delta in [2, delta_max],
/// k in [(delta + 1)/2, delta + 1], d_u, d_w in [delta + 1, delta + 1 + d_span];
/// q_avg >= 0 for integer delta in [4, delta_max], ell in [2, delta/2],
/// k in [(delta + 1)/2, delta + 1]; and odd_delta_margin > 0 for odd delta in
/// [5, delta_max]. Real ranges are stepped by `step` with endpoints included.
inline GridReport verify_claims_grid(int delta_max, const Rational &step,
                                     const ClaimsGridOptions &opt = {}) {
  GridReport rep;
  rep.name = "ineq-claims";
  rep.ranges = {{"delta_max", delta_max},
                {"step", to_json(step)},
                {"k_widen", to_json(opt.k_widen)},
                {"d_span", opt.d_span}};
  for (int delta = 2; delta <= delta_max; ++delta) {
    const Rational d = delta;
    const auto ks = detail::grid_points((d + 1) / 2 - opt.k_widen, d + 1, step);
    const auto ds = detail::grid_points(d + 1, d + 1 + opt.d_span, step);
    const auto ks_s = detail::to_small(ks);
    const auto ds_s = detail::to_small(ds);
    const SmallRational dd_s(delta);
    for (std::size_t ik = 0; ik < ks.size(); ++ik)
      for (std::size_t iu = 0; iu < ds.size(); ++iu)
        for (std::size_t iw = 0; iw < ds.size(); ++iw) {
          ++rep.checked;
          bool negative;
          try {
            negative = q_sink(dd_s, ds_s[iu], ds_s[iw], ks_s[ik]) < SmallRational(0);
          } catch (const RationalOverflow &) {
            negative = q_sink(d, ds[iu], ds[iw], ks[ik]) < 0;
          }
          if (negative)
            rep.add_violation({{"claim", "sink"},
                               {"delta", delta},
                               {"d_u", to_json(ds[iu])},
                               {"d_w", to_json(ds[iw])},
                               {"k", to_json(ks[ik])}},
                              q_sink(d, ds[iu], ds[iw], ks[ik]), 0);
        }
  }
  for (int delta = 4; delta <= delta_max; ++delta) {
    const Rational d = delta;
    const auto ls = detail::grid_points(2, d / 2, step);
    const auto ks = detail::grid_points((d + 1) / 2 - opt.k_widen, d + 1, step);
    for (const auto &l : ls)
      for (const auto &k : ks) {
        ++rep.checked;
        const Rational q = q_avg(d, l, k);
        if (q < 0)
          rep.add_violation({{"claim", "avg"}, {"delta", delta}, {"ell", to_json(l)}, {"k", to_json(k)}},
                            q, 0);
      }
  }
  for (int delta = 5; delta <= delta_max; delta += 2) {
    ++rep.checked;
    const Rational m = odd_delta_margin(delta);
    if (!(m > 0))
      rep.add_violation({{"claim", "odd"}, {"delta", delta}}, m, 0);
  }
  return rep;
}

/// One bucket of the averaging sum: (x (delta + 3/2 - |K|) + |K|/2)/(|K| (delta + 2 - x)).
template <class F>
  requires(!std::is_integral_v<F>)
F bucket_value(const F &delta, const F &size_k, const F &x) {
  const F den = detail::nonzero<F>(size_k * (delta + F(2) - x), "bucket_value");
  return (x * (delta + detail::half<F>(3) - size_k) + size_k / F(2)) / den;
}

inline Rational bucket_value(int delta, int size_k, int x) {
  return bucket_value(Rational(delta), Rational(size_k), Rational(x));
}

enum class RemainderConvention {
  omit_zero,        // r = ell|K| mod D', last bucket dropped when r = 0
  smallest_positive // r in [1, D'], so r = D' when D' divides ell|K|
};

/// floor(ell|K|/D') full buckets of size D' plus one bucket of size r.
inline Rational lemma52_bound(int delta, int size_k, int ell, int d_prime,
                              RemainderConvention conv = RemainderConvention::omit_zero) {
  if (d_prime <= 0)
    throw InvalidInput("D' must be positive");
  if (size_k <= 0 || ell < 0)
    throw InvalidInput("lemma52_bound needs |K| >= 1 and ell >= 0");
  const int total = ell * size_k;
  const int full = total / d_prime;
  int r = total % d_prime;
  if (r == 0 && conv == RemainderConvention::smallest_positive)
    r = d_prime;
  Rational b = full * bucket_value(delta, size_k, d_prime);
  if (r > 0)
    b += bucket_value(delta, size_k, r);
  return b;
}

/// lemma52_bound plus one bucket_value(0) for every slot of the ell|K|-slot
/// vector left at zero. Dominates every admissible multiset because the
/// buckets are convex in x, so this is what the switching argument bounds.
inline Rational padded_bucket_bound(int delta, int size_k, int ell, int d_prime) {
  const Rational stated = lemma52_bound(delta, size_k, ell, d_prime, RemainderConvention::omit_zero);
  const int total = ell * size_k;
  const int used = total / d_prime + (total % d_prime != 0 ? 1 : 0);
  return stated + (total - used) * bucket_value(delta, size_k, 0);
}

inline constexpr int kDefaultBucketBudget = 18;

struct BucketMax {
  Rational value;
  std::vector<int> parts; // non-increasing
};

/// Largest sum of bucket_value(x_i) over multisets with x_i in [1, D] and
/// sum x_i = ell|K|.
inline BucketMax bruteforce_bucket_max(int delta, int size_k, int ell, int d,
                                       int budget = kDefaultBucketBudget) {
  const int total = ell * size_k;
  if (total > budget)
    throw CapExceeded("bucket enumeration refused: ell|K| = " + std::to_string(total) +
                      " exceeds the budget " + std::to_string(budget));
  if (d < 1 || d >= delta + 2)
    throw InvalidInput("bucket sizes must lie in [1, delta + 1]");
  std::vector<Rational> value(static_cast<std::size_t>(d + 1));
  for (int x = 1; x <= d; ++x)
    value[static_cast<std::size_t>(x)] = bucket_value(delta, size_k, x);
  BucketMax best;
  bool have = false;
  std::vector<int> parts;
  auto rec = [&](auto &&self, int left, int cap, const Rational &acc) -> void {
    if (left == 0) {
      if (!have || acc > best.value) {
        best = {acc, parts};
        have = true;
      }
      return;
    }
    for (int x = std::min(cap, left); x >= 1; --x) {
      parts.push_back(x);
      self(self, left - x, x, acc + value[static_cast<std::size_t>(x)]);
      parts.pop_back();
    }
  };
  rec(rec, total, d, Rational(0));
  if (!have)
    best.value = 0; // ell|K| = 0: the empty multiset
  return best;
}

/// ell + 1/2 - |K|/(delta + 1/2).
inline Rational finishing_blow_lhs(int delta, int ell, int size_k) {
  return ell + Rational(1, 2) - Rational(size_k) / (delta + Rational(1, 2));
}

/// For 3 <= delta <= delta_max, 2 <= ell <= (delta + 1)/2,
/// ceil((delta + 1)/2) <= |K| <= delta + 1 - ell, 1 <= D <= min(ell, |K| - 1)
/// and ell|K| <= budget: finishing_blow_lhs >= bruteforce_bucket_max.
inline GridReport verify_finishing_blow_grid(int delta_max, int budget = kDefaultBucketBudget) {
  if (delta_max < 3)
    throw InvalidInput("delta_max must be at least 3");
  GridReport rep;
  rep.name = "ineq-finishing-blow";
  rep.ranges = {{"delta_max", delta_max}, {"budget", budget}};
  std::uint64_t skipped = 0;
  for (int delta = 3; delta <= delta_max; ++delta)
    for (int ell = 2; 2 * ell <= delta + 1; ++ell)
      for (int k = (delta + 2) / 2; k <= delta + 1 - ell; ++k)
        for (int d = 1; d <= std::min(ell, k - 1); ++d) {
          if (ell * k > budget) {
            ++skipped;
            continue;
          }
          ++rep.checked;
          const Rational lhs = finishing_blow_lhs(delta, ell, k);
          const Rational rhs = bruteforce_bucket_max(delta, k, ell, d, budget).value;
          if (lhs < rhs)
            rep.add_violation({{"delta", delta}, {"ell", ell}, {"K", k}, {"D", d}}, lhs, rhs);
        }
  rep.ranges["skipped_over_budget"] = skipped;
  return rep;
}

/// Both checks behind the bucket bound, over delta in [2, delta_max],
/// ell >= 1, 2 <= |K| <= delta + 1 - ell, ell|K| <= budget:
///   * lemma52_bound(delta, |K|, ell, D') >= bruteforce_bucket_max(..., D)
///     for 1 <= D <= D' <= |K| - 1;
///   * the same comparison against padded_bucket_bound;
///   * the switching step bucket(x1 - 1) + bucket(x2 + 1) > bucket(x1) + bucket(x2)
///     for 1 <= x1 <= x2 <= D' - 1.
struct BucketOracleReport {
  GridReport bound;
  GridReport padded;
  GridReport switching;
};

inline BucketOracleReport verify_bucket_oracle(int delta_max = 15, int budget = 14,
                                               RemainderConvention conv = RemainderConvention::omit_zero) {
  BucketOracleReport out;
  out.bound.name = "ineq-lemma52";
  out.padded.name = "ineq-lemma52-padded";
  out.switching.name = "ineq-switching";
  const Json ranges = {{"delta_max", delta_max},
                       {"budget", budget},
                       {"convention", conv == RemainderConvention::omit_zero ? "omit_zero"
                                                                              : "smallest_positive"}};
  out.bound.ranges = ranges;
  out.padded.ranges = ranges;
  out.padded.ranges.erase("convention");
  out.switching.ranges = ranges;
  for (int delta = 2; delta <= delta_max; ++delta)
    for (int ell = 1; ell <= delta - 1; ++ell)
      for (int k = 2; k <= delta + 1 - ell && ell * k <= budget; ++k)
        for (int dp = 1; dp <= k - 1; ++dp) {
          const Rational bound = lemma52_bound(delta, k, ell, dp, conv);
          const Rational padded = padded_bucket_bound(delta, k, ell, dp);
          for (int d = 1; d <= dp; ++d) {
            ++out.bound.checked;
            ++out.padded.checked;
            const BucketMax bm = bruteforce_bucket_max(delta, k, ell, d, budget);
            Json parts = Json::array();
            for (int x : bm.parts)
              parts.push_back(x);
            const Json point = {{"delta", delta}, {"K", k},         {"ell", ell},
                                {"D", d},         {"D_prime", dp}, {"argmax", parts}};
            if (bound < bm.value)
              out.bound.add_violation(point, bound, bm.value);
            if (padded < bm.value)
              out.padded.add_violation(point, padded, bm.value);
          }
          for (int x1 = 1; x1 <= dp - 1; ++x1)
            for (int x2 = x1; x2 <= dp - 1; ++x2) {
              ++out.switching.checked;
              const Rational after = bucket_value(delta, k, x1 - 1) + bucket_value(delta, k, x2 + 1);
              const Rational before = bucket_value(delta, k, x1) + bucket_value(delta, k, x2);
              if (!(after > before))
                out.switching.add_violation(
                    {{"delta", delta}, {"K", k}, {"ell", ell}, {"D_prime", dp}, {"x1", x1}, {"x2", x2}},
                    after, before);
            }
        }
  return out;
}

/// (1 - 1/k)(n - n')^2/2 + (1 - 1/(r - k)) n'^2/2 - n'/4 + (n - n') n'
template <class F>
  requires(!std::is_integral_v<F>)
F e_turan(const F &n, int r, const F &np, int k) {
  if (k < 1 || k > r - 2)
    throw InvalidInput("e_turan needs 1 <= k <= r - 2");
  const F rest = n - np;
  return (F(1) - F(1) / F(k)) * rest * rest / F(2) +
         (F(1) - F(1) / F(r - k)) * np * np / F(2) - np / F(4) + rest * np;
}

inline Rational e_turan(const Rational &n, int r, const Rational &np, int k) {
  return e_turan<Rational>(n, r, np, k);
}

/// (r - k)(n - k/4)/r, where e_turan peaks in n'.
inline Rational e_turan_maximizer(int n, int r, int k) {
  return Rational(r - k) * (n - Rational(k, 4)) / r;
}

/// k^2 - 8kn - kr + 8nr - 16n + 32r.
inline Rational appendix_discriminant(int n, int r, int k) {
  const Rational N = n, R = r, K = k;
  return K * K - 8 * K * N - K * R + 8 * N * R - 16 * N + 32 * R;
}

/// For r in [3, r_max], k in [1, r - 2], n in [r, n_max]: e_turan stays at or
/// below (1 - 1/r)n^2/2 - n/(2r) + 1 at every integer n' in [0, n] and at the
/// real maximizer; the discriminant is positive at every such k and equals
/// 30r + 4 at k = r - 2.
inline GridReport verify_appendixA_grid(int n_max, int r_max) {
  if (r_max < 3)
    throw InvalidInput("r_max must be at least 3");
  GridReport rep;
  rep.name = "ineq-appendix-a";
  rep.ranges = {{"n_max", n_max}, {"r_max", r_max}};
  for (int r = 3; r <= r_max; ++r)
    for (int k = 1; k <= r - 2; ++k)
      for (int n = r; n <= n_max; ++n) {
        const Rational t = (1 - Rational(1, r)) * n * n / 2 - Rational(n, 2 * r) + 1;
        SmallRational ts;
        bool small_ok = true;
        try {
          ts = SmallRational::from_rational(t);
        } catch (const RationalOverflow &) {
          small_ok = false;
        }
        for (int np = 0; np <= n; ++np) {
          ++rep.checked;
          bool over;
          try {
            if (!small_ok)
              throw RationalOverflow();
            over = e_turan<SmallRational>(SmallRational(n), r, SmallRational(np), k) > ts;
          } catch (const RationalOverflow &) {
            over = e_turan(Rational(n), r, Rational(np), k) > t;
          }
          if (over)
            rep.add_violation({{"n", n}, {"r", r}, {"k", k}, {"n_prime", np}}, t,
                              e_turan(Rational(n), r, Rational(np), k));
        }
        ++rep.checked;
        const Rational star = e_turan_maximizer(n, r, k);
        const Rational peak = e_turan(Rational(n), r, star, k);
        if (peak > t)
          rep.add_violation({{"n", n}, {"r", r}, {"k", k}, {"n_prime", to_json(star)}}, t, peak);
        ++rep.checked;
        const Rational disc = appendix_discriminant(n, r, k);
        if (!(disc > 0))
          rep.add_violation({{"n", n}, {"r", r}, {"k", k}, {"discriminant", true}}, disc, 0);
        if (k == r - 2) {
          ++rep.checked;
          if (disc != 30 * r + 4)
            rep.add_violation({{"n", n}, {"r", r}, {"identity", "30r+4"}}, disc, 30 * r + 4);
        }
      }
  return rep;
}

} // namespace tlab

#endif // TLAB_INEQUALITY_HPP
