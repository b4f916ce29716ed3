#pragma once

// Independent brute-force oracles for the test suites. Nothing here calls
// into the library's algorithms: partitions, arm/leg weights, dense power
// series and the commutator constant are all recomputed from scratch with
// plain integer arithmetic.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

// ---------------------------------------------------------------------------
// partitions

/// All partitions of n as non-increasing row lists.
inline std::vector<std::vector<int>> partitions(int n, int maxpart = -1) {
  if (maxpart < 0) maxpart = n;
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int p = std::min(n, maxpart); p >= 1; --p)
    for (auto rest : partitions(n - p, p)) {
      rest.insert(rest.begin(), p);
      out.push_back(std::move(rest));
    }
  return out;
}

/// p(n) by Euler's pentagonal recurrence.
inline i64 partition_number(int n) {
  std::vector<i64> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k) {
    i64 s = 0;
    for (int j = 1;; ++j) {
      int g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
      if (g1 > k) break;
      i64 sign = (j % 2 == 1) ? 1 : -1;
      s += sign * p[static_cast<std::size_t>(k - g1)];
      if (g2 <= k) s += sign * p[static_cast<std::size_t>(k - g2)];
    }
    p[static_cast<std::size_t>(k)] = s;
  }
  return p[static_cast<std::size_t>(n)];
}

/// Dense coefficient vector (index = power of z).
using DensePoly = std::vector<i64>;

inline DensePoly trim(DensePoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

/// Punctual Hilbert scheme of n points in the plane: sum over partitions of z^{2(n - l(lambda))}.
inline DensePoly punctual_plane_poincare(int n) {
  DensePoly p(static_cast<std::size_t>(2 * n + 1), 0);
  for (auto const &lam : partitions(n)) p[static_cast<std::size_t>(2 * (n - static_cast<int>(lam.size())))] += 1;
  return trim(p);
}

/// Hilb^n(P^2) from its torus fixed points: triples of partitions, the k-th
/// contributing z^{2(|lambda| - l(lambda)) + 2 k l(lambda)} (k = 0, 1, 2).
inline DensePoly hilb_p2_poincare(int n) {
  DensePoly p(static_cast<std::size_t>(4 * n + 1), 0);
  for (int n0 = 0; n0 <= n; ++n0)
    for (int n1 = 0; n0 + n1 <= n; ++n1) {
      int n2 = n - n0 - n1;
      int const ns[3] = {n0, n1, n2};
      std::vector<int> exps{0};
      for (int k = 0; k < 3; ++k) {
        std::vector<int> next;
        for (auto const &lam : partitions(ns[k])) {
          int l = static_cast<int>(lam.size());
          for (int e : exps) next.push_back(e + 2 * (ns[k] - l) + 2 * k * l);
        }
        exps = std::move(next);
      }
      for (int e : exps) p[static_cast<std::size_t>(e)] += 1;
    }
  return trim(p);
}

// ---------------------------------------------------------------------------
// classical tangent weights

/// Tangent weights at the monomial ideal with row lengths lam, written in the
/// library's (lambda, mu) exponent convention: for each box with arm a and
/// leg l, the pair (a, -l-1) and (-a-1, l).
inline std::map<std::pair<int, int>, i64> arm_leg_weights(std::vector<int> const &lam) {
  std::map<std::pair<int, int>, i64> w;
  if (lam.empty()) return w;
  std::vector<int> conj(static_cast<std::size_t>(lam[0]), 0);
  for (int r : lam)
    for (int j = 0; j < r; ++j) ++conj[static_cast<std::size_t>(j)];
  for (std::size_t i = 0; i < lam.size(); ++i)
    for (int j = 0; j < lam[i]; ++j) {
      int a = lam[i] - j - 1;
      int l = conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      ++w[{a, -l - 1}];
      ++w[{-a - 1, l}];
    }
  return w;
}

// ---------------------------------------------------------------------------
// dense truncated power series in (z, x_0, x_levels...)

/// Exponent vector: [z, x0, x_{l1}, x_{l2}, ...] in a caller-fixed level order.
using Exps = std::vector<int>;

class DenseSeries {
public:
  /// caps[0] is ignored for z (unbounded), caps[1] bounds x0, caps[k>=2] the levels.
  explicit DenseSeries(std::vector<int> caps) : caps_(std::move(caps)) {
    Exps zero(caps_.size(), 0);
    c_[zero] = 1;
  }

  bool fits(Exps const &e) const {
    for (std::size_t k = 1; k < e.size(); ++k)
      if (e[k] > caps_[k]) return false;
    return true;
  }

  /// Multiply by sum_k coeff_k t^k for the monomial t with exponent d, naive.
  void mul_by_series_in(Exps const &d, std::vector<i64> const &coeffs) {
    std::map<Exps, i64> out;
    for (auto const &[e, c] : c_)
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        Exps f = e;
        for (std::size_t t = 0; t < f.size(); ++t) f[t] += static_cast<int>(k) * d[t];
        if (!fits(f)) break;
        out[f] += c * coeffs[k];
      }
    std::erase_if(out, [](auto const &kv) { return kv.second == 0; });
    c_ = std::move(out);
  }

  /// Multiply by (1 + t) (num = true) or by 1/(1 - t) (num = false), once.
  void mul_factor(Exps const &d, bool num) {
    int reach = 0;
    for (std::size_t t = 1; t < d.size(); ++t)
      if (d[t] > 0) reach = std::max(reach, caps_[t] / d[t] + 1);
    if (num) {
      mul_by_series_in(d, {1, 1});
    } else {
      mul_by_series_in(d, std::vector<i64>(static_cast<std::size_t>(reach) + 1, 1));
    }
  }

  /// (1 + t)^b or (1 - t)^{-b} by repetition.
  void mul_power(Exps const &d, bool num, i64 b) {
    for (i64 i = 0; i < b; ++i) mul_factor(d, num);
  }

  i64 coeff(Exps const &e) const {
    auto it = c_.find(e);
    return it == c_.end() ? 0 : it->second;
  }

  /// Coefficient polynomial in z at the x-exponent (x0, levels...).
  DensePoly z_poly(std::vector<int> const &x) const {
    DensePoly p;
    for (auto const &[e, c] : c_) {
      if (!std::equal(x.begin(), x.end(), e.begin() + 1)) continue;
      if (p.size() <= static_cast<std::size_t>(e[0])) p.resize(static_cast<std::size_t>(e[0]) + 1, 0);
      p[static_cast<std::size_t>(e[0])] += c;
    }
    return trim(p);
  }

  std::map<Exps, i64> const &terms() const { return c_; }

private:
  std::vector<int> caps_;
  std::map<Exps, i64> c_;
};

/// Levels of a window [lo, hi) minus 0, ascending.
inline std::vector<int> window_levels(int lo, int hi) {
  std::vector<int> out;
  for (int a = lo; a < hi; ++a)
    if (a != 0) out.push_back(a);
  return out;
}

/// Sum_v P(X^[v]) x^v for surface/divisor Betti numbers, as a dense series.
/// Surface: prod_m (1+z^{2m-1}x0^m)^{b1}(1+z^{2m+1}x0^m)^{b3} / (1-z^{2m-2}x0^m)^{b0}(1-z^{2m}x0^m)^{b2}(1-z^{2m+2}x0^m)^{b4}.
/// Level alpha, shift s = (alpha < 0): prod_{m>=s} with k = m - s:
///   (1+z^{2k+1}x0^m x_a)^{d1} / (1-z^{2k}x0^m x_a)^{d0}(1-z^{2k+2}x0^m x_a)^{d2}.
inline DenseSeries parabolic_dense(std::vector<i64> const &bX, std::vector<i64> const &bD, int lo,
                                   int hi, int N0, int cap) {
  auto levels = window_levels(lo, hi);
  std::vector<int> caps{0, N0};
  for (std::size_t i = 0; i < levels.size(); ++i) caps.push_back(cap);
  DenseSeries s(caps);
  auto mono = [&](int z, int m, int level_index) {
    Exps e(caps.size(), 0);
    e[0] = z;
    e[1] = m;
    if (level_index >= 0) e[static_cast<std::size_t>(2 + level_index)] = 1;
    return e;
  };
  for (int m = 1; m <= N0; ++m) {
    s.mul_power(mono(2 * m - 1, m, -1), true, bX[1]);
    s.mul_power(mono(2 * m + 1, m, -1), true, bX[3]);
    s.mul_power(mono(2 * m - 2, m, -1), false, bX[0]);
    s.mul_power(mono(2 * m, m, -1), false, bX[2]);
    s.mul_power(mono(2 * m + 2, m, -1), false, bX[4]);
  }
  for (std::size_t li = 0; li < levels.size(); ++li) {
    int shift = levels[li] < 0 ? 1 : 0;
    for (int m = shift; m <= N0; ++m) {
      int k = m - shift;
      s.mul_power(mono(2 * k + 1, m, static_cast<int>(li)), true, bD[1]);
      s.mul_power(mono(2 * k, m, static_cast<int>(li)), false, bD[0]);
      s.mul_power(mono(2 * k + 2, m, static_cast<int>(li)), false, bD[2]);
    }
  }
  return s;
}

/// Local punctual product, L stored in the z slot:
/// prod_{i>=1} 1/(1-L^{i-1}x0^i) * prod_{a<0} prod_{i>=1} 1/(1-L^{i-1}x0^i x_a)
///                             * prod_{a>0} prod_{i>=0} 1/(1-L^i x0^i x_a).
inline DenseSeries local_dense(int lo, int hi, int N0, int cap) {
  auto levels = window_levels(lo, hi);
  std::vector<int> caps{0, N0};
  for (std::size_t i = 0; i < levels.size(); ++i) caps.push_back(cap);
  DenseSeries s(caps);
  for (int i = 1; i <= N0; ++i) {
    Exps e(caps.size(), 0);
    e[0] = i - 1;
    e[1] = i;
    s.mul_factor(e, false);
  }
  for (std::size_t li = 0; li < levels.size(); ++li)
    for (int i = levels[li] < 0 ? 1 : 0; i <= N0; ++i) {
      Exps e(caps.size(), 0);
      e[0] = levels[li] < 0 ? i - 1 : i;
      e[1] = i;
      e[2 + li] = 1;
      s.mul_factor(e, false);
    }
  return s;
}

// ---------------------------------------------------------------------------
// lattice scalars, straight from the definitions

/// u as a level -> entry map.
using Vec = std::map<int, i64>;

inline i64 at(Vec const &v, int a) {
  auto it = v.find(a);
  return it == v.end() ? 0 : it->second;
}

/// mu(u) for u = s (m e0 + e_alpha) with s = +-1 (alpha = 0 means u = s m e0).
inline i64 mu_of_generator(int s, int alpha, i64 m) {
  i64 r0 = s * m;
  i64 minus = alpha < 0 ? 1 : 0; // |u|_- counts the absolute value at negative levels
  bool pure = alpha == 0;
  i64 base = -(r0 < 0 ? -r0 : r0) + minus;
  i64 factor = pure ? base : 1;
  i64 e = r0 - minus;
  i64 parity = ((e % 2) + 2) % 2;
  return s * factor * (parity == 0 ? 1 : -1);
}

/// d(v) = 2 rho0 + |v|_+ - |v|_-.
inline i64 degree(Vec const &v) {
  i64 d = 2 * at(v, 0);
  for (auto const &[a, x] : v) {
    if (a > 0) d += x < 0 ? -x : x;
    if (a < 0) d -= x < 0 ? -x : x;
  }
  return d;
}

} // namespace oracle
