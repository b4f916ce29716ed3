#pragma once

// Truncated formal power series in z (or L), x_0 and x_alpha (alpha in a finite
// window, alpha != 0), with exact big-integer coefficients. The truncation
// order is part of every value and is checked by every binary operation.

#include "parahilb/lattice.hpp"
#include "parahilb/polynomial.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace parahilb {

struct MultiDegree {
  Count z_deg = 0;
  Count x0_deg = 0;
  std::map<Level, Count> x_deg; // alpha != 0, zero entries omitted

  MultiDegree() = default;
  MultiDegree(Count z, Count x0, std::map<Level, Count> xs = {}) : z_deg(z), x0_deg(x0) {
    for (auto const &[a, d] : xs) set_x(a, d);
  }
  /// x-part taken from an index vector (rho_0 -> x_0, rho_alpha -> x_alpha).
  static MultiDegree from_index(IndexVector const &v, Count z = 0) {
    MultiDegree d;
    d.z_deg = z;
    for (auto const &[a, x] : v.entries()) {
      if (a == 0)
        d.x0_deg = x;
      else
        d.set_x(a, x);
    }
    return d;
  }
  IndexVector x_part() const {
    IndexVector v = IndexVector::unit(0, x0_deg);
    for (auto const &[a, d] : x_deg) v.set(a, d);
    return v;
  }
  void set_x(Level a, Count d) {
    if (a == 0) throw std::invalid_argument("MultiDegree: level 0 is the x0 direction");
    if (d == 0)
      x_deg.erase(a);
    else
      x_deg[a] = d;
  }
  Count x(Level a) const {
    auto it = x_deg.find(a);
    return it == x_deg.end() ? 0 : it->second;
  }
  bool is_zero() const { return z_deg == 0 && x0_deg == 0 && x_deg.empty(); }

  friend bool operator==(MultiDegree const &, MultiDegree const &) = default;
  friend auto operator<=>(MultiDegree const &, MultiDegree const &) = default;
};

/// Maximal x_0 degree N0, the window of x_alpha variables and per-level caps.
struct TruncationOrder {
  Count N0 = 0;
  Window window{-1, 1};
  std::map<Level, Count> caps; // one entry per alpha != 0 in the window

  TruncationOrder() = default;
  TruncationOrder(Count n0, Window w, Count default_cap = 2) : N0(n0), window(w) {
    if (n0 < 0) throw std::invalid_argument("TruncationOrder: N0 must be >= 0");
    for (Level a = w.lo; a < w.hi; ++a)
      if (a != 0) caps[a] = default_cap;
  }
  TruncationOrder(Count n0, Window w, std::map<Level, Count> per_level)
      : TruncationOrder(n0, w, 0) {
    for (auto const &[a, m] : per_level) {
      if (!caps.contains(a)) throw std::invalid_argument("TruncationOrder: cap outside window");
      caps[a] = m;
    }
  }

  Count cap(Level a) const {
    auto it = caps.find(a);
    return it == caps.end() ? 0 : it->second;
  }
  bool contains(MultiDegree const &d) const {
    if (d.z_deg < 0 || d.x0_deg < 0 || d.x0_deg > N0) return false;
    for (auto const &[a, x] : d.x_deg)
      if (x < 0 || x > cap(a)) return false;
    return true;
  }
  bool contains_x(IndexVector const &v) const { return contains(MultiDegree::from_index(v)); }
  /// True when every degree allowed by `other` is allowed here.
  bool covers(TruncationOrder const &other) const {
    if (other.N0 > N0) return false;
    for (auto const &[a, m] : other.caps)
      if (m > cap(a)) return false;
    return true;
  }
  friend bool operator==(TruncationOrder const &, TruncationOrder const &) = default;
};

class MultiSeries {
public:
  using Key = std::uint64_t;
  static constexpr Count kZBits = 20;
  static constexpr Count kZMax = (Count{1} << kZBits) - 1;

  explicit MultiSeries(TruncationOrder order) : order_(std::move(order)) {
    radix_.push_back(order_.N0 + 1);
    for (auto const &[a, m] : order_.caps) {
      levels_.push_back(a);
      radix_.push_back(m + 1);
    }
    unsigned __int128 span = 1;
    for (Count r : radix_) span *= static_cast<unsigned __int128>(r);
    if (span > (static_cast<unsigned __int128>(1) << (64 - kZBits)))
      throw std::invalid_argument("MultiSeries: truncation order too large to index");
  }

  static MultiSeries constant(BigInt const &c, TruncationOrder const &order) {
    return monomial(c, MultiDegree{}, order);
  }
  static MultiSeries monomial(BigInt const &c, MultiDegree const &d, TruncationOrder const &order) {
    if (!order.contains(d)) throw std::out_of_range("monomial: degree outside truncation order");
    MultiSeries s(order);
    s.add_term(d, c);
    return s;
  }

  TruncationOrder const &order() const { return order_; }
  std::map<Key, BigInt> const &raw() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  void add_term(MultiDegree const &d, BigInt const &c) {
    if (!order_.contains(d)) throw std::out_of_range("add_term: degree outside truncation order");
    add_raw(encode(d), c);
  }

  BigInt coeff(MultiDegree const &d) const {
    if (!order_.contains(d)) return 0;
    auto it = terms_.find(encode(d));
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// All terms in canonical (key) order.
  std::vector<std::pair<MultiDegree, BigInt>> terms() const {
    std::vector<std::pair<MultiDegree, BigInt>> out;
    out.reserve(terms_.size());
    for (auto const &[k, c] : terms_) out.emplace_back(decode(k), c);
    return out;
  }

  /// The z-polynomial multiplying x^v.
  Poly coefficient(IndexVector const &v) const {
    MultiDegree probe = MultiDegree::from_index(v);
    if (!order_.contains(probe))
      throw std::out_of_range("coefficient: " + v.to_string() + " outside truncation order");
    Key base = encode(probe);
    Poly p;
    auto it = terms_.lower_bound(base);
    for (; it != terms_.end() && (it->first >> kZBits) == (base >> kZBits); ++it)
      p.add_term(static_cast<int>(it->first & kZMax), it->second);
    return p;
  }

  /// Every x-multidegree carrying a nonzero coefficient.
  std::vector<IndexVector> x_support() const {
    std::vector<IndexVector> out;
    Key last = ~Key{0};
    for (auto const &[k, c] : terms_) {
      Key hi = k >> kZBits;
      if (hi == last) continue;
      last = hi;
      out.push_back(decode(k).x_part());
    }
    return out;
  }

  /// Drops every term outside `smaller` and re-indexes under it.
  MultiSeries restrict_to(TruncationOrder const &smaller) const {
    MultiSeries r(smaller);
    for (auto const &[k, c] : terms_) {
      MultiDegree d = decode(k);
      if (smaller.contains(d)) r.add_raw(r.encode(d), c);
    }
    return r;
  }

  /// Sets x_alpha = 0 for every alpha != 0: the result lives in (z, x_0) only.
  MultiSeries drop_levels() const {
    TruncationOrder o(order_.N0, order_.window, 0);
    return restrict_to(o);
  }

  MultiSeries &operator+=(MultiSeries const &o) {
    check_same(o);
    for (auto const &[k, c] : o.terms_) add_raw(k, c);
    return *this;
  }
  MultiSeries &operator-=(MultiSeries const &o) {
    check_same(o);
    for (auto const &[k, c] : o.terms_) add_raw(k, -c);
    return *this;
  }
  friend MultiSeries operator+(MultiSeries a, MultiSeries const &b) { return a += b; }
  friend MultiSeries operator-(MultiSeries a, MultiSeries const &b) { return a -= b; }

  /// Truncated Cauchy product.
  friend MultiSeries operator*(MultiSeries const &a, MultiSeries const &b) {
    a.check_same(b);
    MultiSeries r(a.order_);
    std::size_t const n = a.radix_.size();
    std::vector<std::vector<Count>> bd;
    bd.reserve(b.terms_.size());
    for (auto const &[k, c] : b.terms_) bd.push_back(a.digits(k));
    std::vector<Count> sum(n + 1);
    for (auto const &[ka, ca] : a.terms_) {
      auto da = a.digits(ka);
      std::size_t idx = 0;
      for (auto const &[kb, cb] : b.terms_) {
        auto const &db = bd[idx++];
        bool ok = true;
        for (std::size_t t = 0; t < n && ok; ++t) {
          sum[t] = da[t] + db[t];
          ok = sum[t] < a.radix_[t];
        }
        if (!ok) continue;
        sum[n] = da[n] + db[n];
        if (sum[n] > kZMax) throw std::overflow_error("MultiSeries: z degree overflow");
        r.add_raw(a.pack(sum), ca * cb);
      }
    }
    return r;
  }
  MultiSeries &operator*=(MultiSeries const &o) { return *this = *this * o; }

  friend bool operator==(MultiSeries const &a, MultiSeries const &b) {
    return a.order_ == b.order_ && a.terms_ == b.terms_;
  }

  MultiDegree decode(Key k) const {
    auto ds = digits(k);
    MultiDegree d;
    d.z_deg = ds.back();
    d.x0_deg = ds[0];
    for (std::size_t t = 0; t < levels_.size(); ++t) d.set_x(levels_[t], ds[t + 1]);
    return d;
  }
  Key encode(MultiDegree const &d) const {
    std::vector<Count> ds(radix_.size() + 1, 0);
    ds[0] = d.x0_deg;
    for (std::size_t t = 0; t < levels_.size(); ++t) ds[t + 1] = d.x(levels_[t]);
    ds.back() = d.z_deg;
    if (d.z_deg > kZMax) throw std::overflow_error("MultiSeries: z degree overflow");
    return pack(ds);
  }

private:
  void check_same(MultiSeries const &o) const {
    if (!(order_ == o.order_)) throw std::invalid_argument("MultiSeries: truncation order mismatch");
  }
  void add_raw(Key k, BigInt const &c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  // digits: [x0, x_levels..., z]
  std::vector<Count> digits(Key k) const {
    std::vector<Count> ds(radix_.size() + 1);
    ds.back() = static_cast<Count>(k & static_cast<Key>(kZMax));
    Key rest = k >> kZBits;
    for (std::size_t t = 0; t < radix_.size(); ++t) {
      ds[t] = static_cast<Count>(rest % static_cast<Key>(radix_[t]));
      rest /= static_cast<Key>(radix_[t]);
    }
    return ds;
  }
  Key pack(std::vector<Count> const &ds) const {
    Key x = 0;
    for (std::size_t t = radix_.size(); t-- > 0;) x = x * static_cast<Key>(radix_[t]) + static_cast<Key>(ds[t]);
    return (x << kZBits) | static_cast<Key>(ds.back());
  }

  TruncationOrder order_;
  std::vector<Level> levels_;
  std::vector<Count> radix_; // x0 first, then each level in increasing order
  std::map<Key, BigInt> terms_;
};

/// Generalised binomial coefficient C(e, k) for any integer e and k >= 0.
inline BigInt binomial(Count e, Count k) {
  BigInt num = 1, den = 1;
  for (Count i = 0; i < k; ++i) {
    num *= BigInt(e - i);
    den *= BigInt(i + 1);
  }
  return num / den;
}

/// (1 + c x^d)^e expanded up to the truncation order; e may be negative.
inline MultiSeries expand_factor(BigInt const &c, MultiDegree const &d, Count e,
                                 TruncationOrder const &order) {
  if (d.x0_deg == 0 && d.x_deg.empty())
    throw std::invalid_argument("expand_factor: the monomial must involve an x variable");
  MultiSeries s(order);
  BigInt ck = 1;
  for (Count k = 0;; ++k) {
    MultiDegree dk(k * d.z_deg, k * d.x0_deg);
    for (auto const &[a, x] : d.x_deg) dk.set_x(a, k * x);
    if (!order.contains(dk)) break;
    s.add_term(dk, binomial(e, k) * ck);
    ck *= c;
    if (e >= 0 && k >= e) break;
  }
  return s;
}

} // namespace parahilb
