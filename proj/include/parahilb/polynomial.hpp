#pragma once

// Univariate polynomials with arbitrary-precision integer coefficients; the
// value type for Poincaré polynomials (variable z) and motives (variable L).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>

namespace parahilb {

using BigInt = boost::multiprecision::cpp_int;

class Poly {
public:
  using Map = std::map<int, BigInt>;

  Poly() = default;
  Poly(long long c) { add_term(0, c); } // NOLINT: constants convert implicitly

  static Poly monomial(int exp, BigInt const &c = 1) {
    Poly p;
    p.add_term(exp, c);
    return p;
  }

  void add_term(int exp, BigInt const &c) {
    if (exp < 0) throw std::invalid_argument("Poly: negative exponent");
    if (c == 0) return;
    auto &slot = terms_[exp];
    slot += c;
    if (slot == 0) terms_.erase(exp);
  }

  BigInt coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigInt(0) : it->second;
  }
  Map const &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

  /// Sum of all coefficients (evaluation at 1).
  BigInt at_one() const {
    BigInt s = 0;
    for (auto const &[e, c] : terms_) s += c;
    return s;
  }

  /// p(x) -> p(x^k).
  Poly dilate(int k) const {
    Poly r;
    for (auto const &[e, c] : terms_) r.add_term(e * k, c);
    return r;
  }

  Poly &operator+=(Poly const &o) {
    for (auto const &[e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly &operator-=(Poly const &o) {
    for (auto const &[e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Poly operator+(Poly a, Poly const &b) { return a += b; }
  friend Poly operator-(Poly a, Poly const &b) { return a -= b; }
  friend Poly operator*(Poly const &a, Poly const &b) {
    Poly r;
    for (auto const &[e1, c1] : a.terms_)
      for (auto const &[e2, c2] : b.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
  }
  friend bool operator==(Poly const &, Poly const &) = default;

  /// Human-readable form, ascending degree: "1+2z^2+z^4", "0" for zero.
  std::string to_string(std::string const &var) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto const &[e, c] : terms_) {
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (c < 0)
        s += "-";
      else if (!first)
        s += "+";
      first = false;
      if (e == 0 || mag != 1) s += mag.str();
      if (e >= 1) s += var;
      if (e >= 2) s += "^" + std::to_string(e);
    }
    return s;
  }

private:
  Map terms_;
};

} // namespace parahilb
