#pragma once

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace fsw {

using bigint = boost::multiprecision::cpp_int;

/// An element of the circle group restricted to rationals, stored as the
/// unique representative num/den with gcd(|num|, den) = 1, den >= 1 and
/// -1/2 < num/den <= 1/2.
class torus_elem {
 public:
  torus_elem() = default;

  torus_elem(bigint num, bigint den) {
    if (den == 0) throw std::invalid_argument("torus_elem: zero denominator");
    if (den < 0) {
      den = -den;
      num = -num;
    }
    bigint g = boost::multiprecision::gcd(boost::multiprecision::abs(num), den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    // shift into (-1/2, 1/2]; mod keeps gcd(num, den) = 1
    num %= den;  // cpp_int % has the sign of the dividend
    if (2 * num > den) num -= den;
    if (2 * num <= -den) num += den;
    num_ = std::move(num);
    den_ = num_ == 0 ? bigint(1) : std::move(den);
  }

  const bigint& num() const noexcept { return num_; }
  const bigint& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }

  /// Order in the circle group; equals the canonical denominator.
  const bigint& order() const noexcept { return den_; }

  /// True iff 4t = 0, i.e. t in {0, 1/4, -1/4, 1/2}.
  bool four_torsion() const { return den_ == 1 || den_ == 2 || den_ == 4; }

  /// True iff t in {1/8, -1/8, 3/8, -3/8}. In canonical form this is just
  /// den = 8 (the numerator is then automatically odd and |num| <= 4).
  bool eighth_class() const { return den_ == 8; }

  friend torus_elem operator+(const torus_elem& a, const torus_elem& b) {
    return torus_elem(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }

  torus_elem operator-() const { return torus_elem(-num_, den_); }

  friend torus_elem operator-(const torus_elem& a, const torus_elem& b) {
    return a + (-b);
  }

  /// k-fold sum.
  torus_elem scaled(const bigint& k) const { return torus_elem(k * num_, den_); }

  friend bool operator==(const torus_elem& a, const torus_elem& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const torus_elem& a, const torus_elem& b) {
    return !(a == b);
  }
  // value order on representatives; used only for deterministic sorting
  friend bool operator<(const torus_elem& a, const torus_elem& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

  friend std::size_t hash_value(const torus_elem& t) {
    std::size_t seed = boost::hash<bigint>()(t.num_);
    boost::hash_combine(seed, boost::hash<bigint>()(t.den_));
    return seed;
  }

 private:
  bigint num_ = 0;
  bigint den_ = 1;
};

inline torus_elem t_add(const torus_elem& a, const torus_elem& b) { return a + b; }

}  // namespace fsw
