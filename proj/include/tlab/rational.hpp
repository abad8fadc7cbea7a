#ifndef TLAB_RATIONAL_HPP
#define TLAB_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "tlab/errors.hpp"

namespace tlab {

/// Arbitrary-precision exact rational, always held in reduced form.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Parses "p/q", "-p/q" or a plain integer.
inline Rational parse_rational(std::string_view text) {
  auto digits_ok = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
      s.remove_prefix(1);
    if (s.empty())
      return false;
    for (char c : s)
      if (c < '0' || c > '9')
        return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den) || den.front() == '-' || den.front() == '+')
    throw InvalidInput("not a rational: '" + std::string(text) + "'");
  const BigInt n{std::string(num.front() == '+' ? num.substr(1) : num)};
  const BigInt d{std::string(den)};
  if (d == 0)
    throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

/// Canonical text form: "p/q", or "p" when the value is an integer.
inline std::string to_string(const Rational &q) { return q.str(); }

inline BigInt floor_div(const Rational &q) {
  BigInt n = numerator(q), d = denominator(q);
  BigInt f = n / d;
  if (n < 0 && f * d != n)
    f -= 1;
  return f;
}

inline BigInt ceil_div(const Rational &q) { return -floor_div(-q); }

/// Raised by SmallRational when a result does not fit in 64 bits.
class RationalOverflow : public Error {
public:
  RationalOverflow() : Error("64-bit rational overflow") {}
};

/// Exact rational over int64 with overflow detection.
///
/// Every operation either returns the exact reduced result or throws
/// RationalOverflow; callers retry with Rational when that happens. Hot
/// enumeration loops use it because the values they touch have small
/// denominators.
class SmallRational {
public:
  constexpr SmallRational() = default;
  constexpr SmallRational(std::int64_t n) : num_(n) {} // NOLINT(implicit)
  SmallRational(std::int64_t n, std::int64_t d) {
    if (d == 0)
      throw InvalidInput("zero denominator");
    if (d < 0) {
      n = neg(n);
      d = neg(d);
    }
    const std::int64_t g = std::gcd(n, d);
    num_ = n / g;
    den_ = d / g;
  }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  Rational to_rational() const { return Rational(num_, den_); }

  static SmallRational from_rational(const Rational &q) {
    const BigInt n = numerator(q), d = denominator(q);
    const BigInt lim = INT64_MAX;
    if (n > lim || n < -lim || d > lim)
      throw RationalOverflow();
    return raw(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
  }

  friend SmallRational operator-(SmallRational a) {
    a.num_ = neg(a.num_);
    return a;
  }

  friend SmallRational operator+(SmallRational a, SmallRational b) {
    if (a.den_ == 1 && b.den_ == 1)
      return raw(add(a.num_, b.num_), 1);
    const std::int64_t g = std::gcd(a.den_, b.den_);
    if (g == 1)
      return raw(add(mul(a.num_, b.den_), mul(b.num_, a.den_)), mul(a.den_, b.den_));
    const std::int64_t t = add(mul(a.num_, b.den_ / g), mul(b.num_, a.den_ / g));
    const std::int64_t g2 = std::gcd(t, g);
    return raw(t / g2, mul(a.den_ / g, b.den_ / g2));
  }

  friend SmallRational operator-(SmallRational a, SmallRational b) { return a + (-b); }

  friend SmallRational operator*(SmallRational a, SmallRational b) {
    if (a.num_ == 0 || b.num_ == 0)
      return SmallRational();
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    return raw(mul(a.num_ / g1, b.num_ / g2), mul(a.den_ / g2, b.den_ / g1));
  }

  friend SmallRational operator/(SmallRational a, SmallRational b) {
    if (b.num_ == 0)
      throw InvalidInput("division by zero");
    SmallRational inv;
    if (b.num_ < 0) {
      inv.num_ = neg(b.den_);
      inv.den_ = neg(b.num_);
    } else {
      inv.num_ = b.den_;
      inv.den_ = b.num_;
    }
    return a * inv;
  }

  SmallRational &operator+=(SmallRational o) { return *this = *this + o; }
  SmallRational &operator-=(SmallRational o) { return *this = *this - o; }
  SmallRational &operator*=(SmallRational o) { return *this = *this * o; }
  SmallRational &operator/=(SmallRational o) { return *this = *this / o; }

  friend bool operator==(SmallRational a, SmallRational b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend auto operator<=>(SmallRational a, SmallRational b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

  friend std::ostream &operator<<(std::ostream &os, SmallRational q) {
    os << q.num_;
    if (q.den_ != 1)
      os << '/' << q.den_;
    return os;
  }

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;

  static SmallRational raw(std::int64_t n, std::int64_t d) {
    SmallRational q;
    q.num_ = n;
    q.den_ = d;
    return q;
  }
  static std::int64_t neg(std::int64_t v) {
    if (v == INT64_MIN)
      throw RationalOverflow();
    return -v;
  }
  static std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r) || r == INT64_MIN)
      throw RationalOverflow();
    return r;
  }
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r) || r == INT64_MIN)
      throw RationalOverflow();
    return r;
  }
};

inline Rational to_rational(const Rational &q) { return q; }
inline Rational to_rational(SmallRational q) { return q.to_rational(); }

/// Runs `fn.template operator()<SmallRational>()` and retries with Rational
/// on overflow. Both instantiations compute the same exact value.
template <class Fn> auto with_exact_field(Fn &&fn) {
  try {
    return to_rational(fn.template operator()<SmallRational>());
  } catch (const RationalOverflow &) {
    return to_rational(fn.template operator()<Rational>());
  }
}

} // namespace tlab

#endif // TLAB_RATIONAL_HPP
