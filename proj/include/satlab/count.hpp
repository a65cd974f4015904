#ifndef SATLAB_COUNT_HPP
#define SATLAB_COUNT_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace satlab {

/// Exact nonnegative integer, 128 bits wide. Every arithmetic operation is
/// checked; leaving the range throws OverflowError instead of wrapping.
class Count {
public:
  using value_type = unsigned __int128;

  constexpr Count() = default;
  constexpr Count(std::uint64_t v) : v_(v) {}

  static constexpr Count from_raw(value_type v) {
    Count c;
    c.v_ = v;
    return c;
  }

  static Count max() { return from_raw(~value_type{0}); }

  constexpr value_type raw() const { return v_; }

  bool fits_u64() const { return v_ <= UINT64_MAX; }

  std::uint64_t to_u64() const {
    if (!fits_u64())
      throw OverflowError("count " + to_string() + " does not fit in 64 bits");
    return static_cast<std::uint64_t>(v_);
  }

  Count &operator+=(Count o) {
    if (__builtin_add_overflow(v_, o.v_, &v_))
      throw OverflowError("count addition overflows 128 bits");
    return *this;
  }

  Count &operator-=(Count o) {
    if (o.v_ > v_)
      throw OverflowError("count subtraction would go negative");
    v_ -= o.v_;
    return *this;
  }

  Count &operator*=(Count o) {
    if (__builtin_mul_overflow(v_, o.v_, &v_))
      throw OverflowError("count multiplication overflows 128 bits");
    return *this;
  }

  /// Exact division; throws DomainError when `o` does not divide the value.
  Count exact_div(Count o) const {
    if (o.v_ == 0)
      throw DomainError("division by zero");
    if (v_ % o.v_ != 0)
      throw DomainError(to_string() + " is not divisible by " + o.to_string());
    return from_raw(v_ / o.v_);
  }

  Count floor_div(Count o) const {
    if (o.v_ == 0)
      throw DomainError("division by zero");
    return from_raw(v_ / o.v_);
  }

  friend Count operator+(Count a, Count b) { return a += b; }
  friend Count operator-(Count a, Count b) { return a -= b; }
  friend Count operator*(Count a, Count b) { return a *= b; }

  friend constexpr bool operator==(Count a, Count b) = default;
  friend constexpr std::strong_ordering operator<=>(Count a, Count b) {
    return a.v_ <=> b.v_;
  }

  std::string to_string() const {
    if (v_ == 0)
      return "0";
    std::string out;
    value_type x = v_;
    while (x != 0) {
      out.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
      x /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  /// Parses a decimal string of digits only.
  static Count parse(std::string_view text) {
    if (text.empty())
      throw ParameterError("empty decimal count");
    Count c;
    for (char ch : text) {
      if (ch < '0' || ch > '9')
        throw ParameterError("invalid decimal count '" + std::string(text) + "'");
      c *= 10;
      c += static_cast<std::uint64_t>(ch - '0');
    }
    return c;
  }

  friend std::ostream &operator<<(std::ostream &os, Count c) {
    return os << c.to_string();
  }

private:
  value_type v_ = 0;
};

/// Binomial coefficient C(n, k); zero when k > n.
inline Count binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  // C(n, i) = C(n, i-1) * (n-i+1) / i keeps every partial result integral.
  Count c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c *= n - k + i;
    c = c.exact_div(i);
  }
  return c;
}

/// Falling factorial x (x-1) ... (x-k+1); 1 for k = 0 and 0 for k > x.
inline Count falling_factorial(std::uint64_t x, std::uint64_t k) {
  if (k > x)
    return 0;
  Count c = 1;
  for (std::uint64_t i = 0; i < k; ++i)
    c *= x - i;
  return c;
}

inline Count power(Count base, std::uint64_t exp) {
  Count r = 1;
  for (std::uint64_t i = 0; i < exp; ++i)
    r *= base;
  return r;
}

/// Nonnegative rational num/den, used where a bound is not integral.
struct Rational {
  Count num = 0;
  Count den = 1;

  /// Smallest integer not below the value.
  Count ceil() const {
    Count q = num.floor_div(den);
    return q * den == num ? q : q + 1;
  }

  /// value <= c, compared without rounding.
  bool at_most(Count c) const { return num <= c * den; }

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.num * b.den == b.num * a.den;
  }
};

} // namespace satlab

template <> struct std::hash<satlab::Count> {
  std::size_t operator()(satlab::Count c) const noexcept {
    auto v = c.raw();
    return std::hash<std::uint64_t>{}(static_cast<std::uint64_t>(v) ^
                                      static_cast<std::uint64_t>(v >> 64) * 0x9e3779b97f4a7c15ULL);
  }
};

#endif
