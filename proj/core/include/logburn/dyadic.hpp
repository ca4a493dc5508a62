#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace logburn {

using BigInt = boost::multiprecision::cpp_int;

/// Exact number p / 2^k with p odd (or p = 0 and k = 0). Integers are the
/// values with k = 0.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long long v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Dyadic(BigInt v) : num_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Dyadic(BigInt num, std::uint32_t exp2);

  const BigInt& numerator() const noexcept { return num_; }
  std::uint32_t exponent() const noexcept { return exp2_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return exp2_ == 0; }
  int sign() const noexcept { return num_.sign(); }

  Dyadic half() const;
  Dyadic operator-() const;
  Dyadic& operator+=(const Dyadic& o);
  Dyadic& operator-=(const Dyadic& o);
  Dyadic& operator*=(const Dyadic& o);

  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp2_ == b.exp2_ && a.num_ == b.num_;
  }

  /// "p" for integers, "p/2^k" otherwise.
  std::string str() const;
  /// Inverse of str(); throws ArgumentError on malformed input.
  static Dyadic parse(std::string_view text);

 private:
  void canonicalize();

  BigInt num_ = 0;
  std::uint32_t exp2_ = 0;
};

}  // namespace logburn
