#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace rnlab {

using BigInt = boost::multiprecision::cpp_int;

/// An exact element m / n^e of Z[1/n] for a fixed base n >= 2.
///
/// Canonical: e == 0 or n does not divide m. Values with different bases
/// never mix; arithmetic on mismatched bases throws std::invalid_argument.
class NPowerRational {
 public:
  explicit NPowerRational(int base = 2);
  NPowerRational(int base, BigInt numerator, unsigned long exponent = 0);

  int base() const noexcept { return base_; }
  const BigInt& numerator() const noexcept { return numerator_; }
  unsigned long exponent() const noexcept { return exponent_; }

  bool is_zero() const noexcept { return numerator_ == 0; }
  bool is_integer() const noexcept { return exponent_ == 0; }

  NPowerRational operator+(const NPowerRational& o) const;
  NPowerRational operator-(const NPowerRational& o) const;
  NPowerRational operator-() const;
  NPowerRational operator*(const NPowerRational& o) const;
  /// Multiply by n^k for any integer k.
  NPowerRational scaled(long long k) const;

  std::string to_string() const;

  friend bool operator==(const NPowerRational&, const NPowerRational&) = default;

 private:
  void canonicalize();
  void check_base(const NPowerRational& o) const;

  int base_;
  BigInt numerator_;
  unsigned long exponent_ = 0;
};

BigInt ipow(long long base, unsigned long exponent);

}  // namespace rnlab
