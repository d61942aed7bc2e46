#include "rnlab/npower_rational.hpp"

#include <stdexcept>

namespace rnlab {

BigInt ipow(long long base, unsigned long exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent != 0) {
    if (exponent & 1UL) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

NPowerRational::NPowerRational(int base) : base_(base) {
  if (base < 2) throw std::invalid_argument("NPowerRational base must be >= 2");
}

NPowerRational::NPowerRational(int base, BigInt numerator, unsigned long exponent)
    : base_(base), numerator_(std::move(numerator)), exponent_(exponent) {
  if (base < 2) throw std::invalid_argument("NPowerRational base must be >= 2");
  canonicalize();
}

void NPowerRational::canonicalize() {
  if (numerator_ == 0) {
    exponent_ = 0;
    return;
  }
  while (exponent_ > 0) {
    BigInt q;
    BigInt r;
    boost::multiprecision::divide_qr(numerator_, BigInt(base_), q, r);
    if (r != 0) break;
    numerator_ = std::move(q);
    --exponent_;
  }
}

void NPowerRational::check_base(const NPowerRational& o) const {
  if (o.base_ != base_) throw std::invalid_argument("NPowerRational base mismatch");
}

NPowerRational NPowerRational::operator+(const NPowerRational& o) const {
  check_base(o);
  const unsigned long e = std::max(exponent_, o.exponent_);
  BigInt m = numerator_ * ipow(base_, e - exponent_) + o.numerator_ * ipow(base_, e - o.exponent_);
  return NPowerRational(base_, std::move(m), e);
}

NPowerRational NPowerRational::operator-() const { return NPowerRational(base_, -numerator_, exponent_); }

NPowerRational NPowerRational::operator-(const NPowerRational& o) const { return *this + (-o); }

NPowerRational NPowerRational::operator*(const NPowerRational& o) const {
  check_base(o);
  return NPowerRational(base_, numerator_ * o.numerator_, exponent_ + o.exponent_);
}

NPowerRational NPowerRational::scaled(long long k) const {
  if (k >= 0) {
    const auto up = static_cast<unsigned long>(k);
    if (up <= exponent_) return NPowerRational(base_, numerator_, exponent_ - up);
    return NPowerRational(base_, numerator_ * ipow(base_, up - exponent_), 0);
  }
  return NPowerRational(base_, numerator_, exponent_ + static_cast<unsigned long>(-k));
}

std::string NPowerRational::to_string() const {
  if (exponent_ == 0) return numerator_.str();
  return numerator_.str() + "/" + std::to_string(base_) + "^" + std::to_string(exponent_);
}

}  // namespace rnlab
