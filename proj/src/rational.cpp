#include "hotplug/rational.hpp"

#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "hotplug/combinatorics.hpp"

namespace hotplug {

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)), checked_mul(den_, o.den_));
}

Rational Rational::operator-(const Rational& o) const {
    return *this + Rational(-o.num_, o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return Rational(checked_mul(num_, o.den_), checked_mul(den_, o.num_));
}

bool Rational::operator<(const Rational& o) const {
    return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::decimal() const {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", value());
    return buf;
}

}  // namespace hotplug
