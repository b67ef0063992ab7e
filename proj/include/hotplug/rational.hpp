#pragma once

#include <string>

namespace hotplug {

/// Exact rational with int64 numerator/denominator, always stored reduced
/// with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long long num, long long den = 1);

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// "7/12", or "3" when the denominator is 1.
    std::string str() const;

    /// Decimal rendering with 6 significant digits ("%.6g").
    std::string decimal() const;

private:
    long long num_ = 0;
    long long den_ = 1;
};

}  // namespace hotplug
