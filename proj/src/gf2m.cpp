#include "hotplug/gf2m.hpp"

#include <stdexcept>

namespace hotplug {

std::uint32_t Field::primitive_polynomial(int m) {
    // Primitive polynomials over GF(2), bitmask includes the leading term.
    static const std::uint32_t polys[17] = {
        0,       0x3,    0x7,    0xB,    0x13,   0x25,    0x43,   0x89,  0x11D,
        0x211,   0x409,  0x805,  0x1053, 0x201B, 0x4443,  0x8003, 0x1100B};
    if (m < 1 || m > 16) throw std::out_of_range("Field: extension degree must be in [1, 16]");
    return polys[m];
}

Field::Field(int m) : m_(m), order_(1u << m), poly_(primitive_polynomial(m)) {
    const std::uint32_t n = order_ - 1;
    exp_.assign(2 * n, 0);
    log_.assign(order_, -1);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        exp_[i] = static_cast<std::uint16_t>(x);
        exp_[i + n] = exp_[i];
        if (log_[x] != -1) throw std::logic_error("Field: reduction polynomial is not primitive");
        log_[x] = static_cast<std::int32_t>(i);
        x <<= 1;
        if (x & order_) x ^= poly_;
    }
}

std::uint16_t Field::mul(std::uint16_t a, std::uint16_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

std::uint16_t Field::inv(std::uint16_t a) const {
    if (a == 0) throw std::domain_error("Field: zero has no inverse");
    const std::uint32_t n = order_ - 1;
    return exp_[(n - log_[a]) % n];
}

std::uint16_t Field::pow(std::uint16_t a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw std::domain_error("Field: zero to a negative power");
        return 0;
    }
    const long long n = order_ - 1;
    long long k = (static_cast<long long>(log_[a]) * (e % n)) % n;
    if (k < 0) k += n;
    return exp_[k];
}

}  // namespace hotplug
