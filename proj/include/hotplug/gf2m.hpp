#pragma once

#include <cstdint>
#include <vector>

namespace hotplug {

/// GF(2^m) arithmetic via log/antilog tables, 1 <= m <= 16. The reduction
/// polynomial is a fixed primitive polynomial per m, so tables are
/// deterministic given m alone.
class Field {
public:
    explicit Field(int m);

    int m() const { return m_; }
    std::uint32_t order() const { return order_; }
    std::uint32_t reduction_poly() const { return poly_; }

    std::uint16_t add(std::uint16_t a, std::uint16_t b) const { return a ^ b; }
    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const;
    std::uint16_t inv(std::uint16_t a) const;
    std::uint16_t div(std::uint16_t a, std::uint16_t b) const { return mul(a, inv(b)); }
    std::uint16_t pow(std::uint16_t a, long long e) const;

    static std::uint32_t primitive_polynomial(int m);

private:
    int m_;
    std::uint32_t order_;
    std::uint32_t poly_;
    std::vector<std::uint16_t> exp_;  // exp_[i] = alpha^i, length 2*(order-1)
    std::vector<std::int32_t> log_;  // log_[x] for x != 0
};

}  // namespace hotplug
