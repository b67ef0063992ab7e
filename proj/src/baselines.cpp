#include "hotplug/baselines.hpp"

#include <stdexcept>

namespace hotplug {

namespace {

void check_ratio(const TradeoffPoint& p) {
    if (p.memory_ratio > Rational(1) || p.memory_ratio < Rational(0) || p.rate < Rational(0))
        throw std::domain_error("trade-off point outside the valid range for " + p.scheme);
}

void check_a_bounds(const TDesign& d, const std::vector<long long>& a_s) {
    if (static_cast<int>(a_s.size()) != d.t - 1)
        throw std::invalid_argument("expected t-1 multiplicities");
    for (int s = 1; s <= d.t - 1; ++s)
        if (a_s[s - 1] < 0 || a_s[s - 1] > lambda_st(d, s))
            throw std::out_of_range("a_" + std::to_string(s) + " exceeds its bound");
}

std::string a_descriptor(const std::vector<long long>& a_s) {
    std::string out;
    for (size_t s = 1; s <= a_s.size(); ++s) {
        if (!out.empty()) out += ';';
        out += "a[" + std::to_string(s) + "]=" + std::to_string(a_s[s - 1]);
    }
    return out;
}

}  // namespace

TradeoffPoint mt_point(int K, int K_prime, int N, int t) {
    if (t < 1 || t > K_prime || K_prime > K) throw std::out_of_range("mt_point: need 1 <= t <= K' <= K");
    (void)N;  // rates are normalized by file size; N only scales M
    TradeoffPoint p;
    p.scheme = "mt";
    p.params = "t=" + std::to_string(t);
    p.memory_ratio = Rational(binomial(K - 1, t - 1), binomial(K, t));
    p.rate = Rational(binomial(K_prime, t + 1), binomial(K_prime, t));
    check_ratio(p);
    return p;
}

TradeoffPoint crr_mt_point(int K, int K_prime, int N, int t) {
    if (t < 1 || t > K_prime || K_prime > K)
        throw std::out_of_range("crr_mt_point: need 1 <= t <= K' <= K");
    (void)N;
    const long long denom = binomial(K_prime, t) - binomial(K_prime - 1, t - 1) + binomial(K - 1, t - 1);
    TradeoffPoint p;
    p.scheme = "crr_mt";
    p.params = "t=" + std::to_string(t);
    p.memory_ratio = Rational(binomial(K - 1, t - 1), denom);
    p.rate = Rational(binomial(K_prime, t + 1), denom);
    check_ratio(p);
    return p;
}

TradeoffPoint crr_t_point(const TDesign& d, const std::vector<long long>& a_s) {
    check_a_bounds(d, a_s);
    const int t = d.t;
    long long f_prime = 0, z_prime = 0, s_total = 0;
    for (int s = 1; s <= t - 1; ++s) {
        f_prime += checked_mul(a_s[s - 1], binomial(t, s));
        z_prime += checked_mul(a_s[s - 1], binomial(t, s) - binomial(t - 1, s));
        s_total += checked_mul(a_s[s - 1], binomial(t, s + 1));
    }
    if (f_prime == 0) throw std::invalid_argument("crr_t_point: all multiplicities are zero");
    const long long z = lambda_s(d, 1);
    TradeoffPoint p;
    p.scheme = "crr_t";
    p.params = a_descriptor(a_s);
    p.memory_ratio = Rational(z, z + f_prime - z_prime);
    p.rate = Rational(s_total, z + f_prime - z_prime);
    check_ratio(p);
    return p;
}

TradeoffPoint rr_point(const TDesign& d, const std::vector<long long>& a_s, long long removed) {
    check_a_bounds(d, a_s);
    const int t = d.t;
    long long row_count = 0, s_total = 0;
    for (int s = 1; s <= t - 1; ++s) {
        row_count += checked_mul(a_s[s - 1], binomial(t, s));
        s_total += checked_mul(a_s[s - 1], binomial(t, s + 1));
    }
    const long long z = lambda_s(d, 1);
    if (row_count <= z) throw std::invalid_argument("rr_point: row count must exceed lambda_1");
    if (removed < 0 || removed > s_total)
        throw std::out_of_range("rr_point: removed label count out of range");
    TradeoffPoint p;
    p.scheme = "rr";
    p.params = a_descriptor(a_s) + ";removed=" + std::to_string(removed);
    p.memory_ratio = Rational(z, row_count);
    p.rate = Rational(s_total - removed, row_count);
    check_ratio(p);
    return p;
}

}  // namespace hotplug
