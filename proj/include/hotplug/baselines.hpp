#pragma once

#include <string>
#include <vector>

#include "hotplug/design.hpp"
#include "hotplug/rational.hpp"

namespace hotplug {

/// One rate-memory point of a caching scheme, exact.
struct TradeoffPoint {
    std::string scheme;
    std::string params;
    Rational memory_ratio;
    Rational rate;
};

/// Dedicated-cache MDS-placement scheme over C(K,t) coded chunks:
/// (M/N, R) = (C(K-1,t-1)/C(K,t), C(K',t+1)/C(K',t)).
TradeoffPoint mt_point(int K, int K_prime, int N, int t);

/// Same placement with the smaller subpacketization denominator
/// C(K',t) - C(K'-1,t-1) + C(K-1,t-1).
TradeoffPoint crr_mt_point(int K, int K_prime, int N, int t);

/// Single-access t-design scheme: the r = 1 specialization of the
/// multi-access construction. a_s indexed by s-1 for s in [1..t-1].
TradeoffPoint crr_t_point(const TDesign& d, const std::vector<long long>& a_s);

/// t-design scheme with `removed` multicast labels dropped from the delivery
/// array (the removed-set size is an input here, not computed). Requires the
/// row count sum a_s*C(t,s) to exceed lambda_1.
TradeoffPoint rr_point(const TDesign& d, const std::vector<long long>& a_s, long long removed);

}  // namespace hotplug
