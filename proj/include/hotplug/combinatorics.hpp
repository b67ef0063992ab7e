#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hotplug {

/// Sorted set of 1-based points. All subset helpers below assume sorted,
/// duplicate-free input and produce sorted output.
using PointSet = std::vector<int>;

/// Binomial coefficient C(n,k) computed multiplicatively with exact integer
/// division at every step. Returns 0 for k < 0 or k > n. Throws
/// std::overflow_error if the result (or an intermediate product) exceeds
/// the int64 range.
long long binomial(long long n, long long k);

/// a*b with overflow check.
long long checked_mul(long long a, long long b);

/// a+b with overflow check.
long long checked_add(long long a, long long b);

/// Exact quotient a/b; throws std::domain_error when b does not divide a.
long long exact_div(long long a, long long b);

/// All k-subsets of {1..n} in lexicographic order.
std::vector<PointSet> k_subsets(int n, int k);

/// All k-subsets of an arbitrary sorted universe, in lexicographic order.
std::vector<PointSet> k_subsets_of(const PointSet& universe, int k);

/// 1-based lexicographic rank of `subset` among all |subset|-subsets of
/// `universe`. Throws if subset is not contained in universe.
long long lex_rank(const PointSet& universe, const PointSet& subset);

bool is_subset(const PointSet& a, const PointSet& b);
PointSet set_intersection(const PointSet& a, const PointSet& b);
PointSet set_difference(const PointSet& a, const PointSet& b);
PointSet set_union(const PointSet& a, const PointSet& b);
bool sets_intersect(const PointSet& a, const PointSet& b);

/// Renders {1,2,5,6} as "1256" when every point is a single digit,
/// otherwise as "1.2.13".
std::string format_set(const PointSet& s);

/// Parses "2,4,6" (or "246"-free form is not accepted) into a sorted set.
PointSet parse_set(const std::string& text);

}  // namespace hotplug
