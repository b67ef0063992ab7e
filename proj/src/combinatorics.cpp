#include "hotplug/combinatorics.hpp"
#include <limits>

#include <algorithm>
#include <charconv>
#include <sstream>
#include <string>

namespace hotplug {

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

long long exact_div(long long a, long long b) {
    if (b == 0) throw std::domain_error("division by zero");
    if (a % b != 0) throw std::domain_error("quotient is not an integer");
    return a / b;
}

long long binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (long long i = 1; i <= k; ++i) {
        // The running product result*(n-k+i) is divisible by i.
        result = result * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
        if (result > static_cast<unsigned __int128>(std::numeric_limits<long long>::max()))
            throw std::overflow_error("binomial coefficient exceeds the int64 range");
    }
    return static_cast<long long>(result);
}

std::vector<PointSet> k_subsets(int n, int k) {
    PointSet universe(n);
    for (int i = 0; i < n; ++i) universe[i] = i + 1;
    return k_subsets_of(universe, k);
}

std::vector<PointSet> k_subsets_of(const PointSet& universe, int k) {
    const int n = static_cast<int>(universe.size());
    std::vector<PointSet> out;
    if (k < 0 || k > n) return out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        PointSet s(k);
        for (int i = 0; i < k; ++i) s[i] = universe[idx[i]];
        out.push_back(std::move(s));
        int p = k - 1;
        while (p >= 0 && idx[p] == n - k + p) --p;
        if (p < 0) break;
        ++idx[p];
        for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
    return out;
}

long long lex_rank(const PointSet& universe, const PointSet& subset) {
    const int n = static_cast<int>(universe.size());
    const int k = static_cast<int>(subset.size());
    long long rank = 0;
    int prev = -1;
    for (int p = 0; p < k; ++p) {
        auto it = std::lower_bound(universe.begin(), universe.end(), subset[p]);
        if (it == universe.end() || *it != subset[p])
            throw std::invalid_argument("lex_rank: subset element not in universe");
        const int idx = static_cast<int>(it - universe.begin());
        for (int q = prev + 1; q < idx; ++q) rank = checked_add(rank, binomial(n - q - 1, k - p - 1));
        prev = idx;
    }
    return rank + 1;
}

bool is_subset(const PointSet& a, const PointSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

PointSet set_intersection(const PointSet& a, const PointSet& b) {
    PointSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

PointSet set_difference(const PointSet& a, const PointSet& b) {
    PointSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

PointSet set_union(const PointSet& a, const PointSet& b) {
    PointSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool sets_intersect(const PointSet& a, const PointSet& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia == *ib) return true;
        if (*ia < *ib)
            ++ia;
        else
            ++ib;
    }
    return false;
}

std::string format_set(const PointSet& s) {
    bool single_digit = std::all_of(s.begin(), s.end(), [](int p) { return p >= 0 && p <= 9; });
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (!single_digit && i > 0) out += '.';
        out += std::to_string(s[i]);
    }
    return out;
}

PointSet parse_set(const std::string& text) {
    PointSet out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("parse_set: bad element '" + tok + "'");
        out.push_back(value);
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw std::invalid_argument("parse_set: duplicate element");
    return out;
}

}  // namespace hotplug
