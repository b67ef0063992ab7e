#include "hotplug/design.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hotplug {

std::string TDesign::name() const {
    return std::to_string(t) + "-(" + std::to_string(v) + "," + std::to_string(k) + "," + std::to_string(lambda) +
           ")";
}

std::string DesignViolation::message() const {
    switch (kind) {
        case Kind::BadParameters:
            return "parameters must satisfy v > k >= t >= 1";
        case Kind::BlockSize:
            return "block {" + format_set(witness) + "} has " + std::to_string(actual) + " points, expected " +
                   std::to_string(expected);
        case Kind::DuplicatePoint:
            return "block {" + format_set(witness) + "} repeats a point";
        case Kind::PointOutOfRange:
            return "block {" + format_set(witness) + "} has a point outside 1..v";
        case Kind::DuplicateBlock:
            return "block {" + format_set(witness) + "} appears more than once";
        case Kind::Replication:
            return "t-subset {" + format_set(witness) + "} lies in " + std::to_string(actual) +
                   " blocks, expected " + std::to_string(expected);
        case Kind::BlockCount:
            return "block count is " + std::to_string(actual) + ", expected " + std::to_string(expected);
    }
    return "unknown violation";
}

ValidationOutcome validate_design(int v, std::vector<Block> blocks, int t, long long lambda) {
    if (blocks.empty()) throw std::invalid_argument("validate_design: empty block list");
    if (t < 1) throw std::invalid_argument("validate_design: t must be >= 1");

    auto fail = [](DesignViolation viol) {
        ValidationOutcome out;
        out.violation = std::move(viol);
        return out;
    };

    for (auto& blk : blocks) std::sort(blk.begin(), blk.end());
    const int k = static_cast<int>(blocks.front().size());
    if (!(v > k && k >= t)) return fail({DesignViolation::Kind::BadParameters, {}, 0, 0});

    for (const auto& blk : blocks) {
        if (static_cast<int>(blk.size()) != k)
            return fail({DesignViolation::Kind::BlockSize, blk, k, static_cast<long long>(blk.size())});
        if (std::adjacent_find(blk.begin(), blk.end()) != blk.end())
            return fail({DesignViolation::Kind::DuplicatePoint, blk, 0, 0});
        if (blk.front() < 1 || blk.back() > v) return fail({DesignViolation::Kind::PointOutOfRange, blk, 0, 0});
    }

    std::sort(blocks.begin(), blocks.end());
    if (auto it = std::adjacent_find(blocks.begin(), blocks.end()); it != blocks.end())
        return fail({DesignViolation::Kind::DuplicateBlock, *it, 0, 0});

    const long long expected_b = exact_div(checked_mul(lambda, binomial(v, t)), binomial(k, t));
    if (static_cast<long long>(blocks.size()) != expected_b)
        return fail(
            {DesignViolation::Kind::BlockCount, {}, expected_b, static_cast<long long>(blocks.size())});

    for (const auto& T : k_subsets(v, t)) {
        long long count = 0;
        for (const auto& blk : blocks)
            if (is_subset(T, blk)) ++count;
        if (count != lambda) return fail({DesignViolation::Kind::Replication, T, lambda, count});
    }

    ValidationOutcome out;
    out.design = TDesign{v, k, t, lambda, std::move(blocks)};
    return out;
}

long long lambda_s(const TDesign& d, int s) {
    if (s < 0 || s > d.t) throw std::out_of_range("lambda_s: s must be in [0, t]");
    return exact_div(checked_mul(d.lambda, binomial(d.v - s, d.t - s)), binomial(d.k - s, d.t - s));
}

long long lambda_ij(const TDesign& d, int i, int j) {
    if (i < 0 || j < 0 || i + j > d.t) throw std::out_of_range("lambda_ij: requires i + j <= t");
    return exact_div(checked_mul(d.lambda, binomial(d.v - i - j, d.k - i)), binomial(d.v - d.t, d.k - d.t));
}

long long lambda_st(const TDesign& d, int s) {
    if (s < 1 || s > d.t) throw std::out_of_range("lambda_st: s must be in [1, t]");
    return exact_div(checked_mul(d.lambda, binomial(d.v - d.t, d.k - s)), binomial(d.v - d.t, d.k - d.t));
}

std::vector<Block> blocks_for(const TDesign& d, const PointSet& H, const PointSet& I) {
    if (static_cast<int>(I.size()) != d.t) throw std::invalid_argument("blocks_for: |I| must equal t");
    if (!is_subset(H, I)) throw std::invalid_argument("blocks_for: H must be a subset of I");
    if (H.empty() || H.size() >= I.size())
        throw std::invalid_argument("blocks_for: H must be a nonempty proper subset of I");
    const PointSet avoid = set_difference(I, H);
    std::vector<Block> out;
    for (const auto& blk : d.blocks)
        if (is_subset(H, blk) && !sets_intersect(avoid, blk)) out.push_back(blk);
    return out;  // blocks are stored lexicographically, so the result is too
}

TDesign complete_design(int v, int k, int t) {
    if (!(v > k && k >= t && t >= 1)) throw std::invalid_argument("complete_design: need v > k >= t >= 1");
    TDesign d;
    d.v = v;
    d.k = k;
    d.t = t;
    d.lambda = binomial(v - t, k - t);
    d.blocks = k_subsets(v, k);
    return d;
}

namespace catalog {

TDesign design_3_8_4_1() {
    std::vector<Block> blocks = {{1, 2, 5, 6}, {3, 4, 7, 8}, {2, 4, 6, 8}, {1, 3, 5, 7}, {1, 4, 5, 8},
                                 {2, 3, 6, 7}, {1, 2, 3, 4}, {5, 6, 7, 8}, {1, 2, 7, 8}, {3, 4, 5, 6},
                                 {1, 3, 6, 8}, {2, 4, 5, 7}, {1, 4, 6, 7}, {2, 3, 5, 8}};
    auto outcome = validate_design(8, std::move(blocks), 3, 1);
    if (!outcome.ok()) throw std::logic_error("catalog 3-(8,4,1) failed validation");
    return *std::move(outcome.design);
}

TDesign fano_plane() {
    std::vector<Block> blocks = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
    auto outcome = validate_design(7, std::move(blocks), 2, 1);
    if (!outcome.ok()) throw std::logic_error("catalog Fano plane failed validation");
    return *std::move(outcome.design);
}

TDesign by_name(const std::string& name) {
    if (name == "3-(8,4,1)") return design_3_8_4_1();
    if (name == "fano" || name == "2-(7,3,1)") return fano_plane();
    if (name.rfind("complete:", 0) == 0) {
        const PointSet params = parse_set(name.substr(9));
        if (params.size() != 3) throw std::invalid_argument("catalog: complete:v,k,t needs three values");
        // parse_set sorts; with t <= k < v the sorted order is (t, k, v).
        return complete_design(params[2], params[1], params[0]);
    }
    throw std::invalid_argument("catalog: unknown design '" + name + "'");
}

std::vector<TDesign> named_designs() {
    return {design_3_8_4_1(), fano_plane()};
}

}  // namespace catalog

ValidationOutcome load_design(std::istream& in) {
    std::string line;
    int v = 0, t = 0;
    long long lambda = 0;
    int k_declared = 0;
    bool have_header = false;
    std::vector<Block> blocks;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::vector<long long> nums;
        long long x;
        while (ss >> x) nums.push_back(x);
        if (!ss.eof())
            throw std::invalid_argument("design file line " + std::to_string(lineno) + ": not a number");
        if (nums.empty()) continue;
        if (!have_header) {
            if (nums.size() != 4)
                throw std::invalid_argument("design file header must be 'v k t lambda'");
            v = static_cast<int>(nums[0]);
            k_declared = static_cast<int>(nums[1]);
            t = static_cast<int>(nums[2]);
            lambda = nums[3];
            have_header = true;
            continue;
        }
        Block blk;
        for (long long p : nums) {
            if (p < 1)
                throw std::invalid_argument("design file line " + std::to_string(lineno) +
                                            ": points are 1-based positive integers");
            blk.push_back(static_cast<int>(p));
        }
        if (!std::is_sorted(blk.begin(), blk.end()))
            throw std::invalid_argument("design file line " + std::to_string(lineno) +
                                        ": block points must be ascending");
        blocks.push_back(std::move(blk));
    }
    if (!have_header) throw std::invalid_argument("design file has no header line");
    if (blocks.empty()) throw std::invalid_argument("design file has no blocks");
    if (static_cast<int>(blocks.front().size()) != k_declared)
        throw std::invalid_argument("design file: declared k does not match first block");
    return validate_design(v, std::move(blocks), t, lambda);
}

ValidationOutcome load_design_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open design file '" + path + "'");
    return load_design(in);
}

void save_design(const TDesign& d, std::ostream& out) {
    out << d.v << ' ' << d.k << ' ' << d.t << ' ' << d.lambda << '\n';
    for (const auto& blk : d.blocks) {
        for (size_t i = 0; i < blk.size(); ++i) out << (i ? " " : "") << blk[i];
        out << '\n';
    }
}

}  // namespace hotplug
