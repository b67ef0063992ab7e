#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hotplug/design.hpp"
#include "hotplug/pda.hpp"

namespace hotplug {

/// Star/null array with named rows and columns (the placement array and the
/// user-access array). Immutable by convention after construction.
struct StarArray {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> star;  // row-major, 1 = star
    std::vector<std::string> row_names;
    std::vector<std::string> col_names;

    bool at(int r, int c) const { return star[static_cast<size_t>(r) * cols + c] != 0; }
    void set(int r, int c, bool value) { star[static_cast<size_t>(r) * cols + c] = value ? 1 : 0; }
    long long column_stars(int c) const;

    /// One line per row, '*' for star, '.' for null, cells separated by '|'.
    std::string dump() const;
};

/// Row identifier of a delivery array: a subset Y of {1..t} plus a copy index.
struct DeliveryRowId {
    PointSet subset;
    int copy = 1;
    auto operator<=>(const DeliveryRowId&) const = default;
    std::string str() const;
};

/// The per-access-degree delivery array B_j together with its structured
/// row/column identifiers.
struct BjArray {
    int j = 0;
    std::vector<DeliveryRowId> rows;  // |Y| ascending, then Y lex, then copy
    std::vector<PointSet> cols;       // r-subsets U with |U n [t]| = j, lex
    Pda array;
};

/// Delivery multiplicities a(s,j): how many copies of each size-s row enter
/// the degree-j delivery array. Bounds: 0 <= a(s,j) <= lambda_st(s).
struct DeliveryParams {
    // a[j-1][s-1] for j in [1..r], s in [1..t-j]. The j-th entry is empty
    // when t - j < 1.
    std::vector<std::vector<long long>> a;

    long long at(int s, int j) const;
    int degree() const { return static_cast<int>(a.size()); }
    bool all_zero(int j) const;

    static DeliveryParams zeros(int t, int r);
    /// Parses "1,1=2,2,1=1,1,2=1" (each entry s,j=value).
    static DeliveryParams parse(const std::string& text, int t, int r);
    /// "a[1,1]=2;a[2,1]=1;a[1,2]=1"
    std::string str() const;
};

struct HppdaParams {
    int C = 0;        // caches (= v)
    int C_prime = 0;  // online caches (= t)
    int r = 0;        // access degree
    long long F = 0;  // blocks
    long long Z_c = 0;
    long long Z = 0;
    std::vector<long long> F_prime;  // per j (index j-1)
    std::vector<long long> Z_prime;
    std::vector<long long> S;

    /// Subpacketization D = F'_r - Z'_r + Z: the MDS code dimension.
    long long subpacketization() const;
    long long total_transmissions() const;
};

/// The full construction: placement array, user-access array and the family
/// of delivery arrays, built from a t-design. Immutable after construction;
/// share freely across threads.
struct GeneralizedHpPda {
    TDesign design;
    int r = 0;
    DeliveryParams a;
    StarArray Pc;
    StarArray P;
    std::vector<std::optional<BjArray>> B;  // index j-1; nullopt when the row set is empty
    HppdaParams params;
};

/// Placement array: rows = blocks, columns = points; star where the point
/// lies in the block. Every column carries lambda_1 stars.
StarArray build_Pc(const TDesign& d);

/// User-access array: rows = blocks, columns = r-subsets of the point set in
/// lexicographic order; star where the subset meets the block. Requires
/// 1 <= r <= t so that the per-column star count is the design invariant
/// sum_{i=1..r} (-1)^{i+1} C(r,i) lambda_i.
StarArray build_P(const TDesign& d, int r);

/// Per-column star count of P by inclusion-exclusion (the Z_j quantity for
/// a user connected to j online caches when j <= t).
long long access_star_count(const TDesign& d, int j);

/// The degree-j delivery array for the given multiplicities a_j (indexed by
/// s-1, s in [1..t-j]). Throws when a bound is exceeded or the row set is
/// empty.
BjArray build_Bj(const TDesign& d, int r, int j, const std::vector<long long>& a_j);

GeneralizedHpPda build_hppda(const TDesign& d, int r, const DeliveryParams& a);

/// Closed-form parameters of the construction, available without building
/// the arrays.
HppdaParams hppda_params(const TDesign& d, int r, const DeliveryParams& a);

/// Relabeling that sends the online set I (ascending) to 1..t and the
/// remaining points (ascending) to t+1..v.
struct OnlineRelabeling {
    std::vector<int> fwd;  // fwd[p-1], p in 1..v
    std::vector<int> inv;
    PointSet apply(const PointSet& s) const;
    PointSet invert(const PointSet& s) const;
};
OnlineRelabeling relabel_online(int v, const PointSet& I);

/// All r-subsets U of {1..v} with |U n I| = j, ordered so that their
/// relabeled images are lexicographic (which aligns them column-for-column
/// with the delivery array).
std::vector<PointSet> tau(int v, int r, const PointSet& I, int j);

/// The delivery row blocks for online set I and degree j: for s = 1..t-j and
/// each H in C(I,s) in lexicographic order, the first a(s,j) blocks
/// containing H and avoiding I\H.
std::vector<Block> zeta(const TDesign& d, const PointSet& I, int j, const DeliveryParams& a);

struct FeasibilityReport {
    std::vector<long long> accessible;  // per j: cached + delivered coded subfiles
    bool feasible = true;               // accessible[j] <= accessible[j-1] for j >= 2
    int first_bad_j = 0;
};

/// Total coded subfiles reachable by a degree-j user (cache access plus
/// delivery) and the monotone-chain check that guarantees decodability.
/// The j = 1 value starts the chain unconstrained.
FeasibilityReport feasibility(const TDesign& d, int r, const DeliveryParams& a);
FeasibilityReport feasibility(const GeneralizedHpPda& g);

struct StarMatchReport {
    struct PerJ {
        int j = 0;
        bool empty = false;           // no delivery rows for this degree
        bool containment_ok = true;   // every delivery-array star is a star of the
                                      // restricted access array
        bool online_exact_ok = true;  // delivery-array stars equal the
                                      // online-restricted availability exactly
        std::optional<std::pair<int, int>> containment_mismatch;
        std::optional<std::pair<int, int>> online_mismatch;
    };
    PointSet online_set;
    std::vector<PerJ> per_j;
    bool all_ok() const;
};

/// For one online set I, checks both embedding conditions for every degree:
/// (i) star containment of B_j in [P] restricted to (zeta_j(I), tau_j(I)),
/// and (ii) exact star equality of B_j with the online-restricted
/// availability pattern (cell (A,U) starred iff A meets U n I).
StarMatchReport verify_hppda(const GeneralizedHpPda& g, const PointSet& I);

/// verify_hppda over every online set, in lexicographic order of I.
/// workers <= 1 runs the serial reference; larger values use OpenMP.
std::vector<StarMatchReport> verify_all_online_sets(const GeneralizedHpPda& g, int workers = 1);

}  // namespace hotplug
