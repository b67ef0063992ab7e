#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hotplug/combinatorics.hpp"

namespace hotplug {

using Block = PointSet;

/// A t-(v,k,lambda) combinatorial design: every t-subset of the point set
/// {1..v} lies in exactly `lambda` blocks. Blocks are stored sorted
/// internally and strictly increasing lexicographically, so that index-based
/// block selection is reproducible. Instances are immutable once built and
/// safe to share across threads.
struct TDesign {
    int v = 0;
    int k = 0;
    int t = 0;
    long long lambda = 0;
    std::vector<Block> blocks;

    long long b() const { return static_cast<long long>(blocks.size()); }
    std::string name() const;
};

struct DesignViolation {
    enum class Kind {
        BadParameters,     // v > k >= t >= 1 violated
        BlockSize,         // a block does not have exactly k points
        DuplicatePoint,    // repeated point within one block
        PointOutOfRange,   // point outside 1..v
        DuplicateBlock,    // identical block listed twice
        Replication,       // some t-subset is not in exactly lambda blocks
        BlockCount,        // b != lambda*C(v,t)/C(k,t)
    };
    Kind kind;
    PointSet witness;           // offending block or t-subset
    long long expected = 0;
    long long actual = 0;
    std::string message() const;
};

struct ValidationOutcome {
    std::optional<TDesign> design;
    std::optional<DesignViolation> violation;
    bool ok() const { return design.has_value(); }
};

/// Checks the full t-design contract for a claimed (v, t, lambda) and block
/// list (k is taken from the first block). Block order in the input is
/// irrelevant; the returned design holds them lexicographically sorted.
/// On failure the violation names the first offending block or t-subset
/// (t-subsets scanned in lexicographic order) and the actual count.
ValidationOutcome validate_design(int v, std::vector<Block> blocks, int t, long long lambda);

/// Number of blocks containing any fixed s-subset: lambda*C(v-s,t-s)/C(k-s,t-s).
/// Throws std::domain_error when the quotient is not an integer (an invalid
/// design claim) and std::out_of_range for s outside [0, t].
long long lambda_s(const TDesign& d, int s);

/// Number of blocks containing a fixed i-subset and avoiding a fixed disjoint
/// j-subset: lambda*C(v-i-j,k-i)/C(v-t,k-t). Requires i + j <= t.
long long lambda_ij(const TDesign& d, int i, int j);

/// Number of blocks containing a fixed s-subset Y of a t-subset T and
/// avoiding T\Y: lambda*C(v-t,k-s)/C(v-t,k-t). Requires 1 <= s <= t.
long long lambda_st(const TDesign& d, int s);

/// All blocks containing every point of H and no point of I\H, in
/// lexicographic order. Requires |I| = t, H a nonempty proper subset of I.
/// The i-th entry (1-based) is the deterministic block selector used by the
/// delivery-row construction.
std::vector<Block> blocks_for(const TDesign& d, const PointSet& H, const PointSet& I);

/// The complete design: all C(v,k) k-subsets of {1..v}; lambda = C(v-t,k-t).
TDesign complete_design(int v, int k, int t);

namespace catalog {

/// The 14-block 3-(8,4,1) design.
TDesign design_3_8_4_1();

/// The Fano plane, 2-(7,3,1).
TDesign fano_plane();

/// Resolves "3-(8,4,1)", "fano", or "complete:v,k,t".
TDesign by_name(const std::string& name);

/// Named catalog entries used by exhaustive tests (excludes the unbounded
/// complete family).
std::vector<TDesign> named_designs();

}  // namespace catalog

/// Text format: first non-comment line "v k t lambda", then one block per
/// line as ascending space-separated points; '#' starts a comment. Points
/// are 1-based; a 0 anywhere is rejected. The loader runs validate_design.
ValidationOutcome load_design(std::istream& in);
ValidationOutcome load_design_file(const std::string& path);
void save_design(const TDesign& d, std::ostream& out);

}  // namespace hotplug
