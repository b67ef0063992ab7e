#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hotplug/combinatorics.hpp"

namespace hotplug {

/// Multicast label of a placement delivery array cell. `group` is the point
/// set the label is named after, `copy` the copy index, `occurrence` the
/// occurrence index distinguishing repeats of the same (group, copy) pair.
/// Labels are value types compared componentwise; they are never renumbered
/// to a flat integer range.
struct PdaLabel {
    PointSet group;
    int copy = 1;
    int occurrence = 1;

    auto operator<=>(const PdaLabel&) const = default;

    /// "(123,1)_2"
    std::string str() const;

    /// Convenience for hand-written test arrays carrying plain integers.
    static PdaLabel from_int(int s) { return PdaLabel{{s}, 1, 1}; }
};

/// A cell is either a star (nullopt) or a label.
using PdaCell = std::optional<PdaLabel>;

/// An F x K array of stars and labels. Row/column names are opaque display
/// identifiers. Immutable by convention after construction.
struct Pda {
    int rows = 0;
    int cols = 0;
    std::vector<PdaCell> cells;  // row-major
    std::vector<std::string> row_names;
    std::vector<std::string> col_names;

    const PdaCell& at(int r, int c) const { return cells[static_cast<size_t>(r) * cols + c]; }
    PdaCell& at(int r, int c) { return cells[static_cast<size_t>(r) * cols + c]; }

    static Pda make(int rows, int cols);
};

struct PdaParams {
    long long K = 0;
    long long F = 0;
    long long Z = 0;
    long long S = 0;
    bool operator==(const PdaParams&) const = default;
};

struct PdaViolation {
    enum class Kind {
        Ragged,           // not a rectangle (only possible for externally built grids)
        ColumnStarCount,  // C1: a column's star count differs from the first column's
        LabelCountMismatch,  // C2 with a declared label count
        SharedRowOrColumn,   // C3a
        CrossNotStar,        // C3b
    };
    Kind kind;
    std::pair<int, int> cell_a{-1, -1};
    std::pair<int, int> cell_b{-1, -1};
    long long expected = 0;
    long long actual = 0;
    std::string message() const;
};

struct PdaCheckOutcome {
    std::optional<PdaParams> params;
    std::optional<PdaViolation> violation;
    bool ok() const { return params.has_value(); }
};

/// Checks the PDA conditions: equal star count per column, every declared
/// label present (only checkable when declared_labels is given), and the
/// star-crossing rule for equal labels. The witness pair is the first
/// failure under a row-major scan. Throws on an empty grid.
PdaCheckOutcome verify_pda(const Pda& p, std::optional<long long> declared_labels = std::nullopt);

/// Groups label cells by label. Each group lists its cells in row-major
/// order; for a verified PDA the rows and columns within a group are
/// pairwise distinct.
std::map<PdaLabel, std::vector<std::pair<int, int>>> multicast_groups(const Pda& p);

/// One line per row, cells separated by '|', stars as '*'.
std::string dump(const Pda& p);

}  // namespace hotplug
