#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hotplug/rational.hpp"

namespace hotplug {

/// Sweep configuration, read from a "key = value" text file ('#' comments).
struct SweepConfig {
    std::string design;  // "catalog:NAME" or a design file path
    int r = 0;
    int n_files = 0;
    int baseline_k = 0;
    int baseline_k_prime = 0;
    int baseline_n = 0;
    long long a_budget = 500;   // cap on enumerated multiplicity vectors per scheme
    long long rr_removed = 0;   // removed-label count fed to the rr baseline
    std::uint64_t seed = 1;     // library seed for --simulate
    std::size_t file_bytes = 32;

    static SweepConfig parse(std::istream& in);
    static SweepConfig parse_file(const std::string& path);
};

struct SweepRow {
    std::string scheme;
    std::string params;
    Rational m_over_n;
    Rational rate;
    long long k_o = 0;
    Rational rate_per_user;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::vector<std::string> skipped;  // skipped parameter points with reasons
};

/// Evaluates the multi-access construction over every in-bounds multiplicity
/// vector (first `a_budget` in odometer order), plus the four dedicated-cache
/// baselines on their own grids. With simulate = true every proposed row is
/// cross-checked against a delivery simulation's transmission count.
SweepResult run_sweep(const SweepConfig& config, bool simulate);

/// Header: scheme,params,m_over_n,rate,k_o,rate_per_user,m_over_n_dec,rate_per_user_dec
std::string to_csv(const std::vector<SweepRow>& rows);

/// Looks for a proposed-scheme row inside [lo, hi] whose rate per user is
/// strictly below that of every baseline row in the same band.
std::optional<SweepRow> band_dominance_witness(const std::vector<SweepRow>& rows, const Rational& lo,
                                               const Rational& hi);

}  // namespace hotplug
