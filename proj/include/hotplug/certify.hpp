#pragma once

#include <optional>
#include <string>

#include "hotplug/scheme.hpp"

namespace hotplug {

struct CertificationFailure {
    PointSet online_set;
    PointSet user;
    std::string reason;
};

struct CertificationReport {
    long long online_sets = 0;
    long long users_checked = 0;
    long long decode_failures = 0;
    bool rate_matches_formula = true;
    std::optional<CertificationFailure> first_failure;

    bool pass() const { return decode_failures == 0 && rate_matches_formula && !first_failure; }
    std::string summary() const;
};

/// Exhaustive hotplug certification: for every online set, assigns
/// all-distinct demands, delivers, decodes every active user and compares
/// bit-exactly against the library, and checks measured transmissions/D
/// against the closed-form rate. Requires n_files >= K_o.
///
/// workers <= 1 runs the serial reference implementation; larger values run
/// the OpenMP kernel over online sets with a deterministic merge. Both paths
/// produce identical reports.
CertificationReport check_all(const SchemeInstance& instance, int workers = 1);

}  // namespace hotplug
