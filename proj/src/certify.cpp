#include "hotplug/certify.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hotplug {

namespace {

struct PerOnlineSet {
    long long users_checked = 0;
    long long decode_failures = 0;
    bool rate_ok = true;
    std::optional<CertificationFailure> failure;
};

PerOnlineSet certify_online_set(const SchemeInstance& instance, const PointSet& I) {
    PerOnlineSet result;
    const auto& g = instance.hppda;
    const auto dv = worst_case_demands(g.design.v, g.r, I, instance.library.count());
    const auto session = deliver(instance, dv);

    const auto [m_ratio, r_formula] = rate(g.params);
    const Rational measured(static_cast<long long>(session.transmissions.size()), instance.code.d());
    if (measured != r_formula) {
        result.rate_ok = false;
        result.failure = CertificationFailure{I, {}, "measured rate " + measured.str() +
                                                        " differs from formula " + r_formula.str()};
        return result;
    }

    for (const auto& [user, demanded] : session.demands) {
        ++result.users_checked;
        try {
            const auto transcript = decode_user(instance, session, user);
            if (transcript.file != instance.library.files[demanded - 1]) {
                ++result.decode_failures;
                if (!result.failure)
                    result.failure = CertificationFailure{I, user, "reconstructed file differs from library"};
            }
        } catch (const std::exception& e) {
            ++result.decode_failures;
            if (!result.failure) result.failure = CertificationFailure{I, user, e.what()};
        }
    }
    return result;
}

CertificationReport merge(const std::vector<PerOnlineSet>& parts, const std::vector<PointSet>& online_sets) {
    CertificationReport report;
    report.online_sets = static_cast<long long>(parts.size());
    for (size_t i = 0; i < parts.size(); ++i) {
        report.users_checked += parts[i].users_checked;
        report.decode_failures += parts[i].decode_failures;
        if (!parts[i].rate_ok) report.rate_matches_formula = false;
        if (parts[i].failure && !report.first_failure) report.first_failure = parts[i].failure;
    }
    (void)online_sets;
    return report;
}

}  // namespace

std::string CertificationReport::summary() const {
    std::string out = "online sets: " + std::to_string(online_sets) +
                      ", users checked: " + std::to_string(users_checked) +
                      ", decode failures: " + std::to_string(decode_failures) +
                      ", rate matches formula: " + (rate_matches_formula ? "yes" : "no");
    if (first_failure)
        out += "\nfirst failure: I={" + format_set(first_failure->online_set) + "} U={" +
               format_set(first_failure->user) + "}: " + first_failure->reason;
    return out;
}

CertificationReport check_all(const SchemeInstance& instance, int workers) {
    const auto& g = instance.hppda;
    const long long k_o = active_user_count(g.design.v, g.design.t, g.r);
    if (instance.library.count() < k_o)
        throw std::invalid_argument("check_all: worst-case demands need n_files >= " + std::to_string(k_o));

    const auto online_sets = k_subsets(g.design.v, g.design.t);
    std::vector<PerOnlineSet> parts(online_sets.size());

    if (workers <= 1) {
        // Serial reference path.
        for (size_t i = 0; i < online_sets.size(); ++i) parts[i] = certify_online_set(instance, online_sets[i]);
        return merge(parts, online_sets);
    }

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (size_t i = 0; i < online_sets.size(); ++i) parts[i] = certify_online_set(instance, online_sets[i]);
#else
    for (size_t i = 0; i < online_sets.size(); ++i) parts[i] = certify_online_set(instance, online_sets[i]);
#endif
    return merge(parts, online_sets);
}

}  // namespace hotplug
