#include "hotplug/sweep.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hotplug/baselines.hpp"
#include "hotplug/scheme.hpp"

namespace hotplug {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

// Enumerates all vectors with entries 0..bounds[i] in odometer order (last
// coordinate fastest), visiting at most `budget` of them.
template <typename Fn>
void enumerate_vectors(const std::vector<long long>& bounds, long long budget, Fn&& visit) {
    std::vector<long long> current(bounds.size(), 0);
    long long visited = 0;
    while (visited < budget) {
        visit(current);
        ++visited;
        int pos = static_cast<int>(bounds.size()) - 1;
        while (pos >= 0 && current[pos] == bounds[pos]) current[pos--] = 0;
        if (pos < 0) break;
        ++current[pos];
    }
}

TDesign resolve_design(const std::string& spec) {
    if (spec.rfind("catalog:", 0) == 0) return catalog::by_name(spec.substr(8));
    auto outcome = load_design_file(spec);
    if (!outcome.ok()) throw std::invalid_argument("design file invalid: " + outcome.violation->message());
    return *std::move(outcome.design);
}

}  // namespace

SweepConfig SweepConfig::parse(std::istream& in) {
    SweepConfig cfg;
    std::string line;
    int lineno = 0;
    bool saw_design = false, saw_r = false, saw_n = false, saw_k = false, saw_kp = false, saw_bn = false;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "design") {
            cfg.design = value;
            saw_design = true;
        } else if (key == "r") {
            cfg.r = std::stoi(value);
            saw_r = true;
        } else if (key == "n_files") {
            cfg.n_files = std::stoi(value);
            saw_n = true;
        } else if (key == "baseline_k") {
            cfg.baseline_k = std::stoi(value);
            saw_k = true;
        } else if (key == "baseline_k_prime") {
            cfg.baseline_k_prime = std::stoi(value);
            saw_kp = true;
        } else if (key == "baseline_n") {
            cfg.baseline_n = std::stoi(value);
            saw_bn = true;
        } else if (key == "a_budget") {
            cfg.a_budget = std::stoll(value);
        } else if (key == "rr_removed") {
            cfg.rr_removed = std::stoll(value);
        } else if (key == "seed") {
            cfg.seed = std::stoull(value);
        } else if (key == "file_bytes") {
            cfg.file_bytes = std::stoull(value);
        } else {
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (!(saw_design && saw_r && saw_n && saw_k && saw_kp && saw_bn))
        throw std::invalid_argument(
            "config must set design, r, n_files, baseline_k, baseline_k_prime, baseline_n");
    return cfg;
}

SweepConfig SweepConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    return parse(in);
}

SweepResult run_sweep(const SweepConfig& config, bool simulate) {
    const TDesign design = resolve_design(config.design);
    const int r = config.r;
    const int t = design.t;
    SweepResult result;

    // Proposed multi-access rows over the full multiplicity grid.
    std::vector<std::pair<int, int>> slots;  // (s, j)
    std::vector<long long> bounds;
    for (int j = 1; j <= r; ++j)
        for (int s = 1; s <= t - j; ++s) {
            slots.emplace_back(s, j);
            bounds.push_back(lambda_st(design, s));
        }
    const long long k_o = active_user_count(design.v, t, r);
    enumerate_vectors(bounds, config.a_budget, [&](const std::vector<long long>& values) {
        DeliveryParams a = DeliveryParams::zeros(t, r);
        for (size_t i = 0; i < slots.size(); ++i) a.a[slots[i].second - 1][slots[i].first - 1] = values[i];
        const auto feas = feasibility(design, r, a);
        if (!feas.feasible) {
            result.skipped.push_back("proposed " + a.str() + ": accessibility chain fails at degree " +
                                     std::to_string(feas.first_bad_j));
            return;
        }
        const auto params = hppda_params(design, r, a);
        const auto [m_over_n, rate_value] = rate(params);
        SweepRow row;
        row.scheme = "proposed";
        row.params = a.str();
        row.m_over_n = m_over_n;
        row.rate = rate_value;
        row.k_o = k_o;
        row.rate_per_user = rate_value / Rational(k_o);
        if (simulate) {
            const auto g = build_hppda(design, r, a);
            const auto instance = place(g, random_library(config.n_files, config.file_bytes, config.seed));
            PointSet first_online(t);
            for (int p = 1; p <= t; ++p) first_online[p - 1] = p;
            const auto dv = random_demands(design.v, r, first_online, config.n_files, config.seed);
            const auto session = deliver(instance, dv);
            const Rational measured(static_cast<long long>(session.transmissions.size()),
                                    params.subpacketization());
            if (measured != rate_value)
                throw std::logic_error("sweep: simulated rate " + measured.str() +
                                       " differs from formula " + rate_value.str() + " for " + a.str());
        }
        result.rows.push_back(std::move(row));
    });

    const long long baseline_users = config.baseline_k_prime;
    auto add_baseline = [&](TradeoffPoint p) {
        SweepRow row;
        row.scheme = std::move(p.scheme);
        row.params = std::move(p.params);
        row.m_over_n = p.memory_ratio;
        row.rate = p.rate;
        row.k_o = baseline_users;
        row.rate_per_user = p.rate / Rational(baseline_users);
        result.rows.push_back(std::move(row));
    };

    for (int bt = 1; bt <= config.baseline_k_prime; ++bt) {
        add_baseline(mt_point(config.baseline_k, config.baseline_k_prime, config.baseline_n, bt));
        add_baseline(crr_mt_point(config.baseline_k, config.baseline_k_prime, config.baseline_n, bt));
    }

    std::vector<long long> single_bounds;
    for (int s = 1; s <= t - 1; ++s) single_bounds.push_back(lambda_st(design, s));
    enumerate_vectors(single_bounds, config.a_budget, [&](const std::vector<long long>& a_s) {
        const bool all_zero = std::all_of(a_s.begin(), a_s.end(), [](long long x) { return x == 0; });
        if (all_zero) {
            result.skipped.push_back("crr_t: all multiplicities zero");
            return;
        }
        add_baseline(crr_t_point(design, a_s));
        long long row_count = 0, s_total = 0;
        for (int s = 1; s <= t - 1; ++s) {
            row_count += a_s[s - 1] * binomial(t, s);
            s_total += a_s[s - 1] * binomial(t, s + 1);
        }
        if (row_count <= lambda_s(design, 1)) {
            result.skipped.push_back("rr " + std::to_string(row_count) + " rows: row count must exceed lambda_1");
            return;
        }
        if (config.rr_removed > s_total) {
            result.skipped.push_back("rr: removed label count exceeds the label total");
            return;
        }
        add_baseline(rr_point(design, a_s, config.rr_removed));
    });

    return result;
}

std::string to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "scheme,params,m_over_n,rate,k_o,rate_per_user,m_over_n_dec,rate_per_user_dec\n";
    for (const auto& row : rows)
        out << row.scheme << ',' << row.params << ',' << row.m_over_n.str() << ',' << row.rate.str() << ','
            << row.k_o << ',' << row.rate_per_user.str() << ',' << row.m_over_n.decimal() << ','
            << row.rate_per_user.decimal() << '\n';
    return out.str();
}

std::optional<SweepRow> band_dominance_witness(const std::vector<SweepRow>& rows, const Rational& lo,
                                               const Rational& hi) {
    std::vector<const SweepRow*> baselines;
    for (const auto& row : rows)
        if (row.scheme != "proposed" && row.m_over_n >= lo && row.m_over_n <= hi) baselines.push_back(&row);
    if (baselines.empty()) return std::nullopt;
    for (const auto& row : rows) {
        if (row.scheme != "proposed" || row.m_over_n < lo || row.m_over_n > hi) continue;
        const bool wins = std::all_of(baselines.begin(), baselines.end(), [&](const SweepRow* b) {
            return row.rate_per_user < b->rate_per_user;
        });
        if (wins) return row;
    }
    return std::nullopt;
}

}  // namespace hotplug
