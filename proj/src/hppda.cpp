#include "hotplug/hppda.hpp"

#include <algorithm>
#include <regex>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hotplug {

long long StarArray::column_stars(int c) const {
    long long n = 0;
    for (int r = 0; r < rows; ++r)
        if (at(r, c)) ++n;
    return n;
}

std::string StarArray::dump() const {
    std::ostringstream out;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c) out << '|';
            out << (at(r, c) ? '*' : '.');
        }
        out << '\n';
    }
    return out.str();
}

std::string DeliveryRowId::str() const {
    return "(" + format_set(subset) + "," + std::to_string(copy) + ")";
}

long long DeliveryParams::at(int s, int j) const {
    if (j < 1 || j > static_cast<int>(a.size())) return 0;
    const auto& row = a[j - 1];
    if (s < 1 || s > static_cast<int>(row.size())) return 0;
    return row[s - 1];
}

bool DeliveryParams::all_zero(int j) const {
    if (j < 1 || j > static_cast<int>(a.size())) return true;
    return std::all_of(a[j - 1].begin(), a[j - 1].end(), [](long long x) { return x == 0; });
}

DeliveryParams DeliveryParams::zeros(int t, int r) {
    DeliveryParams p;
    p.a.resize(r);
    for (int j = 1; j <= r; ++j) p.a[j - 1].assign(std::max(0, t - j), 0);
    return p;
}

DeliveryParams DeliveryParams::parse(const std::string& text, int t, int r) {
    DeliveryParams p = zeros(t, r);
    static const std::regex entry(R"((\d+)\s*,\s*(\d+)\s*=\s*(\d+))");
    auto begin = std::sregex_iterator(text.begin(), text.end(), entry);
    auto end = std::sregex_iterator();
    size_t matched_chars = 0;
    for (auto it = begin; it != end; ++it) {
        const int s = std::stoi((*it)[1]);
        const int j = std::stoi((*it)[2]);
        const long long value = std::stoll((*it)[3]);
        if (j < 1 || j > r) throw std::invalid_argument("delivery parameter: j out of range in '" + it->str() + "'");
        if (s < 1 || s > t - j)
            throw std::invalid_argument("delivery parameter: s out of range in '" + it->str() + "'");
        p.a[j - 1][s - 1] = value;
        matched_chars += it->str().size();
    }
    size_t significant = 0;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != ',') ++significant;
    size_t matched_significant = 0;
    for (auto it = begin; it != end; ++it)
        for (char ch : it->str())
            if (!std::isspace(static_cast<unsigned char>(ch)) && ch != ',') ++matched_significant;
    if (matched_significant != significant)
        throw std::invalid_argument("delivery parameters: expected entries of the form s,j=value");
    return p;
}

std::string DeliveryParams::str() const {
    std::string out;
    for (int j = 1; j <= static_cast<int>(a.size()); ++j) {
        for (int s = 1; s <= static_cast<int>(a[j - 1].size()); ++s) {
            if (!out.empty()) out += ';';
            out += "a[" + std::to_string(s) + "," + std::to_string(j) + "]=" + std::to_string(at(s, j));
        }
    }
    return out;
}

long long HppdaParams::subpacketization() const {
    return F_prime.back() - Z_prime.back() + Z;
}

long long HppdaParams::total_transmissions() const {
    long long total = 0;
    for (long long s : S) total = checked_add(total, s);
    return total;
}

StarArray build_Pc(const TDesign& d) {
    StarArray arr;
    arr.rows = static_cast<int>(d.b());
    arr.cols = d.v;
    arr.star.assign(static_cast<size_t>(arr.rows) * arr.cols, 0);
    arr.row_names.reserve(arr.rows);
    for (int f = 0; f < arr.rows; ++f) {
        arr.row_names.push_back(format_set(d.blocks[f]));
        for (int point : d.blocks[f]) arr.set(f, point - 1, true);
    }
    arr.col_names.reserve(arr.cols);
    for (int c = 1; c <= d.v; ++c) arr.col_names.push_back(std::to_string(c));
    return arr;
}

StarArray build_P(const TDesign& d, int r) {
    if (r < 1 || r > d.t)
        throw std::out_of_range("build_P: access degree must satisfy 1 <= r <= t");
    const auto users = k_subsets(d.v, r);
    StarArray arr;
    arr.rows = static_cast<int>(d.b());
    arr.cols = static_cast<int>(users.size());
    arr.star.assign(static_cast<size_t>(arr.rows) * arr.cols, 0);
    for (int f = 0; f < arr.rows; ++f) {
        arr.row_names.push_back(format_set(d.blocks[f]));
        for (int c = 0; c < arr.cols; ++c)
            if (sets_intersect(d.blocks[f], users[c])) arr.set(f, c, true);
    }
    for (const auto& u : users) arr.col_names.push_back(format_set(u));
    return arr;
}

long long access_star_count(const TDesign& d, int j) {
    long long z = 0;
    for (int i = 1; i <= j; ++i) {
        const long long term = checked_mul(binomial(j, i), lambda_s(d, i));
        z = (i % 2 == 1) ? checked_add(z, term) : z - term;
    }
    return z;
}

BjArray build_Bj(const TDesign& d, int r, int j, const std::vector<long long>& a_j) {
    if (j < 1 || j > r) throw std::out_of_range("build_Bj: j must be in [1, r]");
    if (r > d.t) throw std::out_of_range("build_Bj: access degree must satisfy r <= t");
    const int t = d.t;
    if (static_cast<int>(a_j.size()) != std::max(0, t - j))
        throw std::invalid_argument("build_Bj: multiplicity vector must have t - j entries");
    for (int s = 1; s <= t - j; ++s) {
        if (a_j[s - 1] < 0 || a_j[s - 1] > lambda_st(d, s))
            throw std::out_of_range("build_Bj: a(" + std::to_string(s) + "," + std::to_string(j) +
                                    ") exceeds its bound");
    }

    BjArray bj;
    bj.j = j;
    for (int s = 1; s <= t - j; ++s)
        for (const auto& y : k_subsets(t, s))
            for (int copy = 1; copy <= a_j[s - 1]; ++copy) bj.rows.push_back({y, copy});
    if (bj.rows.empty()) throw std::invalid_argument("build_Bj: empty row set");

    PointSet outside;  // t+1 .. v
    for (int p = t + 1; p <= d.v; ++p) outside.push_back(p);
    for (const auto& u : k_subsets(d.v, r)) {
        PointSet head;  // U n [t]
        for (int p : u)
            if (p <= t) head.push_back(p);
        if (static_cast<int>(head.size()) == j) bj.cols.push_back(u);
    }

    bj.array = Pda::make(static_cast<int>(bj.rows.size()), static_cast<int>(bj.cols.size()));
    for (int m = 0; m < bj.array.rows; ++m) bj.array.row_names[m] = bj.rows[m].str();
    for (int n = 0; n < bj.array.cols; ++n) bj.array.col_names[n] = format_set(bj.cols[n]);
    for (int n = 0; n < bj.array.cols; ++n) {
        const PointSet& u = bj.cols[n];
        PointSet head, tail;
        for (int p : u) (p <= t ? head : tail).push_back(p);
        const int occurrence = static_cast<int>(lex_rank(outside, tail));
        for (int m = 0; m < bj.array.rows; ++m) {
            const auto& row = bj.rows[m];
            if (sets_intersect(row.subset, head)) continue;  // star
            bj.array.at(m, n) = PdaLabel{set_union(row.subset, head), row.copy, occurrence};
        }
    }
    return bj;
}

HppdaParams hppda_params(const TDesign& d, int r, const DeliveryParams& a) {
    if (r < 1 || r > d.t) throw std::out_of_range("access degree must satisfy 1 <= r <= t");
    const int t = d.t;
    HppdaParams p;
    p.C = d.v;
    p.C_prime = t;
    p.r = r;
    p.F = d.b();
    p.Z_c = lambda_s(d, 1);
    p.Z = access_star_count(d, r);
    p.F_prime.assign(r, 0);
    p.Z_prime.assign(r, 0);
    p.S.assign(r, 0);
    for (int j = 1; j <= r; ++j) {
        for (int s = 1; s <= t - j; ++s) {
            const long long count = a.at(s, j);
            if (count < 0 || count > lambda_st(d, s))
                throw std::out_of_range("a(" + std::to_string(s) + "," + std::to_string(j) +
                                        ") exceeds its bound");
            p.F_prime[j - 1] += checked_mul(count, binomial(t, s));
            p.Z_prime[j - 1] += checked_mul(count, binomial(t, s) - binomial(t - j, s));
            p.S[j - 1] += checked_mul(count, checked_mul(binomial(t, s + j), binomial(d.v - t, r - j)));
        }
    }
    return p;
}

GeneralizedHpPda build_hppda(const TDesign& d, int r, const DeliveryParams& a) {
    GeneralizedHpPda g;
    g.params = hppda_params(d, r, a);
    g.design = d;
    g.r = r;
    g.a = a;
    g.Pc = build_Pc(d);
    g.P = build_P(d, r);
    g.B.resize(r);
    for (int j = 1; j <= r; ++j) {
        if (d.t - j < 1 || a.all_zero(j)) continue;  // no delivery rows for this degree
        g.B[j - 1] = build_Bj(d, r, j, a.a[j - 1]);
    }
    return g;
}

OnlineRelabeling relabel_online(int v, const PointSet& I) {
    OnlineRelabeling m;
    m.fwd.assign(v, 0);
    m.inv.assign(v, 0);
    int next = 1;
    for (int p : I) m.fwd[p - 1] = next++;
    for (int p = 1; p <= v; ++p)
        if (m.fwd[p - 1] == 0) m.fwd[p - 1] = next++;
    for (int p = 1; p <= v; ++p) m.inv[m.fwd[p - 1] - 1] = p;
    return m;
}

PointSet OnlineRelabeling::apply(const PointSet& s) const {
    PointSet out;
    out.reserve(s.size());
    for (int p : s) out.push_back(fwd[p - 1]);
    std::sort(out.begin(), out.end());
    return out;
}

PointSet OnlineRelabeling::invert(const PointSet& s) const {
    PointSet out;
    out.reserve(s.size());
    for (int p : s) out.push_back(inv[p - 1]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PointSet> tau(int v, int r, const PointSet& I, int j) {
    const auto phi = relabel_online(v, I);
    std::vector<std::pair<PointSet, PointSet>> keyed;  // (relabeled, original)
    for (const auto& u : k_subsets(v, r)) {
        if (static_cast<int>(set_intersection(u, I).size()) != j) continue;
        keyed.emplace_back(phi.apply(u), u);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<PointSet> out;
    out.reserve(keyed.size());
    for (auto& [key, u] : keyed) out.push_back(std::move(u));
    return out;
}

std::vector<Block> zeta(const TDesign& d, const PointSet& I, int j, const DeliveryParams& a) {
    if (static_cast<int>(I.size()) != d.t) throw std::invalid_argument("zeta: |I| must equal t");
    std::vector<Block> out;
    for (int s = 1; s <= d.t - j; ++s) {
        const long long count = a.at(s, j);
        if (count == 0) continue;
        for (const auto& h : k_subsets_of(I, s)) {
            const auto candidates = blocks_for(d, h, I);
            if (count > static_cast<long long>(candidates.size()))
                throw std::out_of_range("zeta: multiplicity exceeds available blocks");
            out.insert(out.end(), candidates.begin(), candidates.begin() + count);
        }
    }
    return out;
}

FeasibilityReport feasibility(const TDesign& d, int r, const DeliveryParams& a) {
    FeasibilityReport rep;
    rep.accessible.assign(r, 0);
    for (int j = 1; j <= r; ++j) {
        long long y = access_star_count(d, j);
        for (int s = 1; s <= d.t - j; ++s) y = checked_add(y, checked_mul(a.at(s, j), binomial(d.t - j, s)));
        rep.accessible[j - 1] = y;
        if (j >= 2 && y > rep.accessible[j - 2] && rep.feasible) {
            rep.feasible = false;
            rep.first_bad_j = j;
        }
    }
    return rep;
}

FeasibilityReport feasibility(const GeneralizedHpPda& g) {
    return feasibility(g.design, g.r, g.a);
}

bool StarMatchReport::all_ok() const {
    return std::all_of(per_j.begin(), per_j.end(),
                       [](const PerJ& p) { return p.containment_ok && p.online_exact_ok; });
}

StarMatchReport verify_hppda(const GeneralizedHpPda& g, const PointSet& I) {
    const TDesign& d = g.design;
    if (static_cast<int>(I.size()) != d.t) throw std::invalid_argument("verify_hppda: |I| must equal t");
    const auto phi = relabel_online(d.v, I);

    StarMatchReport report;
    report.online_set = I;
    for (int j = 1; j <= g.r; ++j) {
        StarMatchReport::PerJ per;
        per.j = j;
        if (!g.B[j - 1]) {
            per.empty = true;
            report.per_j.push_back(per);
            continue;
        }
        const BjArray& bj = *g.B[j - 1];
        const auto rows = zeta(d, I, j, g.a);
        const auto cols = tau(d.v, g.r, I, j);
        if (static_cast<int>(rows.size()) != bj.array.rows || static_cast<int>(cols.size()) != bj.array.cols)
            throw std::logic_error("verify_hppda: restricted subarray shape mismatch");

        // Row m must relabel onto the delivery row id, and column n onto the
        // delivery column; anything else is a construction bug.
        std::vector<int> row_in_P(rows.size()), col_in_P(cols.size());
        for (size_t m = 0; m < rows.size(); ++m) {
            if (phi.apply(set_intersection(rows[m], I)) != bj.rows[m].subset)
                throw std::logic_error("verify_hppda: row relabeling mismatch");
            const auto it = std::lower_bound(d.blocks.begin(), d.blocks.end(), rows[m]);
            row_in_P[m] = static_cast<int>(it - d.blocks.begin());
        }
        const auto all_users = k_subsets(d.v, g.r);
        for (size_t n = 0; n < cols.size(); ++n) {
            if (phi.apply(cols[n]) != bj.cols[n])
                throw std::logic_error("verify_hppda: column relabeling mismatch");
            const auto it = std::lower_bound(all_users.begin(), all_users.end(), cols[n]);
            col_in_P[n] = static_cast<int>(it - all_users.begin());
        }

        for (int m = 0; m < bj.array.rows && (per.containment_ok || per.online_exact_ok); ++m) {
            for (int n = 0; n < bj.array.cols; ++n) {
                const bool bj_star = !bj.array.at(m, n).has_value();
                if (bj_star && per.containment_ok && !g.P.at(row_in_P[m], col_in_P[n])) {
                    per.containment_ok = false;
                    per.containment_mismatch = {m, n};
                }
                const bool online_star = sets_intersect(rows[m], set_intersection(cols[n], I));
                if (per.online_exact_ok && online_star != bj_star) {
                    per.online_exact_ok = false;
                    per.online_mismatch = {m, n};
                }
                if (!per.containment_ok && !per.online_exact_ok) break;
            }
        }
        report.per_j.push_back(per);
    }
    return report;
}

std::vector<StarMatchReport> verify_all_online_sets(const GeneralizedHpPda& g, int workers) {
    const auto online_sets = k_subsets(g.design.v, g.design.t);
    std::vector<StarMatchReport> reports(online_sets.size());
    if (workers <= 1) {
        for (size_t i = 0; i < online_sets.size(); ++i) reports[i] = verify_hppda(g, online_sets[i]);
        return reports;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (size_t i = 0; i < online_sets.size(); ++i) reports[i] = verify_hppda(g, online_sets[i]);
#else
    for (size_t i = 0; i < online_sets.size(); ++i) reports[i] = verify_hppda(g, online_sets[i]);
#endif
    return reports;
}

}  // namespace hotplug
