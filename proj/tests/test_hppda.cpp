#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "hotplug/hppda.hpp"

using namespace hotplug;

namespace {

GeneralizedHpPda reference_instance() {
    DeliveryParams a = DeliveryParams::zeros(3, 2);
    a.a[0] = {2, 1};  // degree 1: two size-1 copies, one size-2 copy
    a.a[1] = {1};     // degree 2
    return build_hppda(catalog::design_3_8_4_1(), 2, a);
}

std::vector<TDesign> test_designs() {
    auto designs = catalog::named_designs();
    designs.push_back(complete_design(5, 3, 2));
    designs.push_back(complete_design(6, 3, 2));
    designs.push_back(complete_design(6, 4, 3));
    designs.push_back(complete_design(7, 4, 3));
    return designs;
}

}  // namespace

TEST_CASE("placement array of the 3-(8,4,1) design") {
    const auto d = catalog::design_3_8_4_1();
    const auto pc = build_Pc(d);
    REQUIRE(pc.rows == 14);
    REQUIRE(pc.cols == 8);
    // Row of block {1,2,5,6}: stars exactly at its points.
    const auto row = std::find(pc.row_names.begin(), pc.row_names.end(), "1256") - pc.row_names.begin();
    for (int c = 0; c < 8; ++c) CHECK(pc.at(static_cast<int>(row), c) == (c == 0 || c == 1 || c == 4 || c == 5));
    for (int c = 0; c < 8; ++c) CHECK(pc.column_stars(c) == 7);
}

TEST_CASE("placement array of a complete design") {
    const auto pc = build_Pc(complete_design(4, 2, 2));
    REQUIRE(pc.rows == 6);
    REQUIRE(pc.cols == 4);
    for (int c = 0; c < 4; ++c) CHECK(pc.column_stars(c) == 3);
}

TEST_CASE("user-access array star counts") {
    const auto d = catalog::design_3_8_4_1();
    const auto p = build_P(d, 2);
    REQUIRE(p.rows == 14);
    REQUIRE(p.cols == 28);
    for (int c = 0; c < p.cols; ++c) CHECK(p.column_stars(c) == 11);
    CHECK(access_star_count(d, 2) == 11);
    CHECK(access_star_count(d, 1) == 7);

    // Degree 1 reduces to the placement array cell-for-cell.
    const auto p1 = build_P(d, 1);
    const auto pc = build_Pc(d);
    REQUIRE(p1.rows == pc.rows);
    REQUIRE(p1.cols == pc.cols);
    for (int r = 0; r < p1.rows; ++r)
        for (int c = 0; c < p1.cols; ++c) CHECK(p1.at(r, c) == pc.at(r, c));

    // Complete design: column {1,2} meets every pair except {3,4}.
    const auto pcomp = build_P(complete_design(4, 2, 2), 2);
    CHECK(pcomp.col_names[0] == "12");
    CHECK(pcomp.column_stars(0) == 5);

    CHECK_THROWS_AS(build_P(d, 0), std::out_of_range);
    CHECK_THROWS_AS(build_P(d, 4), std::out_of_range);  // beyond the design strength
}

TEST_CASE("closed-form parameters of the reference instance") {
    const auto g = reference_instance();
    CHECK(g.params.C == 8);
    CHECK(g.params.C_prime == 3);
    CHECK(g.params.F == 14);
    CHECK(g.params.Z_c == 7);
    CHECK(g.params.Z == 11);
    CHECK(g.params.F_prime == std::vector<long long>{9, 3});
    CHECK(g.params.Z_prime == std::vector<long long>{4, 2});
    CHECK(g.params.S == std::vector<long long>{35, 1});
    CHECK(g.params.subpacketization() == 12);
    CHECK(g.params.total_transmissions() == 36);
}

TEST_CASE("delivery arrays match their closed-form parameters") {
    std::mt19937 rng(11);
    for (const auto& d : test_designs()) {
        for (int r = 1; r <= std::min(3, d.t); ++r) {
            for (int trial = 0; trial < 12; ++trial) {
                DeliveryParams a = DeliveryParams::zeros(d.t, r);
                for (int j = 1; j <= r; ++j)
                    for (int s = 1; s <= d.t - j; ++s)
                        a.a[j - 1][s - 1] = rng() % (lambda_st(d, s) + 1);
                const auto params = hppda_params(d, r, a);
                for (int j = 1; j <= r; ++j) {
                    if (d.t - j < 1 || a.all_zero(j)) {
                        CHECK(params.S[j - 1] == 0);
                        continue;
                    }
                    const auto bj = build_Bj(d, r, j, a.a[j - 1]);
                    const auto outcome = verify_pda(bj.array);
                    REQUIRE(outcome.ok());
                    CHECK(outcome.params->K == binomial(d.t, j) * binomial(d.v - d.t, r - j));
                    CHECK(outcome.params->F == params.F_prime[j - 1]);
                    CHECK(outcome.params->Z == params.Z_prime[j - 1]);
                    CHECK(outcome.params->S == params.S[j - 1]);
                }
            }
        }
    }
}

TEST_CASE("delivery array rejects out-of-bounds multiplicities") {
    const auto d = catalog::design_3_8_4_1();
    CHECK_THROWS_AS(build_Bj(d, 2, 2, {3}), std::out_of_range);   // bound is 2
    CHECK_THROWS_AS(build_Bj(d, 2, 2, {0}), std::invalid_argument);  // empty row set
    CHECK_THROWS_AS(build_Bj(d, 2, 3, {1}), std::out_of_range);   // j > r
    CHECK_THROWS_AS(build_Bj(d, 2, 2, {1, 1}), std::invalid_argument);  // wrong arity
}

TEST_CASE("online relabeling for I = {2,4,6}") {
    const auto phi = relabel_online(8, {2, 4, 6});
    CHECK(phi.apply({2, 4, 6}) == PointSet{1, 2, 3});
    CHECK(phi.apply({1}) == PointSet{4});
    CHECK(phi.apply({3}) == PointSet{5});
    CHECK(phi.apply({8}) == PointSet{8});
    CHECK(phi.invert({1, 4}) == PointSet{1, 2});
    CHECK(phi.invert(phi.apply({3, 5, 7})) == PointSet{3, 5, 7});
}

TEST_CASE("tau ordering for I = {2,4,6}") {
    CHECK(tau(8, 2, {2, 4, 6}, 2) == std::vector<PointSet>{{2, 4}, {2, 6}, {4, 6}});
    const std::vector<PointSet> expected = {{1, 2}, {2, 3}, {2, 5}, {2, 7}, {2, 8}, {1, 4}, {3, 4}, {4, 5},
                                            {4, 7}, {4, 8}, {1, 6}, {3, 6}, {5, 6}, {6, 7}, {6, 8}};
    CHECK(tau(8, 2, {2, 4, 6}, 1) == expected);
}

TEST_CASE("tau partitions the user universe") {
    for (const auto& d : test_designs()) {
        const int r = std::min(2, d.t);
        const PointSet I = [&] {
            PointSet s;
            for (int p = 2; p < 2 + d.t; ++p) s.push_back(p);
            return s;
        }();
        std::vector<PointSet> all;
        for (int j = 1; j <= r; ++j) {
            const auto part = tau(d.v, r, I, j);
            CHECK(static_cast<long long>(part.size()) == binomial(d.t, j) * binomial(d.v - d.t, r - j));
            all.insert(all.end(), part.begin(), part.end());
        }
        for (const auto& u : k_subsets(d.v, r))
            if (!sets_intersect(u, I)) all.push_back(u);
        std::sort(all.begin(), all.end());
        const auto universe = k_subsets(d.v, r);
        CHECK(all == universe);
    }
}

TEST_CASE("zeta for the reference online set") {
    const auto g = reference_instance();
    const PointSet I{2, 4, 6};
    CHECK(zeta(g.design, I, 2, g.a) ==
          std::vector<Block>{{1, 2, 7, 8}, {1, 4, 5, 8}, {1, 3, 6, 8}});
    CHECK(zeta(g.design, I, 1, g.a) ==
          std::vector<Block>{{1, 2, 7, 8},
                             {2, 3, 5, 8},
                             {1, 4, 5, 8},
                             {3, 4, 7, 8},
                             {1, 3, 6, 8},
                             {5, 6, 7, 8},
                             {1, 2, 3, 4},
                             {1, 2, 5, 6},
                             {1, 4, 6, 7}});
}

TEST_CASE("zeta rows are distinct and meet I exactly in their generator") {
    for (const auto& d : test_designs()) {
        const int r = std::min(2, d.t);
        DeliveryParams a = DeliveryParams::zeros(d.t, r);
        for (int j = 1; j <= r; ++j)
            for (int s = 1; s <= d.t - j; ++s) a.a[j - 1][s - 1] = lambda_st(d, s);
        for (const auto& I : k_subsets(d.v, d.t)) {
            for (int j = 1; j <= r; ++j) {
                const auto rows = zeta(d, I, j, a);
                auto sorted = rows;
                std::sort(sorted.begin(), sorted.end());
                CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
                // Matching generator sizes: position within the concatenation
                // determines |H| = |A n I|.
                size_t pos = 0;
                for (int s = 1; s <= d.t - j; ++s) {
                    const long long per_h = a.at(s, j);
                    for (const auto& h : k_subsets_of(I, s)) {
                        for (long long i = 0; i < per_h; ++i, ++pos)
                            CHECK(set_intersection(rows[pos], I) == h);
                    }
                }
                CHECK(pos == rows.size());
            }
            if (d.v > 8) break;  // one online set suffices for the larger designs
        }
    }
}

TEST_CASE("occurrence index equals the left-to-right occurrence of the label set") {
    const auto check_array = [](const BjArray& bj) {
        for (int r = 0; r < bj.array.rows; ++r) {
            std::map<PointSet, int> seen;
            for (int c = 0; c < bj.array.cols; ++c) {
                const auto& cell = bj.array.at(r, c);
                if (!cell) continue;
                CHECK(cell->copy == bj.rows[r].copy);
                CHECK(cell->occurrence == ++seen[cell->group]);
            }
        }
    };
    const auto d = catalog::design_3_8_4_1();
    check_array(build_Bj(d, 2, 1, {2, 1}));
    check_array(build_Bj(d, 2, 2, {1}));
    const auto c = complete_design(6, 3, 2);
    check_array(build_Bj(c, 2, 1, {lambda_st(c, 1)}));
}

TEST_CASE("star-match condition on the reference instance") {
    const auto g = reference_instance();
    const auto report = verify_hppda(g, {2, 4, 6});
    REQUIRE(report.per_j.size() == 2);
    CHECK(report.per_j[0].containment_ok);
    CHECK(report.per_j[0].online_exact_ok);
    CHECK(report.per_j[1].containment_ok);
    CHECK(report.per_j[1].online_exact_ok);
    CHECK(report.all_ok());

    for (const auto& rep : verify_all_online_sets(g)) CHECK(rep.all_ok());
}

TEST_CASE("degree-1 instances: both star checks coincide") {
    const auto d = complete_design(6, 3, 2);
    DeliveryParams a = DeliveryParams::zeros(d.t, 1);
    a.a[0] = {2};
    const auto g = build_hppda(d, 1, a);
    for (const auto& I : k_subsets(d.v, d.t)) {
        const auto rows = zeta(d, I, 1, a);
        const auto cols = tau(d.v, 1, I, 1);
        for (const auto& blk : rows) {
            for (const auto& u : cols) {
                const bool full = sets_intersect(blk, u);
                const bool online = sets_intersect(blk, set_intersection(u, I));
                CHECK(full == online);
            }
        }
        CHECK(verify_hppda(g, I).all_ok());
    }
}

TEST_CASE("star-match condition across designs and degrees") {
    for (const auto& d : test_designs()) {
        for (int r = 1; r <= std::min(2, d.t); ++r) {
            DeliveryParams a = DeliveryParams::zeros(d.t, r);
            for (int j = 1; j <= r; ++j)
                for (int s = 1; s <= d.t - j; ++s) a.a[j - 1][s - 1] = std::max<long long>(1, lambda_st(d, s) - 1);
            const auto g = build_hppda(d, r, a);
            for (const auto& rep : verify_all_online_sets(g)) CHECK(rep.all_ok());
        }
    }
}

TEST_CASE("serial and parallel verification agree") {
    const auto g = reference_instance();
    const auto serial = verify_all_online_sets(g, 1);
    const auto parallel = verify_all_online_sets(g, 4);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].online_set == parallel[i].online_set);
        CHECK(serial[i].all_ok() == parallel[i].all_ok());
    }
}

TEST_CASE("feasibility of the reference instance") {
    const auto g = reference_instance();
    const auto rep = feasibility(g);
    CHECK(rep.accessible == std::vector<long long>{12, 12});
    CHECK(rep.feasible);
}

TEST_CASE("feasibility with a smaller degree-2 multiplicity") {
    DeliveryParams a = DeliveryParams::zeros(3, 2);
    a.a[0] = {2, 1};
    a.a[1] = {0};
    const auto rep = feasibility(catalog::design_3_8_4_1(), 2, a);
    CHECK(rep.accessible == std::vector<long long>{12, 11});
    CHECK(rep.feasible);
}

TEST_CASE("feasibility rejects an increasing chain") {
    DeliveryParams a = DeliveryParams::zeros(3, 2);
    a.a[0] = {0, 0};
    a.a[1] = {1};
    const auto rep = feasibility(catalog::design_3_8_4_1(), 2, a);
    CHECK(rep.accessible == std::vector<long long>{7, 12});
    CHECK_FALSE(rep.feasible);
    CHECK(rep.first_bad_j == 2);
}

TEST_CASE("maximal multiplicities make accessibility invariant across degrees") {
    for (const auto& d : test_designs()) {
        for (int r = 1; r <= std::min(3, d.t - 1); ++r) {
            DeliveryParams a = DeliveryParams::zeros(d.t, r);
            for (int j = 1; j <= r; ++j)
                for (int s = 1; s <= d.t - j; ++s) a.a[j - 1][s - 1] = lambda_st(d, s);
            const auto rep = feasibility(d, r, a);
            CHECK(rep.feasible);
            for (int j = 2; j <= r; ++j) CHECK(rep.accessible[j - 1] == rep.accessible[j - 2]);
        }
    }
}

TEST_CASE("empty degree-2 delivery array on the Fano plane") {
    const auto d = catalog::fano_plane();
    DeliveryParams a = DeliveryParams::zeros(d.t, 2);
    a.a[0] = {2};
    const auto rep = feasibility(d, 2, a);
    CHECK(rep.accessible == std::vector<long long>{5, 5});
    CHECK(rep.feasible);
    const auto g = build_hppda(d, 2, a);
    CHECK(g.B[0].has_value());
    CHECK_FALSE(g.B[1].has_value());
    CHECK(g.params.S == std::vector<long long>{10, 0});
    for (const auto& report : verify_all_online_sets(g)) {
        CHECK(report.all_ok());
        CHECK(report.per_j[1].empty);
    }
}

TEST_CASE("delivery parameter parsing") {
    const auto a = DeliveryParams::parse("1,1=2,2,1=1,1,2=1", 3, 2);
    CHECK(a.at(1, 1) == 2);
    CHECK(a.at(2, 1) == 1);
    CHECK(a.at(1, 2) == 1);
    CHECK(a.str() == "a[1,1]=2;a[2,1]=1;a[1,2]=1");
    CHECK_THROWS_AS(DeliveryParams::parse("1,3=1", 3, 2), std::invalid_argument);  // j out of range
    CHECK_THROWS_AS(DeliveryParams::parse("3,1=1", 3, 2), std::invalid_argument);  // s out of range
    CHECK_THROWS_AS(DeliveryParams::parse("garbage", 3, 2), std::invalid_argument);
}

TEST_CASE("star array dump") {
    const auto pc = build_Pc(complete_design(3, 2, 2));
    CHECK(pc.dump() == "*|*|.\n*|.|*\n.|*|*\n");
}
