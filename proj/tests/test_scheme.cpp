#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hotplug/baselines.hpp"
#include "hotplug/scheme.hpp"

using namespace hotplug;

namespace {

GeneralizedHpPda reference_hppda() {
    DeliveryParams a = DeliveryParams::zeros(3, 2);
    a.a[0] = {2, 1};
    a.a[1] = {1};
    return build_hppda(catalog::design_3_8_4_1(), 2, a);
}

SchemeInstance reference_instance(int n_files = 18, size_t bytes = 40, std::uint64_t seed = 21) {
    return place(reference_hppda(), random_library(n_files, bytes, seed));
}

const Transmission* find_transmission(const DeliverySession& session,
                                      const std::map<std::string, std::string>& expected) {
    for (const auto& tx : session.transmissions) {
        std::map<std::string, std::string> got;
        for (const auto& [u, f] : tx.participants) got[format_set(u)] = "";
        if (got.size() != expected.size()) continue;
        bool all = true;
        for (const auto& [u, f] : tx.participants) {
            const auto it = expected.find(format_set(u));
            if (it == expected.end()) {
                all = false;
                break;
            }
        }
        if (all) return &tx;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("placement of the reference instance") {
    const auto inst = reference_instance();
    CHECK(inst.code.n() == 14);
    CHECK(inst.code.d() == 12);
    CHECK(inst.subpacketization() == 12);
    CHECK(inst.memory_ratio() == Rational(7, 12));
    for (int cache = 1; cache <= 8; ++cache) CHECK(inst.cached_subfile_count(cache) == 18 * 7);

    const auto single = place(reference_hppda(), random_library(1, 16, 5));
    for (int cache = 1; cache <= 8; ++cache) CHECK(single.cached_subfile_count(cache) == 7);
}

TEST_CASE("placement on a small single-access complete design") {
    const auto d = complete_design(3, 2, 2);
    DeliveryParams a = DeliveryParams::zeros(2, 1);
    a.a[0] = {1};
    const auto g = build_hppda(d, 1, a);
    CHECK(g.params.subpacketization() == 3);  // lambda_1 + a*(C(1,1)) = 2 + 1
    const auto inst = place(g, random_library(3, 10, 2));
    for (int cache = 1; cache <= 3; ++cache) CHECK(static_cast<int>(inst.cache_blocks[cache - 1].size()) == 2);
}

TEST_CASE("placement rejects infeasible multiplicities and bad codes") {
    DeliveryParams a = DeliveryParams::zeros(3, 2);
    a.a[0] = {0, 0};
    a.a[1] = {1};
    const auto g = build_hppda(catalog::design_3_8_4_1(), 2, a);
    CHECK_THROWS_AS(place(g, random_library(2, 8, 1)), std::invalid_argument);

    const auto good = reference_hppda();
    CHECK_THROWS_AS(place(good, MdsCode(14, 11), random_library(2, 8, 1)), std::invalid_argument);
}

TEST_CASE("delivery for I = {2,4,6} matches the published transmissions") {
    const auto inst = reference_instance();
    const PointSet I{2, 4, 6};
    const auto dv = worst_case_demands(8, 2, I, 18);
    const auto session = deliver(inst, dv);

    CHECK(session.transmissions.size() == 36);
    CHECK(session.stranded.size() == 28 - 18);

    // Transmissions are ordered by degree; the single degree-2 multicast is last.
    const auto& last = session.transmissions.back();
    CHECK(last.j == 2);
    CHECK(last.label == PdaLabel{{1, 2, 3}, 1, 1});
    std::map<std::string, int> participants;
    for (const auto& [u, f] : last.participants) participants[format_set(u)] = f;
    CHECK(participants.at("24") == inst.block_index({1, 3, 6, 8}));
    CHECK(participants.at("26") == inst.block_index({1, 4, 5, 8}));
    CHECK(participants.at("46") == inst.block_index({1, 2, 7, 8}));

    // Payload equals the XOR of the three coded subfiles it names.
    SymbolVec expected(inst.symbols_per_subfile, 0);
    for (const auto& [u, f] : last.participants) {
        const auto& part = inst.coded[dv.demands.at(u) - 1][f];
        for (size_t p = 0; p < expected.size(); ++p) expected[p] ^= part[p];
    }
    CHECK(last.payload == expected);

    // Degree-1 pair multicasts from the published list.
    const auto* x7 = find_transmission(session, {{"12", ""}, {"14", ""}});
    REQUIRE(x7 != nullptr);
    std::map<std::string, int> x7_parts;
    for (const auto& [u, f] : x7->participants) x7_parts[format_set(u)] = f;
    CHECK(x7_parts.at("12") == inst.block_index({1, 4, 5, 8}));
    CHECK(x7_parts.at("14") == inst.block_index({1, 2, 7, 8}));

    // The triple multicast pairing users 12, 14, 16 with blocks 1467, 1256, 1234.
    const auto* x2 = find_transmission(session, {{"12", ""}, {"14", ""}, {"16", ""}});
    REQUIRE(x2 != nullptr);
    std::map<std::string, int> x2_parts;
    for (const auto& [u, f] : x2->participants) x2_parts[format_set(u)] = f;
    CHECK(x2_parts.at("12") == inst.block_index({1, 4, 6, 7}));
    CHECK(x2_parts.at("14") == inst.block_index({1, 2, 5, 6}));
    CHECK(x2_parts.at("16") == inst.block_index({1, 2, 3, 4}));
}

TEST_CASE("every active user decodes its file bit-exactly for I = {2,4,6}") {
    const auto inst = reference_instance();
    const PointSet I{2, 4, 6};
    const auto dv = worst_case_demands(8, 2, I, 18);
    const auto session = deliver(inst, dv);

    for (const auto& [user, demanded] : session.demands) {
        const auto transcript = decode_user(inst, session, user);
        CHECK(transcript.file == inst.library.files[demanded - 1]);
        const int j = transcript.degree;
        CHECK(static_cast<long long>(transcript.cached_blocks.size()) == access_star_count(inst.hppda.design, j));
        // Gathered blocks are pairwise distinct and total the accessibility count.
        std::vector<int> gathered = transcript.cached_blocks;
        gathered.insert(gathered.end(), transcript.delivered_blocks.begin(), transcript.delivered_blocks.end());
        std::sort(gathered.begin(), gathered.end());
        CHECK(std::adjacent_find(gathered.begin(), gathered.end()) == gathered.end());
        const auto feas = feasibility(inst.hppda);
        CHECK(static_cast<long long>(gathered.size()) == feas.accessible[j - 1]);
        CHECK(static_cast<long long>(gathered.size()) >= inst.code.d());
    }

    // The published per-user counts: degree 2 users read 11 and receive 1,
    // degree 1 users read 7 and receive 5.
    const auto deg2 = decode_user(inst, session, {2, 4});
    CHECK(deg2.cached_blocks.size() == 11);
    CHECK(deg2.delivered_blocks.size() == 1);
    const auto deg1 = decode_user(inst, session, {1, 2});
    CHECK(deg1.cached_blocks.size() == 7);
    CHECK(deg1.delivered_blocks.size() == 5);

    CHECK_THROWS_AS(decode_user(inst, session, {1, 3}), std::invalid_argument);  // stranded
}

TEST_CASE("transmissions are peelable through online caches only") {
    const auto inst = reference_instance();
    const auto dv = worst_case_demands(8, 2, {2, 4, 6}, 18);
    const auto session = deliver(inst, dv);
    const auto& d = inst.hppda.design;
    for (const auto& tx : session.transmissions) {
        for (const auto& [user, f_self] : tx.participants) {
            const PointSet reachable = set_intersection(user, session.online);
            for (const auto& [other, f] : tx.participants) {
                if (other == user) continue;
                CHECK(sets_intersect(d.blocks[f], reachable));
            }
            // The user's own block is not cached through online caches.
            CHECK_FALSE(sets_intersect(d.blocks[f_self], reachable));
        }
    }
}

TEST_CASE("all-zero library reconstructs to all-zero") {
    Library lib;
    lib.files.assign(18, Bytes(24, 0));
    const auto inst = place(reference_hppda(), std::move(lib));
    const auto dv = worst_case_demands(8, 2, {2, 4, 6}, 18);
    const auto session = deliver(inst, dv);
    const auto transcript = decode_user(inst, session, {2, 4});
    CHECK(transcript.file == Bytes(24, 0));
}

TEST_CASE("transmission count is demand-oblivious") {
    const auto inst = reference_instance();
    const PointSet I{2, 4, 6};
    DemandVector same;
    same.online = I;
    for (const auto& u : k_subsets(8, 2))
        if (sets_intersect(u, I)) same.demands[u] = 1;
    const auto session_same = deliver(inst, same);
    CHECK(session_same.transmissions.size() == 36);

    const auto session_distinct = deliver(inst, worst_case_demands(8, 2, I, 18));
    REQUIRE(session_same.transmissions.size() == session_distinct.transmissions.size());
    for (size_t i = 0; i < session_same.transmissions.size(); ++i) {
        const auto& a = session_same.transmissions[i];
        const auto& b = session_distinct.transmissions[i];
        CHECK(a.j == b.j);
        CHECK(a.label == b.label);
        REQUIRE(a.participants.size() == b.participants.size());
        for (size_t p = 0; p < a.participants.size(); ++p) {
            CHECK(a.participants[p].first == b.participants[p].first);
            CHECK(a.participants[p].second == b.participants[p].second);
        }
    }
}

TEST_CASE("end to end on an instance with an empty top-degree delivery array") {
    const auto d = catalog::fano_plane();
    DeliveryParams a = DeliveryParams::zeros(d.t, 2);
    a.a[0] = {2};
    const auto g = build_hppda(d, 2, a);
    const long long k_o = active_user_count(7, 2, 2);
    CHECK(k_o == 11);
    const auto inst = place(g, random_library(static_cast<int>(k_o), 20, 3));
    CHECK(inst.code.d() == 5);
    const PointSet I{1, 2};
    const auto session = deliver(inst, worst_case_demands(7, 2, I, 11));
    CHECK(session.transmissions.size() == 10);  // degree-1 labels only
    for (const auto& [user, demanded] : session.demands) {
        const auto transcript = decode_user(inst, session, user);
        CHECK(transcript.file == inst.library.files[demanded - 1]);
        if (transcript.degree == 2) CHECK(transcript.delivered_blocks.empty());
    }
}

TEST_CASE("end to end at the maximal access degree r = t") {
    const auto d = catalog::design_3_8_4_1();
    DeliveryParams a = DeliveryParams::zeros(3, 3);
    a.a[0] = {2, 2};
    a.a[1] = {2};
    // top degree has no multiplicities (t - r = 0)
    const auto feas = feasibility(d, 3, a);
    REQUIRE(feas.feasible);
    CHECK(feas.accessible == std::vector<long long>{13, 13, 13});
    const auto g = build_hppda(d, 3, a);
    CHECK_FALSE(g.B[2].has_value());
    const long long k_o = active_user_count(8, 3, 3);
    const auto inst = place(g, random_library(static_cast<int>(k_o), 16, 9));
    const PointSet I{1, 4, 7};
    const auto session = deliver(inst, worst_case_demands(8, 3, I, static_cast<int>(k_o)));
    for (const auto& [user, demanded] : session.demands) {
        const auto transcript = decode_user(inst, session, user);
        CHECK(transcript.file == inst.library.files[demanded - 1]);
    }
}

TEST_CASE("rate formulas") {
    const auto g = reference_hppda();
    const auto [m_over_n, r] = rate(g);
    CHECK(m_over_n == Rational(7, 12));
    CHECK(r == Rational(3));

    // Dropping the degree-2 multicasts entirely changes both coordinates.
    DeliveryParams a = DeliveryParams::zeros(3, 2);
    a.a[0] = {2, 1};
    a.a[1] = {0};
    const auto [m2, r2] = rate(hppda_params(catalog::design_3_8_4_1(), 2, a));
    CHECK(m2 == Rational(7, 11));
    CHECK(r2 == Rational(35, 11));
}

TEST_CASE("single-access rate matches the dedicated-cache t-design formula") {
    std::mt19937 rng(17);
    for (const auto& d : {catalog::design_3_8_4_1(), catalog::fano_plane(), complete_design(6, 3, 2),
                          complete_design(6, 4, 3), complete_design(7, 4, 3)}) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<long long> a_s(d.t - 1);
            bool all_zero = true;
            for (int s = 1; s <= d.t - 1; ++s) {
                a_s[s - 1] = rng() % (lambda_st(d, s) + 1);
                all_zero = all_zero && a_s[s - 1] == 0;
            }
            if (all_zero) a_s[0] = 1;
            DeliveryParams a = DeliveryParams::zeros(d.t, 1);
            a.a[0] = a_s;
            const auto [m_prop, r_prop] = rate(hppda_params(d, 1, a));
            const auto point = crr_t_point(d, a_s);
            CHECK(m_prop == point.memory_ratio);
            CHECK(r_prop == point.rate);
        }
    }
}

TEST_CASE("active user counting") {
    CHECK(active_user_count(8, 3, 2) == 18);
    CHECK(active_user_count(8, 3, 1) == 3);
    CHECK(active_user_count(5, 3, 2) == 9);
    const auto act = active_users(8, 3, 2, {2, 4, 6});
    CHECK(act.k_o == 18);
    CHECK(act.users.size() == 18);
    CHECK(std::is_sorted(act.users.begin(), act.users.end()));
}

TEST_CASE("demand vector construction and validation") {
    CHECK_THROWS_AS(worst_case_demands(8, 2, {2, 4, 6}, 17), std::invalid_argument);
    const auto dv = worst_case_demands(8, 2, {2, 4, 6}, 18);
    CHECK(dv.demands.size() == 18);
    std::vector<int> files;
    for (const auto& [u, n] : dv.demands) files.push_back(n);
    std::sort(files.begin(), files.end());
    for (int i = 0; i < 18; ++i) CHECK(files[i] == i + 1);

    const auto rnd = random_demands(8, 2, {2, 4, 6}, 4, 77);
    CHECK(rnd.demands.size() == 18);
    for (const auto& [u, n] : rnd.demands) {
        CHECK(n >= 1);
        CHECK(n <= 4);
    }
    CHECK(random_demands(8, 2, {2, 4, 6}, 4, 77).demands == rnd.demands);

    DemandVector bad = dv;
    bad.demands.erase(bad.demands.begin());
    CHECK_THROWS_AS(validate_demands(8, 2, bad, 18), std::invalid_argument);
    bad = dv;
    bad.demands[{1, 3}] = 1;  // stranded user named
    CHECK_THROWS_AS(validate_demands(8, 2, bad, 18), std::invalid_argument);
    bad = dv;
    bad.demands[{2, 4}] = 19;
    CHECK_THROWS_AS(validate_demands(8, 2, bad, 18), std::invalid_argument);
}

TEST_CASE("session export format") {
    const auto inst = reference_instance();
    const auto dv = worst_case_demands(8, 2, {2, 4, 6}, 18);
    const auto session = deliver(inst, dv);
    std::vector<DecodeTranscript> transcripts;
    for (const auto& [user, n] : session.demands) transcripts.push_back(decode_user(inst, session, user));
    const auto text = export_session(session, transcripts);
    CHECK(std::count(text.begin(), text.end(), '\n') == 36 + 18 + 10);
    CHECK(text.find("transmission,2,(123,1)_1,") != std::string::npos);
    CHECK(text.find("user,24,11,1,ok") != std::string::npos);
    CHECK(text.find("user,12,7,5,ok") != std::string::npos);
    CHECK(text.find("stranded,13") != std::string::npos);
}

TEST_CASE("library generation is seed-reproducible") {
    const auto a = random_library(3, 32, 42);
    const auto b = random_library(3, 32, 42);
    CHECK(a.files == b.files);
    CHECK(a.seed == 42);
    CHECK(random_library(3, 32, 43).files != a.files);
    CHECK_THROWS_AS(random_library(0, 32, 1), std::invalid_argument);
}
