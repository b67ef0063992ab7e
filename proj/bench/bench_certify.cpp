// Benchmark: serial reference vs OpenMP kernels for exhaustive certification
// and star-match verification, on a heavier complete-design instance.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hotplug/certify.hpp"

using namespace hotplug;

namespace {

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

SchemeInstance quick_instance() {
    DeliveryParams a = DeliveryParams::zeros(3, 2);
    a.a[0] = {2, 1};
    a.a[1] = {1};
    const auto g = build_hppda(catalog::design_3_8_4_1(), 2, a);
    return place(g, random_library(18, 16, 7));
}

SchemeInstance heavy_instance() {
    const auto d = complete_design(9, 4, 3);
    DeliveryParams a = DeliveryParams::zeros(3, 2);
    a.a[0] = {18, 0};
    a.a[1] = {1};
    const auto g = build_hppda(d, 2, a);
    const int k_o = static_cast<int>(active_user_count(d.v, d.t, 2));
    return place(g, random_library(k_o, 16, 7));
}

void bench_instance(const SchemeInstance& inst, int threads) {
    const auto& d = inst.hppda.design;
    std::printf("instance: %s r=%d D=%d online-sets=%lld users/set=%lld\n", d.name().c_str(), inst.hppda.r,
                inst.code.d(), binomial(d.v, d.t),
                active_user_count(d.v, d.t, inst.hppda.r));

    auto start = std::chrono::steady_clock::now();
    const auto serial = check_all(inst, 1);
    const double t_serial = seconds_since(start);

    start = std::chrono::steady_clock::now();
    const auto parallel = check_all(inst, threads);
    const double t_parallel = seconds_since(start);

    const bool agree = serial.pass() == parallel.pass() && serial.users_checked == parallel.users_checked &&
                       serial.decode_failures == parallel.decode_failures;
    std::printf("  check_all   serial %.3f s | %d threads %.3f s | speedup %.2fx | results %s (%s)\n",
                t_serial, threads, t_parallel, t_serial / t_parallel, agree ? "agree" : "DISAGREE",
                serial.pass() ? "pass" : "fail");

    start = std::chrono::steady_clock::now();
    const auto vs = verify_all_online_sets(inst.hppda, 1);
    const double v_serial = seconds_since(start);
    start = std::chrono::steady_clock::now();
    const auto vp = verify_all_online_sets(inst.hppda, threads);
    const double v_parallel = seconds_since(start);
    bool v_agree = vs.size() == vp.size();
    for (size_t i = 0; v_agree && i < vs.size(); ++i) v_agree = vs[i].all_ok() == vp[i].all_ok();
    std::printf("  verify_all  serial %.3f s | %d threads %.3f s | speedup %.2fx | results %s\n", v_serial,
                threads, v_parallel, v_serial / v_parallel, v_agree ? "agree" : "DISAGREE");
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = false;
    int threads = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;
        if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc) threads = std::atoi(argv[++i]);
    }
#ifdef _OPENMP
    if (threads <= 0) threads = omp_get_max_threads();
#else
    if (threads <= 0) threads = 2;
    std::printf("built without OpenMP; the parallel path falls back to serial\n");
#endif

    bench_instance(quick_instance(), threads);
    if (!quick) bench_instance(heavy_instance(), threads);
    return 0;
}
