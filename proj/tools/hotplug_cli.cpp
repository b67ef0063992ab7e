// Command-line front end: design validation, array construction and
// verification, delivery simulation, exhaustive certification, and the
// rate-memory comparison sweep.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "hotplug/certify.hpp"
#include "hotplug/sweep.hpp"

using namespace hotplug;

namespace {

TDesign resolve_design(const std::string& spec) {
    if (spec.rfind("catalog:", 0) == 0) return catalog::by_name(spec.substr(8));
    auto outcome = load_design_file(spec);
    if (!outcome.ok()) throw std::runtime_error("design file invalid: " + outcome.violation->message());
    return *std::move(outcome.design);
}

struct InstanceArgs {
    std::string design;
    int r = 1;
    std::string a_text;
    int n_files = 1;
    std::size_t file_bytes = 64;
    std::uint64_t library_seed = 1;
    std::string library_dir;

    void attach(CLI::App* cmd, bool with_library) {
        cmd->add_option("--design", design, "catalog:NAME or a design file path")->required();
        cmd->add_option("--r", r, "access degree (caches per user)")->required();
        cmd->add_option("--a", a_text, "delivery multiplicities, entries s,j=value")->required();
        if (with_library) {
            cmd->add_option("--n-files", n_files, "library size")->required();
            cmd->add_option("--file-bytes", file_bytes, "bytes per generated file");
            cmd->add_option("--library-seed", library_seed, "seed for the generated library");
            cmd->add_option("--library-dir", library_dir, "load the library from a directory instead");
        }
    }

    GeneralizedHpPda build() const {
        const TDesign d = resolve_design(design);
        const DeliveryParams a = DeliveryParams::parse(a_text, d.t, r);
        return build_hppda(d, r, a);
    }

    Library library() const {
        if (!library_dir.empty()) return load_library_dir(library_dir);
        return random_library(n_files, file_bytes, library_seed);
    }
};

DemandVector make_demands(const std::string& spec, const GeneralizedHpPda& g, const PointSet& online,
                          int n_files) {
    if (spec == "worst") return worst_case_demands(g.design.v, g.r, online, n_files);
    if (spec.rfind("seed:", 0) == 0)
        return random_demands(g.design.v, g.r, online, n_files, std::stoull(spec.substr(5)));
    if (spec.rfind("file:", 0) == 0) {
        std::ifstream in(spec.substr(5));
        if (!in) throw std::runtime_error("cannot open demands file");
        DemandVector dv;
        dv.online = online;
        std::string user_text;
        int file_index = 0;
        while (in >> user_text >> file_index) dv.demands[parse_set(user_text)] = file_index;
        validate_demands(g.design.v, g.r, dv, n_files);
        return dv;
    }
    throw std::runtime_error("demands must be worst, seed:N, or file:PATH");
}

int cmd_design_verify(const std::string& path) {
    const auto outcome = load_design_file(path);
    if (!outcome.ok()) {
        std::cout << "invalid: " << outcome.violation->message() << "\n";
        return 1;
    }
    const auto& d = *outcome.design;
    std::cout << "valid " << d.name() << " design: v=" << d.v << " k=" << d.k << " t=" << d.t
              << " lambda=" << d.lambda << " blocks=" << d.b() << "\n";
    return 0;
}

int cmd_hppda_build(const InstanceArgs& args) {
    const auto g = args.build();
    const auto& p = g.params;
    std::cout << "# caches=" << p.C << " online=" << p.C_prime << " r=" << p.r << " blocks=" << p.F << "\n";
    std::cout << "# Z_c=" << p.Z_c << " Z=" << p.Z << " D=" << p.subpacketization() << "\n";
    for (int j = 1; j <= p.r; ++j)
        std::cout << "# j=" << j << ": F'=" << p.F_prime[j - 1] << " Z'=" << p.Z_prime[j - 1]
                  << " S=" << p.S[j - 1] << "\n";
    const auto feas = feasibility(g);
    std::cout << "# accessible:";
    for (long long y : feas.accessible) std::cout << ' ' << y;
    std::cout << " feasible=" << (feas.feasible ? "yes" : "no") << "\n";
    const auto [m_over_n, r_value] = rate(g);
    std::cout << "# M/N=" << m_over_n.str() << " rate=" << r_value.str() << "\n";

    std::cout << "# placement array P_c (" << g.Pc.rows << "x" << g.Pc.cols << ")\n" << g.Pc.dump();
    std::cout << "# access array P (" << g.P.rows << "x" << g.P.cols << ")\n" << g.P.dump();
    for (int j = 1; j <= p.r; ++j) {
        if (!g.B[j - 1]) {
            std::cout << "# delivery array B_" << j << ": empty\n";
            continue;
        }
        const auto& bj = *g.B[j - 1];
        std::cout << "# delivery array B_" << j << " (" << bj.array.rows << "x" << bj.array.cols << ")\n"
                  << dump(bj.array);
    }
    return feas.feasible ? 0 : 1;
}

int cmd_hppda_verify(const InstanceArgs& args, bool all_online_sets, const std::string& online_text,
                     int jobs) {
    const auto g = args.build();
    auto print_report = [](const StarMatchReport& report) {
        std::cout << "I={" << format_set(report.online_set) << "}";
        for (const auto& per : report.per_j) {
            std::cout << " j=" << per.j << ":";
            if (per.empty) {
                std::cout << "empty";
                continue;
            }
            std::cout << (per.containment_ok ? "containment=ok" : "containment=FAIL")
                      << (per.online_exact_ok ? ",online-exact=ok" : ",online-exact=FAIL");
        }
        std::cout << (report.all_ok() ? " PASS" : " FAIL") << "\n";
        return report.all_ok();
    };
    bool all_ok = true;
    if (all_online_sets) {
        for (const auto& report : verify_all_online_sets(g, jobs)) all_ok = print_report(report) && all_ok;
    } else {
        if (online_text.empty()) throw std::runtime_error("give --online or --all-online-sets");
        all_ok = print_report(verify_hppda(g, parse_set(online_text)));
    }
    return all_ok ? 0 : 1;
}

int cmd_scheme_simulate(const InstanceArgs& args, const std::string& online_text,
                        const std::string& demands_spec) {
    const auto g = args.build();
    const auto inst = place(g, args.library());
    const PointSet online = parse_set(online_text);
    const auto dv = make_demands(demands_spec, g, online, inst.library.count());
    const auto session = deliver(inst, dv);

    const auto [m_over_n, r_formula] = rate(g);
    std::cout << "# design " << g.design.name() << " r=" << g.r << " " << g.a.str() << "\n";
    std::cout << "# D=" << inst.code.d() << " code=[" << inst.code.n() << "," << inst.code.d() << "]"
              << " M/N=" << m_over_n.str() << " rate=" << r_formula.str() << "\n";
    if (inst.library.seed) std::cout << "# library seed " << *inst.library.seed << "\n";
    std::cout << "# transmissions=" << session.transmissions.size() << "\n";

    bool all_ok = true;
    std::vector<DecodeTranscript> transcripts;
    for (const auto& [user, demanded] : session.demands) {
        auto transcript = decode_user(inst, session, user);
        if (transcript.file != inst.library.files[demanded - 1]) all_ok = false;
        transcripts.push_back(std::move(transcript));
    }
    std::cout << export_session(session, transcripts);
    std::cout << "# decode " << (all_ok ? "ok" : "FAILED") << "\n";
    return all_ok ? 0 : 1;
}

int cmd_scheme_check_all(const InstanceArgs& args, int jobs) {
    const auto g = args.build();
    const auto inst = place(g, args.library());
    const auto report = check_all(inst, jobs);
    std::cout << report.summary() << "\n";
    std::cout << (report.pass() ? "PASS" : "FAIL") << "\n";
    return report.pass() ? 0 : 1;
}

int cmd_sweep(const std::string& config_path, bool simulate, const std::string& output_path) {
    const auto cfg = SweepConfig::parse_file(config_path);
    const auto result = run_sweep(cfg, simulate);
    for (const auto& reason : result.skipped) std::cerr << "skipped: " << reason << "\n";
    const auto csv = to_csv(result.rows);
    if (output_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(output_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + output_path + "'");
        out << csv;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Combinatorial multi-access hotplug coded caching toolkit"};
    app.require_subcommand(1);

    // design verify <file>
    auto* design_cmd = app.add_subcommand("design", "t-design utilities");
    design_cmd->require_subcommand(1);
    std::string design_file;
    auto* design_verify = design_cmd->add_subcommand("verify", "validate a design file");
    design_verify->add_option("file", design_file, "design file path")->required();

    // hppda build / verify
    auto* hppda_cmd = app.add_subcommand("hppda", "placement/delivery array construction");
    hppda_cmd->require_subcommand(1);
    InstanceArgs build_args;
    auto* hppda_build = hppda_cmd->add_subcommand("build", "build and print the array triple");
    build_args.attach(hppda_build, false);
    InstanceArgs verify_args;
    bool all_online_sets = false;
    std::string verify_online;
    int verify_jobs = 1;
    auto* hppda_verify = hppda_cmd->add_subcommand("verify", "check the star-match condition");
    verify_args.attach(hppda_verify, false);
    hppda_verify->add_flag("--all-online-sets", all_online_sets, "verify every online set");
    hppda_verify->add_option("--online", verify_online, "single online set, e.g. 2,4,6");
    hppda_verify->add_option("--jobs", verify_jobs, "worker threads (1 = serial)");

    // scheme simulate / check-all
    auto* scheme_cmd = app.add_subcommand("scheme", "placement, delivery and decoding");
    scheme_cmd->require_subcommand(1);
    InstanceArgs sim_args;
    std::string sim_online, sim_demands = "worst";
    auto* scheme_sim = scheme_cmd->add_subcommand("simulate", "run one delivery session");
    sim_args.attach(scheme_sim, true);
    scheme_sim->add_option("--online", sim_online, "online cache set, e.g. 2,4,6")->required();
    scheme_sim->add_option("--demands", sim_demands, "worst | seed:N | file:PATH");
    InstanceArgs check_args;
    int check_jobs = 1;
    auto* scheme_check = scheme_cmd->add_subcommand("check-all", "certify every online set");
    check_args.attach(scheme_check, true);
    scheme_check->add_option("--jobs", check_jobs, "worker threads (1 = serial)");

    // sweep
    std::string sweep_config, sweep_output;
    bool sweep_simulate = false;
    auto* sweep_cmd = app.add_subcommand("sweep", "rate-memory comparison CSV");
    sweep_cmd->add_option("--config", sweep_config, "key = value config file")->required();
    sweep_cmd->add_flag("--simulate", sweep_simulate, "cross-check rows against a simulated delivery");
    sweep_cmd->add_option("--output", sweep_output, "write CSV here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (design_verify->parsed()) return cmd_design_verify(design_file);
        if (hppda_build->parsed()) return cmd_hppda_build(build_args);
        if (hppda_verify->parsed())
            return cmd_hppda_verify(verify_args, all_online_sets, verify_online, verify_jobs);
        if (scheme_sim->parsed()) return cmd_scheme_simulate(sim_args, sim_online, sim_demands);
        if (scheme_check->parsed()) return cmd_scheme_check_all(check_args, check_jobs);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_config, sweep_simulate, sweep_output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
