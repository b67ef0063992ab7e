#include "hotplug/scheme.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hotplug {

size_t Library::max_len() const {
    size_t len = 0;
    for (const auto& f : files) len = std::max(len, f.size());
    return len;
}

Library random_library(int n_files, size_t bytes_per_file, std::uint64_t seed) {
    if (n_files < 1) throw std::invalid_argument("library needs at least one file");
    Library lib;
    lib.seed = seed;
    std::mt19937_64 rng(seed);
    lib.files.resize(n_files);
    for (auto& f : lib.files) {
        f.resize(bytes_per_file);
        for (auto& byte : f) byte = static_cast<std::uint8_t>(rng() & 0xFF);
    }
    return lib;
}

Library load_library_dir(const std::string& path) {
    namespace fs = std::filesystem;
    std::vector<fs::path> entries;
    for (const auto& e : fs::directory_iterator(path))
        if (e.is_regular_file()) entries.push_back(e.path());
    std::sort(entries.begin(), entries.end());
    if (entries.empty()) throw std::runtime_error("library directory '" + path + "' holds no files");
    Library lib;
    for (const auto& p : entries) {
        std::ifstream in(p, std::ios::binary);
        if (!in) throw std::runtime_error("cannot read library file '" + p.string() + "'");
        Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        lib.files.push_back(std::move(data));
    }
    return lib;
}

long long SchemeInstance::cached_subfile_count(int cache) const {
    return checked_mul(static_cast<long long>(cache_blocks[cache - 1].size()), library.count());
}

Rational SchemeInstance::memory_ratio() const {
    return Rational(hppda.params.Z_c, code.d());
}

int SchemeInstance::block_index(const Block& blk) const {
    const auto& blocks = hppda.design.blocks;
    const auto it = std::lower_bound(blocks.begin(), blocks.end(), blk);
    if (it == blocks.end() || *it != blk) throw std::invalid_argument("unknown block");
    return static_cast<int>(it - blocks.begin());
}

SchemeInstance place(const GeneralizedHpPda& g, const MdsCode& code, Library library) {
    const auto report = feasibility(g);
    if (!report.feasible)
        throw std::invalid_argument("place: accessibility chain fails at degree " +
                                    std::to_string(report.first_bad_j));
    if (code.n() != g.params.F || code.d() != g.params.subpacketization())
        throw std::invalid_argument("place: code shape does not match the construction");
    if (library.count() < 1) throw std::invalid_argument("place: empty library");

    SchemeInstance inst(g, code, std::move(library));
    const int d = code.d();
    const int m = code.field().m();
    inst.padded_len = inst.library.max_len();
    const size_t symbols_per_file = (inst.padded_len * 8 + m - 1) / m;
    inst.symbols_per_subfile = (symbols_per_file + d - 1) / d;

    inst.coded.resize(inst.library.count());
    for (int n = 0; n < inst.library.count(); ++n) {
        Bytes padded = inst.library.files[n];
        padded.resize(inst.padded_len, 0);
        SymbolVec symbols = bytes_to_symbols(padded, m);
        symbols.resize(static_cast<size_t>(d) * inst.symbols_per_subfile, 0);
        std::vector<SymbolVec> message(d);
        for (int i = 0; i < d; ++i)
            message[i].assign(symbols.begin() + static_cast<long>(i) * inst.symbols_per_subfile,
                              symbols.begin() + static_cast<long>(i + 1) * inst.symbols_per_subfile);
        inst.coded[n] = code.encode(message);
    }

    inst.cache_blocks.resize(g.design.v);
    for (int f = 0; f < static_cast<int>(g.design.b()); ++f)
        for (int point : g.design.blocks[f]) inst.cache_blocks[point - 1].push_back(f);
    return inst;
}

SchemeInstance place(const GeneralizedHpPda& g, Library library) {
    MdsCode code(static_cast<int>(g.params.F), static_cast<int>(g.params.subpacketization()));
    return place(g, code, std::move(library));
}

DemandVector worst_case_demands(int v, int r, const PointSet& I, int n_files) {
    DemandVector dv;
    dv.online = I;
    int next = 1;
    for (const auto& u : k_subsets(v, r)) {
        if (!sets_intersect(u, I)) continue;
        if (next > n_files)
            throw std::invalid_argument("worst-case demands need at least as many files as active users");
        dv.demands[u] = next++;
    }
    return dv;
}

DemandVector random_demands(int v, int r, const PointSet& I, int n_files, std::uint64_t seed) {
    DemandVector dv;
    dv.online = I;
    std::mt19937_64 rng(seed);
    for (const auto& u : k_subsets(v, r)) {
        if (!sets_intersect(u, I)) continue;
        dv.demands[u] = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_files));
    }
    return dv;
}

void validate_demands(int v, int r, const DemandVector& dv, int n_files) {
    for (const auto& u : k_subsets(v, r)) {
        const bool active = sets_intersect(u, dv.online);
        const auto it = dv.demands.find(u);
        if (active && it == dv.demands.end())
            throw std::invalid_argument("demand vector misses active user {" + format_set(u) + "}");
        if (!active && it != dv.demands.end())
            throw std::invalid_argument("demand vector names inactive user {" + format_set(u) + "}");
        if (it != dv.demands.end() && (it->second < 1 || it->second > n_files))
            throw std::invalid_argument("demand for user {" + format_set(u) + "} is out of range");
    }
}

DeliverySession deliver(const SchemeInstance& instance, const DemandVector& dv) {
    const GeneralizedHpPda& g = instance.hppda;
    const TDesign& d = g.design;
    if (static_cast<int>(dv.online.size()) != d.t)
        throw std::invalid_argument("deliver: |I| must equal the design strength");
    validate_demands(d.v, g.r, dv, instance.library.count());

    DeliverySession session;
    session.online = dv.online;
    session.demands = dv.demands;
    for (const auto& u : k_subsets(d.v, g.r))
        if (!sets_intersect(u, dv.online)) session.stranded.push_back(u);

    for (int j = 1; j <= g.r; ++j) {
        if (!g.B[j - 1]) continue;
        const BjArray& bj = *g.B[j - 1];
        const auto row_blocks = zeta(d, dv.online, j, g.a);
        const auto col_users = tau(d.v, g.r, dv.online, j);
        std::vector<int> row_index(row_blocks.size());
        for (size_t m = 0; m < row_blocks.size(); ++m) row_index[m] = instance.block_index(row_blocks[m]);

        for (const auto& [label, cells] : multicast_groups(bj.array)) {
            Transmission tx;
            tx.j = j;
            tx.label = label;
            tx.payload.assign(instance.symbols_per_subfile, 0);
            for (const auto& [m, n] : cells) {
                const PointSet& user = col_users[n];
                const int f = row_index[m];
                tx.participants.emplace_back(user, f);
                const SymbolVec& part = instance.coded[dv.demands.at(user) - 1][f];
                for (size_t p = 0; p < tx.payload.size(); ++p) tx.payload[p] ^= part[p];
            }
            session.transmissions.push_back(std::move(tx));
        }
    }
    return session;
}

DecodeTranscript decode_user(const SchemeInstance& instance, const DeliverySession& session,
                             const PointSet& user) {
    const TDesign& d = instance.hppda.design;
    const PointSet reachable = set_intersection(user, session.online);
    if (reachable.empty()) throw std::invalid_argument("decode_user: user has no online cache");

    DecodeTranscript out;
    out.user = user;
    out.degree = static_cast<int>(reachable.size());
    const int demanded = session.demands.at(user);

    std::map<int, SymbolVec> shares;
    for (int f = 0; f < static_cast<int>(d.b()); ++f) {
        if (!sets_intersect(d.blocks[f], reachable)) continue;
        out.cached_blocks.push_back(f);
        shares[f] = instance.coded[demanded - 1][f];
    }

    for (size_t tx_idx = 0; tx_idx < session.transmissions.size(); ++tx_idx) {
        const Transmission& tx = session.transmissions[tx_idx];
        const auto self = std::find_if(tx.participants.begin(), tx.participants.end(),
                                       [&](const auto& p) { return p.first == user; });
        if (self == tx.participants.end()) continue;
        SymbolVec value = tx.payload;
        for (const auto& [other, f] : tx.participants) {
            if (other == user) continue;
            if (!sets_intersect(d.blocks[f], reachable))
                throw std::logic_error("decode_user: transmission is not peelable from online caches");
            const SymbolVec& part = instance.coded[session.demands.at(other) - 1][f];
            for (size_t p = 0; p < value.size(); ++p) value[p] ^= part[p];
        }
        const int f_self = self->second;
        if (shares.count(f_self)) throw std::logic_error("decode_user: duplicate coded subfile delivered");
        shares[f_self] = std::move(value);
        out.used_transmissions.push_back(static_cast<int>(tx_idx));
        out.delivered_blocks.push_back(f_self);
    }

    const int dim = instance.code.d();
    if (static_cast<int>(shares.size()) < dim)
        throw std::runtime_error("decode_user: fewer than " + std::to_string(dim) +
                                 " coded subfiles available");
    const auto message = instance.code.decode(shares);

    SymbolVec symbols;
    symbols.reserve(static_cast<size_t>(dim) * instance.symbols_per_subfile);
    for (const auto& part : message) symbols.insert(symbols.end(), part.begin(), part.end());
    out.file = symbols_to_bytes(symbols, instance.code.field().m(), instance.padded_len);
    out.file.resize(instance.library.files[demanded - 1].size());
    return out;
}

std::pair<Rational, Rational> rate(const HppdaParams& params) {
    const long long d = params.subpacketization();
    return {Rational(params.Z_c, d), Rational(params.total_transmissions(), d)};
}

std::pair<Rational, Rational> rate(const GeneralizedHpPda& g) {
    return rate(g.params);
}

ActiveUsers active_users(int v, int t, int r, const PointSet& I) {
    if (static_cast<int>(I.size()) != t) throw std::invalid_argument("active_users: |I| must equal t");
    ActiveUsers out;
    for (const auto& u : k_subsets(v, r))
        if (sets_intersect(u, I)) out.users.push_back(u);
    out.k_o = static_cast<long long>(out.users.size());
    if (out.k_o != active_user_count(v, t, r)) throw std::logic_error("active user count mismatch");
    return out;
}

long long active_user_count(int v, int t, int r) {
    long long total = 0;
    for (int j = 1; j <= r; ++j)
        total = checked_add(total, checked_mul(binomial(t, j), binomial(v - t, r - j)));
    return total;
}

std::string export_session(const DeliverySession& session, const std::vector<DecodeTranscript>& transcripts) {
    std::ostringstream out;
    auto join = [](const std::vector<std::string>& parts) {
        std::string s;
        for (size_t i = 0; i < parts.size(); ++i) s += (i ? ";" : "") + parts[i];
        return s;
    };
    for (const auto& tx : session.transmissions) {
        std::vector<std::string> users, blocks;
        for (const auto& [u, f] : tx.participants) {
            users.push_back(format_set(u));
            blocks.push_back(std::to_string(f));
        }
        out << "transmission," << tx.j << "," << tx.label.str() << "," << join(users) << "," << join(blocks)
            << "\n";
    }
    for (const auto& tr : transcripts)
        out << "user," << format_set(tr.user) << "," << tr.cached_blocks.size() << ","
            << tr.delivered_blocks.size() << ",ok\n";
    for (const auto& u : session.stranded) out << "stranded," << format_set(u) << "\n";
    return out.str();
}

}  // namespace hotplug
