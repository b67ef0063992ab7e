#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hotplug/hppda.hpp"
#include "hotplug/mds.hpp"
#include "hotplug/rational.hpp"

namespace hotplug {

struct Library {
    std::vector<Bytes> files;  // 1-based indexing at the API level
    std::optional<std::uint64_t> seed;  // recorded when generated

    int count() const { return static_cast<int>(files.size()); }
    size_t max_len() const;
};

Library random_library(int n_files, size_t bytes_per_file, std::uint64_t seed);
Library load_library_dir(const std::string& path);

/// Placed system state: the MDS-coded subfiles of every file plus the
/// cache-to-block assignment from the placement array. Immutable after
/// place(); deliveries and decodes share it read-only.
struct SchemeInstance {
    SchemeInstance(GeneralizedHpPda g, MdsCode mds, Library lib)
        : hppda(std::move(g)), code(std::move(mds)), library(std::move(lib)) {}

    GeneralizedHpPda hppda;
    MdsCode code;
    Library library;
    size_t padded_len = 0;           // common byte length files are padded to
    size_t symbols_per_subfile = 0;
    std::vector<std::vector<SymbolVec>> coded;  // [file][block]
    std::vector<std::vector<int>> cache_blocks;  // per cache: block indices stored

    long long subpacketization() const { return code.d(); }
    /// Coded subfiles held by one cache across the whole library.
    long long cached_subfile_count(int cache) const;
    Rational memory_ratio() const;
    int block_index(const Block& blk) const;
};

/// MDS-encodes every file into one coded subfile per block and assigns them
/// to caches following the placement array. Requires the feasibility chain
/// to hold and a code with length = block count, dimension = F'_r - Z'_r + Z.
SchemeInstance place(const GeneralizedHpPda& g, const MdsCode& code, Library library);

/// Convenience: builds the matching code, then places.
SchemeInstance place(const GeneralizedHpPda& g, Library library);

struct DemandVector {
    PointSet online;                  // I, |I| = t
    std::map<PointSet, int> demands;  // active user -> 1-based file index
};

/// All-distinct demands (files 1..K_o assigned to active users in
/// lexicographic user order). Requires n_files >= K_o.
DemandVector worst_case_demands(int v, int r, const PointSet& I, int n_files);

/// Seeded uniform demands; any n_files >= 1.
DemandVector random_demands(int v, int r, const PointSet& I, int n_files, std::uint64_t seed);

/// Throws unless the demand vector covers exactly the active users with file
/// indices in range.
void validate_demands(int v, int r, const DemandVector& dv, int n_files);

struct Transmission {
    int j = 0;
    PdaLabel label;
    /// (user, block index) per participating cell; the user's requested
    /// coded subfile for that block enters the XOR.
    std::vector<std::pair<PointSet, int>> participants;
    SymbolVec payload;
};

struct DeliverySession {
    PointSet online;
    std::map<PointSet, int> demands;
    std::vector<Transmission> transmissions;  // degree ascending, then label
    std::vector<PointSet> stranded;           // users with no online cache
};

/// Runs the delivery phase: one multicast per delivery-array label, XORing
/// the requested coded subfiles of the label's group. The transmission count
/// is demand-oblivious.
DeliverySession deliver(const SchemeInstance& instance, const DemandVector& dv);

struct DecodeTranscript {
    PointSet user;
    int degree = 0;                       // number of online caches reached
    std::vector<int> cached_blocks;       // read from online caches
    std::vector<int> used_transmissions;  // indices into session.transmissions
    std::vector<int> delivered_blocks;    // recovered by peeling
    Bytes file;
};

/// Reconstructs the user's demanded file from online-cache contents plus the
/// session transmissions: peel each transmission the user participates in by
/// cancelling the other participants' subfiles (all reachable through the
/// user's online caches), then MDS-decode from the gathered shares.
DecodeTranscript decode_user(const SchemeInstance& instance, const DeliverySession& session,
                             const PointSet& user);

/// Exact rate-memory point of the construction: (Z_c/D, sum_j S_j / D).
std::pair<Rational, Rational> rate(const HppdaParams& params);
std::pair<Rational, Rational> rate(const GeneralizedHpPda& g);

struct ActiveUsers {
    std::vector<PointSet> users;  // U with U n I nonempty, lexicographic
    long long k_o = 0;            // = users.size(), also the closed form
};
ActiveUsers active_users(int v, int t, int r, const PointSet& I);

/// Closed form sum_j C(t,j) C(v-t,r-j).
long long active_user_count(int v, int t, int r);

/// CSV-style session export: one "transmission,..." row per multicast and
/// one "user,..." row per transcript, plus "stranded,..." rows.
std::string export_session(const DeliverySession& session, const std::vector<DecodeTranscript>& transcripts);

}  // namespace hotplug
