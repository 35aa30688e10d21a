#pragma once
// Full switching classification: enumerate every switching class, partition
// into orbits under the automorphism action, enrich orbits with minimal
// signatures and negative-cycle profiles, count matching types, and check
// the published reduction fixtures.

#include <cstdint>
#include <string>
#include <vector>

#include "gpg/graph.hpp"
#include "gpg/signature.hpp"
#include "gpg/symmetry.hpp"

namespace gpg {

struct ClassRecord {
    ClassId class_id;
    int min_size = 0;
    std::vector<Signature> min_witnesses;
    NegCycleProfile profile;
};

struct OrbitRecord {
    int orbit_id = 0;
    std::vector<ClassId> class_ids;  // ascending; closed under the action
    Signature canonical_rep;         // smallest min-size witness in the orbit
    int min_size = -1;
    NegCycleProfile profile;
};

struct MatchingCensus {
    int size = 0;
    int aut_orbit_count = 0;
    int switching_iso_count = -1;    // -1 when not requested
    bool excluded_forbidden = false;
};

inline constexpr int kMaxCotreeRank = 24;

// All 2^(M-V+1) switching classes, ascending. Requires M-V+1 <= 24.
std::vector<ClassId> enumerate_classes(const Graph& g);

// Orbits of act_on_class, ordered by smallest member class; the direct count
// is cross-checked against the Burnside fixed-point average.
std::vector<OrbitRecord> orbit_partition(const Graph& g, const AutGroup& grp);

// Fills min_size / canonical_rep / profile on each orbit (computed on the
// orbit representative, spot-checked on one other random member) and returns
// one fully-detailed record per orbit representative class.
std::vector<ClassRecord> build_class_records(const Graph& g,
                                             const std::vector<Cycle>& cycles,
                                             const AutGroup& grp,
                                             std::vector<OrbitRecord>& orbits,
                                             int jobs = 1,
                                             std::uint64_t spot_check_seed = 2026);

// All matchings of exactly `size`, ascending by edge mask.
std::vector<Signature> enumerate_matchings(const Graph& g, int size);

// The seven irreducible-looking size-3 matchings of P(7,1) that switch down
// to size <= 2; rejects other graphs.
std::vector<Signature> forbidden_sigmas(const Graph& g);

// Orbit count of size-`size` matchings under the group action. With
// exclude_forbidden (P(7,1) only): drops automorphic images of the seven
// reducible sigmas, and for size 4 any matching containing such an image.
// with_switching_count additionally fills switching_iso_count (the number of
// switching-isomorphism classes whose minimal size equals `size`).
MatchingCensus matching_aut_orbits(const Graph& g, const AutGroup& grp, int size,
                                   bool exclude_forbidden = false,
                                   bool with_switching_count = false,
                                   int jobs = 1);

// Number of orbits whose minimal signature size equals `size`.
int matching_class_count(const Graph& g, const AutGroup& grp, int size,
                         int jobs = 1);

// Max over orbits of the minimal signature size.
int max_minimal_size(const Graph& g, const AutGroup& grp, int jobs = 1);

struct CheckLine {
    std::string text;
    bool ok = false;
};

struct CheckReport {
    std::vector<CheckLine> lines;
    int pass_count() const;
    bool all_ok() const { return pass_count() == static_cast<int>(lines.size()); }
};

// Replays the seven (sigma_j, S_j) reductions on P(7,1): switching sigma_j at
// S_j must give size <= 2 and stay switching equivalent.
CheckReport verify_forbidden();

// Replays the published resigning bullets on P(3,1), P(5,1), P(7,1): switch
// the source matching at the listed vertices, then ask whether the result is
// an automorphic image of the named target. Report-only.
CheckReport replay_resignings();

// Published orbit-table rows for N = 3, 5, 7: negative-cycle counts at the
// reference profile lengths ({3,4} / {4,5,6} / {4,6,7,8}), one row per orbit.
std::vector<std::vector<int>> reference_table(int N);

// Published matching-type counts, size -> count, for N = 3, 5, 7.
std::map<int, int> reference_matching_counts(int N);

}  // namespace gpg
