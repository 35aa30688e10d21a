#pragma once
// Text I/O: signature grammar, atlas JSON persistence, table emission.

#include <cstdint>
#include <string>
#include <vector>

#include "gpg/classify.hpp"
#include "gpg/graph.hpp"
#include "gpg/signature.hpp"

namespace gpg {

inline constexpr const char* kAtlasFormatTag = "gpg-switch-atlas/1";

struct RunConfig {
    int n = 1;                 // graph is P(2n+1, k)
    int k = 1;
    std::string format = "md"; // json | csv | md
    int jobs = 0;              // 0 = hardware concurrency
    int cycle_cap = kDefaultCycleCap;
    int conjecture_budget = 5; // max n without the long-run flag

    void validate() const;     // throws InvalidArgument
    int effective_jobs() const;
};

// Grammar: comma-separated edge names "x<i>-y<j>", whitespace ignored,
// endpoint order free, duplicates rejected; errors carry the 1-based
// character position of the offending token.
Signature parse_signature(const std::string& text, const Graph& g);

// "u0-u1, v1-v2" (ascending edge index); parse_signature round-trips it.
std::string render_signature(const Graph& g, const Signature& sig);

// Vertex set as "{u1, v1}".
std::string render_switch_set(const Graph& g, const SwitchSet& s);

// Atlas JSON document (LF line endings, trailing newline, fixed key order —
// byte-stable across runs and job counts).
std::string atlas_json(const Graph& g, const std::vector<OrbitRecord>& orbits);

// length -> reference-table cycle lengths for the published tables; empty
// when no reference table exists for this graph.
std::vector<int> reference_profile_lengths(const Graph& g);

// Generic table renderer: rows[0] is the header. md aligns pipes; csv quotes
// per RFC 4180.
std::string render_rows(const std::vector<std::vector<std::string>>& rows,
                        const std::string& format);

// Orbit table. Columns: orbit_id, min_size, representative, then one
// negative-cycle count per census length; md flags lengths outside the
// reference tables as "extra".
std::string emit_table(const Graph& g, const std::vector<int>& census_lengths,
                       const std::vector<OrbitRecord>& orbits,
                       const std::string& format);

}  // namespace gpg
