#include "gpg/atlas.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace gpg {

void RunConfig::validate() const {
    if (n < 1 || n > 6)
        throw InvalidArgument("n must be in [1, 6], got " + std::to_string(n));
    if (k != 1)
        throw InvalidArgument("only k = 1 (prisms) is supported, got k = " +
                              std::to_string(k));
    if (format != "json" && format != "csv" && format != "md")
        throw InvalidArgument("format must be json, csv, or md, got '" + format +
                              "'");
    if (jobs < 0)
        throw InvalidArgument("jobs must be >= 0, got " + std::to_string(jobs));
    if (cycle_cap < 1)
        throw InvalidArgument("cycle cap must be >= 1, got " +
                              std::to_string(cycle_cap));
    if (conjecture_budget < 1 || conjecture_budget > 6)
        throw InvalidArgument("conjecture budget must be in [1, 6], got " +
                              std::to_string(conjecture_budget));
}

int RunConfig::effective_jobs() const {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace {

int find_vertex(const Graph& g, const std::string& label) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.label(v) == label) return v;
    return -1;
}

}  // namespace

Signature parse_signature(const std::string& text, const Graph& g) {
    std::uint64_t mask = 0;
    std::size_t i = 0;
    bool expect_token = false;  // set after a comma: a token must follow
    while (i < text.size() || expect_token) {
        while (i < text.size() && isspace(static_cast<unsigned char>(text[i])))
            ++i;
        if (i >= text.size()) {
            if (expect_token)
                throw InvalidArgument("missing edge after ',' at position " +
                                      std::to_string(text.size() + 1));
            break;
        }
        std::size_t start = i;
        std::string token;
        while (i < text.size() && text[i] != ',') {
            if (!isspace(static_cast<unsigned char>(text[i]))) token += text[i];
            ++i;
        }
        std::string at = " at position " + std::to_string(start + 1);
        if (token.empty())
            throw InvalidArgument("empty edge name" + at);
        std::size_t dash = token.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 >= token.size() ||
            token.find('-', dash + 1) != std::string::npos)
            throw InvalidArgument("malformed edge '" + token +
                                  "' (expected <label>-<label>)" + at);
        int a = find_vertex(g, token.substr(0, dash));
        int b = find_vertex(g, token.substr(dash + 1));
        int e = a >= 0 && b >= 0 ? g.find_edge(a, b) : -1;
        if (e < 0) throw InvalidArgument("unknown edge '" + token + "'" + at);
        if (mask & (std::uint64_t{1} << e))
            throw InvalidArgument("duplicate edge '" + token + "'" + at);
        mask |= std::uint64_t{1} << e;
        expect_token = i < text.size() && text[i] == ',';
        if (expect_token) ++i;
    }
    return {mask, g.edge_count()};
}

std::string render_signature(const Graph& g, const Signature& sig) {
    std::string out;
    for (int e = 0; e < g.edge_count(); ++e)
        if (sig.mask >> e & 1) {
            if (!out.empty()) out += ", ";
            out += g.edge_name(e);
        }
    return out;
}

std::string render_switch_set(const Graph& g, const SwitchSet& s) {
    std::string out = "{";
    for (int v = 0; v < g.vertex_count(); ++v)
        if (s.mask >> v & 1) {
            if (out.size() > 1) out += ", ";
            out += g.label(v);
        }
    return out + "}";
}

std::string atlas_json(const Graph& g, const std::vector<OrbitRecord>& orbits) {
    if (g.petersen_k() != 1 || g.petersen_n() % 2 == 0)
        throw InvalidArgument("atlas output is defined for odd prisms P(2n+1,1)");
    nlohmann::ordered_json doc;
    doc["format_tag"] = kAtlasFormatTag;
    doc["n"] = (g.petersen_n() - 1) / 2;
    std::size_t class_count = 0;
    for (const OrbitRecord& o : orbits) class_count += o.class_ids.size();
    doc["class_count"] = class_count;
    doc["orbit_count"] = orbits.size();
    doc["orbits"] = nlohmann::ordered_json::array();
    for (const OrbitRecord& o : orbits) {
        nlohmann::ordered_json rec;
        rec["orbit_id"] = o.orbit_id;
        rec["size"] = o.class_ids.size();
        rec["min_signature_size"] = o.min_size;
        auto rep = nlohmann::ordered_json::array();
        for (int e = 0; e < g.edge_count(); ++e)
            if (o.canonical_rep.mask >> e & 1) rep.push_back(g.edge_name(e));
        rec["representative"] = std::move(rep);
        nlohmann::ordered_json prof;  // std::map iterates lengths ascending
        for (const auto& [len, cnt] : o.profile) prof[std::to_string(len)] = cnt;
        rec["neg_profile"] = std::move(prof);
        auto ids = nlohmann::ordered_json::array();
        for (const ClassId& c : o.class_ids) ids.push_back(c.to_string());
        rec["class_ids"] = std::move(ids);
        doc["orbits"].push_back(std::move(rec));
    }
    return doc.dump(2) + "\n";
}

std::vector<int> reference_profile_lengths(const Graph& g) {
    if (g.petersen_k() != 1) return {};
    switch (g.petersen_n()) {
        case 3: return {3, 4};
        case 5: return {4, 5, 6};
        case 7: return {4, 6, 7, 8};
        default: return {};
    }
}

namespace {

std::string csv_quote(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string render_rows(const std::vector<std::vector<std::string>>& rows,
                        const std::string& format) {
    if (format == "csv") {
        std::ostringstream out;
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c)
                out << (c ? "," : "") << csv_quote(row[c]);
            out << '\n';
        }
        return out.str();
    }
    if (format != "md")
        throw InvalidArgument("table format must be csv or md, got '" + format +
                              "'");
    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    std::ostringstream out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out << '|';
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            out << ' ' << rows[r][c]
                << std::string(width[c] - rows[r][c].size() + 1, ' ') << '|';
        }
        out << '\n';
        if (r == 0) {
            out << '|';
            for (std::size_t c = 0; c < width.size(); ++c)
                out << ' ' << std::string(width[c], '-') << " |";
            out << '\n';
        }
    }
    return out.str();
}

std::string emit_table(const Graph& g, const std::vector<int>& census_lengths,
                       const std::vector<OrbitRecord>& orbits,
                       const std::string& format) {
    if (format != "csv" && format != "md")
        throw InvalidArgument("table format must be csv or md, got '" + format +
                              "'");
    std::vector<int> reference = reference_profile_lengths(g);
    auto in_reference = [&](int len) {
        return std::find(reference.begin(), reference.end(), len) !=
               reference.end();
    };

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"orbit_id", "min_size", "representative"};
    for (int len : census_lengths) {
        std::string col = "neg_C" + std::to_string(len);
        if (format == "md" && !reference.empty() && !in_reference(len))
            col += " (extra)";
        header.push_back(col);
    }
    rows.push_back(header);
    for (const OrbitRecord& o : orbits) {
        std::vector<std::string> row{std::to_string(o.orbit_id),
                                     std::to_string(o.min_size),
                                     render_signature(g, o.canonical_rep)};
        for (int len : census_lengths) {
            auto it = o.profile.find(len);
            row.push_back(std::to_string(it == o.profile.end() ? 0 : it->second));
        }
        rows.push_back(std::move(row));
    }
    return render_rows(rows, format);
}

}  // namespace gpg
