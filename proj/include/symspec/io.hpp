#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "symspec/bignum.hpp"
#include "symspec/cayley.hpp"
#include "symspec/character.hpp"
#include "symspec/errors.hpp"
#include "symspec/oracle.hpp"
#include "symspec/partition.hpp"
#include "symspec/spectrum.hpp"

namespace symspec {

using json = nlohmann::ordered_json;

namespace detail {

inline json partition_strings(const std::vector<Partition>& ps) {
    json out = json::array();
    for (const Partition& p : ps)
        out.push_back(p.to_string());
    return out;
}

inline std::vector<Partition> parse_partitions(const json& arr) {
    std::vector<Partition> out;
    for (const auto& s : arr)
        out.push_back(Partition::parse(s.get<std::string>()));
    return out;
}

/// RFC-4180 style quoting; partition strings contain commas.
inline std::string csv_quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace detail

// ---------------------------------------------------------------- tables

inline json table_to_json(const CharacterTable& t) {
    json j;
    j["n"] = t.n;
    j["rows"] = detail::partition_strings(t.rows);
    j["cols"] = detail::partition_strings(t.cols);
    json values = json::array();
    for (const auto& row : t.values) {
        json jrow = json::array();
        for (const Int& v : row)
            jrow.push_back(v.str());
        values.push_back(std::move(jrow));
    }
    j["values"] = std::move(values);
    json sizes = json::array();
    for (const Int& c : t.class_sizes)
        sizes.push_back(c.str());
    j["class_sizes"] = std::move(sizes);
    return j;
}

inline CharacterTable table_from_json(const json& j) {
    CharacterTable t;
    t.n = j.at("n").get<int>();
    t.rows = detail::parse_partitions(j.at("rows"));
    t.cols = detail::parse_partitions(j.at("cols"));
    for (const auto& jrow : j.at("values")) {
        std::vector<Int> row;
        for (const auto& v : jrow)
            row.push_back(parse_int(v.get<std::string>()));
        t.values.push_back(std::move(row));
    }
    for (const auto& c : j.at("class_sizes"))
        t.class_sizes.push_back(parse_int(c.get<std::string>()));
    if (t.rows.size() != t.values.size() || t.cols.size() != t.class_sizes.size())
        throw parse_error("character table JSON has inconsistent shapes");
    Partition identity_class(std::vector<int>(static_cast<size_t>(t.n), 1));
    size_t id_col = static_cast<size_t>(t.col_index(identity_class));
    for (const auto& row : t.values) {
        if (row.size() != t.cols.size())
            throw parse_error("character table JSON has ragged rows");
        t.degrees.push_back(row[id_col]);
    }
    return t;
}

inline void write_table_csv(const CharacterTable& t, std::ostream& os) {
    os << "chi";
    for (const Partition& c : t.cols)
        os << ',' << detail::csv_quote(c.to_string());
    os << '\n';
    os << "class_size";
    for (const Int& s : t.class_sizes)
        os << ',' << s.str();
    os << '\n';
    for (size_t r = 0; r < t.rows.size(); ++r) {
        os << detail::csv_quote(t.rows[r].to_string());
        for (const Int& v : t.values[r])
            os << ',' << v.str();
        os << '\n';
    }
}

inline void render_table_text(const CharacterTable& t, std::ostream& os) {
    std::vector<size_t> widths(t.cols.size() + 1, 0);
    auto grow = [&](size_t c, size_t w) { widths[c] = std::max(widths[c], w); };
    grow(0, 3);
    for (size_t r = 0; r < t.rows.size(); ++r)
        grow(0, t.rows[r].to_string().size());
    for (size_t c = 0; c < t.cols.size(); ++c) {
        grow(c + 1, t.cols[c].to_string().size());
        grow(c + 1, t.class_sizes[c].str().size());
        for (size_t r = 0; r < t.rows.size(); ++r)
            grow(c + 1, t.values[r][c].str().size());
    }
    os << "character table of Sym(" << t.n << ")\n";
    os << std::left << std::setw(static_cast<int>(widths[0])) << "chi";
    for (size_t c = 0; c < t.cols.size(); ++c)
        os << "  " << std::right << std::setw(static_cast<int>(widths[c + 1])) << t.cols[c].to_string();
    os << '\n';
    os << std::left << std::setw(static_cast<int>(widths[0])) << "|C|";
    for (size_t c = 0; c < t.cols.size(); ++c)
        os << "  " << std::right << std::setw(static_cast<int>(widths[c + 1])) << t.class_sizes[c].str();
    os << '\n';
    for (size_t r = 0; r < t.rows.size(); ++r) {
        os << std::left << std::setw(static_cast<int>(widths[0])) << t.rows[r].to_string();
        for (size_t c = 0; c < t.cols.size(); ++c)
            os << "  " << std::right << std::setw(static_cast<int>(widths[c + 1])) << t.values[r][c].str();
        os << '\n';
    }
}

// ---------------------------------------------------------------- reports

inline json report_to_json(const SpectrumReport& rep) {
    json j;
    j["n"] = rep.n();
    j["classes"] = detail::partition_strings(rep.spec.cycle_types());
    j["vertices"] = rep.vertex_count.str();
    j["degree"] = rep.regularity.str();
    json lines = json::array();
    for (const SpectrumLine& line : rep.lines) {
        json jl;
        jl["eigenvalue"] = rat_to_string(line.eigenvalue);
        jl["multiplicity"] = line.multiplicity.str();
        jl["contributors"] = detail::partition_strings(line.contributors);
        lines.push_back(std::move(jl));
    }
    j["lines"] = std::move(lines);
    j["energy"] = rat_to_string(rep.energy);
    j["nullity"] = rep.nullity.str();
    j["integral"] = rep.is_integral;
    j["hyperenergetic"] = rep.is_hyperenergetic;
    return j;
}

inline SpectrumReport report_from_json(const json& j) {
    ClassSpec spec(j.at("n").get<int>(), detail::parse_partitions(j.at("classes")));
    SpectrumReport rep{spec,
                       parse_int(j.at("vertices").get<std::string>()),
                       parse_int(j.at("degree").get<std::string>()),
                       {},
                       parse_rat(j.at("energy").get<std::string>()),
                       parse_int(j.at("nullity").get<std::string>()),
                       j.at("integral").get<bool>(),
                       j.at("hyperenergetic").get<bool>()};
    for (const auto& jl : j.at("lines")) {
        SpectrumLine line{parse_rat(jl.at("eigenvalue").get<std::string>()),
                          parse_int(jl.at("multiplicity").get<std::string>()),
                          detail::parse_partitions(jl.at("contributors"))};
        rep.lines.push_back(std::move(line));
    }
    return rep;
}

inline void write_report_csv(const SpectrumReport& rep, std::ostream& os) {
    os << "eigenvalue,multiplicity,contributors\n";
    for (const SpectrumLine& line : rep.lines) {
        std::string contribs;
        for (size_t i = 0; i < line.contributors.size(); ++i) {
            if (i)
                contribs += '|';
            contribs += line.contributors[i].to_string();
        }
        os << rat_to_string(line.eigenvalue) << ',' << line.multiplicity.str() << ','
           << detail::csv_quote(contribs) << '\n';
    }
}

inline void render_report_text(const SpectrumReport& rep, std::ostream& os) {
    os << "Cayley graph spectrum, " << rep.spec.to_string() << '\n';
    os << "vertices " << rep.vertex_count.str() << ", degree " << rep.regularity.str() << '\n';
    size_t wval = 10, wmult = 12;
    for (const SpectrumLine& line : rep.lines) {
        wval = std::max(wval, rat_to_string(line.eigenvalue).size());
        wmult = std::max(wmult, line.multiplicity.str().size());
    }
    os << std::right << std::setw(static_cast<int>(wval)) << "eigenvalue" << "  "
       << std::setw(static_cast<int>(wmult)) << "multiplicity" << "  contributors\n";
    for (const SpectrumLine& line : rep.lines) {
        os << std::right << std::setw(static_cast<int>(wval)) << rat_to_string(line.eigenvalue) << "  "
           << std::setw(static_cast<int>(wmult)) << line.multiplicity.str() << "  ";
        for (size_t i = 0; i < line.contributors.size(); ++i) {
            if (i)
                os << ' ';
            os << '(' << line.contributors[i].to_string() << ')';
        }
        os << '\n';
    }
    os << "energy " << rat_to_string(rep.energy) << (is_integer(rep.energy) ? " (integer)" : "") << '\n';
    os << "nullity " << rep.nullity.str() << '\n';
    os << "integral " << (rep.is_integral ? "yes" : "no") << '\n';
    os << "hyperenergetic " << (rep.is_hyperenergetic ? "yes" : "no") << " (threshold "
       << Int(2 * rep.vertex_count - 2).str() << ")\n";
}

// ---------------------------------------------------------------- verdicts

inline json verdict_to_json(const Verdict& v, const ClassSpec& spec) {
    json j;
    json jspec;
    jspec["n"] = spec.n();
    jspec["classes"] = detail::partition_strings(spec.cycle_types());
    j["spec"] = std::move(jspec);
    j["method"] = v.method_name();
    j["match"] = v.match;
    if (v.method == Verdict::Method::ExactMoments)
        j["K"] = v.moment_K;
    else
        j["tol"] = v.tol;
    if (v.detail)
        j["detail"] = *v.detail;
    return j;
}

// ---------------------------------------------------------------- cache

inline uint64_t fnv1a(std::string_view data) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string checksum_hex(std::string_view data) {
    std::ostringstream os;
    os << std::hex << std::setfill('0') << std::setw(16) << fnv1a(data);
    return os.str();
}

/// SYMSPEC_CACHE_DIR if set, else a dot-directory under the home directory.
inline std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("SYMSPEC_CACHE_DIR"); env && *env)
        return std::filesystem::path(env);
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".symspec";
    return std::filesystem::path(".symspec");
}

inline std::filesystem::path table_cache_path(const std::filesystem::path& dir, int n) {
    return dir / ("chartable-" + std::to_string(n) + ".json");
}

/// Writes { "checksum": ..., "table": ... } via a temp file + atomic rename.
inline void store_cached_table(const std::filesystem::path& dir, const CharacterTable& t) {
    std::filesystem::create_directories(dir);
    json payload = table_to_json(t);
    json file;
    file["checksum"] = checksum_hex(payload.dump());
    file["table"] = std::move(payload);
    std::filesystem::path final_path = table_cache_path(dir, t.n);
    std::filesystem::path tmp_path = final_path;
    tmp_path += ".tmp";
    {
        std::ofstream os(tmp_path, std::ios::trunc);
        if (!os)
            throw error("cache: cannot write " + tmp_path.string());
        os << file.dump(2) << '\n';
    }
    std::filesystem::rename(tmp_path, final_path);
}

/// Loads and revalidates a cached table; any corruption (bad JSON, bad
/// checksum, sum of degree^2 != n!) yields nullopt so callers recompute.
inline std::optional<CharacterTable> load_cached_table(const std::filesystem::path& dir, int n) {
    std::filesystem::path path = table_cache_path(dir, n);
    std::ifstream is(path);
    if (!is)
        return std::nullopt;
    try {
        json file = json::parse(is);
        const json& payload = file.at("table");
        if (file.at("checksum").get<std::string>() != checksum_hex(payload.dump()))
            return std::nullopt;
        CharacterTable t = table_from_json(payload);
        if (t.n != n)
            return std::nullopt;
        Int mass = 0;
        for (const Int& d : t.degrees)
            mass += d * d;
        if (mass != t.group_order())
            return std::nullopt;
        return t;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

/// Removes this library's cache files from dir; returns how many.
inline int clear_cache(const std::filesystem::path& dir) {
    int removed = 0;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
        const std::string name = entry.path().filename().string();
        if (name.starts_with("chartable-") && name.ends_with(".json")) {
            if (std::filesystem::remove(entry.path()))
                ++removed;
        }
    }
    return removed;
}

} // namespace symspec
