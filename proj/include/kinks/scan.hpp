#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kinks/bounds.hpp"
#include "kinks/braid.hpp"
#include "kinks/closure.hpp"
#include "kinks/diagram.hpp"
#include "kinks/errors.hpp"
#include "kinks/families.hpp"

namespace kinks {

/// One line of a scan file: `id<TAB>kind<TAB>payload` with kind one of
/// braid, band, pd, family.
struct ScanRecord {
    std::string id;
    std::string kind;
    std::string payload;
};

struct ScanRow {
    std::string id;
    std::string kind;
    std::optional<int> e, n, c, w, s, s_minus;
    std::optional<int> kappa_plus_lb, u_plus_lb, kappa_minus_lb;
    std::string error;
};

inline std::vector<ScanRecord> parse_scan_records(const std::string& text) {
    std::vector<ScanRecord> records;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        ScanRecord rec;
        const size_t t1 = line.find('\t');
        const size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        rec.id = line.substr(0, t1);
        if (t1 != std::string::npos) rec.kind = line.substr(t1 + 1, t2 - t1 - 1);
        if (t2 != std::string::npos) rec.payload = line.substr(t2 + 1);
        records.push_back(std::move(rec));
    }
    std::set<std::string> ids;
    for (const auto& rec : records)
        detail::require(ids.insert(rec.id).second, "duplicate scan record id '" + rec.id + "'");
    return records;
}

namespace detail {

inline void fill_braid_columns(ScanRow& row, const BraidWord& w) {
    row.e = exponent_sum(w);
    row.n = w.strands;
    row.c = closure_components(w).components;
    const SeifertData sd = seifert_data(closure_diagram(w));
    row.w = sd.writhe;
    row.s = sd.s;
    row.s_minus = sd.s_minus;
}

inline void fill_diagram_columns(ScanRow& row, const OrientedDiagram& d) {
    const SeifertData sd = seifert_data(d);
    row.c = sd.components;
    row.w = sd.writhe;
    row.s = sd.s;
    row.s_minus = sd.s_minus;
}

inline void scan_braid(ScanRow& row, const BraidWord& w) {
    fill_braid_columns(row, w);
    const BoundReport plus = braid_kappa_plus_lb(w);
    row.kappa_plus_lb = plus.kappa_plus_lb;
    row.u_plus_lb = plus.u_plus_lb;
    row.kappa_minus_lb = braid_kappa_minus_lb(w).kappa_minus_lb;
}

inline void scan_diagram(ScanRow& row, const OrientedDiagram& d) {
    fill_diagram_columns(row, d);
    const BoundReport plus = diagram_kappa_plus_lb(d);
    row.kappa_plus_lb = plus.kappa_plus_lb;
    row.u_plus_lb = plus.u_plus_lb;
    row.kappa_minus_lb = diagram_kappa_minus_lb(d).kappa_minus_lb;
}

inline void scan_family(ScanRow& row, const std::string& payload) {
    auto toks = split_ws(payload);
    require(!toks.empty(), "family payload is empty");
    const std::string name(toks[0]);
    if (name == "torus") {
        require(toks.size() == 3, "family torus needs two parameters");
        scan_braid(row, torus_braid(parse_int(toks[1], "torus p"), parse_int(toks[2], "torus q")));
    } else if (name == "pretzel") {
        require(toks.size() == 4, "family pretzel needs three parameters");
        const PretzelParams k{parse_int(toks[1], "pretzel p"), parse_int(toks[2], "pretzel q"),
                              parse_int(toks[3], "pretzel r")};
        scan_diagram(row, pretzel_diagram(k));
    } else if (name == "twist") {
        require(toks.size() == 2, "family twist needs one parameter");
        scan_diagram(row, twist_knot_diagram(parse_int(toks[1], "twist m")));
    } else {
        throw input_error("unknown family '" + name + "'");
    }
}

} // namespace detail

/// Computes one row per record, in input order. A failing record gets its
/// error column set and never affects any other row.
inline std::vector<ScanRow> scan_rows(const std::vector<ScanRecord>& records) {
    std::vector<ScanRow> rows;
    rows.reserve(records.size());
    for (const auto& rec : records) {
        ScanRow row;
        row.id = rec.id;
        row.kind = rec.kind;
        try {
            if (rec.kind == "braid") {
                detail::scan_braid(row, parse_braid(rec.payload));
            } else if (rec.kind == "band") {
                const BandWord bw = parse_band_word(rec.payload);
                detail::fill_braid_columns(row, expand_band_word(bw));
                const SqpProfile prof = sqp_profile(bw);
                row.kappa_plus_lb = prof.kappa_plus_lb;
                row.u_plus_lb = prof.u_plus_lb;
            } else if (rec.kind == "pd") {
                detail::scan_diagram(row, parse_pd(rec.payload));
            } else if (rec.kind == "family") {
                detail::scan_family(row, rec.payload);
            } else {
                throw input_error("unknown record kind '" + rec.kind + "'");
            }
        } catch (const std::exception& err) {
            row = ScanRow{};
            row.id = rec.id;
            row.kind = rec.kind;
            row.error = err.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace detail {

inline std::string csv_cell(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string out = "\"";
    for (char ch : value) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

inline std::string csv_cell(const std::optional<int>& value) {
    return value ? std::to_string(*value) : std::string{};
}

} // namespace detail

inline const char* scan_csv_header() {
    return "id,kind,e,n,c,w,s,s_minus,kappa_plus_lb,u_plus_lb,kappa_minus_lb,error";
}

inline std::string render_scan_csv(const std::vector<ScanRow>& rows) {
    std::string out = scan_csv_header();
    out += '\n';
    for (const auto& r : rows) {
        out += detail::csv_cell(r.id) + ',' + detail::csv_cell(r.kind) + ',' +
               detail::csv_cell(r.e) + ',' + detail::csv_cell(r.n) + ',' + detail::csv_cell(r.c) +
               ',' + detail::csv_cell(r.w) + ',' + detail::csv_cell(r.s) + ',' +
               detail::csv_cell(r.s_minus) + ',' + detail::csv_cell(r.kappa_plus_lb) + ',' +
               detail::csv_cell(r.u_plus_lb) + ',' + detail::csv_cell(r.kappa_minus_lb) + ',' +
               detail::csv_cell(r.error);
        out += '\n';
    }
    return out;
}

} // namespace kinks
