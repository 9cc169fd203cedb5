#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bounds.hpp"
#include "braid.hpp"
#include "diagram.hpp"
#include "homfly.hpp"
#include "invariants.hpp"

namespace braidtk {

/// One row of the bundled knot table: a braid word presenting the knot
/// together with its classical maximal Euler characteristic, braid index
/// and crossing number.
struct KnotTableRow {
    std::string name;
    BraidWord word;
    int chi = 0;
    int braid_index = 0;
    long long crossing_number = 0;
};

struct TableError : std::runtime_error {
    int line;
    std::string message;  // without the line prefix
    TableError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
          line(line_),
          message(msg) {}
};

/// External data enters only through verification gates: every claim a row
/// makes is re-checked against computed invariants. Returns human-readable
/// issue strings, empty when the row is consistent.
inline std::vector<std::string> validate_row(const KnotTableRow& row) {
    std::vector<std::string> issues;
    if (row.word.strands() != row.braid_index)
        issues.push_back("word strand count " + std::to_string(row.word.strands()) +
                         " != braid_index " + std::to_string(row.braid_index));
    if (component_count(row.word) != 1) {
        issues.push_back("closure is not a knot");
        return issues;  // the remaining checks assume a knot
    }
    if (row.braid_index < 2) {
        if (!(row.chi == 1 && row.crossing_number == 0))
            issues.push_back("1-braid row must be the unknot (chi 1, 0 crossings)");
        return issues;
    }

    BoundReport bounds = theorem_bounds(row.chi, row.braid_index);
    if (row.crossing_number < bounds.lower)
        issues.push_back("crossing number " + std::to_string(row.crossing_number) +
                         " below the lower bound " + std::to_string(bounds.lower));
    if (Rational(row.crossing_number) > bounds.upper)
        issues.push_back("crossing number " + std::to_string(row.crossing_number) +
                         " above the upper bound " + rational_to_string(bounds.upper));

    const int mfw = mfw_lower_bound(homfly(row.word));
    if (mfw > row.braid_index)
        issues.push_back("braid index " + std::to_string(row.braid_index) +
                         " below the polynomial lower bound " + std::to_string(mfw));

    const int chi_bennequin = bennequin_chi(row.word);
    if (row.chi < chi_bennequin)
        issues.push_back("chi " + std::to_string(row.chi) +
                         " below the Bennequin surface chi " + std::to_string(chi_bennequin));
    const int genus_lb = alexander_genus_lower_bound(alexander(row.word));
    if (row.chi > 1 - 2 * genus_lb)
        issues.push_back("chi " + std::to_string(row.chi) +
                         " above the Alexander degree bound " + std::to_string(1 - 2 * genus_lb));
    return issues;
}

namespace detail {

inline std::string trim_copy(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline KnotTableRow parse_table_row(const std::string& line, int line_no) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(trim_copy(field));
    if (fields.size() != 5)
        throw TableError(line_no, "expected 5 comma-separated fields, got " +
                                      std::to_string(fields.size()));
    KnotTableRow row;
    row.name = fields[0];
    if (row.name.empty()) throw TableError(line_no, "empty knot name");
    try {
        row.word = parse_braid_word(fields[1]);
    } catch (const std::exception& e) {
        throw TableError(line_no, std::string("bad braid word: ") + e.what());
    }
    auto parse_int = [&](const std::string& s, const char* what) -> long long {
        try {
            std::size_t used = 0;
            long long v = std::stoll(s, &used);
            if (used != s.size()) throw std::invalid_argument("");
            return v;
        } catch (...) {
            throw TableError(line_no, std::string("bad ") + what + " \"" + s + "\"");
        }
    };
    row.chi = static_cast<int>(parse_int(fields[2], "chi"));
    row.braid_index = static_cast<int>(parse_int(fields[3], "braid_index"));
    row.crossing_number = parse_int(fields[4], "crossing_number");
    return row;
}

inline bool is_header_line(const std::string& line) {
    return trim_copy(line) == "name,word,chi,braid_index,crossing_number";
}

}  // namespace detail

struct TableIssue {
    int line = 0;
    std::string name;
    std::string message;
};

struct TableReport {
    std::vector<KnotTableRow> rows;     // rows that parsed, valid or not
    std::vector<TableIssue> issues;     // parse and validation failures

    bool clean() const { return issues.empty(); }
};

/// Parse and validate every row, collecting all issues (for reporting).
inline TableReport validate_table(std::istream& in) {
    TableReport report;
    std::string line;
    int line_no = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = detail::trim_copy(line);
        if (t.empty() || t.front() == '#') continue;
        if (first_content && detail::is_header_line(t)) {
            first_content = false;
            continue;
        }
        first_content = false;
        try {
            KnotTableRow row = detail::parse_table_row(t, line_no);
            for (auto& msg : validate_row(row))
                report.issues.push_back({line_no, row.name, msg});
            report.rows.push_back(std::move(row));
        } catch (const TableError& e) {
            report.issues.push_back({e.line, "", e.message});
        }
    }
    return report;
}

/// Strict loader: throws TableError on the first malformed or inconsistent
/// row. The bundled table must load cleanly through this.
inline std::vector<KnotTableRow> load_table(std::istream& in) {
    TableReport report = validate_table(in);
    if (!report.issues.empty()) {
        const TableIssue& first = report.issues.front();
        std::string what = first.name.empty() ? first.message
                                              : first.name + ": " + first.message;
        throw TableError(first.line, what);
    }
    return std::move(report.rows);
}

inline std::vector<KnotTableRow> load_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table file: " + path);
    return load_table(in);
}

}  // namespace braidtk
