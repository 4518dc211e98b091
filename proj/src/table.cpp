#include "fuscat/table.hpp"

#include <algorithm>
#include <stdexcept>

namespace fuscat {

Format parse_format(const std::string& s) {
    if (s == "md") return Format::md;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw std::invalid_argument("unknown format '" + s + "' (md, json, csv)");
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void md_table(std::ostream& os, const Table& t) {
    std::vector<std::size_t> w(t.columns.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::max<std::size_t>(3, t.columns[i].size());
    for (const auto& r : t.rows)
        for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
        os << '|';
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::string c = i < cells.size() ? cells[i] : "";
            os << ' ' << c << std::string(w[i] - c.size(), ' ') << " |";
        }
        os << '\n';
    };
    line(t.columns);
    os << '|';
    for (auto wi : w) os << std::string(wi + 2, '-') << '|';
    os << '\n';
    for (const auto& r : t.rows) line(r);
}

}  // namespace

Json table_to_json(const Table& t) {
    Json rows = Json::array();
    for (const auto& r : t.rows) {
        Json o = Json::object();
        for (std::size_t i = 0; i < t.columns.size(); ++i) o[t.columns[i]] = i < r.size() ? r[i] : "";
        rows.push_back(o);
    }
    return Json{{"title", t.title}, {"columns", t.columns}, {"rows", rows}};
}

void write_table(std::ostream& os, const Table& t, Format f) {
    switch (f) {
        case Format::md:
            if (!t.title.empty()) os << "### " << t.title << "\n\n";
            md_table(os, t);
            break;
        case Format::csv: {
            if (!t.title.empty()) os << "# " << t.title << '\n';
            auto line = [&](const std::vector<std::string>& cells) {
                for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
                os << '\n';
            };
            line(t.columns);
            for (const auto& r : t.rows) line(r);
            break;
        }
        case Format::json:
            os << table_to_json(t).dump(1) << '\n';
            break;
    }
}

void write_report(std::ostream& os, const Report& r, Format f) {
    if (f == Format::json) {
        Json j = r.extra;
        Json tables = Json::array();
        for (const auto& t : r.tables) tables.push_back(table_to_json(t));
        j["tables"] = tables;
        os << j.dump(1) << '\n';
        return;
    }
    for (std::size_t i = 0; i < r.tables.size(); ++i) {
        if (i) os << '\n';
        write_table(os, r.tables[i], f);
    }
    if (f == Format::md && !r.notes.empty()) {
        os << '\n';
        for (const auto& n : r.notes) os << n << '\n';
    }
}

}  // namespace fuscat
