#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "fuscat/json_io.hpp"

namespace fuscat {

enum class Format { md, json, csv };

Format parse_format(const std::string& s);

struct Table {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

/// A command's output: tables plus free-form fields kept for JSON.
struct Report {
    std::vector<Table> tables;
    Json extra = Json::object();
    std::vector<std::string> notes;  // md only
};

void write_table(std::ostream& os, const Table& t, Format f);
void write_report(std::ostream& os, const Report& r, Format f);
Json table_to_json(const Table& t);

}  // namespace fuscat
