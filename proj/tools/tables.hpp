#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace approx {

using json = nlohmann::json;

enum class Format { csv, json };

struct RunConfig {
    int precision = 60;
    int oracle_precision = 30;
    std::optional<int> n;
    std::optional<std::array<int, 3>> n_range;
    std::string eta_inf = "30";
    std::optional<std::string> eps;

    bool wants(int N) const;
};

/// One computed quantity, optionally compared against a golden value.
struct Cell {
    std::string column;
    std::string computed;
    std::string expected;
    std::string tol;
    std::string deviation;
    bool checked = false;
    bool ok = true;
};

struct Row {
    std::string key;
    std::vector<Cell> cells;
};

struct TableReport {
    int id = 0;
    std::vector<Row> rows;

    bool ok() const;
    int checked() const;
    int failed() const;
};

const json& golden();

TableReport run_table(int id, const RunConfig& cfg);

void write_table(std::ostream& os, const TableReport& t, Format f);

}  // namespace approx
