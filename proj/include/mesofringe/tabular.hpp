#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <nlohmann/json.hpp>

namespace mesofringe::io {

enum class ColumnKind { real, flag };

struct Column {
    std::string name;
    ColumnKind kind = ColumnKind::real;
};

/// Column-named numeric table. data is rows x columns; flag columns hold 0/1.
struct Table {
    std::vector<Column> columns;
    Eigen::MatrixXd data;
    nlohmann::json meta = nlohmann::json::object();
};

enum class Format { csv, json };

Format parse_format(const std::string& name);

/// "%.16e" (17 significant digits), the fixed number format of every CSV.
std::string format_real(double value);

/// Header row, then one line per row, '\n' terminated.
void write_csv(const Table& table, std::ostream& out);
/// {"meta": ..., "data": {column: [values...]}}.
void write_json(const Table& table, std::ostream& out);
void write(const Table& table, Format format, std::ostream& out);

/// Writes to a sibling temporary and renames it over path.
void write_file_atomic(const Table& table, Format format, const std::string& path);

}  // namespace mesofringe::io
