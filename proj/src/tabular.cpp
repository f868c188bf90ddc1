#include "mesofringe/tabular.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <unistd.h>

#include "mesofringe/errors.hpp"

namespace mesofringe::io {

Format parse_format(const std::string& name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw DomainError("unknown output format '" + name + "' (expected csv or json)");
}

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.16e", value);
    return buf;
}

namespace {

void check_shape(const Table& table) {
    if (static_cast<Eigen::Index>(table.columns.size()) != table.data.cols()) {
        throw std::logic_error("Table: column count does not match data");
    }
}

}  // namespace

void write_csv(const Table& table, std::ostream& out) {
    check_shape(table);
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out << ',';
        out << table.columns[c].name;
    }
    out << '\n';
    for (Eigen::Index r = 0; r < table.data.rows(); ++r) {
        for (Eigen::Index c = 0; c < table.data.cols(); ++c) {
            if (c) out << ',';
            const double v = table.data(r, c);
            if (table.columns[static_cast<std::size_t>(c)].kind == ColumnKind::flag) {
                out << (v != 0.0 ? '1' : '0');
            } else {
                out << format_real(v);
            }
        }
        out << '\n';
    }
}

void write_json(const Table& table, std::ostream& out) {
    check_shape(table);
    nlohmann::json doc;
    doc["meta"] = table.meta;
    nlohmann::json data = nlohmann::json::object();
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        nlohmann::json column = nlohmann::json::array();
        const auto col = static_cast<Eigen::Index>(c);
        for (Eigen::Index r = 0; r < table.data.rows(); ++r) {
            if (table.columns[c].kind == ColumnKind::flag) {
                column.push_back(table.data(r, col) != 0.0);
            } else {
                column.push_back(table.data(r, col));
            }
        }
        data[table.columns[c].name] = std::move(column);
    }
    doc["data"] = std::move(data);
    out << doc.dump(2) << '\n';
}

void write(const Table& table, Format format, std::ostream& out) {
    if (format == Format::csv) {
        write_csv(table, out);
    } else {
        write_json(table, out);
    }
}

void write_file_atomic(const Table& table, Format format, const std::string& path) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path temp = target;
    temp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream file(temp, std::ios::binary | std::ios::trunc);
        if (!file) throw std::runtime_error("cannot open '" + temp.string() + "' for writing");
        write(table, format, file);
        file.flush();
        if (!file) {
            std::error_code ignored;
            fs::remove(temp, ignored);
            throw std::runtime_error("write to '" + temp.string() + "' failed");
        }
    }
    fs::rename(temp, target);
}

}  // namespace mesofringe::io
