#include "kicktops/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace kicktops {

std::string format_number(double x)
{
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", x);
    return buffer;
}

void Table::add_row(std::vector<std::string> cells)
{
    if (cells.size() != columns.size()) {
        throw std::logic_error("table '" + name + "': row width differs from column count");
    }
    rows.push_back(std::move(cells));
}

namespace {

void write_line(std::ostream& out, const std::vector<std::string>& cells)
{
    for (std::size_t k = 0; k < cells.size(); ++k) {
        out << (k ? "," : "") << cells[k];
    }
    out << '\n';
}

void write_header(std::ostream& out, const Header& header)
{
    for (const auto& [key, value] : header) {
        out << "# " << key << '=' << value << '\n';
    }
}

}  // namespace

void write_table(std::ostream& out, const Header& header, const Table& table)
{
    write_header(out, header);
    out << "# table: " << table.name << '\n';
    write_line(out, table.columns);
    for (const auto& row : table.rows) {
        write_line(out, row);
    }
}

std::vector<std::filesystem::path> write_tables(const std::filesystem::path& path,
                                                const Header& header,
                                                const std::vector<Table>& tables)
{
    std::vector<std::filesystem::path> written;
    for (std::size_t k = 0; k < tables.size(); ++k) {
        std::filesystem::path target = path;
        if (k > 0) {
            target = path.parent_path() /
                     (path.stem().string() + "_" + tables[k].name + ".csv");
        }
        std::ofstream out(target);
        if (!out) {
            throw std::runtime_error("cannot open '" + target.string() + "' for writing");
        }
        write_table(out, header, tables[k]);
        if (!out) {
            throw std::runtime_error("failed writing '" + target.string() + "'");
        }
        written.push_back(target);
    }
    return written;
}

void write_tables(std::ostream& out, const Header& header, const std::vector<Table>& tables)
{
    write_header(out, header);
    for (const auto& table : tables) {
        out << "# table: " << table.name << '\n';
        write_line(out, table.columns);
        for (const auto& row : table.rows) {
            write_line(out, row);
        }
    }
}

}  // namespace kicktops
