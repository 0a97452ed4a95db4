#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace kicktops {

/// Shortest round-trip-safe text for a double (17 significant digits).
std::string format_number(double x);

/// A named rectangular table of already formatted cells.
struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> cells);
};

/// '#'-prefixed lines written ahead of every table.
using Header = std::vector<std::pair<std::string, std::string>>;

void write_table(std::ostream& out, const Header& header, const Table& table);

/// First table to `path`, table k > 0 to `<stem>_<name>.csv` beside it.
/// Returns the paths written.
std::vector<std::filesystem::path> write_tables(const std::filesystem::path& path,
                                                const Header& header,
                                                const std::vector<Table>& tables);

/// All tables to one stream; tables after the first are introduced by a
/// "# table: <name>" line.
void write_tables(std::ostream& out, const Header& header, const std::vector<Table>& tables);

}  // namespace kicktops
