#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace darboux::io {

/// 17 significant digits in scientific notation (round-trips a double).
std::string format_number(double v);

/// Writes `content` to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

class CsvTable {
public:
    using Cell = std::variant<double, std::string>;

    explicit CsvTable(std::vector<std::string> header);

    void add_row(std::vector<Cell> row);
    std::size_t rows() const noexcept { return rows_.size(); }
    std::string str() const;
    void write(const std::filesystem::path& path) const { write_file_atomic(path, str()); }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<Cell>> rows_;
};

}  // namespace darboux::io
