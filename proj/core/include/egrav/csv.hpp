#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <string>
#include <variant>
#include <vector>

namespace egrav {

inline constexpr int csv_schema_version = 1;

struct CsvColumn {
    std::string name;
    std::string unit;  // "1" for dimensionless, "-" for text
};

// First line: `# egrav-csv v<version> schema=<name>`, then `name[unit],...`, then rows.
class CsvTable {
  public:
    using Cell = std::variant<double, long long, std::string>;

    CsvTable(std::string schema, std::vector<CsvColumn> columns);

    void add_row(std::vector<Cell> row);
    std::size_t rows() const { return rows_.size(); }
    const std::string& schema() const { return schema_; }
    const std::vector<CsvColumn>& columns() const { return columns_; }
    const std::vector<std::vector<Cell>>& data() const { return rows_; }

    std::string str() const;
    void write(const std::filesystem::path& path) const;

  private:
    std::string schema_;
    std::vector<CsvColumn> columns_;
    std::vector<std::vector<Cell>> rows_;
};

void write_text_file(const std::filesystem::path& path, const std::string& content);

// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t v);

}  // namespace egrav
