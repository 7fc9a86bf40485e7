#include "egrav/csv.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>

#include "egrav/error.hpp"
#include "egrav/kvfile.hpp"

namespace egrav {

namespace {

std::string quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

CsvTable::CsvTable(std::string schema, std::vector<CsvColumn> columns)
    : schema_(std::move(schema)), columns_(std::move(columns)) {
    if (columns_.empty()) throw ValidationError("CSV table needs at least one column");
}

void CsvTable::add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size())
        throw ValidationError("CSV row has " + std::to_string(row.size()) + " cells, expected " +
                              std::to_string(columns_.size()));
    rows_.push_back(std::move(row));
}

std::string CsvTable::str() const {
    std::string out = "# egrav-csv v" + std::to_string(csv_schema_version) + " schema=" + schema_ + "\n";
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (i) out += ',';
        out += columns_[i].name + "[" + columns_[i].unit + "]";
    }
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            if (const auto* d = std::get_if<double>(&row[i])) out += format_double(*d);
            else if (const auto* n = std::get_if<long long>(&row[i])) out += std::to_string(*n);
            else out += quote(std::get<std::string>(row[i]));
        }
        out += '\n';
    }
    return out;
}

void CsvTable::write(const std::filesystem::path& path) const { write_text_file(path, str()); }

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory '" + path.parent_path().string() + "': " + ec.message());
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
    f << content;
    if (!f) throw IoError("write to '" + path.string() + "' failed");
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace egrav
