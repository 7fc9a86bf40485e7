#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace egrav {

// INI-like key-value text: `# comment`, `[section]`, `key = value`.
// Keys before the first section header belong to the unnamed section "".
struct KvSection {
    std::string name;
    std::vector<std::pair<std::string, std::string>> entries;
    int line = 0;

    const std::string* find(std::string_view key) const;
    bool has(std::string_view key) const { return find(key) != nullptr; }
    std::string get(std::string_view key) const;  // throws ValidationError if absent
    double get_double(std::string_view key) const;
    std::optional<double> get_optional_double(std::string_view key) const;
    // Rejects any key outside `allowed`.
    void require_only(const std::vector<std::string_view>& allowed) const;
};

struct KvDocument {
    std::vector<KvSection> sections;

    static KvDocument parse(std::string_view text, std::string_view origin = "<input>");
    static KvDocument load(const std::filesystem::path& path);

    const KvSection* section(std::string_view name) const;
};

double parse_double(std::string_view text, std::string_view what);
long long parse_integer(std::string_view text, std::string_view what);
std::string trim(std::string_view s);

// Shortest round-trip decimal form.
std::string format_double(double v);

}  // namespace egrav
