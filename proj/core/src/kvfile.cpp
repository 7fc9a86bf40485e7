#include "egrav/kvfile.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "egrav/error.hpp"

namespace egrav {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

double parse_double(std::string_view text, std::string_view what) {
    const std::string t = trim(text);
    double v = 0.0;
    const char* begin = t.data();
    const char* end = t.data() + t.size();
    if (!t.empty() && *begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (t.empty() || ec != std::errc() || ptr != end || !std::isfinite(v)) {
        throw ValidationError("cannot parse '" + t + "' as a number for " + std::string(what));
    }
    return v;
}

long long parse_integer(std::string_view text, std::string_view what) {
    const double v = parse_double(text, what);
    if (v != std::floor(v) || std::abs(v) > 9.0e15) {
        throw ValidationError("expected an integer for " + std::string(what) + ", got '" + trim(text) + "'");
    }
    return static_cast<long long>(v);
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) return "nan";
    return std::string(buf, ptr);
}

const std::string* KvSection::find(std::string_view key) const {
    for (const auto& [k, v] : entries) {
        if (k == key) return &v;
    }
    return nullptr;
}

std::string KvSection::get(std::string_view key) const {
    if (const auto* v = find(key)) return *v;
    throw ValidationError("missing key '" + std::string(key) + "' in section [" + name + "]");
}

double KvSection::get_double(std::string_view key) const {
    return parse_double(get(key), std::string(key));
}

std::optional<double> KvSection::get_optional_double(std::string_view key) const {
    if (const auto* v = find(key)) return parse_double(*v, std::string(key));
    return std::nullopt;
}

void KvSection::require_only(const std::vector<std::string_view>& allowed) const {
    for (const auto& [k, v] : entries) {
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
            std::string list;
            for (auto a : allowed) {
                if (!list.empty()) list += ", ";
                list += a;
            }
            throw ValidationError("unknown key '" + k + "' in section [" + name + "]; allowed: " + list);
        }
    }
}

KvDocument KvDocument::parse(std::string_view text, std::string_view origin) {
    KvDocument doc;
    doc.sections.push_back(KvSection{"", {}, 0});
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    auto where = [&] { return std::string(origin) + ":" + std::to_string(lineno) + ": "; };
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? std::string_view(raw) : std::string_view(raw).substr(0, hash));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ValidationError(where() + "unterminated section header");
            std::string name = trim(std::string_view(line).substr(1, line.size() - 2));
            if (name.empty()) throw ValidationError(where() + "empty section name");
            for (const auto& s : doc.sections) {
                if (s.name == name) throw ValidationError(where() + "duplicate section [" + name + "]");
            }
            doc.sections.push_back(KvSection{std::move(name), {}, lineno});
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ValidationError(where() + "expected 'key = value'");
        std::string key = trim(std::string_view(line).substr(0, eq));
        std::string value = trim(std::string_view(line).substr(eq + 1));
        if (key.empty()) throw ValidationError(where() + "empty key");
        auto& sec = doc.sections.back();
        if (sec.find(key)) throw ValidationError(where() + "duplicate key '" + key + "'");
        sec.entries.emplace_back(std::move(key), std::move(value));
    }
    return doc;
}

KvDocument KvDocument::load(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse(ss.str(), path.string());
}

const KvSection* KvDocument::section(std::string_view name) const {
    for (const auto& s : sections) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

}  // namespace egrav
