#include "cli_support.hpp"

#include <cstdlib>
#include <numbers>

#include "egrav/error.hpp"
#include "egrav/kvfile.hpp"

namespace egrav::cli {

const Key& Params::key(const std::string& name) const {
    for (const auto& k : keys_)
        if (k.name == name) return k;
    throw ValidationError("internal: undeclared parameter '" + name + "'");
}

void Params::set(const std::string& name, const std::string& value) {
    bool known = false;
    for (const auto& k : keys_) known = known || k.name == name;
    if (!known) {
        std::string names;
        for (const auto& k : keys_) names += (names.empty() ? "" : ", ") + k.name;
        throw ValidationError("unknown key '" + name + "'; accepted keys: " + names);
    }
    set_[name] = value;
}

void Params::apply_config(const std::filesystem::path& path) {
    const KvDocument doc = KvDocument::load(path);
    for (const auto& sec : doc.sections) {
        if (!sec.name.empty())
            throw ValidationError(path.string() + ":" + std::to_string(sec.line) + ": sections are not used in run configs");
        for (const auto& [k, v] : sec.entries) set(k, v);
    }
}

bool Params::given(const std::string& name) const {
    key(name);
    return set_.count(name) > 0;
}

std::string Params::str(const std::string& name) const {
    const Key& k = key(name);
    auto it = set_.find(name);
    return it != set_.end() ? it->second : k.def;
}

double Params::num(const std::string& name) const {
    const std::string v = str(name);
    if (v.empty()) throw ValidationError("missing value for '" + name + "'");
    return parse_double(v, name);
}

long long Params::integer(const std::string& name) const {
    const std::string v = str(name);
    if (v.empty()) throw ValidationError("missing value for '" + name + "'");
    return parse_integer(v, name);
}

std::optional<double> Params::opt_num(const std::string& name) const {
    const std::string v = str(name);
    if (v.empty()) return std::nullopt;
    return parse_double(v, name);
}

json Params::to_json() const {
    json j = json::object();
    for (const auto& k : keys_) {
        const std::string v = str(k.name);
        if (!v.empty()) j[k.name] = v;
    }
    return j;
}

GammaParameter parse_gamma(const std::string& text) {
    if (text.empty() || text == "standard" || text == "1/(8pi)") return GammaParameter::standard();
    if (text == "alternative" || text == "8pi") return GammaParameter::alternative();
    return make_gamma(parse_double(text, "gamma"));
}

json table_to_json(const CsvTable& t) {
    json j;
    j["schema"] = t.schema();
    j["version"] = csv_schema_version;
    json cols = json::array();
    for (const auto& c : t.columns()) cols.push_back({{"name", c.name}, {"unit", c.unit}});
    j["columns"] = cols;
    json rows = json::array();
    for (const auto& row : t.data()) {
        json r = json::array();
        for (const auto& cell : row) {
            if (const auto* d = std::get_if<double>(&cell)) r.push_back(*d);
            else if (const auto* n = std::get_if<long long>(&cell)) r.push_back(*n);
            else r.push_back(std::get<std::string>(cell));
        }
        rows.push_back(r);
    }
    j["rows"] = rows;
    return j;
}

void Run::add_table(const std::string& stem, const CsvTable& table) {
    if (format_ == "json")
        outputs_.push_back({stem + ".json", table_to_json(table).dump(2) + "\n"});
    else
        outputs_.push_back({stem + ".csv", table.str()});
}

void Run::add_json(const std::string& name, const json& j) { outputs_.push_back({name, j.dump(2) + "\n"}); }

void Run::write(const std::filesystem::path& dir, const Params& params) const {
    json files = json::array();
    std::string all;
    for (const auto& o : outputs_) {
        write_text_file(dir / o.name, o.content);
        files.push_back({{"file", o.name}, {"fnv1a64", hex64(fnv1a64(o.content))}});
        all += o.content;
    }
    json m;
    m["tool"] = "egrav";
    m["verb"] = verb_;
    m["format"] = format_;
    m["constants"] = std::string(constants_version);
    m["csv_schema_version"] = csv_schema_version;
    m["parameters"] = params.to_json();
    m["outputs"] = files;
    m["content_hash"] = hex64(fnv1a64(all));
    write_text_file(dir / "manifest.json", m.dump(2) + "\n");
}

std::filesystem::path output_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("EGRAV_OUTPUT_DIR"); env && *env) return env;
    return ".";
}

}  // namespace egrav::cli
