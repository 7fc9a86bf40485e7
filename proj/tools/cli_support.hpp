#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "egrav/constants.hpp"
#include "egrav/csv.hpp"

namespace egrav::cli {

using json = nlohmann::ordered_json;

struct Key {
    std::string name;
    std::string def;  // empty: unset unless given
    std::string help;
};

// Resolved parameters of one verb: defaults, then the config file, then flags.
class Params {
  public:
    Params(std::vector<Key> keys) : keys_(std::move(keys)) {}

    const std::vector<Key>& keys() const { return keys_; }
    void apply_config(const std::filesystem::path& path);
    void set(const std::string& name, const std::string& value);

    bool given(const std::string& name) const;  // set by config or flag
    std::string str(const std::string& name) const;
    double num(const std::string& name) const;
    long long integer(const std::string& name) const;
    std::optional<double> opt_num(const std::string& name) const;

    json to_json() const;

  private:
    const Key& key(const std::string& name) const;
    std::vector<Key> keys_;
    std::map<std::string, std::string> set_;
};

GammaParameter parse_gamma(const std::string& text);

struct Output {
    std::string name;
    std::string content;
};

class Run {
  public:
    Run(std::string verb, std::string format) : verb_(std::move(verb)), format_(std::move(format)) {}

    void add_table(const std::string& stem, const CsvTable& table);
    void add_json(const std::string& name, const json& j);
    // Writes all outputs and manifest.json into dir.
    void write(const std::filesystem::path& dir, const Params& params) const;

  private:
    std::string verb_;
    std::string format_;
    std::vector<Output> outputs_;
};

json table_to_json(const CsvTable& table);

std::filesystem::path output_dir(const std::string& flag);

}  // namespace egrav::cli
