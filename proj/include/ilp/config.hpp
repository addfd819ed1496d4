#pragma once

#include <map>

#include "ilp/suites.hpp"

namespace ilp {

// Raised for malformed configs and bad CLI input; the CLI maps it to exit 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Flat `key = value` text with '#' comments. Unknown keys are rejected at
// materialization time.
class KeyValueConfig {
  public:
    static KeyValueConfig parse_file(const std::string& path);
    static KeyValueConfig parse_text(const std::string& text);

    bool has(const std::string& key) const;
    std::string get(const std::string& key, const std::string& fallback) const;
    double get_num(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;

    // every key must have been consumed by one of the getters above
    void reject_unknown() const;

  private:
    std::map<std::string, std::string> kv_;
    mutable std::map<std::string, bool> seen_;
};

// Materialized run configuration.
struct RunConfig {
    Grid grid = Grid::line(-1.0, 1.0, 129);
    GrowthFunction phi = GrowthFunction::power(2.0);
    YoungFunction Phi = YoungFunction::power(2.0);
    std::function<double(const Pt&)> weight;  // null means 1
    OuterFunction outer = OuterFunction::power(0.25);
    double alpha = 1.0;
    double lambda = 4.0;
    double lambda_campanato = 6.0;
    double beta = 1.0;
    double q = 2.0;
    double epsilon = 0.5;
    double campanato_p = 1.0;
    EvalMode mode = EvalMode::dictionary;
    int kernel_m = 0;
    int dict_size = 128;
    int ball_stride = 4;
    unsigned seed = 12345u;
    int jobs = 0;
    double hyp_cap = 1e6;
    std::string out_dir = "out";
    std::string corpus_kind = "standard";

    static RunConfig from_kv(const KeyValueConfig& kv);
    SuiteConfig suite_config() const;
};

}  // namespace ilp
