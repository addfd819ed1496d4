#include "ilp/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace ilp {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

KeyValueConfig KeyValueConfig::parse_text(const std::string& text) {
    KeyValueConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
        if (cfg.kv_.count(key))
            throw ConfigError("config: duplicate key '" + key + "'");
        cfg.kv_[key] = val;
    }
    return cfg;
}

KeyValueConfig KeyValueConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str());
}

bool KeyValueConfig::has(const std::string& key) const {
    seen_[key] = true;
    return kv_.count(key) > 0;
}

std::string KeyValueConfig::get(const std::string& key, const std::string& fallback) const {
    seen_[key] = true;
    auto it = kv_.find(key);
    return it == kv_.end() ? fallback : it->second;
}

double KeyValueConfig::get_num(const std::string& key, double fallback) const {
    seen_[key] = true;
    auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    char* end = nullptr;
    double v = std::strtod(it->second.c_str(), &end);
    if (end == it->second.c_str() || *end != '\0')
        throw ConfigError("config: key '" + key + "' is not a number: " + it->second);
    return v;
}

int KeyValueConfig::get_int(const std::string& key, int fallback) const {
    double v = get_num(key, fallback);
    if (v != std::floor(v)) throw ConfigError("config: key '" + key + "' must be an integer");
    return static_cast<int>(v);
}

void KeyValueConfig::reject_unknown() const {
    for (auto& [k, v] : kv_)
        if (!seen_.count(k)) throw ConfigError("config: unknown key '" + k + "'");
}

namespace {

std::function<double(const Pt&)> builtin_weight(const std::string& name) {
    if (name == "one") return [](const Pt&) { return 1.0; };
    if (name == "abs_sqrt")
        return [](const Pt& x) { return std::sqrt(std::max(1e-6, std::abs(x[0]))); };
    if (name == "step") return [](const Pt& x) { return x[0] < 0.0 ? 1.0 : 2.0; };
    throw ConfigError("config: unknown weight '" + name + "' (one|abs_sqrt|step|csv:<path>)");
}

}  // namespace

RunConfig RunConfig::from_kv(const KeyValueConfig& kv) {
    RunConfig rc;
    int dim = kv.get_int("dimension", 1);
    double lo = kv.get_num("lower", -1.0);
    double hi = kv.get_num("upper", 1.0);
    int points = kv.get_int("points", 129);
    if (dim == 1)
        rc.grid = Grid::line(lo, hi, points);
    else if (dim == 2)
        rc.grid = Grid::square(lo, hi, points);
    else
        throw ConfigError("config: dimension must be 1 or 2");

    std::string wname = kv.get("weight", "");
    std::string wcsv = kv.get("weight_csv", "");
    if (!wcsv.empty()) {
        auto gf = std::make_shared<GridFunction>(GridFunction::read_csv(wcsv));
        rc.weight = [gf](const Pt& x) { return gf->interpolate(x); };
    } else if (!wname.empty()) {
        if (wname.rfind("csv:", 0) == 0) {
            auto gf = std::make_shared<GridFunction>(GridFunction::read_csv(wname.substr(4)));
            rc.weight = [gf](const Pt& x) { return gf->interpolate(x); };
        } else {
            rc.weight = builtin_weight(wname);
        }
    }

    std::string family = kv.get("family", "power");
    double p = kv.get_num("p", 2.0);
    double p0 = kv.get_num("p0", p);
    double p1 = kv.get_num("p1", p);
    double mp = kv.get_num("muckenhoupt_p", std::max(1.0, p));
    if (family == "power") {
        rc.phi = GrowthFunction::power(p);
    } else if (family == "weighted_power") {
        if (!rc.weight) throw ConfigError("config: weighted_power needs a weight");
        rc.phi = GrowthFunction::weighted_power(rc.weight, p, mp);
    } else if (family == "weighted_orlicz") {
        if (!rc.weight) throw ConfigError("config: weighted_orlicz needs a weight");
        double yp = kv.get_num("young_p", 2.0);
        rc.phi = GrowthFunction::weighted_orlicz(
            rc.weight, [yp](double t) { return std::pow(t, yp); }, yp, yp, mp);
    } else if (family == "custom") {
        // shipped custom family: t^p (1 + min(t,1)), default types (p, p+1)
        double q0 = kv.has("p0") ? p0 : p;
        double q1 = kv.has("p1") ? p1 : p + 1.0;
        rc.phi = GrowthFunction::custom(
            [p](const Pt&, double t) { return std::pow(t, p) * (1.0 + std::min(t, 1.0)); }, q0, q1,
            mp, "t^p(1+min(t,1))");
    } else {
        throw ConfigError("config: unknown family '" + family + "'");
    }

    rc.Phi = YoungFunction::power(kv.get_num("young_p", 2.0));

    std::string outer = kv.get("phi_small", "pow");
    double s = kv.get_num("phi_small_exp", 0.25);
    if (outer == "pow")
        rc.outer = OuterFunction::power(s);
    else if (outer == "invpow")
        rc.outer = OuterFunction::inv_power(s);
    else if (outer == "log")
        rc.outer = OuterFunction::log_shift();
    else if (outer == "const")
        rc.outer = OuterFunction::constant();
    else
        throw ConfigError("config: unknown phi_small '" + outer + "'");

    rc.alpha = kv.get_num("alpha", 1.0);
    if (!(rc.alpha > 0.0) || rc.alpha > 1.0) throw ConfigError("config: alpha must be in (0,1]");
    rc.lambda = kv.get_num("lambda", 4.0);
    rc.lambda_campanato = kv.get_num("lambda_campanato", 6.0);
    rc.beta = kv.get_num("beta", 1.0);
    if (!(rc.beta > 0.0)) throw ConfigError("config: beta must be positive");
    rc.q = kv.get_num("q", 2.0);
    if (!(rc.q >= 1.0)) throw ConfigError("config: q must be >= 1");
    rc.epsilon = kv.get_num("epsilon", 0.5);
    rc.campanato_p = kv.get_num("campanato_p", 1.0);
    if (!(rc.campanato_p > 0.0)) throw ConfigError("config: campanato_p must be positive");

    std::string mode = kv.get("mode", "dict");
    if (mode == "dict")
        rc.mode = EvalMode::dictionary;
    else if (mode == "lp")
        rc.mode = EvalMode::lp;
    else
        throw ConfigError("config: mode must be lp or dict");

    rc.kernel_m = kv.get_int("kernel_m", 0);
    rc.dict_size = kv.get_int("dict_size", 128);
    if (rc.dict_size < 8) throw ConfigError("config: dict_size must be >= 8");
    rc.ball_stride = kv.get_int("ball_stride", 4);
    if (rc.ball_stride < 1) throw ConfigError("config: ball_stride must be >= 1");
    rc.seed = static_cast<unsigned>(kv.get_int("seed", 12345));
    rc.jobs = kv.get_int("jobs", 0);
    rc.hyp_cap = kv.get_num("hyp_cap", 1e6);
    rc.out_dir = kv.get("out", "out");
    rc.corpus_kind = kv.get("corpus", "standard");
    if (rc.corpus_kind != "standard" && rc.corpus_kind != "bmo")
        throw ConfigError("config: corpus must be standard or bmo");

    kv.reject_unknown();
    return rc;
}

SuiteConfig RunConfig::suite_config() const {
    SuiteConfig sc;
    sc.grid = grid;
    sc.seed = seed;
    sc.mode = mode;
    sc.kernel_m = kernel_m;
    sc.dict_size = dict_size;
    sc.alpha = alpha;
    sc.lambda = lambda;
    sc.lambda_campanato = lambda_campanato;
    sc.q = q;
    sc.hyp_cap = hyp_cap;
    sc.ball_stride = ball_stride;
    sc.phi = phi;
    sc.Phi = Phi;
    sc.campanato_phi = GrowthFunction::power(campanato_p);
    sc.weight = weight;
    return sc;
}

}  // namespace ilp
