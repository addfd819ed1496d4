// Command-line front end: norms, intrinsic operators, weight-class checks,
// verification suites, and corpus generation.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ilp/config.hpp"
#include "ilp/reference.hpp"

namespace fs = std::filesystem;
using namespace ilp;

namespace {

RunConfig load_config(const std::string& path) {
    if (path.empty()) return RunConfig::from_kv(KeyValueConfig::parse_text(""));
    return RunConfig::from_kv(KeyValueConfig::parse_file(path));
}

std::string resolve_out(const std::string& flag_value) {
    if (const char* env = std::getenv("ILP_OUT"); env && *env) return env;
    return flag_value;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open for write: " + path);
    return file;
}

int run_norm(const std::string& config_path, const std::string& space, const std::string& input,
             const std::string& balls_spec, const std::string& output) {
    RunConfig rc = load_config(config_path);
    set_threads(rc.jobs);
    if (input.empty() || !fs::exists(input)) throw ConfigError("norm: input csv not found");
    GridFunction f = GridFunction::read_csv(input);

    int stride = rc.ball_stride;
    if (!balls_spec.empty()) {
        if (balls_spec.rfind("stride=", 0) != 0)
            throw ConfigError("norm: --balls expects stride=<n>");
        stride = std::atoi(balls_spec.c_str() + 7);
        if (stride < 1) throw ConfigError("norm: bad stride");
    }

    SpaceSpec spec;
    spec.balls = BallFamily::dyadic(f.grid(), stride);
    spec.phi = rc.phi;
    spec.Phi = rc.Phi;
    if (rc.weight)
        spec.w = Weight(GridFunction(f.grid(), [&](Pt p) { return rc.weight(p); }));
    else
        spec.w = Weight(GridFunction(f.grid(), [](Pt) { return 1.0; }));
    spec.outer = rc.outer;
    spec.p = rc.phi.lower_type();
    spec.kappa = 0.5;
    spec.q = rc.q;

    if (space == "musielak_morrey")
        spec.kind = SpaceSpec::Kind::musielak_morrey;
    else if (space == "weighted_orlicz_morrey")
        spec.kind = SpaceSpec::Kind::weighted_orlicz_morrey;
    else if (space == "campanato")
        spec.kind = SpaceSpec::Kind::campanato;
    else if (space == "campanato_star")
        spec.kind = SpaceSpec::Kind::campanato_star;
    else if (space == "bmo")
        spec.kind = SpaceSpec::Kind::bmo;
    else if (space == "classical_morrey")
        spec.kind = SpaceSpec::Kind::classical_morrey;
    else if (space == "l_phi")
        spec.kind = SpaceSpec::Kind::l_phi;
    else
        throw ConfigError("norm: unknown space '" + space + "'");

    SpaceNormResult res = space_norm_rows(f, spec);
    std::ofstream file;
    std::ostream& out = open_output(file, output);
    out << (f.grid().dim() == 1 ? "cx,r,ball_norm\n" : "cx,cy,r,ball_norm\n");
    for (const auto& row : res.rows) {
        out << fmt17(row.ball.center[0]) << ',';
        if (f.grid().dim() == 2) out << fmt17(row.ball.center[1]) << ',';
        out << fmt17(row.ball.radius) << ',' << fmt17(row.value) << '\n';
    }
    out << "TOTAL," << (f.grid().dim() == 2 ? "," : "") << ',' << fmt17(res.total) << '\n';
    return 0;
}

int run_operator(const std::string& config_path, const std::string& op, const std::string& input,
                 const std::string& b_path, const std::string& output, double alpha_flag,
                 double lambda_flag, double beta_flag, const std::string& mode_flag) {
    RunConfig rc = load_config(config_path);
    set_threads(rc.jobs);
    if (alpha_flag > 0.0) rc.alpha = alpha_flag;
    if (lambda_flag > 0.0) rc.lambda = lambda_flag;
    if (beta_flag > 0.0) rc.beta = beta_flag;
    if (!mode_flag.empty()) {
        if (mode_flag == "lp")
            rc.mode = EvalMode::lp;
        else if (mode_flag == "dict")
            rc.mode = EvalMode::dictionary;
        else
            throw ConfigError("operator: mode must be lp or dict");
    }
    if (input.empty() || !fs::exists(input)) throw ConfigError("operator: input csv not found");
    GridFunction f = GridFunction::read_csv(input);
    HalfSpaceGrid hs = HalfSpaceGrid::geometric(f.grid());
    AlphaEvaluator ev(f.grid().dim(), rc.alpha, rc.mode, rc.kernel_m, rc.dict_size, rc.seed);

    auto need_b = [&]() {
        if (b_path.empty() || !fs::exists(b_path))
            throw ConfigError("operator: commutators need --b <csv>");
        return GridFunction::read_csv(b_path);
    };

    ConeParams cone{rc.beta, rc.lambda, 1e-8};
    GridFunction result = [&]() {
        if (op == "s_alpha") return s_alpha(f, hs, ev);
        if (op == "sab") return s_alpha_beta(f, hs, ev, cone);
        if (op == "g_alpha") return g_alpha(f, hs, ev);
        if (op == "g_star") return g_star_lambda(f, hs, ev, cone);
        if (op == "comm_s") return commutator_s(need_b(), f, hs, ev);
        if (op == "comm_g") return commutator_g(need_b(), f, hs, ev);
        if (op == "comm_gstar") return commutator_gstar(need_b(), f, hs, ev, cone.lambda,
                                                        cone.weight_floor);
        throw ConfigError("operator: unknown --op '" + op + "'");
    }();

    if (output.empty()) {
        std::ostream& out = std::cout;
        out << (f.grid().dim() == 1 ? "x,value\n" : "x,y,value\n");
        for (long i = 0; i < f.grid().size(); ++i) {
            Pt p = f.grid().coord(i);
            out << fmt17(p[0]);
            if (f.grid().dim() == 2) out << ',' << fmt17(p[1]);
            out << ',' << fmt17(result[i]) << '\n';
        }
    } else {
        result.write_csv(output);
    }
    return 0;
}

int run_apcheck(const std::string& config_path, double q, double r_exp,
                const std::string& output) {
    RunConfig rc = load_config(config_path);
    set_threads(rc.jobs);
    BallFamily balls = BallFamily::dyadic(rc.grid, rc.ball_stride);
    double ap = muckenhoupt_constant(rc.phi, q, rc.grid, balls);
    Weight w(GridFunction(rc.grid, [&](Pt p) { return rc.weight ? rc.weight(p) : 1.0; }));
    double rh = reverse_holder_constant(w, r_exp, balls);
    KernelGrid kg = KernelGrid::make(rc.grid.dim(), rc.alpha,
                                     rc.kernel_m > 0 ? rc.kernel_m : (rc.grid.dim() == 1 ? 41 : 9));
    double decay = kernel_decay_check(kernel_dictionary(kg, std::min(rc.dict_size, 64), rc.seed),
                                      kg, rc.epsilon);
    std::ofstream file;
    std::ostream& out = open_output(file, output);
    out << "check,param,fitted_constant,pass\n";
    out << "muckenhoupt,q=" << fmt17(q) << ',' << fmt17(ap) << ','
        << (ap <= rc.hyp_cap ? "1" : "0") << '\n';
    out << "reverse_holder,r=" << fmt17(r_exp) << ',' << fmt17(rh) << ','
        << (rh <= rc.hyp_cap ? "1" : "0") << '\n';
    out << "kernel_decay,eps=" << fmt17(rc.epsilon) << ',' << fmt17(decay) << ','
        << (decay <= rc.hyp_cap ? "1" : "0") << '\n';
    return 0;
}

int run_corpus(const std::string& config_path, const std::string& out_dir) {
    RunConfig rc = load_config(config_path);
    Corpus corpus = rc.corpus_kind == "bmo" ? Corpus::bmo(rc.grid, rc.seed)
                                            : Corpus::standard(rc.grid, rc.seed);
    fs::create_directories(out_dir);
    std::ofstream manifest(fs::path(out_dir) / "manifest.csv");
    manifest << "name,file,seed,corpus_hash\n";
    for (const auto& m : corpus.members) {
        std::string file = m.name + ".csv";
        m.f.write_csv((fs::path(out_dir) / file).string());
        manifest << m.name << ',' << file << ',' << corpus.seed << ',' << corpus.hash_hex << '\n';
    }
    return 0;
}

int run_verify(const std::string& config_path, const std::string& suite, const std::string& out_dir,
               bool strict) {
    RunConfig rc = load_config(config_path);
    set_threads(rc.jobs);
    SuiteConfig sc = rc.suite_config();

    std::vector<SuiteId> ids;
    if (suite == "all") {
        ids = all_suites();
    } else {
        auto id = parse_suite(suite);
        if (!id) throw ConfigError("verify: unknown suite '" + suite + "'");
        ids.push_back(*id);
    }

    std::vector<SuiteResult> results;
    bool any_fail = false, any_skipped = false;
    for (SuiteId id : ids) {
        SuiteResult res = run_suite(id, sc);
        any_skipped |= res.skipped;
        if (!res.skipped && !res.pass) any_fail = true;
        std::cout << res.name << ": "
                  << (res.skipped ? "skipped_hypothesis" : (res.pass ? "pass" : "FAIL"))
                  << " max_ratio=" << fmt17(res.max_ratio) << '\n';
        results.push_back(std::move(res));
    }
    write_suite_reports(results, out_dir);
    if (strict && any_skipped) return 3;
    return any_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"intrinsic square functions and Musielak-Orlicz space norms on grids"};
    app.require_subcommand(1);

    std::string config_path, input, b_path, output, balls_spec, space, op, suite = "all";
    std::string out_dir = "out", mode_flag;
    double q = 2.0, r_exp = 2.0, alpha_flag = 0.0, lambda_flag = 0.0, beta_flag = 0.0;
    int jobs = 0;
    bool strict = false;

    auto* norm = app.add_subcommand("norm", "ball-family norm of a grid function");
    norm->add_option("--space", space, "space kind")->required();
    norm->add_option("--config", config_path, "key=value config file");
    norm->add_option("--input", input, "grid function csv")->required();
    norm->add_option("--balls", balls_spec, "ball family spec, stride=<n>");
    norm->add_option("--output", output, "output csv (default stdout)");

    auto* oper = app.add_subcommand("operator", "apply an intrinsic operator");
    oper->add_option("--op", op, "s_alpha|sab|g_alpha|g_star|comm_s|comm_g|comm_gstar")->required();
    oper->add_option("--config", config_path, "key=value config file");
    oper->add_option("--input", input, "grid function csv")->required();
    oper->add_option("--b", b_path, "BMO symbol csv for commutators");
    oper->add_option("--alpha", alpha_flag, "Holder exponent");
    oper->add_option("--lambda", lambda_flag, "g* exponent");
    oper->add_option("--beta", beta_flag, "aperture");
    oper->add_option("--mode", mode_flag, "lp|dict");
    oper->add_option("--output", output, "output csv (default stdout)");

    auto* ap = app.add_subcommand("apcheck", "Muckenhoupt and reverse-Holder constants");
    ap->add_option("--config", config_path, "key=value config file");
    ap->add_option("--q", q, "Muckenhoupt exponent");
    ap->add_option("--r-exp", r_exp, "reverse-Holder exponent");
    ap->add_option("--output", output, "output csv (default stdout)");

    auto* ver = app.add_subcommand("verify", "run boundedness suites");
    ver->add_option("--suite", suite, "suite id or 'all'");
    ver->add_option("--config", config_path, "key=value config file");
    ver->add_option("--out", out_dir, "report directory");
    ver->add_flag("--strict", strict, "exit 3 when a hypothesis fails");

    auto* cor = app.add_subcommand("corpus", "materialize the test-function corpus");
    cor->add_option("--config", config_path, "key=value config file");
    cor->add_option("--out", out_dir, "output directory");

    app.add_option("--jobs", jobs, "worker threads (0 = default)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (jobs > 0) set_threads(jobs);
        out_dir = resolve_out(out_dir);
        if (norm->parsed()) return run_norm(config_path, space, input, balls_spec, output);
        if (oper->parsed())
            return run_operator(config_path, op, input, b_path, output, alpha_flag, lambda_flag,
                                beta_flag, mode_flag);
        if (ap->parsed()) return run_apcheck(config_path, q, r_exp, output);
        if (ver->parsed()) return run_verify(config_path, suite, out_dir, strict);
        if (cor->parsed()) return run_corpus(config_path, out_dir);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
