#include "ilp/suites.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

namespace ilp {

namespace {

const std::vector<std::pair<SuiteId, const char*>>& id_table() {
    static const std::vector<std::pair<SuiteId, const char*>> table = {
        {SuiteId::pro_vz, "pro-vz"},   {SuiteId::t2_1, "t2.1"},       {SuiteId::t2_1v, "t2.1v"},
        {SuiteId::cor_g, "cor-g"},     {SuiteId::t2_3, "t2.3"},       {SuiteId::t2_2, "t2.2"},
        {SuiteId::pro_bg, "pro-bg"},   {SuiteId::t2_4, "t2.4"},       {SuiteId::t3_1, "t3.1"},
        {SuiteId::t3_1v, "t3.1v"},     {SuiteId::cor_g2, "cor-g2"},   {SuiteId::t3_2, "t3.2"},
        {SuiteId::t3_3, "t3.3"},       {SuiteId::t3_4, "t3.4"},       {SuiteId::t4_1, "t4.1"},
        {SuiteId::cor_gBMO, "cor-gBMO"}, {SuiteId::t4_2, "t4.2"},     {SuiteId::sa_q1, "sa-q1"},
        {SuiteId::t4_3, "t4.3"},       {SuiteId::ga_q1, "ga-q1"},
    };
    return table;
}

bool is_constant(const GridFunction& f) {
    double v0 = f[0];
    for (double v : f.values())
        if (v != v0) return false;
    return true;
}

enum class OpKind { s, g, gstar, comm_s, comm_g, comm_gstar };

std::string op_label(OpKind k, double lambda) {
    switch (k) {
        case OpKind::s: return "S_alpha";
        case OpKind::g: return "g_alpha";
        case OpKind::gstar: return "g_star(lambda=" + fmt17(lambda) + ")";
        case OpKind::comm_s: return "[b,S_alpha]";
        case OpKind::comm_g: return "[b,g_alpha]";
        case OpKind::comm_gstar: return "[b,g_star](lambda=" + fmt17(lambda) + ")";
    }
    return "?";
}

struct OperatorBundle {
    HalfSpaceGrid hs;
    AlphaEvaluator ev;
    double lambda;
    std::optional<GridFunction> b;  // normalized BMO symbol for commutators

    GridFunction apply(OpKind kind, const GridFunction& f) const {
        switch (kind) {
            case OpKind::s: return s_alpha(f, hs, ev);
            case OpKind::g: return g_alpha(f, hs, ev);
            case OpKind::gstar: return g_star_lambda(f, hs, ev, lambda);
            case OpKind::comm_s: return commutator_s(*b, f, hs, ev);
            case OpKind::comm_g: return commutator_g(*b, f, hs, ev);
            case OpKind::comm_gstar: return commutator_gstar(*b, f, hs, ev, lambda);
        }
        throw std::runtime_error("unknown operator");
    }
};

double lambda_threshold(double p1, double alpha, int n, double floor3) {
    return std::min(std::max(floor3, p1), 3.0 + 2.0 * alpha / n);
}

HypothesisResult check_cap(const std::string& name, const std::string& param, double fitted,
                           double cap) {
    return {name, param, fitted, std::isfinite(fitted) && fitted <= cap};
}

HypothesisResult check_bool(const std::string& name, const std::string& param, double fitted,
                            bool ok) {
    return {name, param, fitted, ok};
}

}  // namespace

std::string suite_name(SuiteId id) {
    for (auto& [k, v] : id_table())
        if (k == id) return v;
    return "?";
}

std::optional<SuiteId> parse_suite(const std::string& name) {
    for (auto& [k, v] : id_table())
        if (name == v) return k;
    return std::nullopt;
}

const std::vector<SuiteId>& all_suites() {
    static const std::vector<SuiteId> ids = [] {
        std::vector<SuiteId> v;
        for (auto& [k, _] : id_table()) v.push_back(k);
        return v;
    }();
    return ids;
}

std::vector<RatioRow> boundedness_rows(const std::string& op_label_str,
                                       const std::function<GridFunction(const GridFunction&)>& T,
                                       const SpaceSpec& in_space, const SpaceSpec& out_space,
                                       const Corpus& corpus) {
    std::vector<RatioRow> rows;
    for (const auto& m : corpus.members) {
        RatioRow row;
        row.op = op_label_str;
        row.fname = m.name;
        if (is_constant(m.f)) {
            row.status = "skipped_constant";
            rows.push_back(row);
            continue;
        }
        row.norm_in = space_norm(m.f, in_space);
        GridFunction Tf = T(m.f);
        row.norm_out = space_norm(Tf, out_space);
        if (row.norm_in == 0.0) {
            row.status = row.norm_out > 1e-12 ? "violation" : "ok";
            row.ratio = 0.0;
        } else {
            row.ratio = row.norm_out / row.norm_in;
            row.status = std::isfinite(row.ratio) ? "ok" : "violation";
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<RatioRow> modular_rows(const std::string& op_label_str,
                                   const std::function<GridFunction(const GridFunction&)>& T,
                                   const GrowthFunction& phi, const Corpus& corpus) {
    std::vector<RatioRow> rows;
    for (const auto& m : corpus.members) {
        RatioRow row;
        row.op = op_label_str;
        row.fname = m.name;
        if (is_constant(m.f)) {
            row.status = "skipped_constant";
            rows.push_back(row);
            continue;
        }
        const Grid& g = m.f.grid();
        double hn = g.cell_measure();
        double in = 0.0;
        for (long i = 0; i < g.size(); ++i) in += phi(g.coord(i), std::abs(m.f[i]));
        in *= hn;
        GridFunction Tf = T(m.f);
        double out = 0.0;
        for (long i = 0; i < g.size(); ++i) out += phi(g.coord(i), std::abs(Tf[i]));
        out *= hn;
        row.norm_in = in;
        row.norm_out = out;
        row.ratio = in > 0.0 ? out / in : 0.0;
        row.status = std::isfinite(row.ratio) ? "ok" : "violation";
        rows.push_back(row);
    }
    return rows;
}

namespace {

SuiteResult assemble(SuiteId id, const Corpus& corpus, std::vector<HypothesisResult> hyp,
                     std::vector<std::pair<OpKind, std::function<std::vector<RatioRow>()>>> makers) {
    SuiteResult res;
    res.id = id;
    res.name = suite_name(id);
    res.corpus_hash = corpus.hash_hex;
    res.hypotheses = std::move(hyp);
    res.hypotheses_pass = true;
    for (auto& h : res.hypotheses) res.hypotheses_pass &= h.pass;
    if (!res.hypotheses_pass) {
        res.skipped = true;
        res.pass = false;
        return res;
    }
    for (auto& [kind, maker] : makers) {
        auto rows = maker();
        res.rows.insert(res.rows.end(), rows.begin(), rows.end());
    }
    res.pass = true;
    for (auto& r : res.rows) {
        if (r.status == "violation") res.pass = false;
        if (r.status == "ok") res.max_ratio = std::max(res.max_ratio, r.ratio);
    }
    return res;
}

// ---- section wiring -------------------------------------------------------

struct CommonPieces {
    BallFamily balls;
    Corpus corpus;
    HalfSpaceGrid hs;

    CommonPieces(const SuiteConfig& cfg)
        : balls(cfg.balls ? *cfg.balls : BallFamily::dyadic(cfg.grid, cfg.ball_stride)),
          corpus(Corpus::standard(cfg.grid, cfg.seed)),
          hs(HalfSpaceGrid::geometric(cfg.grid)) {}
};

GridFunction normalized_symbol(const Corpus& corpus, const BallFamily& balls) {
    const GridFunction& raw = corpus.by_name("bmo_log");
    double nb = bmo_norm(raw, balls);
    std::vector<double> v = raw.values();
    for (double& x : v) x /= nb;
    return GridFunction(raw.grid(), std::move(v));
}

std::vector<double> dyadic_radii(const Grid& g) {
    std::vector<double> r;
    for (double x = 2.0 * g.spacing(); x <= g.diameter() / 2.0; x *= 2.0) r.push_back(x);
    return r;
}

SuiteResult run_morrey_suite(SuiteId id, const SuiteConfig& cfg) {
    CommonPieces cp(cfg);
    int n = cfg.grid.dim();
    const GrowthFunction& phi = cfg.phi;
    OuterFunction outer =
        (id == SuiteId::t2_1v)
            ? OuterFunction::custom(
                  [](const Pt& c, double r) { return std::pow(r, 0.25 + 0.05 * std::sin(c[0])); },
                  true, "r^{lam(x)}")
            : OuterFunction::power(0.25);

    std::vector<HypothesisResult> hyp;
    hyp.push_back(check_cap("type_lower", "p0=" + fmt17(phi.lower_type()),
                            type_constant(phi, TypeSide::lower, cfg.grid), cfg.hyp_cap));
    hyp.push_back(check_cap("type_upper", "p1=" + fmt17(phi.upper_type()),
                            type_constant(phi, TypeSide::upper, cfg.grid), cfg.hyp_cap));
    hyp.push_back(check_bool("p0_gt_1", "p0=" + fmt17(phi.lower_type()), phi.lower_type(),
                             phi.lower_type() > 1.0));
    double ap_q = std::max(1.0, phi.lower_type());
    hyp.push_back(check_cap("muckenhoupt", "q=" + fmt17(ap_q),
                            muckenhoupt_constant(phi, ap_q, cfg.grid, cp.balls), cfg.hyp_cap));
    auto radii = dyadic_radii(cfg.grid);
    if (id == SuiteId::t2_1v) {
        // sample the spatial argument of the outer function
        double worst = 0.0;
        bool div = false;
        for (double cx : {-0.9, -0.3, 0.3, 0.9}) {
            OuterFunction frozen = OuterFunction::custom(
                [cx](const Pt&, double r) { return std::pow(r, 0.25 + 0.05 * std::sin(cx)); },
                false, "frozen");
            auto d = dini_integral_check(frozen, radii);
            worst = std::max(worst, d.constant);
            div = div || d.diverged;
        }
        hyp.push_back(check_bool("dini_variable", outer.name, worst, !div && worst <= cfg.hyp_cap));
    } else {
        auto d = dini_integral_check(outer, radii);
        hyp.push_back(check_bool("dini", outer.name, d.constant, !d.diverged && d.constant <= cfg.hyp_cap));
    }

    bool needs_gstar = id == SuiteId::t2_3 || id == SuiteId::t2_4;
    if (needs_gstar) {
        double thr = lambda_threshold(phi.upper_type(), cfg.alpha, n, 3.0);
        hyp.push_back(check_bool("lambda_threshold", "lambda=" + fmt17(cfg.lambda), thr,
                                 cfg.lambda > thr));
    }

    bool commutator = id == SuiteId::t2_2 || id == SuiteId::pro_bg || id == SuiteId::t2_4;
    OperatorBundle bundle{cp.hs,
                          AlphaEvaluator(n, cfg.alpha, cfg.mode, cfg.kernel_m, cfg.dict_size,
                                         cfg.seed),
                          cfg.lambda,
                          commutator ? std::optional<GridFunction>(normalized_symbol(cp.corpus, cp.balls))
                                     : std::nullopt};

    SpaceSpec space;
    space.kind = SpaceSpec::Kind::musielak_morrey;
    space.phi = phi;
    space.outer = outer;
    space.balls = cp.balls;

    OpKind kind = OpKind::s;
    if (id == SuiteId::cor_g) kind = OpKind::g;
    if (id == SuiteId::t2_3) kind = OpKind::gstar;
    if (id == SuiteId::t2_2) kind = OpKind::comm_s;
    if (id == SuiteId::pro_bg) kind = OpKind::comm_g;
    if (id == SuiteId::t2_4) kind = OpKind::comm_gstar;

    auto maker = [&, kind]() {
        return boundedness_rows(op_label(kind, cfg.lambda),
                                [&](const GridFunction& f) { return bundle.apply(kind, f); }, space,
                                space, cp.corpus);
    };
    return assemble(id, cp.corpus, std::move(hyp), {{kind, maker}});
}

SuiteResult run_modular_suite(SuiteId id, const SuiteConfig& cfg) {
    CommonPieces cp(cfg);
    int n = cfg.grid.dim();
    const GrowthFunction& phi = cfg.phi;

    std::vector<HypothesisResult> hyp;
    hyp.push_back(check_bool("p0_gt_1", "p0=" + fmt17(phi.lower_type()), phi.lower_type(),
                             phi.lower_type() > 1.0));
    double ap_q = std::max(1.0, phi.lower_type());
    hyp.push_back(check_cap("muckenhoupt", "q=" + fmt17(ap_q),
                            muckenhoupt_constant(phi, ap_q, cfg.grid, cp.balls), cfg.hyp_cap));
    double thr = lambda_threshold(phi.upper_type(), cfg.alpha, n, 2.0);
    hyp.push_back(
        check_bool("lambda_threshold", "lambda=" + fmt17(cfg.lambda), thr, cfg.lambda > thr));

    OperatorBundle bundle{cp.hs,
                          AlphaEvaluator(n, cfg.alpha, cfg.mode, cfg.kernel_m, cfg.dict_size,
                                         cfg.seed),
                          cfg.lambda, std::nullopt};

    auto make_s = [&]() {
        return modular_rows(op_label(OpKind::s, cfg.lambda),
                            [&](const GridFunction& f) { return bundle.apply(OpKind::s, f); }, phi,
                            cp.corpus);
    };
    auto make_gstar = [&]() {
        return modular_rows(op_label(OpKind::gstar, cfg.lambda),
                            [&](const GridFunction& f) { return bundle.apply(OpKind::gstar, f); },
                            phi, cp.corpus);
    };
    return assemble(id, cp.corpus, std::move(hyp), {{OpKind::s, make_s}, {OpKind::gstar, make_gstar}});
}

SuiteResult run_orlicz_suite(SuiteId id, const SuiteConfig& cfg) {
    CommonPieces cp(cfg);
    int n = cfg.grid.dim();
    const YoungFunction& Phi = cfg.Phi;
    auto wfn = cfg.weight ? cfg.weight : [](const Pt&) { return 1.0; };
    Weight w(GridFunction(cfg.grid, [&](Pt p) { return wfn(p); }));
    OuterFunction outer =
        (id == SuiteId::t3_1v)
            ? OuterFunction::custom(
                  [](const Pt& c, double r) { return std::pow(r, -0.5 + 0.1 * std::sin(c[0])); },
                  true, "r^{mu(x)}")
            : OuterFunction::inv_power(0.5);

    std::vector<HypothesisResult> hyp;
    GrowthFunction phi_of_Phi = GrowthFunction::custom(
        [&Phi](const Pt&, double t) { return Phi(t); }, Phi.lower_type(), Phi.upper_type(), 1.0);
    hyp.push_back(check_cap("type_lower", "p0=" + fmt17(Phi.lower_type()),
                            type_constant(phi_of_Phi, TypeSide::lower, cfg.grid), cfg.hyp_cap));
    hyp.push_back(check_cap("type_upper", "p1=" + fmt17(Phi.upper_type()),
                            type_constant(phi_of_Phi, TypeSide::upper, cfg.grid), cfg.hyp_cap));
    hyp.push_back(check_bool("p0_gt_1", "p0=" + fmt17(Phi.lower_type()), Phi.lower_type(),
                             Phi.lower_type() > 1.0));
    GrowthFunction w_growth = GrowthFunction::weighted_power(
        [&w](const Pt& x) { return w.w.interpolate(x); }, Phi.lower_type(), Phi.lower_type(),
        "weight");
    hyp.push_back(check_cap("weight_muckenhoupt", "q=" + fmt17(Phi.lower_type()),
                            muckenhoupt_constant(w_growth, Phi.lower_type(), cfg.grid, cp.balls),
                            cfg.hyp_cap));

    auto radii = dyadic_radii(cfg.grid);
    std::vector<std::pair<double, double>> pairs;
    for (size_t i = 0; i < radii.size(); ++i)
        for (size_t j = i; j < radii.size(); ++j) pairs.emplace_back(radii[i], radii[j]);
    if (id == SuiteId::t3_1v) {
        double worst_int = 0.0, worst_mono = 0.0;
        bool div = false;
        for (double cx : {-0.9, -0.3, 0.3, 0.9}) {
            OuterFunction frozen = OuterFunction::custom(
                [cx](const Pt&, double r) { return std::pow(r, -0.5 + 0.1 * std::sin(cx)); }, false,
                "frozen");
            auto d = decreasing_integral_check(frozen, pairs);
            worst_int = std::max(worst_int, d.c_int);
            worst_mono = std::max(worst_mono, d.c_mono);
            div = div || d.diverged;
        }
        hyp.push_back(check_bool("decreasing_integral_variable", outer.name, worst_int,
                                 !div && worst_int <= cfg.hyp_cap));
        hyp.push_back(check_cap("rphi_monotone_variable", outer.name, worst_mono, cfg.hyp_cap));
    } else {
        auto d = decreasing_integral_check(outer, pairs);
        hyp.push_back(check_bool("decreasing_integral", outer.name, d.c_int,
                                 !d.diverged && d.c_int <= cfg.hyp_cap));
        hyp.push_back(check_cap("rphi_monotone", outer.name, d.c_mono, cfg.hyp_cap));
    }

    bool needs_gstar = id == SuiteId::t3_2 || id == SuiteId::t3_3;
    if (needs_gstar) {
        double thr = lambda_threshold(Phi.upper_type(), cfg.alpha, n, 3.0);
        hyp.push_back(check_bool("lambda_threshold", "lambda=" + fmt17(cfg.lambda), thr,
                                 cfg.lambda > thr));
    }

    bool commutator = id == SuiteId::t3_3 || id == SuiteId::t3_4;
    OperatorBundle bundle{cp.hs,
                          AlphaEvaluator(n, cfg.alpha, cfg.mode, cfg.kernel_m, cfg.dict_size,
                                         cfg.seed),
                          cfg.lambda,
                          commutator ? std::optional<GridFunction>(normalized_symbol(cp.corpus, cp.balls))
                                     : std::nullopt};

    SpaceSpec space;
    space.kind = SpaceSpec::Kind::weighted_orlicz_morrey;
    space.Phi = Phi;
    space.w = w;
    space.outer = outer;
    space.balls = cp.balls;

    std::vector<OpKind> kinds;
    switch (id) {
        case SuiteId::t3_1:
        case SuiteId::t3_1v: kinds = {OpKind::s}; break;
        case SuiteId::cor_g2: kinds = {OpKind::g}; break;
        case SuiteId::t3_2: kinds = {OpKind::gstar}; break;
        case SuiteId::t3_3: kinds = {OpKind::comm_gstar}; break;
        case SuiteId::t3_4: kinds = {OpKind::comm_s, OpKind::comm_g}; break;
        default: throw std::runtime_error("bad suite id");
    }
    std::vector<std::pair<OpKind, std::function<std::vector<RatioRow>()>>> makers;
    for (OpKind kind : kinds) {
        makers.emplace_back(kind, [&, kind]() {
            return boundedness_rows(op_label(kind, cfg.lambda),
                                    [&](const GridFunction& f) { return bundle.apply(kind, f); },
                                    space, space, cp.corpus);
        });
    }
    return assemble(id, cp.corpus, std::move(hyp), std::move(makers));
}

SuiteResult run_campanato_suite(SuiteId id, const SuiteConfig& cfg) {
    CommonPieces cp(cfg);
    int n = cfg.grid.dim();
    bool q1 = id == SuiteId::cor_gBMO || id == SuiteId::sa_q1 || id == SuiteId::ga_q1;
    double q = q1 ? 1.0 : cfg.q;
    const GrowthFunction& phi = cfg.campanato_phi;
    double p = phi.muckenhoupt_p();

    std::vector<HypothesisResult> hyp;
    hyp.push_back(check_cap("muckenhoupt", "q=" + fmt17(p),
                            muckenhoupt_constant(phi, p, cfg.grid, cp.balls), cfg.hyp_cap));
    double gap = n * (p / phi.lower_type() - 1.0);
    hyp.push_back(check_bool("p_p0_gap", "n(p/p0-1)=" + fmt17(gap), gap, gap < cfg.alpha));
    if (q > 1.0) {
        double qprime = q / (q - 1.0);
        hyp.push_back(check_bool("p_le_qprime", "q'=" + fmt17(qprime), p, p <= qprime));
    } else {
        hyp.push_back(check_bool("p0_p1_le_1", "p1=" + fmt17(phi.upper_type()), phi.upper_type(),
                                 phi.upper_type() <= 1.0));
    }
    double lambda = cfg.lambda_campanato;
    bool needs_gstar = id == SuiteId::t4_3 || id == SuiteId::ga_q1;
    if (needs_gstar) {
        double thr = 3.0 + 2.0 * cfg.alpha / n;
        hyp.push_back(
            check_bool("lambda_threshold", "lambda=" + fmt17(lambda), thr, lambda > thr));
    }

    OperatorBundle bundle{cp.hs,
                          AlphaEvaluator(n, cfg.alpha, cfg.mode, cfg.kernel_m, cfg.dict_size,
                                         cfg.seed),
                          lambda, std::nullopt};

    SpaceSpec in_space;
    in_space.kind = SpaceSpec::Kind::campanato;
    in_space.phi = phi;
    in_space.q = q;
    in_space.balls = cp.balls;
    SpaceSpec out_space = in_space;
    out_space.kind = SpaceSpec::Kind::campanato_star;

    OpKind kind = OpKind::g;
    if (id == SuiteId::t4_2 || id == SuiteId::sa_q1) kind = OpKind::s;
    if (needs_gstar) kind = OpKind::gstar;

    auto maker = [&, kind]() {
        return boundedness_rows(op_label(kind, lambda),
                                [&](const GridFunction& f) { return bundle.apply(kind, f); },
                                in_space, out_space, cp.corpus);
    };
    return assemble(id, cp.corpus, std::move(hyp), {{kind, maker}});
}

}  // namespace

SuiteResult run_suite(SuiteId id, const SuiteConfig& cfg) {
    switch (id) {
        case SuiteId::pro_vz: return run_modular_suite(id, cfg);
        case SuiteId::t2_1:
        case SuiteId::t2_1v:
        case SuiteId::cor_g:
        case SuiteId::t2_3:
        case SuiteId::t2_2:
        case SuiteId::pro_bg:
        case SuiteId::t2_4: return run_morrey_suite(id, cfg);
        case SuiteId::t3_1:
        case SuiteId::t3_1v:
        case SuiteId::cor_g2:
        case SuiteId::t3_2:
        case SuiteId::t3_3:
        case SuiteId::t3_4: return run_orlicz_suite(id, cfg);
        case SuiteId::t4_1:
        case SuiteId::cor_gBMO:
        case SuiteId::t4_2:
        case SuiteId::sa_q1:
        case SuiteId::t4_3:
        case SuiteId::ga_q1: return run_campanato_suite(id, cfg);
    }
    throw std::runtime_error("unknown suite id");
}

TailCheckResult lemma_tail_check(const GridFunction& f, const BallFamily& chain, double beta_exp,
                                 const GrowthFunction& phi, double q, const BallFamily& norm_balls) {
    if (!(beta_exp > 0.0)) throw std::runtime_error("tail check: beta must be positive");
    const Grid& g = f.grid();
    double norm = campanato_norm(f, phi, q, norm_balls);
    if (norm == 0.0) throw std::runtime_error("tail check: zero Campanato norm");
    double hn = g.cell_measure();
    int n = g.dim();
    TailCheckResult res;
    double lo = std::numeric_limits<double>::infinity();
    for (const Ball& b : chain.balls) {
        double r = b.radius;
        double fB = mean_on_ball(f, b);
        double chi = chi_ball_norm(phi, g, b);
        double measure = ball_measure(g, b);
        double integral = 0.0;
        for (long i = 0; i < g.size(); ++i) {
            double d = dist(g.coord(i), b.center, n);
            integral += std::abs(f[i] - fB) /
                        (std::pow(r, n + beta_exp) + std::pow(d, n + beta_exp));
        }
        integral *= hn;
        // zero extension outside the box: |f - f_B| = |f_B| there; bound the
        // remainder by the radial tail beyond the distance to the boundary
        Pt lo_c = g.lower(), hi_c = g.upper();
        double r0 = std::min(std::min(b.center[0] - lo_c[0], hi_c[0] - b.center[0]), g.diameter());
        if (n == 2)
            r0 = std::min(r0, std::min(b.center[1] - lo_c[1], hi_c[1] - b.center[1]));
        r0 = std::max(r0, r);
        double angular = (n == 1) ? 2.0 : 2.0 * 3.14159265358979323846;
        double tail = std::abs(fB) * angular * std::pow(r0, -beta_exp) / beta_exp;
        double lhs = std::pow(r, beta_exp) * measure / chi * (integral + tail);
        double c = lhs / norm;
        res.per_ball.push_back({r, c});
        res.max_constant = std::max(res.max_constant, c);
        lo = std::min(lo, c);
    }
    res.spread = lo > 0.0 ? res.max_constant / lo : std::numeric_limits<double>::infinity();
    return res;
}

void write_suite_reports(const std::vector<SuiteResult>& results, const std::string& outdir) {
    namespace fs = std::filesystem;
    fs::create_directories(outdir);
    std::ofstream summary(fs::path(outdir) / "summary.csv");
    summary << "suite,corpus_hash,max_ratio,pass\n";
    for (const auto& res : results) {
        std::ofstream ratios(fs::path(outdir) / (res.name + "_ratios.csv"));
        ratios << "suite,function,norm_in,norm_out,ratio,pass\n";
        if (res.skipped) {
            ratios << res.name << ",,,,," << "skipped_hypothesis\n";
        } else {
            for (const auto& r : res.rows)
                ratios << res.name << ',' << r.op << ':' << r.fname << ',' << fmt17(r.norm_in)
                       << ',' << fmt17(r.norm_out) << ',' << fmt17(r.ratio) << ',' << r.status
                       << '\n';
        }
        std::ofstream hyp(fs::path(outdir) / (res.name + "_hypotheses.csv"));
        hyp << "check,param,fitted_constant,pass\n";
        for (const auto& h : res.hypotheses)
            hyp << h.check << ',' << h.param << ',' << fmt17(h.fitted) << ','
                << (h.pass ? "1" : "0") << '\n';
        summary << res.name << ',' << res.corpus_hash << ',' << fmt17(res.max_ratio) << ','
                << (res.skipped ? "skipped_hypothesis" : (res.pass ? "1" : "0")) << '\n';
    }
}

}  // namespace ilp
