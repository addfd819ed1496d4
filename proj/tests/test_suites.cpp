#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "ilp/suites.hpp"

using namespace ilp;

namespace {

SuiteConfig small_config() {
    SuiteConfig cfg;
    cfg.grid = Grid::line(-1.0, 1.0, 65);
    cfg.kernel_m = 21;
    cfg.dict_size = 48;
    return cfg;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("suite ids round trip") {
    for (SuiteId id : all_suites()) {
        auto back = parse_suite(suite_name(id));
        REQUIRE(back.has_value());
        CHECK(*back == id);
    }
    CHECK(!parse_suite("nope").has_value());
}

TEST_CASE("morrey suite runs, skips constants, finite ratios") {
    SuiteResult res = run_suite(SuiteId::t2_1, small_config());
    CHECK(res.hypotheses_pass);
    CHECK(!res.skipped);
    CHECK(res.pass);
    CHECK(res.max_ratio > 0.0);
    bool saw_const = false;
    for (const auto& row : res.rows) {
        if (row.fname == "const_one") {
            CHECK(row.status == "skipped_constant");
            saw_const = true;
        } else {
            CHECK(row.status == "ok");
            CHECK(std::isfinite(row.ratio));
        }
    }
    CHECK(saw_const);
}

TEST_CASE("suite results are deterministic across runs") {
    SuiteResult a = run_suite(SuiteId::cor_g, small_config());
    SuiteResult b = run_suite(SuiteId::cor_g, small_config());
    REQUIRE(a.rows.size() == b.rows.size());
    for (size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].norm_in == b.rows[i].norm_in);    // bit-exact
        CHECK(a.rows[i].norm_out == b.rows[i].norm_out);
    }
    CHECK(a.corpus_hash == b.corpus_hash);
}

TEST_CASE("hypothesis failure skips the suite and is reported") {
    SuiteConfig cfg = small_config();
    cfg.lambda = 2.0;  // below the g* threshold min{max{3,p1}, 3+2a/n} = 3
    SuiteResult res = run_suite(SuiteId::t2_3, cfg);
    CHECK(!res.hypotheses_pass);
    CHECK(res.skipped);
    CHECK(res.rows.empty());
    bool found = false;
    for (const auto& h : res.hypotheses)
        if (h.check == "lambda_threshold") {
            CHECK(!h.pass);
            found = true;
        }
    CHECK(found);
}

TEST_CASE("lambda threshold arithmetic") {
    // alpha=1, n=1, p1=2: min{max{3,2}, 3+2} = 3, so lambda=4 passes
    SuiteConfig cfg = small_config();
    cfg.lambda = 4.0;
    SuiteResult res = run_suite(SuiteId::t2_3, cfg);
    CHECK(res.hypotheses_pass);
}

TEST_CASE("modular suite (L^phi level)") {
    SuiteResult res = run_suite(SuiteId::pro_vz, small_config());
    CHECK(res.hypotheses_pass);
    CHECK(res.pass);
    // two operators per member
    int s_rows = 0, g_rows = 0;
    for (const auto& row : res.rows) {
        if (row.op.rfind("S_alpha", 0) == 0) ++s_rows;
        if (row.op.rfind("g_star", 0) == 0) ++g_rows;
    }
    CHECK(s_rows == g_rows);
    CHECK(s_rows > 0);
}

TEST_CASE("orlicz and campanato suites run on the small grid") {
    SuiteConfig cfg = small_config();
    for (SuiteId id : {SuiteId::t3_1, SuiteId::t3_2, SuiteId::t4_1, SuiteId::t4_2, SuiteId::t4_3,
                       SuiteId::sa_q1}) {
        SuiteResult res = run_suite(id, cfg);
        CHECK(res.hypotheses_pass);
        CHECK(res.pass);
        CHECK(std::isfinite(res.max_ratio));
    }
}

TEST_CASE("campanato suite: shifting f leaves both norms unchanged") {
    SuiteConfig cfg = small_config();
    Grid g = cfg.grid;
    auto phi = GrowthFunction::power(1.0);
    BallFamily balls = BallFamily::dyadic(g, 4);
    GridFunction f(g, [](Pt p) { return std::sin(3 * p[0]); });
    GridFunction fc(g, [](Pt p) { return std::sin(3 * p[0]) + 4.0; });
    CHECK(campanato_norm(f, phi, 2.0, balls) ==
          doctest::Approx(campanato_norm(fc, phi, 2.0, balls)).epsilon(1e-9));
    CHECK(campanato_star_norm(f, phi, 2.0, balls) ==
          doctest::Approx(campanato_star_norm(fc, phi, 2.0, balls)).epsilon(1e-9));
}

TEST_CASE("g* ratio rows do not increase with lambda") {
    SuiteConfig cfg = small_config();
    cfg.lambda = 4.0;
    SuiteResult r4 = run_suite(SuiteId::t2_3, cfg);
    cfg.lambda = 6.0;
    SuiteResult r6 = run_suite(SuiteId::t2_3, cfg);
    REQUIRE(r4.rows.size() == r6.rows.size());
    for (size_t i = 0; i < r4.rows.size(); ++i) {
        if (r4.rows[i].status != "ok") continue;
        CHECK(r6.rows[i].ratio <= r4.rows[i].ratio * (1.0 + 1e-9));
    }
}

TEST_CASE("lemma tail check: zero for constants, finite and stable for linear") {
    Grid g = Grid::line(-1.0, 1.0, 129);
    auto phi = GrowthFunction::power(1.0);
    BallFamily norm_balls = BallFamily::dyadic(g, 4);
    BallFamily chain = BallFamily::dyadic_at(Pt{0.0, 0.0}, 4.0 * g.spacing(), 0.5);

    GridFunction lin(g, [](Pt p) { return p[0]; });
    TailCheckResult res = lemma_tail_check(lin, chain, 0.5, phi, 1.0, norm_balls);
    CHECK(std::isfinite(res.max_constant));
    CHECK(res.max_constant > 0.0);
    CHECK(res.spread <= 10.0);

    // constant f has zero oscillation everywhere: the norm is 0 and the
    // check refuses the 0/0 ratio
    GridFunction c(g, [](Pt) { return 3.0; });
    CHECK_THROWS(lemma_tail_check(c, chain, 0.5, phi, 1.0, norm_balls));
}

TEST_CASE("lemma tail LHS against a fine-grid oracle for the linear symbol") {
    auto run = [](int n) {
        Grid g = Grid::line(-1.0, 1.0, n);
        GridFunction lin(g, [](Pt p) { return p[0]; });
        auto phi = GrowthFunction::power(1.0);
        BallFamily chain{{Ball{Pt{0.0, 0.0}, 0.25}}};
        return lemma_tail_check(lin, chain, 0.5, phi, 1.0, BallFamily::dyadic(g, 4))
            .max_constant;
    };
    double coarse = run(257), fine = run(1025);
    CHECK(coarse == doctest::Approx(fine).epsilon(0.02));
}

TEST_CASE("report files carry the pinned format") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "ilp_report_test";
    fs::remove_all(dir);
    SuiteConfig cfg = small_config();
    std::vector<SuiteResult> results;
    results.push_back(run_suite(SuiteId::t2_1, cfg));
    cfg.lambda = 2.0;
    results.push_back(run_suite(SuiteId::t2_3, cfg));  // skipped
    write_suite_reports(results, dir.string());

    std::string ratios = slurp(dir / "t2.1_ratios.csv");
    CHECK(ratios.rfind("suite,function,norm_in,norm_out,ratio,pass\n", 0) == 0);
    CHECK(ratios.find("skipped_constant") != std::string::npos);
    std::string skipped = slurp(dir / "t2.3_ratios.csv");
    CHECK(skipped.find("skipped_hypothesis") != std::string::npos);
    std::string hyp = slurp(dir / "t2.1_hypotheses.csv");
    CHECK(hyp.rfind("check,param,fitted_constant,pass\n", 0) == 0);
    std::string summary = slurp(dir / "summary.csv");
    CHECK(summary.rfind("suite,corpus_hash,max_ratio,pass\n", 0) == 0);

    // summary max-ratio equals the max of the ok rows, printed at 17 digits
    std::string want = fmt17(results[0].max_ratio);
    CHECK(summary.find(want) != std::string::npos);

    // re-run emission is byte identical
    fs::path dir2 = fs::temp_directory_path() / "ilp_report_test2";
    fs::remove_all(dir2);
    write_suite_reports(results, dir2.string());
    CHECK(slurp(dir / "summary.csv") == slurp(dir2 / "summary.csv"));
    CHECK(slurp(dir / "t2.1_ratios.csv") == slurp(dir2 / "t2.1_ratios.csv"));
}

TEST_CASE("empty corpus emits a header-only ratio table") {
    Corpus corpus;
    corpus.hash_hex = "empty";
    Grid g = Grid::line(-1.0, 1.0, 33);
    SpaceSpec spec;
    spec.kind = SpaceSpec::Kind::bmo;
    spec.balls = BallFamily::dyadic(g, 8);
    auto rows = boundedness_rows("id", [](const GridFunction& f) { return f; }, spec, spec, corpus);
    CHECK(rows.empty());
    SuiteResult res;
    res.id = SuiteId::t2_1;
    res.name = "t2.1";
    res.corpus_hash = corpus.hash_hex;
    res.hypotheses_pass = true;
    res.pass = true;
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "ilp_empty_report";
    fs::remove_all(dir);
    write_suite_reports({res}, dir.string());
    CHECK(slurp(dir / "t2.1_ratios.csv") == "suite,function,norm_in,norm_out,ratio,pass\n");
}

TEST_CASE("corpus stability: rescaled copies move the max ratio by at most 25 percent") {
    // scale-covariant spec (power family, power outer): dilating members must
    // not move the suite's max ratio much
    Grid g = Grid::line(-1.0, 1.0, 129);
    HalfSpaceGrid hs = HalfSpaceGrid::geometric(g);
    AlphaEvaluator ev(1, 1.0, EvalMode::dictionary, 21, 64);
    auto phi = GrowthFunction::power(2.0);
    OuterFunction outer = OuterFunction::power(0.25);
    BallFamily balls = BallFamily::dyadic(g, 4);
    SpaceSpec space;
    space.kind = SpaceSpec::Kind::musielak_morrey;
    space.phi = phi;
    space.outer = outer;
    space.balls = balls;

    Corpus base = Corpus::standard(g);
    Corpus doubled = base;
    for (const auto& m : base.members) {
        if (m.name == "const_one") continue;
        const GridFunction& f = m.f;
        doubled.members.push_back(
            {m.name + "_x2", GridFunction(g, [&](Pt p) { return f.interpolate(Pt{2 * p[0], 0}); })});
    }
    auto T = [&](const GridFunction& f) { return s_alpha(f, hs, ev); };
    auto max_ratio = [&](const Corpus& c) {
        double r = 0.0;
        for (const auto& row : boundedness_rows("S", T, space, space, c))
            if (row.status == "ok") r = std::max(r, row.ratio);
        return r;
    };
    double a = max_ratio(base), b = max_ratio(doubled);
    CHECK(std::abs(b - a) <= 0.25 * a);
}

TEST_CASE("boundedness_rows flags the impossible zero-in nonzero-out case") {
    Grid g = Grid::line(-1.0, 1.0, 33);
    Corpus corpus;
    corpus.members.push_back({"weird", GridFunction(g, [](Pt p) { return p[0]; })});
    corpus.hash_hex = "x";
    SpaceSpec in_space;
    in_space.kind = SpaceSpec::Kind::bmo;
    in_space.balls = BallFamily::dyadic(g, 8);
    SpaceSpec out_space = in_space;
    // operator that fabricates output from nothing; paired with an input
    // space that sees f = x as nonzero, rows stay ok
    auto rows = boundedness_rows("id", [&](const GridFunction& f) { return f; }, in_space,
                                 out_space, corpus);
    CHECK(rows[0].status == "ok");
}
