#pragma once

#include "ilp/corpus.hpp"
#include "ilp/intrinsic.hpp"
#include "ilp/norms.hpp"

namespace ilp {

// Empirical boundedness suites. Each id wires one conclusion: an operator, an
// input space, an output space and a hypothesis checklist; the ratio table
// reports ||Tf|| / ||f|| over the corpus.
enum class SuiteId {
    pro_vz,
    t2_1,
    t2_1v,
    cor_g,
    t2_3,
    t2_2,
    pro_bg,
    t2_4,
    t3_1,
    t3_1v,
    cor_g2,
    t3_2,
    t3_3,
    t3_4,
    t4_1,
    cor_gBMO,
    t4_2,
    sa_q1,
    t4_3,
    ga_q1,
};

std::string suite_name(SuiteId id);
std::optional<SuiteId> parse_suite(const std::string& name);
const std::vector<SuiteId>& all_suites();

struct SuiteConfig {
    Grid grid = Grid::line(-1.0, 1.0, 129);
    unsigned seed = 12345u;
    EvalMode mode = EvalMode::dictionary;
    int kernel_m = 0;  // 0: per-dimension default
    int dict_size = 128;
    double alpha = 1.0;
    double lambda = 4.0;            // g* suites in the Morrey/Orlicz sections
    double lambda_campanato = 6.0;  // g* suites in the Campanato section
    double q = 2.0;
    double hyp_cap = 1e6;  // fitted-constant cap for pass/fail
    int ball_stride = 4;
    std::optional<BallFamily> balls;  // default: dyadic family of `grid`
    // suite families; the outer scaling functions stay per-suite canonical
    GrowthFunction phi = GrowthFunction::power(2.0);           // Morrey sections
    YoungFunction Phi = YoungFunction::power(2.0);             // Orlicz section
    GrowthFunction campanato_phi = GrowthFunction::power(1.0); // Campanato section
    std::function<double(const Pt&)> weight = nullptr;  // section-3 weight, default 1
};

struct HypothesisResult {
    std::string check;
    std::string param;
    double fitted = 0.0;
    bool pass = false;
};

struct RatioRow {
    std::string op;
    std::string fname;
    double norm_in = 0.0;
    double norm_out = 0.0;
    double ratio = 0.0;
    std::string status;  // ok | skipped_constant | violation
};

struct SuiteResult {
    SuiteId id;
    std::string name;
    std::string corpus_hash;
    std::vector<HypothesisResult> hypotheses;
    bool hypotheses_pass = false;
    std::vector<RatioRow> rows;
    double max_ratio = 0.0;
    bool skipped = false;  // hypotheses failed; rows empty
    bool pass = false;     // every row finite and non-violating
};

SuiteResult run_suite(SuiteId id, const SuiteConfig& cfg);

// ratio table for an arbitrary operator between two spaces
std::vector<RatioRow> boundedness_rows(const std::string& op_label,
                                       const std::function<GridFunction(const GridFunction&)>& T,
                                       const SpaceSpec& in_space, const SpaceSpec& out_space,
                                       const Corpus& corpus);

// modular form: ratio of int phi(x,|Tf|) to int phi(x,|f|)
std::vector<RatioRow> modular_rows(const std::string& op_label,
                                   const std::function<GridFunction(const GridFunction&)>& T,
                                   const GrowthFunction& phi, const Corpus& corpus);

// Tail estimate: (r^beta |B| / ||chi_B||) * int |f - f_B| / (r^{n+beta} + |y-x0|^{n+beta}) dy,
// domain-truncated with an analytic bound for the remainder, divided by the
// Campanato norm of f.
struct TailCheckRow {
    double radius;
    double constant;
};
struct TailCheckResult {
    std::vector<TailCheckRow> per_ball;
    double max_constant = 0.0;
    double spread = 0.0;  // max/min over the chain
};
TailCheckResult lemma_tail_check(const GridFunction& f, const BallFamily& chain, double beta_exp,
                                 const GrowthFunction& phi, double q, const BallFamily& norm_balls);

// CSV emission; one ratios file and one hypotheses file per suite plus a
// summary. All numbers carry 17 significant digits.
void write_suite_reports(const std::vector<SuiteResult>& results, const std::string& outdir);

}  // namespace ilp
