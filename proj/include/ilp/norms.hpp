#pragma once

#include <optional>

#include "ilp/growth.hpp"

namespace ilp {

// inf { mu > 0 : modular(mu) <= 1 } for a continuous strictly decreasing
// modular. Bisection; bracket [1e-12, 1e12] * scale. Throws
// "luxembourg bracket" when the bracket does not straddle 1.
double modular_root(const std::function<double(double)>& modular, double scale);

// ||f||_{phi,B}: modular (1/phi(B,1)) int_B phi(x,|f|/mu) dx
double luxembourg_norm_ball(const GridFunction& f, const GrowthFunction& phi, const Ball& b);

// ||g||_{~psi,B}: modular (1/phi(B,1)) int_B ~psi(x,|g|/mu) phi(x,1) dx,
// where ~psi is the complementary of psi = phi/phi(.,1)
double complementary_norm_ball(const GridFunction& g, const GrowthFunction& phi, const Ball& b);

// global Luxembourg norm: int_domain phi(x,|f|/mu) dx = 1
double luxembourg_norm_global(const GridFunction& f, const GrowthFunction& phi);

// ||chi_B||: root of int_B phi(x,1/mu) dx = 1
double chi_ball_norm(const GrowthFunction& phi, const Grid& g, const Ball& b);

struct BallNormRow {
    Ball ball;
    double value;
};
struct SpaceNormResult {
    std::vector<BallNormRow> rows;
    double total;  // max over the family
};

double classical_morrey_norm(const GridFunction& f, double p, double kappa, const BallFamily& balls);
SpaceNormResult classical_morrey_rows(const GridFunction& f, double p, double kappa,
                                      const BallFamily& balls);

SpaceNormResult morrey_norm_rows(const GridFunction& f, const GrowthFunction& phi,
                                 const OuterFunction& outer, const BallFamily& balls);
double morrey_norm(const GridFunction& f, const GrowthFunction& phi, const OuterFunction& outer,
                   const BallFamily& balls);

SpaceNormResult weighted_orlicz_morrey_rows(const GridFunction& f, const YoungFunction& Phi,
                                            const Weight& w, const OuterFunction& outer,
                                            const BallFamily& balls);
double weighted_orlicz_morrey_norm(const GridFunction& f, const YoungFunction& Phi, const Weight& w,
                                   const OuterFunction& outer, const BallFamily& balls);

SpaceNormResult campanato_rows(const GridFunction& f, const GrowthFunction& phi, double q,
                               const BallFamily& balls, bool star);
double campanato_norm(const GridFunction& f, const GrowthFunction& phi, double q,
                      const BallFamily& balls);
double campanato_star_norm(const GridFunction& f, const GrowthFunction& phi, double q,
                           const BallFamily& balls);

SpaceNormResult bmo_rows(const GridFunction& b, const BallFamily& balls);
double bmo_norm(const GridFunction& b, const BallFamily& balls);

// [(1/phi(B,1)) int_B |f||g| phi(x,1) dx] / (||f||_{phi,B} ||g||_{~psi,B});
// bounded by 2 up to solver tolerance.
double generalized_holder_check(const GridFunction& f, const GridFunction& g,
                                const GrowthFunction& phi, const Ball& b);

// One space specification for the CLI and the verification suites.
struct SpaceSpec {
    enum class Kind {
        musielak_morrey,
        weighted_orlicz_morrey,
        campanato,
        campanato_star,
        bmo,
        classical_morrey,
        l_phi
    };
    Kind kind;
    std::optional<GrowthFunction> phi;
    std::optional<YoungFunction> Phi;
    std::optional<Weight> w;
    OuterFunction outer = OuterFunction::constant();
    double p = 2.0;
    double kappa = 0.0;
    double q = 1.0;
    BallFamily balls;
};

SpaceNormResult space_norm_rows(const GridFunction& f, const SpaceSpec& spec);
double space_norm(const GridFunction& f, const SpaceSpec& spec);

}  // namespace ilp
