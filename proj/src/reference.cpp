#include "ilp/reference.hpp"

#include <cmath>

namespace ilp::ref {

Field a_alpha_field(const GridFunction& f, const HalfSpaceGrid& hs, const AlphaEvaluator& ev,
                    const std::function<double(const Pt&)>* mult) {
    const Grid& g = hs.base();
    Field field(hs.levels().size(), std::vector<double>(g.size()));
    for (size_t k = 0; k < hs.levels().size(); ++k)
        for (long i = 0; i < g.size(); ++i)
            field[k][i] = ev.value(f, g.coord(i), hs.levels()[k], mult);
    return field;
}

GridFunction s_alpha_beta_from_field(const Field& field, const HalfSpaceGrid& hs, double beta) {
    const Grid& g = hs.base();
    double hn = g.cell_measure();
    std::vector<double> out(g.size(), 0.0);
    for (long xi = 0; xi < g.size(); ++xi) {
        Pt x = g.coord(xi);
        double acc = 0.0;
        for (size_t k = 0; k < hs.levels().size(); ++k) {
            double t = hs.levels()[k];
            double tpow = (g.dim() == 1) ? t * t : t * t * t;
            double level = 0.0;
            for (long yi = 0; yi < g.size(); ++yi)
                if (dist(g.coord(yi), x, g.dim()) < beta * t)
                    level += field[k][yi] * field[k][yi];
            acc += level * hn * hs.level_width(k) / tpow;
        }
        out[xi] = std::sqrt(acc);
    }
    return GridFunction(g, std::move(out));
}

GridFunction g_star_from_field(const Field& field, const HalfSpaceGrid& hs, double lambda,
                               double weight_floor) {
    const Grid& g = hs.base();
    double hn = g.cell_measure();
    double ln = lambda * g.dim();
    std::vector<double> out(g.size(), 0.0);
    for (long xi = 0; xi < g.size(); ++xi) {
        Pt x = g.coord(xi);
        double acc = 0.0;
        for (size_t k = 0; k < hs.levels().size(); ++k) {
            double t = hs.levels()[k];
            double tpow = (g.dim() == 1) ? t * t : t * t * t;
            double level = 0.0;
            for (long yi = 0; yi < g.size(); ++yi) {
                double w = std::pow(t / (t + dist(g.coord(yi), x, g.dim())), ln);
                if (w < weight_floor) continue;
                level += w * field[k][yi] * field[k][yi];
            }
            acc += level * hn * hs.level_width(k) / tpow;
        }
        out[xi] = std::sqrt(acc);
    }
    return GridFunction(g, std::move(out));
}

double morrey_norm(const GridFunction& f, const GrowthFunction& phi, const OuterFunction& outer,
                   const BallFamily& balls) {
    double best = 0.0;
    for (const Ball& b : balls.balls) {
        double phiB1 = phi.over_ball(f.grid(), b, 1.0);
        double v = outer.at(b.center, phiB1) * luxembourg_norm_ball(f, phi, b);
        best = std::max(best, v);
    }
    return best;
}

}  // namespace ilp::ref
