#include "ilp/norms.hpp"

#include <algorithm>
#include <cmath>

namespace ilp {

namespace {

struct BallPoints {
    std::vector<long> idx;
    std::vector<Pt> pts;
};

BallPoints collect(const Grid& g, const Ball& b) {
    BallPoints bp;
    for_each_point_in_ball(g, b, [&](long i, const Pt& p) {
        bp.idx.push_back(i);
        bp.pts.push_back(p);
    });
    if (bp.idx.empty()) throw std::runtime_error("ball off grid");
    return bp;
}

// Inside a gauge modular a divergent Legendre transform just means the
// candidate mu is too small; the bisection handles +inf.
double complementary_or_inf(const GrowthFunction& psi, const Pt& x, double s) {
    try {
        return complementary_value(psi, x, s);
    } catch (const std::runtime_error&) {
        return std::numeric_limits<double>::infinity();
    }
}

}  // namespace

double modular_root(const std::function<double(double)>& modular, double scale) {
    const double floor_mu = 1e-12 * scale, cap_mu = 1e12 * scale;
    auto above = [&](double mu) {
        double v = modular(mu);
        return !(v <= 1.0);  // treat overflow/NaN as "too small mu"
    };
    // localize geometrically from the natural scale before bisecting; the
    // outer bracket stays [1e-12, 1e12] * scale
    double lo, hi;
    if (above(scale)) {
        lo = scale;
        hi = 16.0 * scale;
        while (hi < cap_mu && above(hi)) {
            lo = hi;
            hi *= 16.0;
        }
        if (hi >= cap_mu && above(cap_mu)) throw std::runtime_error("luxembourg bracket");
        hi = std::min(hi, cap_mu);
    } else {
        hi = scale;
        lo = scale / 16.0;
        while (lo > floor_mu && !above(lo)) {
            hi = lo;
            lo /= 16.0;
        }
        if (lo <= floor_mu && !above(floor_mu)) {
            // modular below 1 at the smallest end: the infimum sits under the
            // resolvable range, which valid families never hit
            throw std::runtime_error("luxembourg bracket");
        }
        lo = std::max(lo, floor_mu);
    }
    for (int it = 0; it < 200 && (hi - lo) > std::max(1e-12 * scale, 1e-8 * hi); ++it) {
        double mid = 0.5 * (lo + hi);
        (above(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double luxembourg_norm_ball(const GridFunction& f, const GrowthFunction& phi, const Ball& b) {
    const Grid& g = f.grid();
    auto bp = collect(g, b);
    double fmax = 0.0;
    for (long i : bp.idx) fmax = std::max(fmax, std::abs(f[i]));
    if (fmax == 0.0) return 0.0;
    double hn = g.cell_measure();
    double norm_phi = 0.0;
    for (const Pt& p : bp.pts) norm_phi += phi(p, 1.0);
    norm_phi *= hn;
    long n = static_cast<long>(bp.idx.size());
    auto modular = [&](double mu) {
        double s = parallel_sum(n, [&](long k) { return phi(bp.pts[k], std::abs(f[bp.idx[k]]) / mu); });
        return s * hn / norm_phi;
    };
    return modular_root(modular, fmax);
}

double complementary_norm_ball(const GridFunction& g_fn, const GrowthFunction& phi, const Ball& b) {
    const Grid& g = g_fn.grid();
    auto bp = collect(g, b);
    double gmax = 0.0;
    for (long i : bp.idx) gmax = std::max(gmax, std::abs(g_fn[i]));
    if (gmax == 0.0) return 0.0;
    double hn = g.cell_measure();
    long n = static_cast<long>(bp.idx.size());
    std::vector<double> phi1(n);
    double norm_phi = 0.0;
    for (long k = 0; k < n; ++k) {
        phi1[k] = phi(bp.pts[k], 1.0);
        norm_phi += phi1[k];
    }
    norm_phi *= hn;
    GrowthFunction psi = normalized_psi(phi);
    auto modular = [&](double mu) {
        double s = parallel_sum(
            n,
            [&](long k) {
                return complementary_or_inf(psi, bp.pts[k], std::abs(g_fn[bp.idx[k]]) / mu) *
                       phi1[k];
            },
            8);
        return s * hn / norm_phi;
    };
    return modular_root(modular, gmax);
}

double luxembourg_norm_global(const GridFunction& f, const GrowthFunction& phi) {
    const Grid& g = f.grid();
    double fmax = f.max_abs();
    if (fmax == 0.0) return 0.0;
    double hn = g.cell_measure();
    long n = g.size();
    auto modular = [&](double mu) {
        double s = parallel_sum(n, [&](long i) {
            double v = std::abs(f[i]);
            return v == 0.0 ? 0.0 : phi(g.coord(i), v / mu);
        });
        return s * hn;
    };
    return modular_root(modular, fmax);
}

double chi_ball_norm(const GrowthFunction& phi, const Grid& g, const Ball& b) {
    auto bp = collect(g, b);
    double hn = g.cell_measure();
    long n = static_cast<long>(bp.idx.size());
    auto modular = [&](double mu) {
        double s = 0.0;
        for (long k = 0; k < n; ++k) s += phi(bp.pts[k], 1.0 / mu);
        return s * hn;
    };
    return modular_root(modular, 1.0);
}

SpaceNormResult classical_morrey_rows(const GridFunction& f, double p, double kappa,
                                      const BallFamily& balls) {
    if (!(p >= 1.0)) throw std::runtime_error("classical morrey: p must be >= 1");
    SpaceNormResult res;
    res.rows.resize(balls.balls.size());
    const Grid& g = f.grid();
    long nb = static_cast<long>(balls.balls.size());
#pragma omp parallel for schedule(static)
    for (long bi = 0; bi < nb; ++bi) {
        const Ball& b = balls.balls[bi];
        double m = ball_measure(g, b);
        double s = 0.0;
        for_each_point_in_ball(g, b, [&](long i, const Pt&) { s += std::pow(std::abs(f[i]), p); });
        s *= g.cell_measure();
        res.rows[bi] = {b, std::pow(s / std::pow(m, kappa), 1.0 / p)};
    }
    res.total = 0.0;
    for (auto& r : res.rows) res.total = std::max(res.total, r.value);
    return res;
}

double classical_morrey_norm(const GridFunction& f, double p, double kappa,
                             const BallFamily& balls) {
    return classical_morrey_rows(f, p, kappa, balls).total;
}

SpaceNormResult morrey_norm_rows(const GridFunction& f, const GrowthFunction& phi,
                                 const OuterFunction& outer, const BallFamily& balls) {
    SpaceNormResult res;
    res.rows.resize(balls.balls.size());
    const Grid& g = f.grid();
    long nb = static_cast<long>(balls.balls.size());
#pragma omp parallel for schedule(dynamic)
    for (long bi = 0; bi < nb; ++bi) {
        const Ball& b = balls.balls[bi];
        double phiB1 = phi.over_ball(g, b, 1.0);
        double v = outer.at(b.center, phiB1) * luxembourg_norm_ball(f, phi, b);
        res.rows[bi] = {b, v};
    }
    res.total = 0.0;
    for (auto& r : res.rows) res.total = std::max(res.total, r.value);
    return res;
}

double morrey_norm(const GridFunction& f, const GrowthFunction& phi, const OuterFunction& outer,
                   const BallFamily& balls) {
    return morrey_norm_rows(f, phi, outer, balls).total;
}

SpaceNormResult weighted_orlicz_morrey_rows(const GridFunction& f, const YoungFunction& Phi,
                                            const Weight& w, const OuterFunction& outer,
                                            const BallFamily& balls) {
    if (!f.grid().same_layout(w.w.grid()))
        throw std::runtime_error("weighted norm: weight grid mismatch");
    SpaceNormResult res;
    res.rows.resize(balls.balls.size());
    const Grid& g = f.grid();
    double hn = g.cell_measure();
    long nb = static_cast<long>(balls.balls.size());
#pragma omp parallel for schedule(dynamic)
    for (long bi = 0; bi < nb; ++bi) {
        const Ball& b = balls.balls[bi];
        auto bp = collect(g, b);
        double wB = 0.0, fmax = 0.0;
        for (long i : bp.idx) {
            wB += w.w[i];
            fmax = std::max(fmax, std::abs(f[i]));
        }
        wB *= hn;
        if (fmax == 0.0) {
            res.rows[bi] = {b, 0.0};
            continue;
        }
        double normalizer = wB * outer.at(b.center, wB);
        auto modular = [&](double mu) {
            double s = 0.0;
            for (long i : bp.idx) s += Phi(std::abs(f[i]) / mu) * w.w[i];
            return s * hn / normalizer;
        };
        res.rows[bi] = {b, modular_root(modular, fmax)};
    }
    res.total = 0.0;
    for (auto& r : res.rows) res.total = std::max(res.total, r.value);
    return res;
}

double weighted_orlicz_morrey_norm(const GridFunction& f, const YoungFunction& Phi, const Weight& w,
                                   const OuterFunction& outer, const BallFamily& balls) {
    return weighted_orlicz_morrey_rows(f, Phi, w, outer, balls).total;
}

SpaceNormResult campanato_rows(const GridFunction& f, const GrowthFunction& phi, double q,
                               const BallFamily& balls, bool star) {
    if (!(q >= 1.0)) throw std::runtime_error("campanato: q must be >= 1");
    SpaceNormResult res;
    res.rows.resize(balls.balls.size());
    const Grid& g = f.grid();
    double hn = g.cell_measure();
    long nb = static_cast<long>(balls.balls.size());
#pragma omp parallel for schedule(dynamic)
    for (long bi = 0; bi < nb; ++bi) {
        const Ball& b = balls.balls[bi];
        auto bp = collect(g, b);
        double chi = chi_ball_norm(phi, g, b);
        double u = 1.0 / chi;
        double center = star ? ess_inf_on_ball(f, b) : mean_on_ball(f, b);
        double s = 0.0;
        for (size_t k = 0; k < bp.idx.size(); ++k) {
            double osc = star ? (f[bp.idx[k]] - center) : std::abs(f[bp.idx[k]] - center);
            double pw = phi(bp.pts[k], u);
            s += std::pow(osc / pw, q) * pw;
        }
        s *= hn;
        res.rows[bi] = {b, std::pow(s, 1.0 / q) / chi};
    }
    res.total = 0.0;
    for (auto& r : res.rows) res.total = std::max(res.total, r.value);
    return res;
}

double campanato_norm(const GridFunction& f, const GrowthFunction& phi, double q,
                      const BallFamily& balls) {
    return campanato_rows(f, phi, q, balls, false).total;
}

double campanato_star_norm(const GridFunction& f, const GrowthFunction& phi, double q,
                           const BallFamily& balls) {
    return campanato_rows(f, phi, q, balls, true).total;
}

SpaceNormResult bmo_rows(const GridFunction& b_fn, const BallFamily& balls) {
    SpaceNormResult res;
    res.rows.resize(balls.balls.size());
    const Grid& g = b_fn.grid();
    long nb = static_cast<long>(balls.balls.size());
#pragma omp parallel for schedule(static)
    for (long bi = 0; bi < nb; ++bi) {
        const Ball& b = balls.balls[bi];
        double mean = mean_on_ball(b_fn, b);
        double s = 0.0;
        for_each_point_in_ball(g, b, [&](long i, const Pt&) { s += std::abs(b_fn[i] - mean); });
        s *= g.cell_measure();
        res.rows[bi] = {b, s / ball_measure(g, b)};
    }
    res.total = 0.0;
    for (auto& r : res.rows) res.total = std::max(res.total, r.value);
    return res;
}

double bmo_norm(const GridFunction& b, const BallFamily& balls) { return bmo_rows(b, balls).total; }

double generalized_holder_check(const GridFunction& f, const GridFunction& g_fn,
                                const GrowthFunction& phi, const Ball& b) {
    const Grid& g = f.grid();
    auto bp = collect(g, b);
    double hn = g.cell_measure();
    double norm_phi = 0.0, num = 0.0;
    for (size_t k = 0; k < bp.idx.size(); ++k) {
        double p1 = phi(bp.pts[k], 1.0);
        norm_phi += p1;
        num += std::abs(f[bp.idx[k]]) * std::abs(g_fn[bp.idx[k]]) * p1;
    }
    num = num * hn / (norm_phi * hn);
    double nf = luxembourg_norm_ball(f, phi, b);
    double ng = complementary_norm_ball(g_fn, phi, b);
    if (nf == 0.0 || ng == 0.0) return 0.0;
    return num / (nf * ng);
}

SpaceNormResult space_norm_rows(const GridFunction& f, const SpaceSpec& spec) {
    using K = SpaceSpec::Kind;
    switch (spec.kind) {
        case K::musielak_morrey:
            return morrey_norm_rows(f, *spec.phi, spec.outer, spec.balls);
        case K::weighted_orlicz_morrey:
            return weighted_orlicz_morrey_rows(f, *spec.Phi, *spec.w, spec.outer, spec.balls);
        case K::campanato:
            return campanato_rows(f, *spec.phi, spec.q, spec.balls, false);
        case K::campanato_star:
            return campanato_rows(f, *spec.phi, spec.q, spec.balls, true);
        case K::bmo:
            return bmo_rows(f, spec.balls);
        case K::classical_morrey:
            return classical_morrey_rows(f, spec.p, spec.kappa, spec.balls);
        case K::l_phi: {
            SpaceNormResult res;
            res.total = luxembourg_norm_global(f, *spec.phi);
            return res;
        }
    }
    throw std::runtime_error("space norm: unknown kind");
}

double space_norm(const GridFunction& f, const SpaceSpec& spec) {
    return space_norm_rows(f, spec).total;
}

}  // namespace ilp
