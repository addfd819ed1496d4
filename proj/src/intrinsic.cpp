#include "ilp/intrinsic.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

namespace ilp {

namespace {

int default_kernel_m(int dim) { return dim == 1 ? 41 : 9; }

// OpenMP regions must not leak exceptions; capture the first one and rethrow.
struct ErrorLatch {
    std::atomic<bool> set{false};
    std::string message;
    void capture(const std::exception& e) {
        bool expected = false;
        if (set.compare_exchange_strong(expected, true)) message = e.what();
    }
    void rethrow() const {
        if (set.load()) throw std::runtime_error(message);
    }
};

}  // namespace

AlphaEvaluator::AlphaEvaluator(int dim, double alpha, EvalMode mode, int kernel_m, int dict_size,
                               unsigned seed)
    : alpha_(alpha),
      mode_(mode),
      kg_(KernelGrid::make(dim, alpha, kernel_m > 0 ? kernel_m : default_kernel_m(dim))),
      lp_(kg_) {
    if (mode_ == EvalMode::dictionary) {
        dict_ = kernel_dictionary(kg_, dict_size, seed);
        if (dict_.empty()) throw std::runtime_error("kernel dictionary came back empty");
    }
}

double AlphaEvaluator::value(const GridFunction& f, const Pt& y, double t,
                             const std::function<double(const Pt&)>* mult) const {
    if (t < f.grid().spacing())
        throw std::runtime_error("kernel evaluation: t below grid spacing");
    auto c = kernel_objective(f, y, t, kg_, mult);
    if (mode_ == EvalMode::lp) return lp_.maximize(c);
    double best = 0.0;
    int n = static_cast<int>(c.size());
    for (const auto& theta : dict_) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += theta[i] * c[i];
        best = std::max(best, std::abs(s));
    }
    return best;
}

Field a_alpha_field(const GridFunction& f, const HalfSpaceGrid& hs, const AlphaEvaluator& ev,
                    const std::function<double(const Pt&)>* mult) {
    const Grid& g = hs.base();
    const int K = static_cast<int>(hs.levels().size());
    const long n = g.size();
    Field field(K, std::vector<double>(n));
    ErrorLatch err;
#pragma omp parallel for schedule(dynamic) collapse(2)
    for (int k = 0; k < K; ++k) {
        for (long i = 0; i < n; ++i) {
            try {
                field[k][i] = ev.value(f, g.coord(i), hs.levels()[k], mult);
            } catch (const std::exception& e) {
                err.capture(e);
            }
        }
    }
    err.rethrow();
    return field;
}

namespace {

double cone_sum_at(const Field& field, const HalfSpaceGrid& hs, double beta, long xi) {
    const Grid& g = hs.base();
    Pt x = g.coord(xi);
    double hn = g.cell_measure();
    double acc = 0.0;
    int K = static_cast<int>(hs.levels().size());
    for (int k = 0; k < K; ++k) {
        double t = hs.levels()[k];
        double dt = hs.level_width(k);
        double rad = beta * t;
        double tpow = (g.dim() == 1) ? t * t : t * t * t;  // t^{n+1}
        std::array<int, 2> ilo, ihi;
        Pt a{x[0] - rad, x[1] - rad}, b{x[0] + rad, x[1] + rad};
        g.clamp_box(a, b, ilo, ihi);
        double level = 0.0;
        for (int j = ilo[1]; j <= ihi[1]; ++j) {
            for (int i = ilo[0]; i <= ihi[0]; ++i) {
                long yi = g.index(i, j);
                if (dist(g.coord(yi), x, g.dim()) < rad) {
                    double v = field[k][yi];
                    level += v * v;
                }
            }
        }
        acc += level * hn * dt / tpow;
    }
    return std::sqrt(acc);
}

double gstar_sum_at(const Field& field, const HalfSpaceGrid& hs, double lambda, double floor,
                    long xi) {
    const Grid& g = hs.base();
    Pt x = g.coord(xi);
    double hn = g.cell_measure();
    double ln = lambda * g.dim();
    double acc = 0.0;
    int K = static_cast<int>(hs.levels().size());
    long n = g.size();
    for (int k = 0; k < K; ++k) {
        double t = hs.levels()[k];
        double dt = hs.level_width(k);
        double tpow = (g.dim() == 1) ? t * t : t * t * t;
        double level = 0.0;
        for (long yi = 0; yi < n; ++yi) {
            double w = std::pow(t / (t + dist(g.coord(yi), x, g.dim())), ln);
            if (w < floor) continue;
            double v = field[k][yi];
            level += w * v * v;
        }
        acc += level * hn * dt / tpow;
    }
    return std::sqrt(acc);
}

}  // namespace

GridFunction s_alpha_beta_from_field(const Field& field, const HalfSpaceGrid& hs, double beta) {
    const Grid& g = hs.base();
    std::vector<double> out(g.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < g.size(); ++i) out[i] = cone_sum_at(field, hs, beta, i);
    return GridFunction(g, std::move(out));
}

GridFunction g_alpha_from_field(const Field& field, const HalfSpaceGrid& hs) {
    const Grid& g = hs.base();
    std::vector<double> out(g.size());
    int K = static_cast<int>(hs.levels().size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < g.size(); ++i) {
        double acc = 0.0;
        for (int k = 0; k < K; ++k) {
            double v = field[k][i];
            acc += v * v * hs.level_width(k) / hs.levels()[k];
        }
        out[i] = std::sqrt(acc);
    }
    return GridFunction(g, std::move(out));
}

GridFunction g_star_from_field(const Field& field, const HalfSpaceGrid& hs, double lambda,
                               double weight_floor) {
    const Grid& g = hs.base();
    std::vector<double> out(g.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < g.size(); ++i) out[i] = gstar_sum_at(field, hs, lambda, weight_floor, i);
    return GridFunction(g, std::move(out));
}

GridFunction s_alpha(const GridFunction& f, const HalfSpaceGrid& hs, const AlphaEvaluator& ev) {
    return s_alpha_beta_from_field(a_alpha_field(f, hs, ev), hs, 1.0);
}

GridFunction s_alpha_beta(const GridFunction& f, const HalfSpaceGrid& hs, const AlphaEvaluator& ev,
                          double beta) {
    if (!(beta > 0.0)) throw std::runtime_error("aperture must be positive");
    return s_alpha_beta_from_field(a_alpha_field(f, hs, ev), hs, beta);
}

GridFunction g_alpha(const GridFunction& f, const HalfSpaceGrid& hs, const AlphaEvaluator& ev) {
    return g_alpha_from_field(a_alpha_field(f, hs, ev), hs);
}

GridFunction g_star_lambda(const GridFunction& f, const HalfSpaceGrid& hs, const AlphaEvaluator& ev,
                           double lambda, double weight_floor) {
    return g_star_from_field(a_alpha_field(f, hs, ev), hs, lambda, weight_floor);
}

GridFunction s_alpha_beta(const GridFunction& f, const HalfSpaceGrid& hs, const AlphaEvaluator& ev,
                          const ConeParams& cone) {
    return s_alpha_beta(f, hs, ev, cone.beta);
}

GridFunction g_star_lambda(const GridFunction& f, const HalfSpaceGrid& hs, const AlphaEvaluator& ev,
                           const ConeParams& cone) {
    return g_star_lambda(f, hs, ev, cone.lambda, cone.weight_floor);
}

namespace {

// quadrature at one vertex with the vertex-dependent multiplier b(x) - b(z)
template <class CellWeight>
double commutator_at(const GridFunction& b, const GridFunction& f, const HalfSpaceGrid& hs,
                     const AlphaEvaluator& ev, long xi, CellWeight&& cell_weight) {
    const Grid& g = hs.base();
    Pt x = g.coord(xi);
    double bx = b[xi];
    std::function<double(const Pt&)> mult = [&b, bx](const Pt& z) { return bx - b.interpolate(z); };
    double hn = g.cell_measure();
    double acc = 0.0;
    int K = static_cast<int>(hs.levels().size());
    long n = g.size();
    for (int k = 0; k < K; ++k) {
        double t = hs.levels()[k];
        double dt = hs.level_width(k);
        double tpow = (g.dim() == 1) ? t * t : t * t * t;
        double level = 0.0;
        for (long yi = 0; yi < n; ++yi) {
            double w = cell_weight(g.coord(yi), x, t);
            if (w <= 0.0) continue;
            double v = ev.value(f, g.coord(yi), t, &mult);
            level += w * v * v;
        }
        acc += level * hn * dt / tpow;
    }
    return std::sqrt(acc);
}

template <class CellWeight>
GridFunction commutator_driver(const GridFunction& b, const GridFunction& f,
                               const HalfSpaceGrid& hs, const AlphaEvaluator& ev,
                               CellWeight&& cell_weight) {
    const Grid& g = hs.base();
    if (!b.grid().same_layout(g)) throw std::runtime_error("commutator: symbol grid mismatch");
    std::vector<double> out(g.size());
    ErrorLatch err;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < g.size(); ++i) {
        try {
            out[i] = commutator_at(b, f, hs, ev, i, cell_weight);
        } catch (const std::exception& e) {
            err.capture(e);
        }
    }
    err.rethrow();
    return GridFunction(g, std::move(out));
}

}  // namespace

GridFunction commutator_s(const GridFunction& b, const GridFunction& f, const HalfSpaceGrid& hs,
                          const AlphaEvaluator& ev, double beta) {
    int dim = hs.base().dim();
    return commutator_driver(b, f, hs, ev, [beta, dim](const Pt& y, const Pt& x, double t) {
        return dist(y, x, dim) < beta * t ? 1.0 : 0.0;
    });
}

GridFunction commutator_g(const GridFunction& b, const GridFunction& f, const HalfSpaceGrid& hs,
                          const AlphaEvaluator& ev) {
    const Grid& g = hs.base();
    if (!b.grid().same_layout(g)) throw std::runtime_error("commutator: symbol grid mismatch");
    std::vector<double> out(g.size());
    int K = static_cast<int>(hs.levels().size());
    ErrorLatch err;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < g.size(); ++i) {
        try {
            Pt x = g.coord(i);
            double bx = b[i];
            std::function<double(const Pt&)> mult = [&b, bx](const Pt& z) {
                return bx - b.interpolate(z);
            };
            double acc = 0.0;
            for (int k = 0; k < K; ++k) {
                double v = ev.value(f, x, hs.levels()[k], &mult);
                acc += v * v * hs.level_width(k) / hs.levels()[k];
            }
            out[i] = std::sqrt(acc);
        } catch (const std::exception& e) {
            err.capture(e);
        }
    }
    err.rethrow();
    return GridFunction(g, std::move(out));
}

GridFunction commutator_gstar(const GridFunction& b, const GridFunction& f, const HalfSpaceGrid& hs,
                              const AlphaEvaluator& ev, double lambda, double weight_floor) {
    int dim = hs.base().dim();
    double ln = lambda * dim;
    return commutator_driver(b, f, hs, ev,
                             [ln, weight_floor, dim](const Pt& y, const Pt& x, double t) {
                                 double w = std::pow(t / (t + dist(y, x, dim)), ln);
                                 return w < weight_floor ? 0.0 : w;
                             });
}

}  // namespace ilp
