#include "ilp/kernel_class.hpp"

#include <algorithm>
#include <cmath>

namespace ilp {

KernelGrid KernelGrid::make(int dim, double alpha, int m) {
    if (dim != 1 && dim != 2) throw std::runtime_error("kernel grid: dimension must be 1 or 2");
    if (!(alpha > 0.0) || alpha > 1.0) throw std::runtime_error("kernel grid: alpha in (0,1]");
    if (m < 9 || m % 2 == 0) throw std::runtime_error("kernel grid: resolution must be odd, >= 9");
    KernelGrid kg;
    kg.dim = dim;
    kg.alpha = alpha;
    kg.m = m;
    kg.spacing = 2.0 / (m - 1);
    double w = (dim == 1) ? kg.spacing : kg.spacing * kg.spacing;
    if (dim == 1) {
        for (int i = 0; i < m; ++i) {
            double z = -1.0 + kg.spacing * i;
            kg.nodes.push_back(Pt{z, 0.0});
            kg.weights.push_back(w);
        }
    } else {
        for (int j = 0; j < m; ++j) {
            for (int i = 0; i < m; ++i) {
                Pt z{-1.0 + kg.spacing * i, -1.0 + kg.spacing * j};
                if (norm2(z, 2) <= 1.0 + 1e-12) {
                    kg.nodes.push_back(z);
                    kg.weights.push_back(w);
                }
            }
        }
    }
    double total = 0.0;
    for (double wi : kg.weights) total += wi;
    if (std::abs(total - kg.ball_volume()) > 2.0 * kg.spacing)
        throw std::runtime_error("kernel grid: weight sum drifted from ball volume");
    return kg;
}

KernelLP::KernelLP(const KernelGrid& kg, PairPolicy policy, unsigned seed) : kg_(&kg) {
    int n = static_cast<int>(kg.nodes.size());
    bound_.resize(n);
    for (int i = 0; i < n; ++i) {
        double b = 1.0 - norm2(kg.nodes[i], kg.dim);
        bound_[i] = b > 0.0 ? std::pow(b, kg.alpha) : 0.0;
        if (bound_[i] > 0.0) active_.push_back(i);
    }
    int na = static_cast<int>(active_.size());
    if (na == 0) throw std::runtime_error("kernel grid: no interior nodes");

    bool all = (policy == PairPolicy::all_pairs) || (policy == PairPolicy::automatic && na <= 64);
    if (policy == PairPolicy::sparse) all = false;
    all_pairs_ = all;

    auto d = [&](int a, int b) { return dist(kg.nodes[active_[a]], kg.nodes[active_[b]], kg.dim); };

    if (all) {
        for (int a = 0; a < na; ++a)
            for (int b = a + 1; b < na; ++b) pairs_.emplace_back(a, b);
    } else {
        // k-nearest neighbours plus seeded long-range pairs
        const int k = 8;
        std::vector<std::pair<double, int>> by_dist(na);
        for (int a = 0; a < na; ++a) {
            for (int b = 0; b < na; ++b) by_dist[b] = {b == a ? 1e30 : d(a, b), b};
            std::partial_sort(by_dist.begin(), by_dist.begin() + std::min(k, na - 1), by_dist.end());
            for (int j = 0; j < std::min(k, na - 1); ++j) {
                int b = by_dist[j].second;
                pairs_.emplace_back(std::min(a, b), std::max(a, b));
            }
        }
        SplitMix64 rng(seed + 1315423911u * static_cast<unsigned>(kg.m) + kg.dim);
        int added = 0, guard = 0;
        while (added < 64 && guard++ < 100000) {
            int a = static_cast<int>(rng.below(na));
            int b = static_cast<int>(rng.below(na));
            if (a == b) continue;
            if (d(std::min(a, b), std::max(a, b)) < 0.5) continue;
            pairs_.emplace_back(std::min(a, b), std::max(a, b));
            ++added;
        }
        std::sort(pairs_.begin(), pairs_.end());
        pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
    }
    pair_rhs_.resize(pairs_.size());
    for (size_t p = 0; p < pairs_.size(); ++p)
        pair_rhs_[p] = std::pow(d(pairs_[p].first, pairs_[p].second), kg.alpha);
}

double KernelLP::maximize(std::span<const double> obj, std::vector<double>* theta_out) const {
    const KernelGrid& kg = *kg_;
    int n = static_cast<int>(kg.nodes.size());
    if (static_cast<int>(obj.size()) != n) throw std::runtime_error("kernel lp: objective size");
    int na = static_cast<int>(active_.size());

    // shifted variables x_i = theta_i + u_i in [0, 2 u_i] keep every rhs >= 0
    std::vector<double> u(na), c(na), w(na);
    for (int a = 0; a < na; ++a) {
        u[a] = bound_[active_[a]];
        c[a] = obj[active_[a]];
        w[a] = kg.weights[active_[a]];
    }

    SimplexProblem prob;
    prob.nvars = na;
    prob.rows.reserve(2 * pairs_.size() + na + 1);
    for (size_t p = 0; p < pairs_.size(); ++p) {
        auto [a, b] = pairs_[p];
        std::vector<double> row(na, 0.0);
        row[a] = 1.0;
        row[b] = -1.0;
        prob.add_row(row, 'L', pair_rhs_[p] + u[a] - u[b]);
        row[a] = -1.0;
        row[b] = 1.0;
        prob.add_row(std::move(row), 'L', pair_rhs_[p] + u[b] - u[a]);
    }
    for (int a = 0; a < na; ++a) {
        std::vector<double> row(na, 0.0);
        row[a] = 1.0;
        prob.add_row(std::move(row), 'L', 2.0 * u[a]);
    }
    double mean_rhs = 0.0;
    for (int a = 0; a < na; ++a) mean_rhs += w[a] * u[a];
    prob.add_row(w, 'E', mean_rhs);

    try {
        SimplexResult sol = simplex_maximize(prob, c);
        double shift = 0.0;
        for (int a = 0; a < na; ++a) shift += c[a] * u[a];
        if (theta_out) {
            theta_out->assign(n, 0.0);
            for (int a = 0; a < na; ++a) (*theta_out)[active_[a]] = sol.x[a] - u[a];
        }
        return std::max(0.0, sol.value - shift);
    } catch (const std::runtime_error& e) {
        if (std::string(e.what()) == "LP unbounded")
            throw std::runtime_error("LP stall");  // cannot occur on this bounded polytope
        throw;
    }
}

double KernelLP::feasibility_violation(std::span<const double> theta) const {
    const KernelGrid& kg = *kg_;
    int n = static_cast<int>(kg.nodes.size());
    if (static_cast<int>(theta.size()) != n) throw std::runtime_error("kernel lp: theta size");
    double mean = 0.0;
    for (int i = 0; i < n; ++i) mean += theta[i] * kg.weights[i];
    double viol = std::abs(mean);
    for (int i = 0; i < n; ++i) viol = std::max(viol, std::abs(theta[i]) - bound_[i]);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double d = dist(kg.nodes[i], kg.nodes[j], kg.dim);
            if (d == 0.0) continue;
            viol = std::max(viol, std::abs(theta[i] - theta[j]) - std::pow(d, kg.alpha));
        }
    }
    return viol;
}

std::vector<double> kernel_objective(const GridFunction& f, const Pt& y, double t,
                                     const KernelGrid& kg,
                                     const std::function<double(const Pt&)>* multiplier) {
    // f * theta_t(y) = int theta_t(y-z) f(z) dz = int theta(v) f(y-tv) dv:
    // the t^n Jacobian cancels the kernel normalization exactly
    int n = static_cast<int>(kg.nodes.size());
    std::vector<double> c(n);
    for (int i = 0; i < n; ++i) {
        Pt p{y[0] - t * kg.nodes[i][0], y[1] - t * kg.nodes[i][1]};
        double v = f.interpolate(p);
        if (multiplier && v != 0.0) v *= (*multiplier)(p);
        c[i] = v * kg.weights[i];
    }
    return c;
}

double kernel_lp_max(const GridFunction& f, const Pt& y, double t, const KernelGrid& kg,
                     const KernelLP& lp, const std::function<double(const Pt&)>* multiplier) {
    if (t < f.grid().spacing())
        throw std::runtime_error("kernel evaluation: t below grid spacing");
    auto c = kernel_objective(f, y, t, kg, multiplier);
    return lp.maximize(c);
}

namespace {

double bump_profile(const Pt& z, const Pt& a, double s, double alpha, int dim) {
    double r = dist(z, a, dim) / s;
    double core = std::max(0.0, 1.0 - r);
    double cone = std::max(0.0, 1.0 - norm2(z, dim));
    if (core == 0.0 || cone == 0.0) return 0.0;
    return std::pow(core, alpha) * std::pow(cone, alpha);
}

// Alternating zigzag kernels clamped to the cone envelope. Between
// consecutive kinks the profile is a snowflake bump of alternating sign with
// split coefficients keeping the Holder constraint across kinks; the vertical
// offset is root-solved inside the family so the weighted mean vanishes
// without reshaping the profile.
double split_partner(double c1, double alpha) {
    double best = 1e300;
    for (int i = 1; i < 2000; ++i) {
        double u = i / 2000.0;
        double v = (1.0 - c1 * std::pow(u, alpha)) / std::pow(1.0 - u, alpha);
        best = std::min(best, v);
    }
    return std::max(0.0, best);
}

// orientation of the split pair: 0 applies (c_left, c_right) globally,
// 1 points the first coefficient toward the origin at every kink, 2 away
std::vector<double> zigzag_kernel(const KernelGrid& kg, const std::vector<double>& kinks,
                                  double c_left, double c_right, int orient = 0) {
    int n = static_cast<int>(kg.nodes.size());
    int K = static_cast<int>(kinks.size());
    std::vector<double> envelope(n), hump(n);
    auto coeff = [&](int kink, bool left_of_kink) {
        double cl = c_left, cr = c_right;
        if (orient != 0) {
            bool inward_is_left = kinks[kink] > 0.0;  // center side of the kink
            bool use_first = (orient == 1) == (left_of_kink == inward_is_left);
            return use_first ? c_left : c_right;
        }
        return left_of_kink ? cl : cr;
    };
    for (int i = 0; i < n; ++i) {
        double cone = std::max(0.0, 1.0 - norm2(kg.nodes[i], kg.dim));
        envelope[i] = cone > 0.0 ? std::pow(cone, kg.alpha) : 0.0;
        double z = kg.nodes[i][0];
        int k = 0;
        while (k < K && z >= kinks[k]) ++k;  // interval index in 0..K
        double up = (k == K) ? 1e300 : coeff(k, true) * std::pow(kinks[k] - z, kg.alpha);
        double dn = (k == 0) ? 1e300 : coeff(k - 1, false) * std::pow(z - kinks[k - 1], kg.alpha);
        double d = std::min(up, dn);
        if (d > 1e200) d = 2.0;  // single unbounded interval cannot happen (K >= 1)
        hump[i] = (k % 2 == 0 ? 1.0 : -1.0) * d;
    }
    auto mean_at = [&](double delta) {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            s += std::clamp(delta + hump[i], -envelope[i], envelope[i]) * kg.weights[i];
        return s;
    };
    double lo = -2.5, hi = 2.5;
    for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        (mean_at(mid) < 0.0 ? lo : hi) = mid;
    }
    double delta = 0.5 * (lo + hi);
    std::vector<double> theta(n);
    for (int i = 0; i < n; ++i)
        theta[i] = std::clamp(delta + hump[i], -envelope[i], envelope[i]);
    return theta;
}

// Sign-directed inflation: push every node to the boundary of its feasible
// interval given the others. Each step keeps the full pair system satisfied,
// so a feasible kernel stays feasible while every |theta_i| grows toward a
// vertex of the polytope.
void inflate_kernel(const std::vector<double>& dist_alpha, const std::vector<double>& envelope,
                    std::vector<double>& th, int rounds) {
    int n = static_cast<int>(th.size());
    for (int r = 0; r < rounds; ++r) {
        for (int i = 0; i < n; ++i) {
            double lo = -envelope[i], hi = envelope[i];
            const double* drow = &dist_alpha[static_cast<size_t>(i) * n];
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                lo = std::max(lo, th[j] - drow[j]);
                hi = std::min(hi, th[j] + drow[j]);
            }
            if (lo > hi) continue;  // numerically infeasible input; leave untouched
            th[i] = (th[i] >= 0.0) ? hi : lo;
        }
    }
}


}  // namespace

std::vector<std::vector<double>> kernel_dictionary(const KernelGrid& kg, int size, unsigned seed) {
    if (size < 8) throw std::runtime_error("kernel dictionary: size must be >= 8");
    int n = static_cast<int>(kg.nodes.size());

    std::vector<double> envelope(n);
    for (int i = 0; i < n; ++i) {
        double cone = std::max(0.0, 1.0 - norm2(kg.nodes[i], kg.dim));
        envelope[i] = cone > 0.0 ? std::pow(cone, kg.alpha) : 0.0;
    }

    std::vector<double> dist_alpha(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                dist_alpha[static_cast<size_t>(i) * n + j] =
                    std::pow(dist(kg.nodes[i], kg.nodes[j], kg.dim), kg.alpha);

    // --- raw candidate kernels, all f-independent --------------------------
    bool refined = size > 2000;
    double alpha = kg.alpha;
    int dim = kg.dim;
    std::vector<std::vector<double>> core, tier1, pairs, templates, trains;

    auto sample = [&](const std::function<double(const Pt&)>& shape) {
        std::vector<double> v(n);
        for (int i = 0; i < n; ++i) v[i] = shape(kg.nodes[i]);
        return v;
    };

    // 1. clamped offset-zigzag kernels: kinks on a position lattice, with
    //    symmetric and asymmetric snowflake splits; single-kink shapes are
    //    core, even (mirror-symmetric) kink sets lead the early tier
    {
        int nb = refined ? 47 : 13;
        std::vector<double> pos(nb);
        for (int i = 0; i < nb; ++i) pos[i] = -0.92 + 1.84 * i / (nb - 1);
        double sym = std::pow(2.0, alpha - 1.0);
        std::vector<std::pair<double, double>> splits{{sym, sym}};
        if (alpha < 1.0 - 1e-12) {
            for (double hi_c : {0.95, 0.8}) {
                double lo_c = split_partner(hi_c, alpha);
                splits.push_back({hi_c, lo_c});
                splits.push_back({lo_c, hi_c});
            }
        }
        std::vector<int> order(nb);
        for (int i = 0; i < nb; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return std::abs(pos[a]) < std::abs(pos[b]); });
        for (int i : order) core.push_back(zigzag_kernel(kg, {pos[i]}, sym, sym));
        auto emit = [&](std::vector<std::vector<double>>& sink, std::vector<double> kinks) {
            for (auto [cl, cr] : splits) sink.push_back(zigzag_kernel(kg, kinks, cl, cr));
        };
        // mirror-symmetric kink sets carry the even and odd optimizers; for
        // those the asymmetric splits also come center-oriented
        auto emit_sym = [&](std::vector<std::vector<double>>& sink, std::vector<double> kinks) {
            emit(sink, kinks);
            for (auto [cl, cr] : splits)
                if (cl != cr) {
                    sink.push_back(zigzag_kernel(kg, kinks, cl, cr, 1));
                    sink.push_back(zigzag_kernel(kg, kinks, cl, cr, 2));
                }
        };
        for (int i = 0; i < nb; ++i)
            if (pos[i] > 0.02) emit_sym(tier1, {-pos[i], pos[i]});
        for (int i = 0; i < nb; ++i)
            if (pos[i] > 0.02) emit_sym(tier1, {-pos[i], 0.0, pos[i]});
        for (int i = 0; i < nb; ++i) {
            if (pos[i] <= 0.02) continue;
            for (int j = i + 1; j < nb; ++j) {
                if (pos[j] <= pos[i]) continue;
                emit_sym(tier1, {-pos[j], -pos[i], pos[i], pos[j]});
            }
        }
        for (int i = 0; i < nb; ++i) {
            for (auto [cl, cr] : splits)
                if (cl != sym) templates.push_back(zigzag_kernel(kg, {pos[i]}, cl, cr));
        }
        for (int i = 0; i < nb; ++i)
            for (int j = i + 1; j < nb; ++j)
                if (pos[j] != -pos[i]) emit(templates, {pos[i], pos[j]});
        int stride3 = refined ? 2 : 1;
        for (int i = 0; i < nb; i += stride3)
            for (int j = i + stride3; j < nb; j += stride3)
                for (int k = j + stride3; k < nb; k += stride3)
                    emit(templates, {pos[i], pos[j], pos[k]});
    }

    // 2. differences of translated bump profiles over a (center, scale) grid
    {
        std::vector<std::pair<Pt, double>> profs;
        int n_trans = refined ? 33 : 13;
        std::vector<double> scales{2.0, 1.0, 0.5, 0.25, 0.125};
        if (refined) scales.push_back(0.0625);
        if (dim == 1) {
            for (double s : scales)
                for (int i = 0; i < n_trans; ++i)
                    profs.push_back({Pt{-1.0 + 2.0 * i / (n_trans - 1), 0.0}, s});
        } else {
            int nt = refined ? 7 : 5;
            for (double s : scales)
                for (int j = 0; j < nt; ++j)
                    for (int i = 0; i < nt; ++i) {
                        Pt a{-1.0 + 2.0 * i / (nt - 1), -1.0 + 2.0 * j / (nt - 1)};
                        if (norm2(a, 2) <= 1.0) profs.push_back({a, s});
                    }
        }
        // the coarse sub-lattice gives a small well-spread pair set; it goes
        // in the early tier so truncation cannot lose it
        auto coarse = [&](size_t k) {
            if (dim == 2 || !refined) return true;
            return (k % ((profs.size() / 65) + 1)) == 0;
        };
        for (size_t a = 0; a < profs.size(); ++a)
            for (size_t b = a + 1; b < profs.size(); ++b) {
                auto kernel = sample([&](const Pt& z) {
                    return bump_profile(z, profs[a].first, profs[a].second, alpha, dim) -
                           bump_profile(z, profs[b].first, profs[b].second, alpha, dim);
                });
                if (coarse(a) && coarse(b))
                    tier1.push_back(std::move(kernel));
                else
                    pairs.push_back(std::move(kernel));
            }
    }

    // 3. alternating bump trains for oscillatory objectives
    {
        SplitMix64 rng(seed ^ 0x5bf03635u);
        int n_trains = refined ? 2500 : 64;
        for (int t = 0; t < n_trains; ++t) {
            int k = 3 + static_cast<int>(rng.below(3));
            double step = rng.uniform(0.15, 0.6);
            double s = step * rng.uniform(0.5, 1.0);
            double a0 = rng.uniform(-1.0, 1.0 - step * (k - 1));
            trains.push_back(sample([&](const Pt& z) {
                double v = 0.0;
                for (int j = 0; j < k; ++j) {
                    Pt a{a0 + j * step, 0.0};
                    v += (j % 2 == 0 ? 1.0 : -1.0) * bump_profile(z, a, s, alpha, dim);
                }
                return v;
            }));
        }
    }

    // core shapes lead, then the stratified early tier, then the shuffled
    // remainder with templates weighted double
    SplitMix64 rng(seed);
    auto shuffle = [&rng](std::vector<std::vector<double>>& v) {
        for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
    };
    shuffle(tier1);
    shuffle(pairs);
    shuffle(templates);
    shuffle(trains);
    std::vector<std::vector<double>> candidates = std::move(core);
    for (auto& v : tier1) candidates.push_back(std::move(v));
    size_t ip = 0, it = 0, ir = 0;
    while (ip < pairs.size() || it < templates.size() || ir < trains.size()) {
        if (it < templates.size()) candidates.push_back(std::move(templates[it++]));
        if (it < templates.size()) candidates.push_back(std::move(templates[it++]));
        if (ip < pairs.size()) candidates.push_back(std::move(pairs[ip++]));
        if (ir < trains.size()) candidates.push_back(std::move(trains[ir++]));
    }

    KernelLP checker(kg, KernelLP::PairPolicy::all_pairs);
    std::vector<std::vector<double>> dict;
    std::vector<std::uint64_t> seen;

    // Mean-zero by shift-and-clamp: theta -> clamp(theta - delta, +-envelope)
    // with delta solved for zero weighted mean. The clamp is non-expansive
    // and the envelopes are Holder-1, so feasibility survives; a subsequent
    // rescale keeps the mean at zero.
    auto shift_clamp = [&](std::vector<double>& theta) {
        auto mean_at = [&](double delta) {
            double s = 0.0;
            for (int i = 0; i < n; ++i)
                s += std::clamp(theta[i] - delta, -envelope[i], envelope[i]) * kg.weights[i];
            return s;
        };
        double lo = -2.5, hi = 2.5;
        for (int it = 0; it < 70; ++it) {
            double mid = 0.5 * (lo + hi);
            (mean_at(mid) > 0.0 ? lo : hi) = mid;
        }
        double delta = 0.5 * (lo + hi);
        for (int i = 0; i < n; ++i)
            theta[i] = std::clamp(theta[i] - delta, -envelope[i], envelope[i]);
    };

    // mean-zero shift, boundary rescale, feasibility screen, dedup
    auto finalize = [&](std::vector<double> theta) -> bool {
        shift_clamp(theta);
        double amp = 0.0;
        for (int i = 0; i < n; ++i) amp = std::max(amp, std::abs(theta[i]));
        if (amp < 1e-13) return false;
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            if (envelope[i] == 0.0) {
                if (std::abs(theta[i]) > 0.0) worst = std::max(worst, 1e30);
            } else {
                worst = std::max(worst, std::abs(theta[i]) / envelope[i]);
            }
            for (int j = i + 1; j < n; ++j) {
                double d = dist_alpha[static_cast<size_t>(i) * n + j];
                if (d == 0.0) continue;
                worst = std::max(worst, std::abs(theta[i] - theta[j]) / d);
            }
        }
        if (worst <= 0.0 || worst >= 1e29) return false;
        double scale = 1.0 / worst;
        for (int i = 0; i < n; ++i) theta[i] *= scale;
        if (checker.feasibility_violation(theta) > 1e-9) return false;
        std::uint64_t h = 0xcbf29ce484222325ull;
        double inv = 1.0 / std::max(1e-300, *std::max_element(theta.begin(), theta.end(),
                                                              [](double a, double b) {
                                                                  return std::abs(a) < std::abs(b);
                                                              }));
        for (int i = 0; i < n; ++i) {
            auto q = static_cast<std::int16_t>(std::lround(theta[i] * std::abs(inv) * 1024));
            h = fnv1a(&q, sizeof(q), h);
        }
        if (std::find(seen.begin(), seen.end(), h) != seen.end()) return false;
        seen.push_back(h);
        dict.push_back(std::move(theta));
        return true;
    };

    // small dictionaries draw from an oversized pool and keep a spread-out
    // subset; large ones take the stream in order
    int pool_target = size <= 2000 ? 16 * size : size;
    for (auto& theta : candidates) {
        if (static_cast<int>(dict.size()) >= pool_target) break;
        // inflated variant first: feasibility-rescale, fatten, re-balance
        std::vector<double> fat = theta;
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            if (envelope[i] == 0.0) {
                if (std::abs(fat[i]) > 0.0) worst = 1e30;
            } else {
                worst = std::max(worst, std::abs(fat[i]) / envelope[i]);
            }
            for (int j = i + 1; j < n; ++j) {
                double d = dist_alpha[static_cast<size_t>(i) * n + j];
                if (d > 0.0) worst = std::max(worst, std::abs(fat[i] - fat[j]) / d);
            }
        }
        if (worst > 0.0 && worst < 1e29) {
            for (int i = 0; i < n; ++i) fat[i] /= worst;
            // the valley depth comes from the mean balance and the peak
            // height from inflation against the valley: alternate until the
            // two settle
            for (int round = 0; round < 3; ++round) {
                inflate_kernel(dist_alpha, envelope, fat, 2);
                shift_clamp(fat);
            }
            finalize(std::move(fat));
        }
        finalize(std::move(theta));
    }
    if (static_cast<int>(dict.size()) <= size) return dict;

    // greedy max-min (k-center) selection: keep the most spread-out subset,
    // seeded by the strongest core shapes
    int keep = size;
    std::vector<int> chosen;
    std::vector<double> best_d(dict.size(), 1e300);
    auto dist2 = [&](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            double d = a[i] - b[i];
            s += d * d;
        }
        return s;
    };
    int first = 0;
    chosen.push_back(first);
    for (size_t k = 0; k < dict.size(); ++k) best_d[k] = dist2(dict[k], dict[first]);
    while (static_cast<int>(chosen.size()) < keep) {
        int far = -1;
        double far_d = -1.0;
        for (size_t k = 0; k < dict.size(); ++k)
            if (best_d[k] > far_d) {
                far_d = best_d[k];
                far = static_cast<int>(k);
            }
        chosen.push_back(far);
        for (size_t k = 0; k < dict.size(); ++k)
            best_d[k] = std::min(best_d[k], dist2(dict[k], dict[far]));
    }
    std::sort(chosen.begin(), chosen.end());
    std::vector<std::vector<double>> picked;
    picked.reserve(keep);
    for (int k : chosen) picked.push_back(std::move(dict[k]));
    return picked;
}

double kernel_decay_check(const std::vector<std::vector<double>>& dict, const KernelGrid& kg,
                          double eps) {
    int n = static_cast<int>(kg.nodes.size());
    double best = 0.0;
    for (const auto& theta : dict) {
        for (int i = 0; i < n; ++i) {
            double zi = norm2(kg.nodes[i], kg.dim);
            for (int j = i + 1; j < n; ++j) {
                double d = dist(kg.nodes[i], kg.nodes[j], kg.dim);
                if (d == 0.0) continue;
                double zj = norm2(kg.nodes[j], kg.dim);
                double denom = std::pow(d, kg.alpha) *
                               (std::pow(1.0 + zi, -kg.dim - eps) + std::pow(1.0 + zj, -kg.dim - eps));
                best = std::max(best, std::abs(theta[i] - theta[j]) / denom);
            }
        }
    }
    if (!std::isfinite(best)) throw std::runtime_error("kernel decay check: non-finite ratio");
    return best;
}

}  // namespace ilp
