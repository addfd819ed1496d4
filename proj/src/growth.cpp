#include "ilp/growth.hpp"

#include <algorithm>
#include <cmath>

namespace ilp {

namespace {

std::vector<double> log_spaced(double lo, double hi, int n) {
    std::vector<double> v(n);
    if (n == 1) {
        v[0] = lo;
        return v;
    }
    double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i) v[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
    return v;
}

std::vector<Pt> x_lattice(const Grid& box, int count) {
    std::vector<Pt> pts;
    Pt lo = box.lower(), hi = box.upper();
    if (box.dim() == 1) {
        for (int i = 0; i < count; ++i)
            pts.push_back(Pt{lo[0] + (hi[0] - lo[0]) * i / std::max(1, count - 1), 0.0});
    } else {
        for (int j = 0; j < count; ++j)
            for (int i = 0; i < count; ++i)
                pts.push_back(Pt{lo[0] + (hi[0] - lo[0]) * i / std::max(1, count - 1),
                                 lo[1] + (hi[1] - lo[1]) * j / std::max(1, count - 1)});
    }
    return pts;
}

}  // namespace

GrowthFunction::GrowthFunction(std::function<double(const Pt&, double)> eval, double p0, double p1,
                               double muckenhoupt_p, GrowthFamily family, std::string name)
    : eval_(std::move(eval)), p0_(p0), p1_(p1), mp_(muckenhoupt_p), family_(family),
      name_(std::move(name)) {
    if (!(p0 > 0.0) || !(p1 >= p0)) throw std::runtime_error("growth function: need 0 < p0 <= p1");
    if (!(muckenhoupt_p >= 1.0)) throw std::runtime_error("growth function: Muckenhoupt exponent >= 1");
    // spot-check the Orlicz axioms at the origin of the spatial variable
    Pt x0{0.0, 0.0};
    if (eval_(x0, 0.0) != 0.0) throw std::runtime_error("growth function: phi(x,0) must be 0");
    double prev = 0.0;
    for (double t : {1e-6, 1e-3, 1.0, 1e3, 1e6}) {
        double v = eval_(x0, t);
        if (!(v > prev)) throw std::runtime_error("growth function: phi(x,.) must be strictly increasing");
        prev = v;
    }
}

GrowthFunction GrowthFunction::power(double p) {
    return GrowthFunction([p](const Pt&, double t) { return std::pow(t, p); }, p, p, 1.0,
                          GrowthFamily::power, "t^" + std::to_string(p));
}

GrowthFunction GrowthFunction::weighted_power(std::function<double(const Pt&)> w, double p,
                                              double muckenhoupt_p, std::string name) {
    auto wf = std::move(w);
    return GrowthFunction([wf, p](const Pt& x, double t) { return wf(x) * std::pow(t, p); }, p, p,
                          muckenhoupt_p, GrowthFamily::weighted_power, std::move(name));
}

GrowthFunction GrowthFunction::weighted_orlicz(std::function<double(const Pt&)> w,
                                               std::function<double(double)> Phi, double p0, double p1,
                                               double muckenhoupt_p, std::string name) {
    auto wf = std::move(w);
    auto pf = std::move(Phi);
    return GrowthFunction([wf, pf](const Pt& x, double t) { return wf(x) * pf(t); }, p0, p1,
                          muckenhoupt_p, GrowthFamily::weighted_orlicz, std::move(name));
}

GrowthFunction GrowthFunction::custom(std::function<double(const Pt&, double)> eval, double p0,
                                      double p1, double muckenhoupt_p, std::string name) {
    return GrowthFunction(std::move(eval), p0, p1, muckenhoupt_p, GrowthFamily::custom,
                          std::move(name));
}

double GrowthFunction::over_ball(const Grid& g, const Ball& b, double t) const {
    double sum = 0.0;
    long n = 0;
    for_each_point_in_ball(g, b, [&](long, const Pt& p) {
        sum += eval_(p, t);
        ++n;
    });
    if (n == 0) throw std::runtime_error("ball off grid");
    return sum * g.cell_measure();
}

YoungFunction::YoungFunction(std::function<double(double)> eval, double p0, double p1,
                             std::string name)
    : eval_(std::move(eval)), p0_(p0), p1_(p1), name_(std::move(name)) {
    if (!(1.0 < p0) || !(p0 <= p1)) throw std::runtime_error("young function: need 1 < p0 <= p1");
    if (eval_(0.0) != 0.0) throw std::runtime_error("young function: Phi(0) must be 0");
    // midpoint convexity on a sampled lattice, 1e-9 relative slack
    auto ts = log_spaced(1e-6, 1e6, 97);
    for (size_t i = 0; i + 1 < ts.size(); ++i) {
        double a = ts[i], b = ts[i + 1], m = 0.5 * (a + b);
        double lhs = eval_(m), rhs = 0.5 * (eval_(a) + eval_(b));
        if (lhs > rhs * (1.0 + 1e-9) + 1e-300)
            throw std::runtime_error("young function: convexity violated on sample lattice");
    }
    // Phi(t)/t -> 0 at 0 and -> infinity at infinity, on sampled decades
    if (!(eval_(1e-8) / 1e-8 < eval_(1e-4) / 1e-4))
        throw std::runtime_error("young function: Phi(t)/t must vanish at 0");
    if (!(eval_(1e8) / 1e8 > eval_(1e4) / 1e4))
        throw std::runtime_error("young function: Phi(t)/t must diverge at infinity");
}

YoungFunction YoungFunction::power(double p) {
    return YoungFunction([p](double t) { return std::pow(t, p); }, p, p,
                         "t^" + std::to_string(p));
}

double YoungFunction::inverse(double r) const {
    if (r < 0.0) throw std::runtime_error("young inverse: negative argument");
    if (r == 0.0) return 0.0;
    double hi = 1.0;
    int guard = 0;
    while (eval_(hi) < r) {
        hi *= 2.0;
        if (++guard > 4000) throw std::runtime_error("young inverse: bracket growth failed");
    }
    double lo = (hi == 1.0) ? 0.0 : hi / 2.0;
    while (lo > 0.0 && eval_(lo) > r) lo /= 2.0;
    for (int it = 0; it < 200 && (hi - lo) > 1e-10 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        (eval_(mid) < r ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double YoungFunction::complementary(double s) const {
    auto& f = eval_;
    return legendre_sup([&f](double t) { return f(t); }, s);
}

Weight::Weight(GridFunction g) : w(std::move(g)) {
    for (double v : w.values())
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::runtime_error("weight: values must be positive and finite");
}

double type_constant(const GrowthFunction& phi, TypeSide side, const Grid& box,
                     const SampleSpec& spec) {
    double p = (side == TypeSide::lower) ? phi.lower_type() : phi.upper_type();
    auto xs = x_lattice(box, spec.x_count);
    auto ts = log_spaced(spec.t_lo, spec.t_hi, spec.t_count);
    auto ss = (side == TypeSide::lower) ? log_spaced(1e-4, 1.0, spec.s_count)
                                        : log_spaced(1.0, 1e4, spec.s_count);
    double best = 0.0;
    for (const Pt& x : xs) {
        for (double t : ts) {
            double base = phi(x, t);
            for (double s : ss) {
                double ratio = phi(x, s * t) / (std::pow(s, p) * base);
                if (!std::isfinite(ratio))
                    throw std::runtime_error("type violation at (x,s,t)");
                best = std::max(best, ratio);
            }
        }
    }
    return best;
}

GrowthFunction normalized_psi(const GrowthFunction& phi) {
    auto base = phi;  // copy shares the callable
    auto eval = [base](const Pt& x, double t) { return base(x, t) / base(x, 1.0); };
    return GrowthFunction::custom(eval, phi.lower_type(), phi.upper_type(), phi.muckenhoupt_p(),
                                  phi.name() + "/phi(x,1)");
}

double legendre_sup(const std::function<double(double)>& g, double s) {
    constexpr double t_lo = 1e-8;
    constexpr int per_decade = 64;
    const double step = std::log(10.0) / per_decade;
    const double lt = std::log(t_lo);

    // scan 16 decades; when the maximum sits on the right boundary (large s
    // pushes the argmax out), grow the bracket by doubling and declare
    // divergence only if the objective still climbs at the far cap
    const int n = 16 * per_decade + 1;
    double best = -std::numeric_limits<double>::infinity();
    int best_i = 0;
    for (int i = 0; i < n; ++i) {
        double t = std::exp(lt + step * i);
        double v = s * t - g(t);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    double a, b;
    if (best_i == n - 1 && best > 0.0) {
        double t = std::exp(lt + step * (n - 1));
        double vt = best;
        while (t < 1e250) {
            double t2 = 2.0 * t;
            double v2 = s * t2 - g(t2);
            if (v2 <= vt) break;
            t = t2;
            vt = v2;
            best = v2;
        }
        if (t >= 1e250) throw std::runtime_error("complementary diverges");
        a = t / 2.0;
        b = 2.0 * t;
    } else {
        a = std::exp(lt + step * std::max(0, best_i - 1));
        b = std::exp(lt + step * std::min(n - 1, best_i + 1));
    }
    const double inv_phi = 0.6180339887498949;
    double c = b - (b - a) * inv_phi;
    double d = a + (b - a) * inv_phi;
    double fc = s * c - g(c), fd = s * d - g(d);
    for (int it = 0; it < 200 && (b - a) > 1e-8 * std::max(1e-300, b); ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - (b - a) * inv_phi;
            fc = s * c - g(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + (b - a) * inv_phi;
            fd = s * d - g(d);
        }
    }
    best = std::max(best, std::max(fc, fd));
    return std::max(0.0, best);
}

double complementary_value(const GrowthFunction& psi, const Pt& x, double s) {
    if (s < 0.0) throw std::runtime_error("complementary: s must be nonnegative");
    double at1 = psi(x, 1.0);
    if (std::abs(at1 - 1.0) > 1e-9)
        throw std::runtime_error("complementary: psi is not normalized (psi(x,1) != 1)");
    return legendre_sup([&psi, &x](double t) { return psi(x, t); }, s);
}

double complementary_bounded_at_one(const GrowthFunction& psi, const Grid& box, int x_count) {
    double best = 0.0;
    for (const Pt& x : x_lattice(box, x_count))
        best = std::max(best, complementary_value(psi, x, 1.0));
    if (!std::isfinite(best)) throw std::runtime_error("complementary unbounded at s=1");
    return best;
}

std::vector<double> TLattice::values() const { return log_spaced(lo, hi, count); }

double muckenhoupt_expression(const GrowthFunction& phi, double q, const Grid& g, const Ball& b,
                              double t) {
    double measure = ball_measure(g, b);
    double i1 = phi.over_ball(g, b, t);
    if (q == 1.0) {
        double inv_sup = 0.0;
        for_each_point_in_ball(g, b, [&](long, const Pt& p) {
            inv_sup = std::max(inv_sup, 1.0 / phi(p, t));
        });
        return i1 / measure * inv_sup;
    }
    double qp = q / (q - 1.0);  // conjugate exponent
    double i2 = 0.0;
    for_each_point_in_ball(g, b, [&](long, const Pt& p) { i2 += std::pow(phi(p, t), -qp / q); });
    i2 *= g.cell_measure();
    return i1 * std::pow(i2, q / qp) / std::pow(measure, q);
}

double muckenhoupt_constant(const GrowthFunction& phi, double q, const Grid& g,
                            const BallFamily& balls, const TLattice& tl) {
    if (!(q >= 1.0)) throw std::runtime_error("muckenhoupt: q must be >= 1");
    double best = 0.0;
    for (double t : tl.values())
        for (const Ball& b : balls.balls)
            best = std::max(best, muckenhoupt_expression(phi, q, g, b, t));
    return best;
}

double reverse_holder_constant(const Weight& w, double r_exp, const BallFamily& balls) {
    if (!(r_exp > 1.0)) throw std::runtime_error("reverse holder: exponent must exceed 1");
    const Grid& g = w.w.grid();
    double best = 0.0;
    for (const Ball& b : balls.balls) {
        double m = ball_measure(g, b);
        double num = 0.0, den = 0.0;
        for_each_point_in_ball(g, b, [&](long i, const Pt&) {
            num += std::pow(w.w[i], r_exp);
            den += w.w[i];
        });
        num = std::pow(num * g.cell_measure() / m, 1.0 / r_exp);
        den = den * g.cell_measure() / m;
        best = std::max(best, num / den);
    }
    return best;
}

OuterFunction OuterFunction::power(double s) {
    OuterFunction f;
    f.kind = Kind::power;
    f.exponent = s;
    f.fn = [s](const Pt&, double r) { return std::pow(r, s); };
    f.name = "r^" + std::to_string(s);
    return f;
}

OuterFunction OuterFunction::inv_power(double s) {
    OuterFunction f;
    f.kind = Kind::inv_power;
    f.exponent = s;
    f.fn = [s](const Pt&, double r) { return std::pow(r, -s); };
    f.name = "r^-" + std::to_string(s);
    return f;
}

OuterFunction OuterFunction::log_shift() {
    OuterFunction f;
    f.kind = Kind::log_shift;
    f.fn = [](const Pt&, double r) { return std::log(std::exp(1.0) + r); };
    f.name = "log(e+r)";
    return f;
}

OuterFunction OuterFunction::constant(double c) {
    OuterFunction f;
    f.kind = Kind::constant;
    f.fn = [c](const Pt&, double) { return c; };
    f.name = "const";
    return f;
}

OuterFunction OuterFunction::custom(std::function<double(const Pt&, double)> fn, bool variable,
                                    std::string name) {
    OuterFunction f;
    f.kind = Kind::custom;
    f.variable = variable;
    f.fn = std::move(fn);
    f.name = std::move(name);
    return f;
}

namespace {

// Improper integral int_r^infty g(t) dt/t, log-trapezoid on [r, R]. The
// remainder past a truncation point T is estimated from the local power-law
// slope of g; when no decaying slope exists, no tail can be credited and the
// integral is reported divergent as soon as the tail-corrected values keep
// growing across the final decades of [r, R].
struct TailIntegral {
    double value = 0.0;
    bool diverged = false;
};

TailIntegral log_tail_integral(const std::function<double(double)>& g, double r, double R,
                               double known_exponent = 0.0, int per_decade = 128) {
    double ur = std::log(r), uR = std::log(R);
    int n = std::max(2, static_cast<int>(std::ceil((uR - ur) / std::log(10.0) * per_decade)) + 1);
    double du = (uR - ur) / (n - 1);

    auto tail_at = [&](double T) {
        double sigma = known_exponent;
        if (sigma <= 0.0) {
            double g1 = g(T / std::exp(1.0)), g0 = g(T);
            if (g0 > 0.0 && g1 > g0) sigma = std::log(g1 / g0);
        }
        if (sigma < 0.01) return std::pair<double, bool>{0.0, false};
        return std::pair<double, bool>{g(T) / sigma, true};
    };

    // truncated values one decade apart at the far end
    double cut1 = uR - std::log(10.0);
    double sum = 0.0, prev = g(std::exp(ur)), at_cut1 = -1.0;
    for (int i = 1; i < n; ++i) {
        double u = ur + du * i;
        double cur = g(std::exp(u));
        sum += 0.5 * (prev + cur) * du;
        prev = cur;
        if (at_cut1 < 0.0 && u >= cut1) at_cut1 = sum;
    }
    if (at_cut1 < 0.0) at_cut1 = sum;

    auto [tail_full, have_full] = tail_at(R);
    double tail_cut = tail_at(R / 10.0).first;
    double fitted_full = sum + tail_full;
    double fitted_cut = at_cut1 + tail_cut;

    TailIntegral res;
    res.value = fitted_full;
    if (fitted_full > 0.0) {
        double growth = (fitted_full - fitted_cut) / fitted_full;
        res.diverged = growth > 1e-3;
        if (!have_full && sum > 0.0 && (sum - at_cut1) / sum > 1e-4) res.diverged = true;
    }
    return res;
}

}  // namespace

CheckResult dini_integral_check(const OuterFunction& phi, const std::vector<double>& r_list) {
    if (r_list.empty()) throw std::runtime_error("dini check: empty r list");
    double r_max = *std::max_element(r_list.begin(), r_list.end());
    double R = 1e8 * r_max;
    CheckResult res;
    double known = (phi.kind == OuterFunction::Kind::power) ? phi.exponent : 0.0;
    for (double r : r_list) {
        auto integral =
            log_tail_integral([&phi](double t) { return 1.0 / phi(t); }, r, R, known);
        if (integral.diverged) res.diverged = true;
        res.constant = std::max(res.constant, phi(r) * integral.value);
    }
    return res;
}

DecreasingCheckResult decreasing_integral_check(
    const OuterFunction& phi, const std::vector<std::pair<double, double>>& r_s_pairs) {
    if (r_s_pairs.empty()) throw std::runtime_error("decreasing check: empty pair list");
    DecreasingCheckResult res;
    double r_max = 0.0;
    for (auto& [r, s] : r_s_pairs) r_max = std::max(r_max, std::max(r, s));
    double R = 1e8 * r_max;
    double known = (phi.kind == OuterFunction::Kind::inv_power) ? phi.exponent : 0.0;
    for (auto& [r, s] : r_s_pairs) {
        if (r > s) throw std::runtime_error("decreasing check: pair must satisfy r <= s");
        auto integral = log_tail_integral([&phi](double t) { return phi(t); }, r, R, known);
        if (integral.diverged) res.diverged = true;
        res.c_int = std::max(res.c_int, integral.value / phi(r));
        res.c_mono = std::max(res.c_mono, phi(r) * r / (phi(s) * s));
    }
    return res;
}

CheckResult inverse_composite_check(const YoungFunction& Phi, const OuterFunction& phi,
                                    const std::vector<double>& r_list) {
    if (r_list.empty()) throw std::runtime_error("inverse composite check: empty r list");
    double r_max = *std::max_element(r_list.begin(), r_list.end());
    double R = 1e8 * r_max;
    CheckResult res;
    for (double r : r_list) {
        auto integral =
            log_tail_integral([&](double t) { return Phi.inverse(phi(t)); }, r, R, 0.0, 48);
        if (integral.diverged) res.diverged = true;
        res.constant = std::max(res.constant, integral.value / Phi.inverse(phi(r)));
    }
    return res;
}

}  // namespace ilp
