#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ilp/grid.hpp"

namespace ilp {

enum class GrowthFamily { power, weighted_power, weighted_orlicz, custom };

// phi(x,t): Orlicz in t for each x, measurable in x, with declared type
// exponents p0 <= p1 and a declared Muckenhoupt class exponent.
class GrowthFunction {
  public:
    GrowthFunction(std::function<double(const Pt&, double)> eval, double p0, double p1,
                   double muckenhoupt_p, GrowthFamily family, std::string name);

    static GrowthFunction power(double p);
    static GrowthFunction weighted_power(std::function<double(const Pt&)> w, double p,
                                         double muckenhoupt_p, std::string name = "w*t^p");
    static GrowthFunction weighted_orlicz(std::function<double(const Pt&)> w,
                                          std::function<double(double)> Phi, double p0, double p1,
                                          double muckenhoupt_p, std::string name = "w*Phi(t)");
    static GrowthFunction custom(std::function<double(const Pt&, double)> eval, double p0, double p1,
                                 double muckenhoupt_p, std::string name = "custom");

    double operator()(const Pt& x, double t) const { return eval_(x, t); }
    double lower_type() const { return p0_; }
    double upper_type() const { return p1_; }
    double muckenhoupt_p() const { return mp_; }
    GrowthFamily family() const { return family_; }
    const std::string& name() const { return name_; }

    // phi(B,t) = sum over grid points in B of phi(x,t) h^n
    double over_ball(const Grid& g, const Ball& b, double t) const;

  private:
    std::function<double(const Pt&, double)> eval_;
    double p0_, p1_, mp_;
    GrowthFamily family_;
    std::string name_;
};

// Young function: convex Orlicz function with Phi(t)/t -> 0 at 0 and -> inf
// at infinity. Construction samples these properties and rejects violations.
class YoungFunction {
  public:
    YoungFunction(std::function<double(double)> eval, double p0, double p1, std::string name = "Phi");

    double operator()(double t) const { return eval_(t); }
    double lower_type() const { return p0_; }
    double upper_type() const { return p1_; }
    const std::string& name() const { return name_; }

    double inverse(double r) const;        // unique t with Phi(t) = r
    double complementary(double s) const;  // sup_t { s t - Phi(t) }

    static YoungFunction power(double p);

  private:
    std::function<double(double)> eval_;
    double p0_, p1_;
    std::string name_;
};

struct Weight {
    GridFunction w;
    explicit Weight(GridFunction g);
};

struct SampleSpec {
    int x_count = 9;       // per axis, over the grid box
    int t_count = 33;      // log-spaced over [t_lo, t_hi]
    double t_lo = 1e-4, t_hi = 1e4;
    int s_count = 33;      // log-spaced over the s range of the chosen type
};

// sup over the sample lattice of phi(x,st) / (s^p phi(x,t)), p declared.
enum class TypeSide { lower, upper };
double type_constant(const GrowthFunction& phi, TypeSide side, const Grid& box,
                     const SampleSpec& spec = {});

// psi(x,t) = phi(x,t)/phi(x,1); same type exponents, psi(x,1) = 1.
GrowthFunction normalized_psi(const GrowthFunction& phi);

// sup_{t>0} { s t - psi(x,t) } on a geometric lattice with golden-section
// refinement; throws "complementary diverges" when the sup runs away.
double complementary_value(const GrowthFunction& psi, const Pt& x, double s);

// max over an x-lattice of complementary_value(psi, x, 1)
double complementary_bounded_at_one(const GrowthFunction& psi, const Grid& box, int x_count = 17);

// generic Legendre engine: sup_t { s t - g(t) }, t on [1e-8,1e8] geometric,
// 64 points per decade, one golden-section refinement to 1e-8 relative
double legendre_sup(const std::function<double(double)>& g, double s);

// Muckenhoupt expression, maximized over a t-lattice and a ball family.
struct TLattice {
    double lo = 1e-2, hi = 1e2;
    int count = 9;
    std::vector<double> values() const;
};
double muckenhoupt_constant(const GrowthFunction& phi, double q, const Grid& g,
                            const BallFamily& balls, const TLattice& tl = {});
double muckenhoupt_expression(const GrowthFunction& phi, double q, const Grid& g, const Ball& b,
                              double t);

double reverse_holder_constant(const Weight& w, double r_exp, const BallFamily& balls);

// Scaling functions used by the Morrey-type norms. `kind` drives analytic
// tail bounds in the integral checkers.
struct OuterFunction {
    enum class Kind { power, inv_power, log_shift, constant, custom };
    Kind kind = Kind::power;
    double exponent = 0.0;
    bool variable = false;  // true when the evaluator uses the ball center
    std::function<double(const Pt&, double)> fn;
    std::string name;

    double at(const Pt& center, double r) const { return fn(center, r); }
    double operator()(double r) const { return fn(Pt{0.0, 0.0}, r); }

    static OuterFunction power(double s);      // r^s, s >= 0
    static OuterFunction inv_power(double s);  // r^{-s}, s > 0
    static OuterFunction log_shift();          // log(e + r)
    static OuterFunction constant(double c = 1.0);
    static OuterFunction custom(std::function<double(const Pt&, double)> fn, bool variable,
                                std::string name);
};

struct CheckResult {
    double constant = 0.0;
    bool diverged = false;
};

// sup_r phi(r) * int_r^Rmax dt/(phi(t) t), log-trapezoid quadrature with an
// analytic tail for the power family. Flags divergence when the partial sums
// keep growing across the last decades.
CheckResult dini_integral_check(const OuterFunction& phi, const std::vector<double>& r_list);

// nonincreasing phi: C_int for int_r^inf phi(t)/t dt <= C phi(r),
// C_mono for phi(r) r <= C phi(s) s over the supplied r <= s pairs
struct DecreasingCheckResult {
    double c_int = 0.0;
    double c_mono = 0.0;
    bool diverged = false;
};
DecreasingCheckResult decreasing_integral_check(const OuterFunction& phi,
                                                const std::vector<std::pair<double, double>>& r_s_pairs);

// sup_r [ int_r^Rmax Phi^{-1}(phi(t))/t dt ] / Phi^{-1}(phi(r))
CheckResult inverse_composite_check(const YoungFunction& Phi, const OuterFunction& phi,
                                    const std::vector<double>& r_list);

}  // namespace ilp
