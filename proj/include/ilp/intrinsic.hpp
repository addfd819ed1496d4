#pragma once

#include <memory>

#include "ilp/kernel_class.hpp"

namespace ilp {

enum class EvalMode { lp, dictionary };

struct ConeParams {
    double beta = 1.0;    // aperture
    double lambda = 4.0;  // g* exponent
    double weight_floor = 1e-8;  // g*: drop cells with weight below this
};

// Shared evaluation engine for A_alpha(f)(y,t): exact LP per cell, or a
// certified lower bound maximized over a kernel dictionary.
class AlphaEvaluator {
  public:
    AlphaEvaluator(int dim, double alpha, EvalMode mode, int kernel_m = 0, int dict_size = 128,
                   unsigned seed = 77001u);

    double alpha() const { return alpha_; }
    EvalMode mode() const { return mode_; }
    const KernelGrid& kernel_grid() const { return kg_; }
    const KernelLP& lp() const { return lp_; }
    const std::vector<std::vector<double>>& dictionary() const { return dict_; }

    double value(const GridFunction& f, const Pt& y, double t,
                 const std::function<double(const Pt&)>* mult = nullptr) const;

  private:
    double alpha_;
    EvalMode mode_;
    KernelGrid kg_;
    KernelLP lp_;
    std::vector<std::vector<double>> dict_;
};

// A_alpha(f) on every (y, t-level) cell of the half-space grid; [level][index]
using Field = std::vector<std::vector<double>>;
Field a_alpha_field(const GridFunction& f, const HalfSpaceGrid& hs, const AlphaEvaluator& ev,
                    const std::function<double(const Pt&)>* mult = nullptr);

// quadratures over the computed field
GridFunction s_alpha_beta_from_field(const Field& field, const HalfSpaceGrid& hs, double beta);
GridFunction g_alpha_from_field(const Field& field, const HalfSpaceGrid& hs);
GridFunction g_star_from_field(const Field& field, const HalfSpaceGrid& hs, double lambda,
                               double weight_floor = 1e-8);

// one-call operator fronts
GridFunction s_alpha(const GridFunction& f, const HalfSpaceGrid& hs, const AlphaEvaluator& ev);
GridFunction s_alpha_beta(const GridFunction& f, const HalfSpaceGrid& hs, const AlphaEvaluator& ev,
                          double beta);
GridFunction g_alpha(const GridFunction& f, const HalfSpaceGrid& hs, const AlphaEvaluator& ev);
GridFunction g_star_lambda(const GridFunction& f, const HalfSpaceGrid& hs, const AlphaEvaluator& ev,
                           double lambda, double weight_floor = 1e-8);

GridFunction s_alpha_beta(const GridFunction& f, const HalfSpaceGrid& hs, const AlphaEvaluator& ev,
                          const ConeParams& cone);
GridFunction g_star_lambda(const GridFunction& f, const HalfSpaceGrid& hs, const AlphaEvaluator& ev,
                           const ConeParams& cone);

// commutators with a BMO symbol: the multiplier z -> b(x) - b(z) depends on
// the output vertex x, so the field is recomputed per x
GridFunction commutator_s(const GridFunction& b, const GridFunction& f, const HalfSpaceGrid& hs,
                          const AlphaEvaluator& ev, double beta = 1.0);
GridFunction commutator_g(const GridFunction& b, const GridFunction& f, const HalfSpaceGrid& hs,
                          const AlphaEvaluator& ev);
GridFunction commutator_gstar(const GridFunction& b, const GridFunction& f, const HalfSpaceGrid& hs,
                              const AlphaEvaluator& ev, double lambda, double weight_floor = 1e-8);

}  // namespace ilp
