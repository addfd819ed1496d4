#pragma once

#include "ilp/intrinsic.hpp"
#include "ilp/norms.hpp"

// Plain serial implementations of the hot kernels. They share the per-cell
// arithmetic with the OpenMP versions but loop in the most direct way; the
// tests compare both paths and the benchmark times them.
namespace ilp::ref {

Field a_alpha_field(const GridFunction& f, const HalfSpaceGrid& hs, const AlphaEvaluator& ev,
                    const std::function<double(const Pt&)>* mult = nullptr);

GridFunction s_alpha_beta_from_field(const Field& field, const HalfSpaceGrid& hs, double beta);

GridFunction g_star_from_field(const Field& field, const HalfSpaceGrid& hs, double lambda,
                               double weight_floor = 1e-8);

double morrey_norm(const GridFunction& f, const GrowthFunction& phi, const OuterFunction& outer,
                   const BallFamily& balls);

}  // namespace ilp::ref
