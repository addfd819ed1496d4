#pragma once

#include <span>

#include "ilp/grid.hpp"
#include "ilp/simplex.hpp"

namespace ilp {

// Discretization of the closed unit ball carrying the Holder kernel class:
// lattice nodes with quadrature weights h^n.
struct KernelGrid {
    int dim = 1;
    double alpha = 1.0;
    int m = 9;  // resolution per axis, odd
    double spacing = 0.25;
    std::vector<Pt> nodes;
    std::vector<double> weights;

    static KernelGrid make(int dim, double alpha, int m);
    double ball_volume() const { return dim == 1 ? 2.0 : 3.14159265358979323846; }
};

// Constraint system over a KernelGrid: mean-zero equality, pairwise Holder
// inequalities over a pair set, and the support-induced bound
// |theta_i| <= (1 - |z_i|)^alpha. Nodes on the unit sphere are pinned to 0.
class KernelLP {
  public:
    enum class PairPolicy { automatic, all_pairs, sparse };

    explicit KernelLP(const KernelGrid& kg, PairPolicy policy = PairPolicy::automatic,
                      unsigned seed = 20240901u);

    const KernelGrid& kernel_grid() const { return *kg_; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    bool all_pairs() const { return all_pairs_; }
    double node_bound(int i) const { return bound_[i]; }

    // max of sum_i theta_i obj_i over the feasible set; >= 0 by symmetry.
    double maximize(std::span<const double> obj, std::vector<double>* theta_out = nullptr) const;

    // constraint residual of a candidate kernel vector: 0 when feasible;
    // checks all node pairs regardless of the LP's pair set
    double feasibility_violation(std::span<const double> theta) const;

  private:
    const KernelGrid* kg_;
    std::vector<int> active_;         // nodes with positive bound
    std::vector<double> bound_;       // per node, (1-|z|)^alpha
    std::vector<std::pair<int, int>> pairs_;  // over active-node indices (into active_)
    std::vector<double> pair_rhs_;
    bool all_pairs_ = true;
};

// t >= grid spacing is required. `multiplier` defaults to 1; commutators pass
// z -> b(x) - b(z).
double kernel_lp_max(const GridFunction& f, const Pt& y, double t, const KernelGrid& kg,
                     const KernelLP& lp,
                     const std::function<double(const Pt&)>* multiplier = nullptr);

// build the LP objective c_i = t^{-n} f(y - t z_i) mult(y - t z_i) w_i
std::vector<double> kernel_objective(const GridFunction& f, const Pt& y, double t,
                                     const KernelGrid& kg,
                                     const std::function<double(const Pt&)>* multiplier = nullptr);

// Finite inner approximation of the kernel class: rescaled mean-zero
// differences of translated bump profiles. Every returned vector is feasible
// for the full all-pairs constraint system to 1e-9.
std::vector<std::vector<double>> kernel_dictionary(const KernelGrid& kg, int size,
                                                   unsigned seed = 77001u);

// max over dictionary kernels and node pairs of
// |theta(z_i)-theta(z_j)| / (|z_i-z_j|^alpha [(1+|z_i|)^{-n-eps} + (1+|z_j|)^{-n-eps}])
double kernel_decay_check(const std::vector<std::vector<double>>& dict, const KernelGrid& kg,
                          double eps);

}  // namespace ilp
