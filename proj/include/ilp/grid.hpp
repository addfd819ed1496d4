#pragma once

#include <string>
#include <vector>

#include "ilp/common.hpp"

namespace ilp {

// Uniform grid over a box in R^n, n in {1,2}. Spacing is identical per axis.
class Grid {
  public:
    Grid(int dim, Pt lower, std::array<int, 2> npts, double h);

    static Grid line(double lo, double hi, int npts);        // 1D, h = (hi-lo)/(npts-1)
    static Grid square(double lo, double hi, int npts_axis);  // 2D box [lo,hi]^2

    int dim() const { return dim_; }
    double spacing() const { return h_; }
    const Pt& lower() const { return lower_; }
    Pt upper() const;
    int npts(int axis) const { return npts_[axis]; }
    long size() const;
    double cell_measure() const;  // h^n
    double diameter() const;

    Pt coord(long idx) const;  // row-major
    long index(int i, int j = 0) const;

    // closed index box of grid points whose coordinates lie in [a,b] per axis
    void clamp_box(const Pt& a, const Pt& b, std::array<int, 2>& ilo, std::array<int, 2>& ihi) const;

    bool same_layout(const Grid& o) const;

  private:
    int dim_;
    Pt lower_;
    std::array<int, 2> npts_;
    double h_;
};

struct Ball {
    Pt center;
    double radius;
};

// Real-valued samples on a grid, row-major.
class GridFunction {
  public:
    GridFunction(Grid grid, std::vector<double> values);
    GridFunction(const Grid& grid, const std::function<double(Pt)>& fn);

    const Grid& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }
    double operator[](long i) const { return values_[i]; }
    double& operator[](long i) { return values_[i]; }

    // multilinear interpolation; queries outside the box clamp to it
    double interpolate(const Pt& p) const;

    double max_abs() const;

    void write_csv(const std::string& path) const;
    static GridFunction read_csv(const std::string& path);

  private:
    Grid grid_;
    std::vector<double> values_;
};

// Finite stand-in for "sup over all balls": centers on a sub-lattice,
// dyadic radii per center.
struct BallFamily {
    std::vector<Ball> balls;

    // centers on every `stride`-th grid point, radii {2h, 4h, ..., <= diam/2}
    static BallFamily dyadic(const Grid& g, int stride = 4);
    // single-center dyadic chain, radii {r_min, 2 r_min, ..., <= r_max}
    static BallFamily dyadic_at(const Pt& center, double r_min, double r_max);
};

// (y,t) discretization of the upper half-space: base spatial grid times
// geometric time levels t_1 = h, t_K = T_max, constant ratio.
class HalfSpaceGrid {
  public:
    static HalfSpaceGrid geometric(const Grid& base, double rho_requested = std::pow(2.0, 0.25),
                                   double t_max = 0.0);  // t_max = 0 means domain diameter

    const Grid& base() const { return base_; }
    const std::vector<double>& levels() const { return levels_; }
    double ratio() const { return ratio_; }
    // t_{k+1} - t_k extended geometrically at the last level
    double level_width(int k) const { return levels_[k] * (ratio_ - 1.0); }

  private:
    HalfSpaceGrid(Grid base, std::vector<double> levels, double ratio);
    Grid base_;
    std::vector<double> levels_;
    double ratio_;
};

// Grid points strictly inside the open ball. Throws "ball off grid" when the
// intersection is empty.
std::vector<long> points_in_ball(const Grid& g, const Ball& b);
long count_points_in_ball(const Grid& g, const Ball& b);

template <class F>
void for_each_point_in_ball(const Grid& g, const Ball& b, F&& fn) {
    std::array<int, 2> ilo, ihi;
    Pt a{b.center[0] - b.radius, b.center[1] - b.radius};
    Pt c{b.center[0] + b.radius, b.center[1] + b.radius};
    g.clamp_box(a, c, ilo, ihi);
    for (int j = ilo[1]; j <= ihi[1]; ++j) {
        for (int i = ilo[0]; i <= ihi[0]; ++i) {
            long idx = g.index(i, j);
            Pt p = g.coord(idx);
            if (dist(p, b.center, g.dim()) < b.radius) fn(idx, p);
        }
    }
}

// Midpoint rule: sum of f over grid points inside B, times h^n.
double integrate_ball(const GridFunction& f, const Ball& b);
double ball_measure(const Grid& g, const Ball& b);  // integrate_ball of 1
double mean_on_ball(const GridFunction& f, const Ball& b);
double ess_inf_on_ball(const GridFunction& f, const Ball& b);

}  // namespace ilp
