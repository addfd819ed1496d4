#include "ilp/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

namespace ilp {

Grid::Grid(int dim, Pt lower, std::array<int, 2> npts, double h)
    : dim_(dim), lower_(lower), npts_(npts), h_(h) {
    if (dim != 1 && dim != 2) throw std::runtime_error("grid: dimension must be 1 or 2");
    if (!(h > 0.0)) throw std::runtime_error("grid: spacing must be positive");
    if (npts_[0] < 2) throw std::runtime_error("grid: points per axis must be >= 2");
    if (dim == 1) {
        npts_[1] = 1;
        lower_[1] = 0.0;
    } else if (npts_[1] < 2) {
        throw std::runtime_error("grid: points per axis must be >= 2");
    }
}

Grid Grid::line(double lo, double hi, int npts) {
    if (npts < 2 || !(hi > lo)) throw std::runtime_error("grid: bad line spec");
    double h = (hi - lo) / (npts - 1);
    return Grid(1, Pt{lo, 0.0}, {npts, 1}, h);
}

Grid Grid::square(double lo, double hi, int npts_axis) {
    if (npts_axis < 2 || !(hi > lo)) throw std::runtime_error("grid: bad square spec");
    double h = (hi - lo) / (npts_axis - 1);
    return Grid(2, Pt{lo, lo}, {npts_axis, npts_axis}, h);
}

Pt Grid::upper() const {
    Pt u = lower_;
    u[0] += h_ * (npts_[0] - 1);
    if (dim_ == 2) u[1] += h_ * (npts_[1] - 1);
    return u;
}

long Grid::size() const { return static_cast<long>(npts_[0]) * npts_[1]; }

double Grid::cell_measure() const { return dim_ == 1 ? h_ : h_ * h_; }

double Grid::diameter() const {
    double lx = h_ * (npts_[0] - 1);
    if (dim_ == 1) return lx;
    double ly = h_ * (npts_[1] - 1);
    return std::sqrt(lx * lx + ly * ly);
}

Pt Grid::coord(long idx) const {
    int i = static_cast<int>(idx % npts_[0]);
    int j = static_cast<int>(idx / npts_[0]);
    Pt p{lower_[0] + h_ * i, 0.0};
    if (dim_ == 2) p[1] = lower_[1] + h_ * j;
    return p;
}

long Grid::index(int i, int j) const { return static_cast<long>(j) * npts_[0] + i; }

void Grid::clamp_box(const Pt& a, const Pt& b, std::array<int, 2>& ilo, std::array<int, 2>& ihi) const {
    for (int ax = 0; ax < 2; ++ax) {
        if (ax >= dim_) {
            ilo[ax] = 0;
            ihi[ax] = 0;
            continue;
        }
        double flo = std::ceil((a[ax] - lower_[ax]) / h_ - 1e-12);
        double fhi = std::floor((b[ax] - lower_[ax]) / h_ + 1e-12);
        ilo[ax] = std::max(0, static_cast<int>(flo));
        ihi[ax] = std::min(npts_[ax] - 1, static_cast<int>(fhi));
    }
}

bool Grid::same_layout(const Grid& o) const {
    return dim_ == o.dim_ && npts_ == o.npts_ && lower_ == o.lower_ && h_ == o.h_;
}

GridFunction::GridFunction(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (static_cast<long>(values_.size()) != grid_.size())
        throw std::runtime_error("grid function: value count does not match grid");
    for (double v : values_)
        if (!std::isfinite(v)) throw std::runtime_error("grid function: non-finite value");
}

GridFunction::GridFunction(const Grid& grid, const std::function<double(Pt)>& fn) : grid_(grid) {
    values_.resize(grid.size());
    for (long i = 0; i < grid.size(); ++i) values_[i] = fn(grid.coord(i));
    for (double v : values_)
        if (!std::isfinite(v)) throw std::runtime_error("grid function: non-finite value");
}

double GridFunction::interpolate(const Pt& p) const {
    // multilinear, with queries outside the box clamped to its boundary;
    // clamping extends compactly supported samples by zero and constants by
    // themselves, which the intrinsic operators rely on
    const Grid& g = grid_;
    double fx = std::clamp((p[0] - g.lower()[0]) / g.spacing(), 0.0,
                           static_cast<double>(g.npts(0) - 1));
    if (g.dim() == 1) {
        int i0 = std::min(static_cast<int>(fx), g.npts(0) - 2);
        double s = fx - i0;
        return (1.0 - s) * values_[i0] + s * values_[i0 + 1];
    }
    double fy = std::clamp((p[1] - g.lower()[1]) / g.spacing(), 0.0,
                           static_cast<double>(g.npts(1) - 1));
    int i0 = std::min(static_cast<int>(fx), g.npts(0) - 2);
    int j0 = std::min(static_cast<int>(fy), g.npts(1) - 2);
    double s = fx - i0, t = fy - j0;
    double v00 = values_[g.index(i0, j0)], v10 = values_[g.index(i0 + 1, j0)];
    double v01 = values_[g.index(i0, j0 + 1)], v11 = values_[g.index(i0 + 1, j0 + 1)];
    return (1.0 - s) * (1.0 - t) * v00 + s * (1.0 - t) * v10 + (1.0 - s) * t * v01 + s * t * v11;
}

double GridFunction::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

void GridFunction::write_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for write: " + path);
    out << (grid_.dim() == 1 ? "x,value\n" : "x,y,value\n");
    for (long i = 0; i < grid_.size(); ++i) {
        Pt p = grid_.coord(i);
        if (grid_.dim() == 1)
            out << fmt17(p[0]) << ',' << fmt17(values_[i]) << '\n';
        else
            out << fmt17(p[0]) << ',' << fmt17(p[1]) << ',' << fmt17(values_[i]) << '\n';
    }
}

GridFunction GridFunction::read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for read: " + path);
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("empty csv: " + path);
    int dim;
    if (header == "x,value")
        dim = 1;
    else if (header == "x,y,value")
        dim = 2;
    else
        throw std::runtime_error("bad csv header: " + header);

    std::vector<double> xs, ys, vals;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const char* s = line.c_str();
        char* end = nullptr;
        double x = std::strtod(s, &end);
        if (end == s || *end != ',') throw std::runtime_error("bad csv row: " + line);
        s = end + 1;
        double y = 0.0;
        if (dim == 2) {
            y = std::strtod(s, &end);
            if (end == s || *end != ',') throw std::runtime_error("bad csv row: " + line);
            s = end + 1;
        }
        double v = std::strtod(s, &end);
        if (end == s) throw std::runtime_error("bad csv row: " + line);
        xs.push_back(x);
        ys.push_back(y);
        vals.push_back(v);
    }
    if (xs.empty()) throw std::runtime_error("csv has no data rows: " + path);

    // reconstruct the uniform grid from the coordinate columns
    long n = static_cast<long>(xs.size());
    if (dim == 1) {
        double lo = xs.front(), hi = xs.back();
        Grid g = Grid::line(lo, hi, static_cast<int>(n));
        return GridFunction(g, std::move(vals));
    }
    int nx = 1;
    while (nx < n && ys[nx] == ys[0]) ++nx;
    if (n % nx != 0) throw std::runtime_error("csv rows do not form a grid: " + path);
    int ny = static_cast<int>(n / nx);
    double h = (nx > 1) ? (xs[1] - xs[0]) : (ys[nx] - ys[0]);
    Grid g(2, Pt{xs[0], ys[0]}, {nx, ny}, h);
    return GridFunction(g, std::move(vals));
}

BallFamily BallFamily::dyadic(const Grid& g, int stride) {
    if (stride < 1) throw std::runtime_error("ball family: stride must be >= 1");
    BallFamily fam;
    double h = g.spacing();
    double rmax = g.diameter() / 2.0;
    std::vector<double> radii;
    for (double r = 2.0 * h; r <= rmax * (1.0 + 1e-12); r *= 2.0) radii.push_back(r);
    if (radii.empty()) radii.push_back(2.0 * h);
    for (int j = 0; j < g.npts(1); j += (g.dim() == 2 ? stride : 1)) {
        for (int i = 0; i < g.npts(0); i += stride) {
            Pt c = g.coord(g.index(i, j));
            for (double r : radii) fam.balls.push_back(Ball{c, r});
        }
        if (g.dim() == 1) break;
    }
    return fam;
}

BallFamily BallFamily::dyadic_at(const Pt& center, double r_min, double r_max) {
    BallFamily fam;
    for (double r = r_min; r <= r_max * (1.0 + 1e-12); r *= 2.0) fam.balls.push_back(Ball{center, r});
    if (fam.balls.empty()) fam.balls.push_back(Ball{center, r_min});
    return fam;
}

HalfSpaceGrid::HalfSpaceGrid(Grid base, std::vector<double> levels, double ratio)
    : base_(base), levels_(std::move(levels)), ratio_(ratio) {}

HalfSpaceGrid HalfSpaceGrid::geometric(const Grid& base, double rho_requested, double t_max) {
    if (!(rho_requested > 1.0)) throw std::runtime_error("half-space grid: ratio must exceed 1");
    double h = base.spacing();
    double T = (t_max > 0.0) ? t_max : base.diameter();
    if (T < base.diameter()) throw std::runtime_error("half-space grid: t_max below domain diameter");
    if (T <= h) throw std::runtime_error("half-space grid: t_max must exceed spacing");
    // pin both endpoints: round the level count, then solve for the exact ratio
    int K = std::max(2, 1 + static_cast<int>(std::lround(std::log(T / h) / std::log(rho_requested))));
    double rho = std::pow(T / h, 1.0 / (K - 1));
    std::vector<double> levels(K);
    for (int k = 0; k < K; ++k) levels[k] = h * std::pow(rho, k);
    levels.front() = h;
    levels.back() = T;
    return HalfSpaceGrid(base, std::move(levels), rho);
}

std::vector<long> points_in_ball(const Grid& g, const Ball& b) {
    std::vector<long> idx;
    for_each_point_in_ball(g, b, [&](long i, const Pt&) { idx.push_back(i); });
    if (idx.empty()) throw std::runtime_error("ball off grid");
    return idx;
}

long count_points_in_ball(const Grid& g, const Ball& b) {
    long n = 0;
    for_each_point_in_ball(g, b, [&](long, const Pt&) { ++n; });
    return n;
}

double integrate_ball(const GridFunction& f, const Ball& b) {
    const Grid& g = f.grid();
    double sum = 0.0;
    long n = 0;
    for_each_point_in_ball(g, b, [&](long i, const Pt&) {
        sum += f[i];
        ++n;
    });
    if (n == 0) throw std::runtime_error("ball off grid");
    return sum * g.cell_measure();
}

double ball_measure(const Grid& g, const Ball& b) {
    long n = count_points_in_ball(g, b);
    if (n == 0) throw std::runtime_error("ball off grid");
    return static_cast<double>(n) * g.cell_measure();
}

double mean_on_ball(const GridFunction& f, const Ball& b) {
    return integrate_ball(f, b) / ball_measure(f.grid(), b);
}

double ess_inf_on_ball(const GridFunction& f, const Ball& b) {
    double m = std::numeric_limits<double>::infinity();
    long n = 0;
    for_each_point_in_ball(f.grid(), b, [&](long i, const Pt&) {
        m = std::min(m, f[i]);
        ++n;
    });
    if (n == 0) throw std::runtime_error("ball off grid");
    return m;
}

}  // namespace ilp
