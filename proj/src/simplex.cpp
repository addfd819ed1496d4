#include "ilp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ilp {

namespace {
constexpr double kTol = 1e-9;
}

void SimplexProblem::add_row(std::vector<double> coeffs, char t, double b) {
    if (static_cast<int>(coeffs.size()) != nvars)
        throw std::runtime_error("simplex: row width mismatch");
    if (b < 0.0) throw std::runtime_error("simplex: rhs must be nonnegative");
    rows.push_back(std::move(coeffs));
    rhs.push_back(b);
    type.push_back(t);
}

namespace {

class Tableau {
  public:
    explicit Tableau(const SimplexProblem& prob) {
        m_ = static_cast<int>(prob.rows.size());
        n_struct_ = prob.nvars;
        n_slack_ = 0;
        n_art_ = 0;
        for (char t : prob.type) (t == 'L' ? n_slack_ : n_art_)++;
        n_ = n_struct_ + n_slack_ + n_art_;
        T_.assign(static_cast<size_t>(m_) * n_, 0.0);
        b_ = prob.rhs;
        basis_.resize(m_);
        live_.assign(m_, 1);
        int slack_at = n_struct_, art_at = n_struct_ + n_slack_;
        for (int r = 0; r < m_; ++r) {
            for (int j = 0; j < n_struct_; ++j) at(r, j) = prob.rows[r][j];
            if (prob.type[r] == 'L') {
                at(r, slack_at) = 1.0;
                basis_[r] = slack_at++;
            } else {
                at(r, art_at) = 1.0;
                basis_[r] = art_at++;
            }
        }
        art_begin_ = n_struct_ + n_slack_;
    }

    double& at(int r, int j) { return T_[static_cast<size_t>(r) * n_ + j]; }
    double at(int r, int j) const { return T_[static_cast<size_t>(r) * n_ + j]; }

    int rows() const { return m_; }
    int cols() const { return n_; }
    int art_begin() const { return art_begin_; }
    int basis(int r) const { return basis_[r]; }
    double rhs(int r) const { return b_[r]; }
    bool live(int r) const { return live_[r] != 0; }

    void pivot(int pr, int pc) {
        double inv = 1.0 / at(pr, pc);
        double* prow = &T_[static_cast<size_t>(pr) * n_];
        for (int j = 0; j < n_; ++j) prow[j] *= inv;
        prow[pc] = 1.0;
        b_[pr] *= inv;
        double bp = b_[pr];
#pragma omp parallel for schedule(static) if (m_ >= 384)
        for (int r = 0; r < m_; ++r) {
            if (r == pr || !live_[r]) continue;
            double f = at(r, pc);
            if (f == 0.0) continue;
            double* row = &T_[static_cast<size_t>(r) * n_];
            for (int j = 0; j < n_; ++j) row[j] -= f * prow[j];
            row[pc] = 0.0;
            b_[r] -= f * bp;
            if (b_[r] < 0.0 && b_[r] > -kTol) b_[r] = 0.0;
        }
        basis_[pr] = pc;
    }

    // Minimize d.x from the current canonical basis; `allowed` masks columns
    // that may enter. d and obj are updated in place.
    long run(std::vector<double>& d, double& obj, const std::vector<char>& allowed, long max_iter,
             long bland_after) {
        long it = 0;
        for (; it < max_iter; ++it) {
            bool bland = it >= bland_after;
            int e = -1;
            if (bland) {
                for (int j = 0; j < n_; ++j)
                    if (allowed[j] && d[j] < -kTol) {
                        e = j;
                        break;
                    }
            } else {
                double best = -kTol;
                for (int j = 0; j < n_; ++j)
                    if (allowed[j] && d[j] < best) {
                        best = d[j];
                        e = j;
                    }
            }
            if (e < 0) return it;  // optimal
            int leave = -1;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (int r = 0; r < m_; ++r) {
                if (!live_[r]) continue;
                double a = at(r, e);
                if (a > kTol) {
                    double ratio = b_[r] / a;
                    bool better = ratio < best_ratio - 1e-12;
                    bool tie = !better && ratio < best_ratio + 1e-12 && leave >= 0;
                    if (better || (tie && bland && basis_[r] < basis_[leave])) {
                        best_ratio = ratio;
                        leave = r;
                    }
                }
            }
            if (leave < 0) throw std::runtime_error("LP unbounded");
            double de = d[e];
            pivot(leave, e);
            obj += de * b_[leave];
            const double* prow = &T_[static_cast<size_t>(leave) * n_];
            for (int j = 0; j < n_; ++j) d[j] -= de * prow[j];
            d[e] = 0.0;
        }
        throw std::runtime_error("LP stall");
    }

    // After phase 1: pivot zero-level artificial basics out, or retire their
    // rows as redundant.
    void purge_artificials() {
        for (int r = 0; r < m_; ++r) {
            if (!live_[r] || basis_[r] < art_begin_) continue;
            int pc = -1;
            double best = 1e-7;
            for (int j = 0; j < art_begin_; ++j) {
                double a = std::abs(at(r, j));
                if (a > best) {
                    best = a;
                    pc = j;
                }
            }
            if (pc >= 0)
                pivot(r, pc);
            else
                live_[r] = 0;
        }
    }

  private:
    int m_, n_, n_struct_, n_slack_, n_art_, art_begin_;
    std::vector<double> T_;
    std::vector<double> b_;
    std::vector<int> basis_;
    std::vector<char> live_;
};

}  // namespace

SimplexResult simplex_maximize(const SimplexProblem& prob, const std::vector<double>& objective) {
    if (static_cast<int>(objective.size()) != prob.nvars)
        throw std::runtime_error("simplex: objective width mismatch");
    Tableau tab(prob);
    const int m = tab.rows(), n = tab.cols();
    const long bland_after = std::max<long>(2000, 10L * m);
    const long max_iter = std::max<long>(50000, 80L * m);
    long used = 0;

    std::vector<char> allowed(n, 1);

    if (tab.art_begin() < n) {
        // phase 1: minimize the artificial sum
        std::vector<double> d(n, 0.0);
        double obj = 0.0;
        for (int r = 0; r < m; ++r) {
            if (tab.basis(r) >= tab.art_begin()) {
                for (int j = 0; j < n; ++j) d[j] -= tab.at(r, j);
                obj += tab.rhs(r);
            }
        }
        for (int j = tab.art_begin(); j < n; ++j) d[j] = 0.0;
        used += tab.run(d, obj, allowed, max_iter, bland_after);
        if (obj > 1e-7) throw std::runtime_error("LP infeasible");
        tab.purge_artificials();
        for (int j = tab.art_begin(); j < n; ++j) allowed[j] = 0;
    }

    // phase 2: minimize -objective
    std::vector<double> d(n, 0.0);
    for (int j = 0; j < prob.nvars; ++j) d[j] = -objective[j];
    double obj = 0.0;
    for (int r = 0; r < m; ++r) {
        if (!tab.live(r)) continue;
        int bv = tab.basis(r);
        double cb = (bv < prob.nvars) ? -objective[bv] : 0.0;
        if (cb == 0.0) continue;
        obj += cb * tab.rhs(r);
        for (int j = 0; j < n; ++j) d[j] -= cb * tab.at(r, j);
    }
    for (int r = 0; r < m; ++r)
        if (tab.live(r)) d[tab.basis(r)] = 0.0;
    used += tab.run(d, obj, allowed, max_iter, bland_after);

    SimplexResult res;
    res.value = -obj;
    res.iterations = used;
    res.x.assign(prob.nvars, 0.0);
    for (int r = 0; r < m; ++r)
        if (tab.live(r) && tab.basis(r) < prob.nvars) res.x[tab.basis(r)] = tab.rhs(r);
    return res;
}

}  // namespace ilp
