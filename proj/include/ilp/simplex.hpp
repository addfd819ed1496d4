#pragma once

#include <vector>

#include "ilp/common.hpp"

namespace ilp {

// Dense two-phase simplex for
//     max c.x   s.t.  A x (<= or =) b,  x >= 0,
// with every b >= 0 (callers arrange this). Dantzig pricing with a permanent
// switch to Bland's rule when progress stalls, so cycling cannot occur.
struct SimplexProblem {
    int nvars = 0;
    std::vector<std::vector<double>> rows;  // dense, each of size nvars
    std::vector<double> rhs;
    std::vector<char> type;  // 'L' (<=) or 'E' (=)

    void add_row(std::vector<double> coeffs, char t, double b);
};

struct SimplexResult {
    double value = 0.0;
    std::vector<double> x;
    long iterations = 0;
};

SimplexResult simplex_maximize(const SimplexProblem& prob, const std::vector<double>& objective);

}  // namespace ilp
