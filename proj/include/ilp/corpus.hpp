#pragma once

#include "ilp/grid.hpp"

namespace ilp {

struct CorpusMember {
    std::string name;
    GridFunction f;
};

// Fixed analytic test-function set: constants, indicators, tents, clamped
// power singularities, windowed oscillations, clamped logs, seeded piecewise
// noise. Content-addressed so reports can pin what they ran on.
struct Corpus {
    std::vector<CorpusMember> members;
    unsigned seed = 0;
    std::string hash_hex;

    static Corpus standard(const Grid& g, unsigned seed = 12345u);
    static Corpus bmo(const Grid& g, unsigned seed = 12345u);

    const GridFunction& by_name(const std::string& name) const;
};

// single members, exposed for tests and CLI corpus generation
GridFunction corpus_constant(const Grid& g, double c);
GridFunction corpus_indicator(const Grid& g, double half_width_frac = 0.25);
GridFunction corpus_tent(const Grid& g, double width_frac = 0.25);
GridFunction corpus_power_singularity(const Grid& g, double a);
GridFunction corpus_oscillation(const Grid& g, int k);
GridFunction corpus_log(const Grid& g);
GridFunction corpus_step(const Grid& g);
GridFunction corpus_random_piecewise(const Grid& g, unsigned seed, int cells = 8);
GridFunction corpus_smooth_bump(const Grid& g);

}  // namespace ilp
