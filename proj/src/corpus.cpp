#include "ilp/corpus.hpp"

#include <cmath>

namespace ilp {

namespace {

// map x to the box-normalized coordinate in [-1,1] per axis
Pt normalized(const Grid& g, const Pt& p) {
    Pt lo = g.lower(), hi = g.upper();
    Pt r{0.0, 0.0};
    r[0] = 2.0 * (p[0] - lo[0]) / (hi[0] - lo[0]) - 1.0;
    if (g.dim() == 2) r[1] = 2.0 * (p[1] - lo[1]) / (hi[1] - lo[1]) - 1.0;
    return r;
}

Pt box_center(const Grid& g) {
    Pt lo = g.lower(), hi = g.upper();
    return Pt{0.5 * (lo[0] + hi[0]), g.dim() == 2 ? 0.5 * (lo[1] + hi[1]) : 0.0};
}

}  // namespace

GridFunction corpus_constant(const Grid& g, double c) {
    return GridFunction(g, [c](Pt) { return c; });
}

GridFunction corpus_indicator(const Grid& g, double half_width_frac) {
    Pt c = box_center(g);
    double r = half_width_frac * g.diameter() / 2.0;
    return GridFunction(g, [&](Pt p) { return dist(p, c, g.dim()) < r ? 1.0 : 0.0; });
}

GridFunction corpus_tent(const Grid& g, double width_frac) {
    Pt c = box_center(g);
    double r = width_frac * g.diameter() / 2.0;
    return GridFunction(g, [&](Pt p) { return std::max(0.0, 1.0 - dist(p, c, g.dim()) / r); });
}

GridFunction corpus_power_singularity(const Grid& g, double a) {
    Pt c = box_center(g);
    double h = g.spacing();
    return GridFunction(
        g, [&](Pt p) { return std::pow(std::max(dist(p, c, g.dim()), h), -a); });
}

GridFunction corpus_oscillation(const Grid& g, int k) {
    return GridFunction(g, [&](Pt p) {
        Pt u = normalized(g, p);
        double r2 = g.dim() == 1 ? u[0] * u[0] : u[0] * u[0] + u[1] * u[1];
        double window = std::max(0.0, 1.0 - r2);
        return std::sin(k * 3.14159265358979323846 * u[0]) * window;
    });
}

GridFunction corpus_log(const Grid& g) {
    Pt c = box_center(g);
    double h = g.spacing();
    return GridFunction(g, [&](Pt p) { return -std::log(std::max(dist(p, c, g.dim()), h)); });
}

GridFunction corpus_step(const Grid& g) {
    Pt c = box_center(g);
    return GridFunction(g, [&](Pt p) { return p[0] < c[0] ? -1.0 : 1.0; });
}

GridFunction corpus_random_piecewise(const Grid& g, unsigned seed, int cells) {
    SplitMix64 rng(seed);
    std::vector<double> levels(static_cast<size_t>(cells) * cells);
    for (auto& v : levels) v = rng.uniform(-1.0, 1.0);
    Pt lo = g.lower(), hi = g.upper();
    return GridFunction(g, [&](Pt p) {
        int i = std::min(cells - 1, static_cast<int>(cells * (p[0] - lo[0]) / (hi[0] - lo[0])));
        int j = 0;
        if (g.dim() == 2)
            j = std::min(cells - 1, static_cast<int>(cells * (p[1] - lo[1]) / (hi[1] - lo[1])));
        return levels[static_cast<size_t>(j) * cells + i];
    });
}

GridFunction corpus_smooth_bump(const Grid& g) {
    return GridFunction(g, [&](Pt p) {
        Pt u = normalized(g, p);
        double r2 = g.dim() == 1 ? u[0] * u[0] : u[0] * u[0] + u[1] * u[1];
        return std::exp(-8.0 * r2);
    });
}

namespace {

std::string corpus_hash(const std::vector<CorpusMember>& members) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const auto& m : members) {
        h = fnv1a(m.name.data(), m.name.size(), h);
        h = fnv1a(m.f.values().data(), m.f.values().size() * sizeof(double), h);
    }
    return hex64(h);
}

}  // namespace

Corpus Corpus::standard(const Grid& g, unsigned seed) {
    Corpus c;
    c.seed = seed;
    c.members.push_back({"const_one", corpus_constant(g, 1.0)});
    c.members.push_back({"indicator", corpus_indicator(g)});
    c.members.push_back({"tent", corpus_tent(g)});
    c.members.push_back({"power_sing", corpus_power_singularity(g, 0.3)});
    c.members.push_back({"oscillation", corpus_oscillation(g, 2)});
    c.members.push_back({"bmo_log", corpus_log(g)});
    c.members.push_back({"step", corpus_step(g)});
    c.members.push_back({"rand_pw", corpus_random_piecewise(g, seed)});
    c.members.push_back({"smooth_bump", corpus_smooth_bump(g)});
    c.members.push_back({"ramp", GridFunction(g, [&](Pt p) { return normalized(g, p)[0]; })});
    c.hash_hex = corpus_hash(c.members);
    return c;
}

Corpus Corpus::bmo(const Grid& g, unsigned seed) {
    Corpus c;
    c.seed = seed;
    c.members.push_back({"bmo_log", corpus_log(g)});
    c.members.push_back({"step", corpus_step(g)});
    c.members.push_back({"tent", corpus_tent(g)});
    c.members.push_back({"rand_pw", corpus_random_piecewise(g, seed)});
    c.hash_hex = corpus_hash(c.members);
    return c;
}

const GridFunction& Corpus::by_name(const std::string& name) const {
    for (const auto& m : members)
        if (m.name == name) return m.f;
    throw std::runtime_error("corpus: no member named " + name);
}

}  // namespace ilp
