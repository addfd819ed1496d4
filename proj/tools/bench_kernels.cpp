// Timing comparison of the OpenMP kernels against the serial reference
// implementations. Usage: bench_kernels [points] [dict_size]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "ilp/corpus.hpp"
#include "ilp/reference.hpp"

using namespace ilp;

namespace {

double now_s() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

template <class F>
double time_once(F&& fn) {
    double t0 = now_s();
    fn();
    return now_s() - t0;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %8.3fs   omp %8.3fs   speedup %5.2fx\n", name, serial, parallel,
                serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
    int points = argc > 1 ? std::atoi(argv[1]) : 257;
    int dict_size = argc > 2 ? std::atoi(argv[2]) : 128;
    std::printf("grid points %d, dictionary %d, threads %d\n", points, dict_size, max_threads());

    Grid g = Grid::line(-1.0, 1.0, points);
    GridFunction f = corpus_tent(g);
    HalfSpaceGrid hs = HalfSpaceGrid::geometric(g);
    AlphaEvaluator ev(1, 1.0, EvalMode::dictionary, 41, dict_size);

    Field field_ref, field_omp;
    report("a_alpha_field",
           time_once([&] { field_ref = ref::a_alpha_field(f, hs, ev); }),
           time_once([&] { field_omp = a_alpha_field(f, hs, ev); }));

    GridFunction s_ref = f, s_omp = f;
    report("s_alpha cone quadrature",
           time_once([&] { s_ref = ref::s_alpha_beta_from_field(field_ref, hs, 4.0); }),
           time_once([&] { s_omp = s_alpha_beta_from_field(field_omp, hs, 4.0); }));

    GridFunction gs_ref = f, gs_omp = f;
    report("g_star quadrature",
           time_once([&] { gs_ref = ref::g_star_from_field(field_ref, hs, 4.0); }),
           time_once([&] { gs_omp = g_star_from_field(field_omp, hs, 4.0); }));

    GrowthFunction phi = GrowthFunction::power(2.0);
    OuterFunction outer = OuterFunction::power(0.25);
    BallFamily balls = BallFamily::dyadic(g, 2);
    double n_ref = 0.0, n_omp = 0.0;
    report("morrey ball loop",
           time_once([&] { n_ref = ref::morrey_norm(f, phi, outer, balls); }),
           time_once([&] { n_omp = morrey_norm(f, phi, outer, balls); }));

    double drift = 0.0;
    for (long i = 0; i < g.size(); ++i) {
        drift = std::max(drift, std::abs(s_ref[i] - s_omp[i]));
        drift = std::max(drift, std::abs(gs_ref[i] - gs_omp[i]));
    }
    drift = std::max(drift, std::abs(n_ref - n_omp));
    std::printf("max serial/omp drift: %.3e\n", drift);
    return drift < 1e-12 ? 0 : 1;
}
