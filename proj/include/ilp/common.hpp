#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ilp {

// Points live in R^1 or R^2; the unused coordinate stays 0.
using Pt = std::array<double, 2>;

inline double dist(const Pt& a, const Pt& b, int dim) {
    double dx = a[0] - b[0];
    if (dim == 1) return std::abs(dx);
    double dy = a[1] - b[1];
    return std::sqrt(dx * dx + dy * dy);
}

inline double norm2(const Pt& a, int dim) {
    return dim == 1 ? std::abs(a[0]) : std::sqrt(a[0] * a[0] + a[1] * a[1]);
}

// Deterministic sum of fn(0..n-1): static chunks, per-thread partials,
// serial combine. Result is independent of scheduling for a fixed thread
// count and identical to the serial sum when nthreads == 1.
template <class F>
double parallel_sum(long n, F&& fn, long min_parallel = 2048) {
#ifdef _OPENMP
    int nt = omp_get_max_threads();
    if (nt > 1 && n >= min_parallel) {
        std::vector<double> partial(nt, 0.0);
#pragma omp parallel num_threads(nt)
        {
            int id = omp_get_thread_num();
            double acc = 0.0;
#pragma omp for schedule(static)
            for (long i = 0; i < n; ++i) acc += fn(i);
            partial[id] = acc;
        }
        double s = 0.0;
        for (double v : partial) s += v;
        return s;
    }
#endif
    double s = 0.0;
    for (long i = 0; i < n; ++i) s += fn(i);
    return s;
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

// FNV-1a over raw bytes; used to content-address corpora in reports.
inline std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t h = 0xcbf29ce484222325ull) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf);
}

// 17 significant digits: round-trips any finite double through text.
inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
}

// xorshift-based splitmix64; used where a seeded stream of doubles must be
// stable across platforms and standard-library versions.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [0,1)
    double uniform() { return (next() >> 11) * 0x1.0p-53; }
    // uniform in [a,b)
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    // uniform integer in [0, n)
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

}  // namespace ilp
