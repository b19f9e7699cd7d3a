// Compares the OpenMP kernels against their serial references on the
// heavier exact workloads: F-matrix assembly, minor-table fill and the
// per-trim index sweep.  Results must agree exactly; timings show the
// parallel speedup.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "momenta/corpus.hpp"
#include "momenta/determinacy.hpp"
#include "momenta/hankel.hpp"
#include "momenta/real.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace momenta;

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
}

template <typename F> double time_ms(F&& f, int reps) {
    auto start = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) f();
    return ms_since(start) / reps;
}

} // namespace

int main(int argc, char** argv) {
    set_real_precision_bits(256);
    int reps = argc > 1 ? std::atoi(argv[1]) : 3;

#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: disabled (serial build)\n");
#endif

    MomentSequence heavy = corpus::get("heavy_tail", 17);
    MomentSequence sym = symmetrize(heavy);

    // F-matrix: k^2 independent bordered minors on huge integers.
    const std::size_t k = 8, n = 8;
    hankel::FMatrix par, ser;
    double t_par = time_ms([&] { par = hankel::f_matrix(sym, k, n); }, reps);
    double t_ser =
        time_ms([&] { ser = hankel::serial::f_matrix(sym, k, n); }, reps);
    bool same = par.det == ser.det;
    std::printf("f_matrix(k=%zu,n=%zu)      serial %8.2f ms  parallel %8.2f ms  "
                "speedup %.2fx  equal=%s\n",
                k, n, t_ser, t_par, t_ser / t_par, same ? "yes" : "NO");

    // Minor table batch fill.
    double t_warm_ser = time_ms(
        [&] {
            hankel::MinorTable table(sym);
            table.warm_serial(12, 6);
        },
        reps);
    double t_warm_par = time_ms(
        [&] {
            hankel::MinorTable table(sym);
            table.warm(12, 6);
        },
        reps);
    std::printf("minor_table.warm(12,6)   serial %8.2f ms  parallel %8.2f ms  "
                "speedup %.2fx\n",
                t_warm_ser, t_warm_par, t_warm_ser / t_warm_par);

    // Index sweep: independent per-trim diagnostics.
    MomentSequence gaussian = corpus::get("gaussian", 41);
    determinacy::IndexWindow wp, ws;
    double t_idx_par = time_ms(
        [&] { wp = determinacy::index_estimate(gaussian, 5, 15); }, reps);
    double t_idx_ser = time_ms(
        [&] { ws = determinacy::serial::index_estimate(gaussian, 5, 15); },
        reps);
    bool idx_same = wp.lower == ws.lower && wp.upper == ws.upper;
    std::printf("index_estimate(nmax=5)   serial %8.2f ms  parallel %8.2f ms  "
                "speedup %.2fx  equal=%s\n",
                t_idx_ser, t_idx_par, t_idx_ser / t_idx_par,
                idx_same ? "yes" : "NO");
    return same && idx_same ? 0 : 1;
}
