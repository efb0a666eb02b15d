// Benchmark of the parallel distance kernels against their single-threaded
// reference implementations, on Grassl-Rotteler codes of growing size.

#include <chrono>
#include <cstdio>

#include "grcert/constructions.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace grcert;

namespace {

template <typename F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void bench_case(std::uint32_t p, std::uint32_t h, std::uint32_t k) {
    auto tower = make_tower(p, h);
    auto [code, grcase] = gr_code(tower, k);
    const std::uint64_t evals = projective_message_count(tower->q(), k);

    std::uint32_t d_serial = 0, d_parallel = 0;
    const double ms_serial = time_ms([&] { d_serial = min_distance_serial(code); });
    const double ms_parallel = time_ms([&] { d_parallel = min_distance(code); });
    std::printf("q=%-3u k=%-2u  %12llu evals  serial %9.2f ms  parallel %9.2f ms  speedup %5.2fx  d=%u%s\n",
                tower->q(), k, static_cast<unsigned long long>(evals), ms_serial, ms_parallel,
                ms_parallel > 0 ? ms_serial / ms_parallel : 0.0, d_parallel,
                d_serial == d_parallel ? "" : "  MISMATCH");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled: parallel kernels run serially\n");
#endif
    bench_case(3, 2, 5);  // 9^5 scale
    bench_case(11, 1, 6); // 11^6
    bench_case(13, 1, 6); // 13^6
    bench_case(13, 1, 7); // 13^7
    return 0;
}
