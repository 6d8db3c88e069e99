// Times the OpenMP kernels against their serial reference implementations.
// Results must agree bit for bit; the wall-clock ratio is informational.
//
//   ./htt-bench [repeats]

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "htt/fincat.hpp"
#include "htt/hall.hpp"
#include "htt/lifting.hpp"

using namespace htt;

namespace {

double time_of(const std::function<void()>& f, int repeats) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < repeats; ++i) f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / repeats;
}

void row(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s %10.2f ms %10.2f ms %8.2fx\n", name, serial_ms,
                parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

fincat::FinCategory pair_groupoid(int n) {
    fincat::FinCategory C;
    for (int i = 0; i < n; ++i) C.objects.push_back("g" + std::to_string(i));
    std::vector<std::vector<int>> midx(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            midx[a][b] = C.morphism_count();
            C.morphisms.push_back({"e" + std::to_string(a) + std::to_string(b), a, b});
        }
    C.identity.resize(n);
    for (int i = 0; i < n; ++i) C.identity[i] = midx[i][i];
    C.table.assign(C.morphism_count(), std::vector<int>(C.morphism_count(), -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) C.table[midx[b][c]][midx[a][b]] = midx[a][c];
    return C;
}

} // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
    std::printf("OpenMP: %d threads\n", omp_get_max_threads());
#else
    std::printf("OpenMP: not compiled in\n");
#endif
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel",
                "speedup");

    {
        const auto N = fincat::nerve(pair_groupoid(4), 3);
        const double s = time_of(
            [&] { (void)lifting::analyze(N, 3, Exec::Serial); }, repeats);
        const double p = time_of(
            [&] { (void)lifting::analyze(N, 3, Exec::Parallel); }, repeats);
        row("horn filler analysis", s, p);
    }
    {
        hall::Quiver Q;
        Q.vertices = {"1", "2"};
        Q.arrows = {{"a", 0, 1}};
        const hall::DimVec d{2, 2};
        const double s = time_of(
            [&] { (void)hall::enumerate_reps(Q, 3, d, 300000000, Exec::Serial); },
            repeats);
        const double p = time_of(
            [&] { (void)hall::enumerate_reps(Q, 3, d, 300000000, Exec::Parallel); },
            repeats);
        row("orbit classification", s, p);
    }
    {
        hall::Quiver Q;
        Q.vertices = {"1"};
        hall::Rep X{3, {2}, {}}, Y{3, {1}, {}}, Z{3, {3}, {}};
        const double s = time_of(
            [&] { (void)hall::hall_number(Q, X, Y, Z, Exec::Serial); }, repeats);
        const double p = time_of(
            [&] { (void)hall::hall_number(Q, X, Y, Z, Exec::Parallel); }, repeats);
        row("hall number pairs", s, p);
    }
    {
        const double s = time_of(
            [&] { (void)hall::derived_associativity(2, 0, 1, 2, Exec::Serial); },
            repeats);
        const double p = time_of(
            [&] { (void)hall::derived_associativity(2, 0, 1, 2, Exec::Parallel); },
            repeats);
        row("derived associativity", s, p);
    }
    return 0;
}
