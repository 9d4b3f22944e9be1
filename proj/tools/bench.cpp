// Timing comparison of the OpenMP kernels against their serial reference
// implementations. Results are exact either way; this only measures wall
// time.
#include "equigen/goettsche.hpp"
#include "equigen/parallel.hpp"
#include "equigen/rh.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <iostream>
#include <random>

using namespace equigen;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

RepSeries random_series(const TablePtr& t, long order, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> degree(0, 6);
    RepSeries s(t, order);
    for (long n = 0; n <= order; ++n) {
        ClassFunction f(t);
        for (int i = 0; i < t->num_irreps(); ++i)
            f += ClassFunction::irreducible(t, i) * Cyclotomic(coeff(rng));
        s.coeff(n).add_component(degree(rng), f);
        s.coeff(n).add_component(degree(rng) + 1, ClassFunction::trivial(t) * Cyclotomic(coeff(rng)));
    }
    return s;
}

void row(const std::string& name, double serial, double parallel) {
    std::printf("%-34s %9.3fs %9.3fs %7.2fx\n", name.c_str(), serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equigen kernel benchmark: serial reference vs OpenMP"};
    long order = 400;
    int reps = 3;
    app.add_option("--order", order, "series truncation order (default 400)");
    app.add_option("--reps", reps, "repetitions per measurement (default 3)");
    CLI11_PARSE(app, argc, argv);

    std::cout << "threads available: " << parallel_hardware_threads() << "\n";
    std::printf("%-34s %10s %10s %8s\n", "kernel", "serial", "parallel", "speedup");

    std::mt19937 rng(1234);
    {
        const TablePtr t = builtin_table("Z2");
        const RepSeries a = random_series(t, order, rng);
        const RepSeries b = random_series(t, order, rng);
        const auto t0 = Clock::now();
        for (int r = 0; r < reps; ++r) (void)series_mul_serial(a, b);
        const double serial = seconds_since(t0) / reps;
        set_parallel_enabled(true);
        const auto t1 = Clock::now();
        for (int r = 0; r < reps; ++r) (void)series_mul(a, b);
        const double parallel = seconds_since(t1) / reps;
        if (series_mul(a, b) != series_mul_serial(a, b)) {
            std::cerr << "kernel mismatch\n";
            return 1;
        }
        row("series_mul Z2 order " + std::to_string(order), serial, parallel);
    }
    {
        const TablePtr t = builtin_table("S5");
        const long s5_order = order / 4;
        const RepSeries a = random_series(t, s5_order, rng);
        const RepSeries b = random_series(t, s5_order, rng);
        const auto t0 = Clock::now();
        for (int r = 0; r < reps; ++r) (void)series_mul_serial(a, b);
        const double serial = seconds_since(t0) / reps;
        set_parallel_enabled(true);
        const auto t1 = Clock::now();
        for (int r = 0; r < reps; ++r) (void)series_mul(a, b);
        const double parallel = seconds_since(t1) / reps;
        row("series_mul S5 order " + std::to_string(s5_order), serial, parallel);
    }
    {
        RHConstraints loose;
        loose.require_rational_quotient = false;
        loose.forbid_always_fixed_irreps = false;
        const TablePtr t = builtin_table("S5");
        const auto t0 = Clock::now();
        for (int r = 0; r < reps; ++r) (void)enumerate_branch_data_serial(t, 6, loose);
        const double serial = seconds_since(t0) / reps;
        set_parallel_enabled(true);
        const auto t1 = Clock::now();
        for (int r = 0; r < reps; ++r) (void)enumerate_branch_data(t, 6, loose);
        const double parallel = seconds_since(t1) / reps;
        row("rh-search S5 max-branch 6", serial, parallel);
    }
    return 0;
}
