// Compares the serial case runner with the OpenMP one on the heavy suites
// and checks that both produce identical reports.

#include <chrono>
#include <iostream>

#include "fvw/parallel.hpp"
#include "fvw/solver.hpp"
#include "fvw/suites.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double time_best_of(int reps, const std::function<void()>& fn) {
    double best = 1e100;
    for (int i = 0; i < reps; ++i) {
        auto t0 = Clock::now();
        fn();
        double s = std::chrono::duration<double>(Clock::now() - t0).count();
        if (s < best) best = s;
    }
    return best;
}

void row(const std::string& name, double serial, double parallel, bool identical) {
    std::printf("%-28s %10.3fs %10.3fs %8.2fx   %s\n", name.c_str(), serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, identical ? "outputs-match" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    int reps = argc > 1 ? std::atoi(argv[1]) : 2;
    std::printf("case runner: %d threads available, best of %d runs\n",
                fvw::hardware_threads(), reps);
    std::printf("%-28s %11s %11s %9s\n", "workload", "serial", "openmp", "speedup");

    {
        fvw::SessionConfig serial_cfg;
        serial_cfg.samples = 400;
        serial_cfg.parallel = false;
        fvw::SessionConfig par_cfg = serial_cfg;
        par_cfg.parallel = true;
        std::string a, b;
        double ts = time_best_of(
            reps, [&] { a = fvw::run_suite("derived-ring-axioms", serial_cfg).to_json().dump(); });
        double tp = time_best_of(
            reps, [&] { b = fvw::run_suite("derived-ring-axioms", par_cfg).to_json().dump(); });
        row("derived-ring-axioms x400", ts, tp, a == b);
    }
    {
        std::vector<fvw::Rational> pool{fvw::Rational(-2), fvw::Rational(-1), fvw::Rational(0),
                                        fvw::Rational(1), fvw::Rational(2)};
        std::vector<fvw::NcPoly> a, b;
        double ts = time_best_of(reps, [&] {
            a = fvw::exhaustive_mul_search(pool, fvw::Rational(0), fvw::Rational(1), false);
        });
        double tp = time_best_of(reps, [&] {
            b = fvw::exhaustive_mul_search(pool, fvw::Rational(0), fvw::Rational(1), true);
        });
        row("mul-template search 5^7", ts, tp, a.size() == b.size());
    }
    {
        std::vector<fvw::Rational> pool{fvw::Rational(-2), fvw::Rational(-1), fvw::Rational(0),
                                        fvw::Rational(1), fvw::Rational(2)};
        fvw::ActionKernelResult a, b;
        double ts = time_best_of(reps, [&] {
            a = fvw::derived_action_kernel_search(-3, 3, pool, fvw::Rho::identity, false);
        });
        double tp = time_best_of(reps, [&] {
            b = fvw::derived_action_kernel_search(-3, 3, pool, fvw::Rho::identity, true);
        });
        row("action-kernel 5^7 window", ts, tp,
            a.survivors.size() == b.survivors.size() && a.tested == b.tested);
    }
    {
        fvw::SessionConfig serial_cfg;
        serial_cfg.samples = 400;
        serial_cfg.parallel = false;
        fvw::SessionConfig par_cfg = serial_cfg;
        par_cfg.parallel = true;
        std::string a, b;
        double ts = time_best_of(
            reps, [&] { a = fvw::run_suite("central-map", serial_cfg).to_json().dump(); });
        double tp = time_best_of(
            reps, [&] { b = fvw::run_suite("central-map", par_cfg).to_json().dump(); });
        row("central-map x400", ts, tp, a == b);
    }
    return 0;
}
