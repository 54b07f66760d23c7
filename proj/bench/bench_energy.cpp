// Timing comparison between the serial reference evaluation and the
// OpenMP-parallel kernels, including a bitwise-equality check.  Run with
// --quick for a reduced workload.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "casimir/energy.hpp"
#include "casimir/material.hpp"

using namespace casimir;

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Case {
    std::string name;
    ShellSpec shell;
    double d;
    bool boyer;
};

int threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
    const AtomModel hydrogen = hydrogen_default();
    const ShellSpec c60 = c60_default();

    std::vector<Case> cases = {
        {"contact (C60, d=0.053)", c60, 0.053, false},
        {"mid range (R=1, Omega=1, d=0.1)", ShellSpec{1.0, 1.0}, 0.1, false},
        {"large sphere (R=20, Omega=1, d=1)", ShellSpec{20.0, 1.0}, 1.0, false},
        {"boyer contact (R=0.342, d=0.053)", c60, 0.053, true},
    };
    if (!quick)
        cases.push_back({"near field (R=0.5, Omega=100, d=0.02)", ShellSpec{0.5, 100.0}, 0.02,
                         false});

    std::printf("threads: %d\n", threads());
    std::printf("%-38s %10s %11s %8s %6s %s\n", "case", "serial[s]", "parallel[s]", "speedup",
                "l", "bitwise");
    bool all_equal = true;
    for (const Case& c : cases) {
        auto run_serial = [&] {
            return c.boyer ? reference::boyer_energy(c.shell.radius_nm, hydrogen, c.d)
                           : reference::interaction_energy(c.shell, hydrogen, c.d);
        };
        auto run_parallel = [&] {
            return c.boyer ? boyer_energy(c.shell.radius_nm, hydrogen, c.d)
                           : interaction_energy(c.shell, hydrogen, c.d);
        };
        auto t0 = std::chrono::steady_clock::now();
        const EnergyResult s = run_serial();
        const double ts = seconds(t0);
        t0 = std::chrono::steady_clock::now();
        const EnergyResult p = run_parallel();
        const double tp = seconds(t0);
        const bool equal = s.energy_eV == p.energy_eV && s.l_used == p.l_used &&
                           s.quad_error_estimate == p.quad_error_estimate;
        all_equal = all_equal && equal;
        std::printf("%-38s %10.4f %11.4f %7.2fx %6d %s\n", c.name.c_str(), ts, tp, ts / tp,
                    p.l_used, equal ? "yes" : "NO");
    }

    {
        std::vector<double> grid;
        const int n = quick ? 4 : 10;
        for (int i = 0; i < n; ++i) grid.push_back(0.06 * std::pow(10.0, i / double(n - 1)));
        const auto t0 = std::chrono::steady_clock::now();
        const auto rows = sweep(c60, hydrogen, grid);
        const double tp = seconds(t0);
        std::printf("%-38s %10s %11.4f %8s %6zu rows\n", "sweep (C60, 0.06..0.6 nm)", "-", tp,
                    "-", rows.size());
    }

    if (!all_equal) {
        std::printf("parallel results deviate from the serial reference\n");
        return 1;
    }
    return 0;
}
