// Benchmark of the OpenMP sweep kernels against the serial reference. Both
// paths must produce identical reports; the point of this tool is the wall
// clock comparison.

#include "hnpoly/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using hnpoly::ExecMode;
using hnpoly::SweepReport;

double run_timed(const std::function<SweepReport(ExecMode)>& sweep, ExecMode mode,
                 SweepReport& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = sweep(mode);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

int compare(const char* name, const std::function<SweepReport(ExecMode)>& sweep) {
    SweepReport serial, parallel;
    double ts = run_timed(sweep, ExecMode::serial, serial);
    double tp = run_timed(sweep, ExecMode::parallel, parallel);
    bool identical = serial == parallel;
    std::printf("%-12s %10lld checks   serial %8.3fs   openmp %8.3fs   speedup %5.2fx   %s\n",
                name, static_cast<long long>(serial.instances_checked), ts, tp,
                tp > 0 ? ts / tp : 0.0, identical ? "reports identical" : "REPORT MISMATCH");
    return identical && serial.passed() ? 0 : 1;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; both runs use the serial path\n");
#endif
    int rc = 0;
    rc |= compare("area", [](ExecMode m) {
        return hnpoly::sweep_area_identity({7, 3, 3}, m);
    });
    rc |= compare("step1", [](ExecMode m) { return hnpoly::sweep_step1(5, 3, 2, 2, m); });
    rc |= compare("step2", [](ExecMode m) { return hnpoly::sweep_step2(5, 2, 2, m); });
    rc |= compare("dims", [](ExecMode m) { return hnpoly::sweep_quantitative_dim(3, 2, 2, m); });
    rc |= compare("closure", [](ExecMode m) { return hnpoly::sweep_downset_counts(5, 4, m); });
    return rc;
}
