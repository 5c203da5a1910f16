#include <chrono>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ilat/gaussian.hpp"
#include "ilat/lattice.hpp"
#include "ilat/models.hpp"

using namespace ilat;

namespace {

double time_fill(const EntropyBackend& backend, const RectGeometry& geometry,
                 bool parallel) {
    BuildOptions opts;
    opts.parallel = parallel;
    const auto t0 = std::chrono::steady_clock::now();
    BuildResult r = build_lattice(backend, geometry, SubsystemPlan::full(), opts);
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (parallel ? "parallel" : "serial  ") << "  " << dt << " s  ("
              << r.table.size() << " entropies, total "
              << r.lattice.total() << " bits)\n";
    return dt;
}

} // namespace

int main(int argc, char** argv) {
    int l = argc > 1 ? std::atoi(argv[1]) : 12;
    AndersonSpec spec;
    spec.nx = l;
    spec.ny = l;
    spec.w = 5.0;
    spec.seed = 7;
    GaussianBackend backend(
        ground_state_number_conserving(anderson_hamiltonian(spec), l * l / 2));
    RectGeometry geometry = RectGeometry::site_lattice(l, l);
    std::cout << "anderson " << l << "x" << l << " full rectangle family\n";
#ifdef _OPENMP
    std::cout << "threads " << omp_get_max_threads() << "\n";
#endif
    const double serial = time_fill(backend, geometry, false);
    const double parallel = time_fill(backend, geometry, true);
    std::cout << "speedup " << serial / parallel << "x\n";
    return 0;
}
