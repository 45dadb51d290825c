// Compares the serial reference subset-scan kernel against the OpenMP DP
// kernel on gluing gadgets of increasing size, and times the equivalence
// harness at 1 vs all threads.

#include <chrono>
#include <cmath>
#include <cstdio>

#include <omp.h>

#include "bipmin/catalog.hpp"
#include "bipmin/corpus.hpp"
#include "bipmin/harness.hpp"
#include "bipmin/laman.hpp"

using namespace bipmin;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

} // namespace

int main() {
    std::printf("subset scan: serial reference vs OpenMP DP kernel (%d threads)\n",
                omp_get_max_threads());
    std::printf("%-12s %8s %8s %12s %12s %8s\n", "graph", "n", "subsets", "serial[s]",
                "parallel[s]", "speedup");
    for (int n = 3; n <= 6; ++n) {
        BiGraph g = catalog::build_gadget(n);
        auto t0 = Clock::now();
        SubsetScanBest serial = subset_scan_serial(g);
        double ts = seconds_since(t0);
        t0 = Clock::now();
        SubsetScanBest parallel = subset_scan(g);
        double tp = seconds_since(t0);
        if (!(serial == parallel)) {
            std::printf("KERNEL MISMATCH on gadget(%d)!\n", n);
            return 1;
        }
        std::printf("gadget(%-2d)   %8d %8.0f %12.4f %12.4f %7.2fx\n", n, g.vertex_count(),
                    std::pow(2.0, g.vertex_count()), ts, tp, ts / tp);
    }

    std::printf("\nequivalence harness (forest, all connected bipartite graphs <= 7)\n");
    auto corpus = all_bipartite_graphs(7, true);
    for (int jobs : {1, omp_get_max_threads()}) {
        omp_set_num_threads(jobs);
        auto t0 = Clock::now();
        HarnessReport r = run_equivalence_harness(Theorem::Forest, corpus);
        std::printf("  jobs=%d: %zu graphs in %.3f s (clean=%s)\n", jobs, r.corpus.size(),
                    seconds_since(t0), r.clean() ? "yes" : "no");
    }
    return 0;
}
