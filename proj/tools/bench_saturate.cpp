// Benchmarks the OpenMP-parallel saturation lane against the serial
// reference lane on B(P) builds and checks that both produce identical
// reduced bases.

#include <chrono>
#include <cstdio>
#include <string>

#include "pcoact/io.hpp"
#include "pcoact/universal.hpp"

using namespace pcoact;
using Clock = std::chrono::steady_clock;

namespace {

double run_lane(const RelationSet& rels, std::size_t D, std::size_t m, bool parallel,
                QuotientContext& out) {
    SaturateOptions opts;
    opts.parallel = parallel;
    opts.budget = 2000000;
    auto t0 = Clock::now();
    out = saturate(rels, D, m, opts);
    auto t1 = Clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

PoissonAlgebraData dual_numbers() {
    PoissonAlgebraData a;
    a.dim = 2;
    a.basis_labels = {"1", "x"};
    a.set_mul(0, 0, 0, 1);
    a.set_mul(0, 1, 1, 1);
    a.set_mul(1, 0, 1, 1);
    return a;
}

PoissonAlgebraData three_dim() {
    PoissonAlgebraData a;
    a.dim = 3;
    a.basis_labels = {"1", "x", "y"};
    for (std::size_t i = 0; i < 3; ++i) {
        a.set_mul(0, i, i, 1);
        if (i) a.set_mul(i, 0, i, 1);
    }
    a.set_bracket(1, 2, 1, 1);
    a.set_bracket(2, 1, 1, -1);
    return a;
}

void bench(const std::string& name, const PoissonAlgebraData& P, std::size_t D, std::size_t m) {
    std::size_t dummy = 0;
    RelationSet rels;
    {
        Presentation pres = build_universal(P, P, 2, 0);
        rels = pres.relations;
        dummy = pres.alphabet();
    }
    QuotientContext serial, parallel;
    double ts = run_lane(rels, D, m, false, serial);
    double tp = run_lane(rels, D, m, true, parallel);
    bool same = (serial == parallel);
    std::printf("%-18s gens=%-3zu D=%zu m=%zu  serial %8.3fs  parallel %8.3fs  speedup %5.2fx  identical=%s\n",
                name.c_str(), dummy, D, m, ts, tp, tp > 0 ? ts / tp : 0.0,
                same ? "yes" : "NO");
    if (!same) std::exit(1);
}

} // namespace

int main() {
    bench("B(dual numbers)", dual_numbers(), 3, 2);
    bench("B(dual numbers)", dual_numbers(), 4, 2);
    bench("B(3-dim)", three_dim(), 3, 1);
    bench("B(3-dim)", three_dim(), 3, 2);
    return 0;
}
