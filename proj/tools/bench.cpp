// Benchmark for the summation kernels: the straight left fold (reference)
// against the balanced-tree reduction, serial and with OpenMP tasks.  All
// three must agree bit-for-bit since every path sums the same rationals; the
// interesting numbers are the timings, because the tree keeps intermediate
// numerators small while the fold drags a growing denominator through every
// addition.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "madhava/rational.hpp"
#include "madhava/summation.hpp"

namespace {

using madhava::Integer;
using madhava::Rational;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename Value, typename Term>
void run_case(const std::string& label, unsigned long count, Term term) {
    auto t0 = std::chrono::steady_clock::now();
    Value folded = madhava::summation::fold<Value>(count, term);
    double fold_s = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    Value tree_serial =
        madhava::summation::reduce<Value>(count, term, madhava::summation::Mode::serial);
    double serial_s = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    Value tree_parallel =
        madhava::summation::reduce<Value>(count, term, madhava::summation::Mode::parallel);
    double parallel_s = seconds_since(t0);

    const bool agree = folded == tree_serial && tree_serial == tree_parallel;
    std::printf("%-28s n=%-9lu fold %8.3fs   tree %8.3fs   tree+omp %8.3fs   %s\n",
                label.c_str(), count, fold_s, serial_s, parallel_s,
                agree ? "results identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Timing comparison of the exact summation kernels"};
    unsigned long pi_terms = 20000;
    unsigned long powersum_upper = 200000;
    unsigned long quadrant_segments = 20000;
    app.add_option("--pi-terms", pi_terms, "Terms of the alternating pi series");
    app.add_option("--powersum-upper", powersum_upper, "Upper limit of the cubic power sum");
    app.add_option("--quadrant-segments", quadrant_segments,
                   "Segment count for the quarter-circle chord sum");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled at build time\n");
#endif

    run_case<Rational>("pi alternating series", pi_terms, [](unsigned long n) {
        Rational term(Integer(1), Integer(2 * n + 1));
        return n % 2 == 0 ? term : -term;
    });

    // The explicit return type matters: without it the lambda would deduce a
    // gmpxx expression template that refers to the dead local `v`.
    run_case<Integer>("cubic power sum", powersum_upper, [](unsigned long n) -> Integer {
        Integer v(n + 1);
        return v * v * v;
    });

    const Integer n_sq = Integer(quadrant_segments) * Integer(quadrant_segments);
    run_case<Rational>("quarter-circle chord sum", quadrant_segments,
                       [&n_sq, quadrant_segments](unsigned long n) {
                           Integer k(n + 1);
                           return Rational(Integer(quadrant_segments), n_sq + k * k);
                       });

    return 0;
}
