// Compares the serial reference path against the OpenMP path on the block
// TAP kernel (the per-block computations of the decomposition are
// independent). Results must agree exactly; timings are wall clock.
//
//   tapoly_bench [m] [n] [i] [reps]     (defaults: 3 3 1 3)

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "tapoly/parallel.hpp"
#include "tapoly/twobridge.hpp"

using namespace tapoly;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    TwoBridgeParams params;
    params.m = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 3;
    params.n = argc > 2 ? static_cast<unsigned>(std::atoi(argv[2])) : 3;
    params.sign = KnotSign::plus;
    unsigned index = argc > 3 ? static_cast<unsigned>(std::atoi(argv[3])) : 1;
    int reps = argc > 4 ? std::atoi(argv[4]) : 3;

    Presentation pres = lin_presentation(params);
    Abelianization alpha = abelianize(pres);
    MetabelianData data = metabelian_data(params, index);
    MetabelianIndex idx = metabelian_index(params, index);

    std::cout << "J(" << 2 * params.m << "," << 2 * params.n << "), i = " << index
              << ", blocks = " << idx.q << ", threads = " << thread_count() << "\n";

    std::vector<RationalFunction> serial, parallel;
    double t_serial = 1e300, t_parallel = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = Clock::now();
        serial = block_values(pres, data, alpha, idx.q, /*parallel=*/false);
        t_serial = std::min(t_serial, seconds_since(t0));

        t0 = Clock::now();
        parallel = block_values(pres, data, alpha, idx.q, /*parallel=*/true);
        t_parallel = std::min(t_parallel, seconds_since(t0));
    }

    bool equal = serial.size() == parallel.size();
    for (size_t j = 0; equal && j < serial.size(); ++j) equal = serial[j] == parallel[j];
    std::cout << "serial   " << t_serial << " s\n";
    std::cout << "parallel " << t_parallel << " s\n";
    std::cout << "speedup  " << t_serial / t_parallel << "x\n";
    std::cout << "results identical: " << (equal ? "yes" : "NO") << "\n";
    return equal ? 0 : 1;
}
