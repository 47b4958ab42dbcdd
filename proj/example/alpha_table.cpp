// Prints the best threshold for each degree in [lo, hi] together with the
// exact expected cut fraction it achieves on d-regular triangle-free graphs.

#include <cstdlib>
#include <iostream>

#include "localcut/analysis.hpp"

int main(int argc, char** argv) {
    const int lo = argc > 1 ? std::atoi(argv[1]) : 2;
    const int hi = argc > 2 ? std::atoi(argv[2]) : 16;
    for (int d = lo; d <= hi; ++d) {
        auto best = localcut::optimal_tau(d);
        std::cout << "d=" << d << " tau=" << best.tau << " alpha=" << localcut::to_fraction_string(best.alpha)
                  << " (" << localcut::to_double(best.alpha) << ")\n";
    }
}
