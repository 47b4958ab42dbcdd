// Runs the threshold rule and Shearer's rule on a random 3-regular
// triangle-free graph and compares the empirical means with the exact value.

#include <iostream>

#include "localcut/localcut.hpp"

int main() {
    using namespace localcut;
    auto g = gen_random_triangle_free(500, 3, kDefaultSeed);
    auto threshold = monte_carlo(g, AlgorithmSpec::threshold(3), 20000, kDefaultSeed);
    auto shearer = monte_carlo(g, AlgorithmSpec::shearer(), 20000, kDefaultSeed);
    std::cout << "exact     " << to_double(alpha(3, 3)) << '\n';
    std::cout << "threshold " << threshold.mean << " +- " << threshold.standard_error << '\n';
    std::cout << "shearer   " << shearer.mean << " +- " << shearer.standard_error << '\n';
}
