#pragma once

#include "localcut/algorithms.hpp"
#include "localcut/analysis.hpp"
#include "localcut/appendix.hpp"
#include "localcut/cutsearch.hpp"
#include "localcut/generators.hpp"
#include "localcut/graph.hpp"
#include "localcut/interval.hpp"
#include "localcut/monte_carlo.hpp"
#include "localcut/ngraph.hpp"
#include "localcut/random_bits.hpp"
#include "localcut/rational.hpp"
