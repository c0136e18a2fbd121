#include "gctsp/random_stream.hpp"

#include <cmath>

namespace gctsp {

int sample_poisson1(RandomStream& rng) {
  static const double kInverseE = std::exp(-1.0);
  int draws = 0;
  double product = 1.0;
  do {
    product *= rng.uniform01();
    ++draws;
  } while (product >= kInverseE);
  return draws - 1;
}

}  // namespace gctsp
