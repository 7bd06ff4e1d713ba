#ifndef NCERGO_VERIFY_HPP
#define NCERGO_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ncergo/surd.hpp"

namespace ncergo {

struct SuiteResult {
  std::string suite;
  std::string invariant;
  bool pass = false;
  double deviation = 0.0;
};

// Runs the property suites (optionally filtered by suite name). Suites:
// qtorus, folner, action, tensor, group.
std::vector<SuiteResult> run_verify_suites(std::uint64_t seed,
                                           const std::string& suite_filter = "");

// Max deviation between the symbolic algebra and the truncated
// representation at the given radius: adjoint and trace per element, products
// on consecutive pairs, compared on interior columns.
double oracle_equivalence_deviation(std::uint64_t seed, const SurdScalar& theta, int samples,
                                    int radius, int support, int terms);

}  // namespace ncergo

#endif  // NCERGO_VERIFY_HPP
