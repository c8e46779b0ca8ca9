#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polymix/report.hpp"

namespace polymix {

/// Seeded batch of one verification statement. Instances are generated
/// deterministically per seed; the same spec always yields byte-identical
/// reports, in seed order.
struct BatchSpec {
  std::string statement;
  int dim = 2;
  uint64_t seed_begin = 0;
  uint64_t seed_end = 0;  // inclusive
  int vertex_budget = 6;
  int coordinate_height = 16;
  long mc_samples = 1000000;
  int grid_points = 20;
};

/// Statement ids accepted by run_statement_batch.
const std::vector<std::string>& known_statements();

std::vector<Report> run_statement_batch(const BatchSpec& spec);

}  // namespace polymix
