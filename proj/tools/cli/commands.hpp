#pragma once

#include "config.hpp"
#include "figures.hpp"
#include "output.hpp"

#include <ostream>

namespace casimir::cli {

/// Runs a validated configuration and returns its result table.
Table execute(const RunConfig& cfg);

Table dataset_table(const Dataset& ds);

/// Executes and writes to cfg.output_path (or `fallback` when empty) in the
/// configured format. Returns the process exit code.
int run(const RunConfig& cfg, std::ostream& fallback);

}  // namespace casimir::cli
