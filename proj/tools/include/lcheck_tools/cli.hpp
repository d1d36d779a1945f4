#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "lcheck/report.hpp"

namespace lcheck::cli {

/// Report plus free-form named outputs (normal forms, polynomials, errata).
struct Output {
  Report report;
  std::vector<std::pair<std::string, std::string>> data;
};

std::string render_text(const Output& o);
std::string render_json(const Output& o);

/// Runs one command line (without the program name). Returns the exit
/// status: 0 when every verdict passes, 1 otherwise, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker count: hardware concurrency capped by LCALC_THREADS.
unsigned worker_count();

}  // namespace lcheck::cli
