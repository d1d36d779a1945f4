#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lcheck {

enum class Status : std::uint8_t { Pass, Fail, Unknown };

const char* to_string(Status s);

struct Verdict {
  std::string id;
  Status status = Status::Unknown;
  std::string details;
};

/// Output of one CLI command.
struct Report {
  std::string command;
  std::string inputs_digest;
  std::vector<Verdict> verdicts;
  double timing_ms = 0;

  void add(std::string id, bool ok, std::string details) {
    verdicts.push_back({std::move(id), ok ? Status::Pass : Status::Fail, std::move(details)});
  }
  /// Pass iff every verdict passes (and there is at least one).
  Status aggregate() const;
};

/// FNV-1a 64-bit, hex encoded.
std::string fnv1a_hex(std::string_view data);

}  // namespace lcheck
