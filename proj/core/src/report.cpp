#include "lcheck/report.hpp"

#include <fmt/format.h>

namespace lcheck {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Unknown: return "UNKNOWN";
  }
  return "?";
}

Status Report::aggregate() const {
  if (verdicts.empty()) return Status::Unknown;
  Status agg = Status::Pass;
  for (const auto& v : verdicts) {
    if (v.status == Status::Fail) return Status::Fail;
    if (v.status == Status::Unknown) agg = Status::Unknown;
  }
  return agg;
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return fmt::format("{:016x}", h);
}

}  // namespace lcheck
