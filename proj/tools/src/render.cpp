#include <nlohmann/json.hpp>

#include <fmt/format.h>

#include "lcheck_tools/cli.hpp"

namespace lcheck::cli {

std::string render_text(const Output& o) {
  const auto& r = o.report;
  std::string s = fmt::format("command: {}\ninputs: {}\n", r.command, r.inputs_digest);
  for (const auto& [k, v] : o.data) s += fmt::format("{}: {}\n", k, v);
  for (const auto& v : r.verdicts) s += fmt::format("{} {}  {}\n", to_string(v.status), v.id, v.details);
  s += fmt::format("aggregate: {}\n", to_string(r.aggregate()));
  s += fmt::format("timing_ms: {:.1f}\n", r.timing_ms);
  return s;
}

std::string render_json(const Output& o) {
  const auto& r = o.report;
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["inputs_digest"] = r.inputs_digest;
  auto data = nlohmann::ordered_json::object();
  for (const auto& [k, v] : o.data) data[k] = v;
  j["data"] = data;
  auto verdicts = nlohmann::ordered_json::array();
  for (const auto& v : r.verdicts) {
    verdicts.push_back({{"id", v.id}, {"status", to_string(v.status)}, {"details", v.details}});
  }
  j["verdicts"] = verdicts;
  j["aggregate"] = to_string(r.aggregate());
  j["timing_ms"] = r.timing_ms;
  return j.dump(2) + "\n";
}

}  // namespace lcheck::cli
