#pragma once

#include <string>
#include <vector>

namespace a2ext {

enum class Status { Pass, Fail, Skipped };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

/// One named verdict. Names are stable identifiers used by reports and tests.
struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string details;
};

inline Check make_check(std::string name, bool ok, std::string details = {}) {
  return {std::move(name), ok ? Status::Pass : Status::Fail, std::move(details)};
}

inline bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (c.status == Status::Fail) return false;
  return true;
}

}  // namespace a2ext
