#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace tautcalc {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Skipped };

std::string to_string(Status s);
Status parse_status(const std::string& s);

/// One checked identity. The witness is present exactly when the status is
/// Fail; it holds the offending normal form or value.
struct Entry {
  std::string name;
  std::string anchor;
  Status status = Status::Pass;
  std::optional<std::string> witness;
  Json data = Json::object();

  static Entry check(std::string name, std::string anchor, bool ok, std::string witness_if_failed,
                     Json data = Json::object());
  static Entry skipped(std::string name, std::string anchor, std::string reason);

  bool operator==(const Entry&) const = default;
};

struct Report {
  std::string command;
  Json context = Json::object();
  std::vector<Entry> entries;

  bool passed() const;
  /// 0 when nothing failed, 1 otherwise.
  int exit_code() const;
  void append(const Report& other);
  /// Orders entries by name (stable), so output does not depend on the
  /// order checks were scheduled in.
  void sort_entries();

  Json to_json() const;
  /// Throws std::invalid_argument on a malformed document, including a
  /// witness that is missing for a failure or present for a non-failure.
  static Report from_json(const Json& j);
  std::string to_markdown() const;

  bool operator==(const Report&) const = default;
};

}  // namespace tautcalc
