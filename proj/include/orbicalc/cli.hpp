#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace orbicalc::cli {

using Json = nlohmann::ordered_json;

/// Commands accepted in a request, in the order the CLI lists them.
const std::vector<std::string>& command_names();

/// {"command": ..., "space": {...}, "payload": {...}}. `space` and
/// `payload` are optional where the command does not need them.
struct Request {
  std::string command;
  Json space = Json::object();
  Json payload = Json::object();

  /// Strict: rejects unknown top-level keys and non-object members.
  static Request from_json(const Json& doc);
  Json to_json() const;
};

struct RunOptions {
  /// Germ truncation override; a "truncation" payload field takes priority.
  std::optional<unsigned> truncation;
  /// Include full derivation traces and per-step detail.
  bool trace = false;
};

/// Exit statuses: 0 ok, 2 invalid input, 3 computation could not finish.
enum Status : int { Ok = 0, Invalid = 2, Failed = 3 };

struct Report {
  Json json;
  int status = Ok;
};

/// Validates the payload and dispatches. Never throws for bad input; the
/// error lands in the report with its kind, message and field pointer.
Report run(const Request& request, const RunOptions& options = {});
Report run(const Json& request, const RunOptions& options = {});

/// A batch document is a JSON array of requests, or {"requests": [...]}.
/// Entries run independently; the status is the maximum over entries.
/// A document that fails to parse yields one error report naming the line
/// and column.
Report batch(const std::string& text, const RunOptions& options = {});

/// Reads and runs a batch file.
Report batch_file(const std::string& path, const RunOptions& options = {});

/// Parses ORBICALC_TRUNCATION-style text; throws ValidationError.
unsigned parse_truncation(const std::string& text);

/// Canonical serialization used for all output: two-space indent, trailing
/// newline.
std::string dump(const Json& doc);

}  // namespace orbicalc::cli
