#pragma once

#include <optional>
#include <set>
#include <string>

#include "orbicalc/cli.hpp"
#include "orbicalc/exactmath/rational.hpp"

namespace orbicalc::cli::detail {

using exactmath::Integer;
using exactmath::Rational;

/// Read access to one JSON object that remembers which keys were used, so
/// finish() can reject anything unexpected. Every error carries the JSON
/// pointer of the offending field.
class Fields {
 public:
  Fields(const Json& object, std::string path);

  const std::string& path() const { return path_; }
  std::string at(const std::string& key) const { return path_ + "/" + key; }

  bool has(const std::string& key) const;
  /// Marks the key as used and returns its value; throws if absent.
  const Json& get(const std::string& key);
  const Json* find(const std::string& key);

  Rational rational(const std::string& key);
  std::optional<Rational> optional_rational(const std::string& key);
  Integer integer(const std::string& key);
  unsigned count(const std::string& key, unsigned min = 0);
  std::optional<unsigned> optional_count(const std::string& key, unsigned min = 0);
  std::string string(const std::string& key);
  std::optional<std::string> optional_string(const std::string& key);
  bool flag(const std::string& key, bool fallback);
  Fields object(const std::string& key);

  /// Throws for the first key that was never read.
  void finish() const;

 private:
  const Json& object_;
  std::string path_;
  std::set<std::string> used_;
};

// Conversions for values that are not object members (array elements).
Rational to_rational(const Json& value, const std::string& path);
Integer to_integer(const Json& value, const std::string& path);
unsigned to_count(const Json& value, const std::string& path, unsigned min = 0);
std::string to_string(const Json& value, const std::string& path);
const Json& expect_array(const Json& value, const std::string& path);

}  // namespace orbicalc::cli::detail
