#include "fields.hpp"

#include "orbicalc/errors.hpp"

namespace orbicalc::cli::detail {

Fields::Fields(const Json& object, std::string path) : object_(object), path_(std::move(path)) {
  if (!object_.is_object()) throw ValidationError("expected an object", path_.empty() ? "/" : path_);
}

bool Fields::has(const std::string& key) const { return object_.contains(key); }

const Json& Fields::get(const std::string& key) {
  const Json* v = find(key);
  if (v == nullptr) throw ValidationError("missing required field '" + key + "'", at(key));
  return *v;
}

const Json* Fields::find(const std::string& key) {
  auto it = object_.find(key);
  if (it == object_.end()) return nullptr;
  used_.insert(key);
  return &*it;
}

Rational Fields::rational(const std::string& key) { return to_rational(get(key), at(key)); }

std::optional<Rational> Fields::optional_rational(const std::string& key) {
  const Json* v = find(key);
  if (v == nullptr) return std::nullopt;
  return to_rational(*v, at(key));
}

Integer Fields::integer(const std::string& key) { return to_integer(get(key), at(key)); }

unsigned Fields::count(const std::string& key, unsigned min) { return to_count(get(key), at(key), min); }

std::optional<unsigned> Fields::optional_count(const std::string& key, unsigned min) {
  const Json* v = find(key);
  if (v == nullptr) return std::nullopt;
  return to_count(*v, at(key), min);
}

std::string Fields::string(const std::string& key) { return to_string(get(key), at(key)); }

std::optional<std::string> Fields::optional_string(const std::string& key) {
  const Json* v = find(key);
  if (v == nullptr) return std::nullopt;
  return to_string(*v, at(key));
}

bool Fields::flag(const std::string& key, bool fallback) {
  const Json* v = find(key);
  if (v == nullptr) return fallback;
  if (!v->is_boolean()) throw ValidationError("expected true or false", at(key));
  return v->get<bool>();
}

Fields Fields::object(const std::string& key) { return Fields(get(key), at(key)); }

void Fields::finish() const {
  for (const auto& [key, value] : object_.items()) {
    if (!used_.contains(key)) throw ValidationError("unknown field '" + key + "'", at(key));
  }
}

Rational to_rational(const Json& value, const std::string& path) {
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Rational(value.get<unsigned long>()) : Rational(value.get<long>());
  }
  if (value.is_string()) {
    try {
      return Rational::parse(value.get<std::string>());
    } catch (const ValidationError& e) {
      throw ValidationError(e.what(), path);
    }
  }
  if (value.is_number_float()) {
    throw ValidationError("floating-point numbers are not accepted; write an exact \"p/q\" string", path);
  }
  throw ValidationError("expected an integer or a \"p/q\" string", path);
}

Integer to_integer(const Json& value, const std::string& path) {
  const Rational r = to_rational(value, path);
  if (!r.is_integer()) throw ValidationError("expected an integer, got " + r.str(), path);
  return r.numerator();
}

unsigned to_count(const Json& value, const std::string& path, unsigned min) {
  const Integer v = to_integer(value, path);
  if (v < min || !v.fits_uint_p()) {
    throw ValidationError("expected an integer >= " + std::to_string(min), path);
  }
  return static_cast<unsigned>(v.get_ui());
}

std::string to_string(const Json& value, const std::string& path) {
  if (!value.is_string()) throw ValidationError("expected a string", path);
  return value.get<std::string>();
}

const Json& expect_array(const Json& value, const std::string& path) {
  if (!value.is_array()) throw ValidationError("expected an array", path);
  return value;
}

}  // namespace orbicalc::cli::detail
