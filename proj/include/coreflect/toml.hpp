#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace coreflect::toml {

/// The subset of TOML used by the input files: tables and dotted table
/// headers, bare or quoted keys, basic strings, integers, booleans, arrays
/// (possibly spanning lines) and inline tables.
struct Value;
using Array = std::vector<Value>;
/// Keys in insertion order.
using Table = std::vector<std::pair<std::string, Value>>;

struct Value {
  std::variant<std::string, std::int64_t, bool, Array, Table> data;
  int line = 0;
  int column = 0;

  bool isString() const { return std::holds_alternative<std::string>(data); }
  bool isInt() const { return std::holds_alternative<std::int64_t>(data); }
  bool isBool() const { return std::holds_alternative<bool>(data); }
  bool isArray() const { return std::holds_alternative<Array>(data); }
  bool isTable() const { return std::holds_alternative<Table>(data); }

  /// Accessors throw ParseError pointing at this value on a type mismatch.
  const std::string& str() const;
  std::int64_t integer() const;
  bool boolean() const;
  const Array& array() const;
  const Table& table() const;

  /// Member lookup in a table; nullptr when absent.
  const Value* find(const std::string& key) const;
  /// Member lookup that throws ParseError when absent.
  const Value& at(const std::string& key) const;
};

/// Throws ParseError with the line and column of the offending character.
Value parse(const std::string& text);

/// A TOML basic string literal with escapes.
std::string quote(const std::string& s);
/// A bare key when possible, otherwise quoted.
std::string key(const std::string& s);

}  // namespace coreflect::toml
