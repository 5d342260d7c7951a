#include "coreflect/toml.hpp"

#include <cctype>
#include <set>

#include "coreflect/error.hpp"

namespace coreflect::toml {

namespace {

[[noreturn]] void fail(const std::string& what, int line, int column) {
  throw ParseError(what, line, column);
}

const char* typeName(const Value& v) {
  if (v.isString()) return "string";
  if (v.isInt()) return "integer";
  if (v.isBool()) return "boolean";
  if (v.isArray()) return "array";
  return "table";
}

bool isBareKeyChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Value run() {
    Value root;
    root.data = Table{};
    root.line = 1;
    root.column = 1;
    std::vector<std::string> current;
    std::set<std::vector<std::string>> defined;
    for (;;) {
      skipBlankLines();
      if (eof()) break;
      if (peek() == '[') {
        const int line = line_, col = col_;
        advance();
        if (!eof() && peek() == '[') fail("arrays of tables are not supported", line, col);
        skipSpaces();
        current = parseKeyPath();
        skipSpaces();
        expect(']');
        endOfLine();
        if (!defined.insert(current).second)
          fail("table [" + joined(current) + "] defined twice", line, col);
        Value* t = &root;
        for (const auto& k : current) t = &childTable(*t, k, line, col);
        continue;
      }
      const int line = line_, col = col_;
      auto path = parseKeyPath();
      skipSpaces();
      expect('=');
      skipSpaces();
      Value v = parseValue();
      endOfLine();
      Value* t = &root;
      for (const auto& k : current) t = &childTable(*t, k, line, col);
      for (std::size_t i = 0; i + 1 < path.size(); ++i) t = &childTable(*t, path[i], line, col);
      insert(*t, path.back(), std::move(v), line, col);
    }
    return root;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;

  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void expect(char c) {
    if (eof() || peek() != c)
      fail(std::string("expected '") + c + "'", line_, col_);
    advance();
  }
  void skipSpaces() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) advance();
  }
  void skipComment() {
    if (!eof() && peek() == '#')
      while (!eof() && peek() != '\n') advance();
  }
  void skipBlankLines() {
    for (;;) {
      skipSpaces();
      skipComment();
      if (!eof() && (peek() == '\n' || peek() == '\r')) {
        advance();
        continue;
      }
      return;
    }
  }
  // Whitespace, comments and newlines inside arrays and inline tables.
  void skipInsideBrackets() {
    for (;;) {
      skipSpaces();
      skipComment();
      if (!eof() && (peek() == '\n' || peek() == '\r')) {
        advance();
        continue;
      }
      return;
    }
  }
  void endOfLine() {
    skipSpaces();
    skipComment();
    if (eof()) return;
    if (peek() == '\r') advance();
    if (eof()) return;
    if (peek() != '\n') fail("unexpected trailing characters", line_, col_);
    advance();
  }

  static std::string joined(const std::vector<std::string>& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "." : "") + p[i];
    return out;
  }

  std::string parseKey() {
    if (eof()) fail("expected a key", line_, col_);
    if (peek() == '"') return parseString();
    std::string k;
    while (!eof() && isBareKeyChar(peek())) {
      k += peek();
      advance();
    }
    if (k.empty()) fail("expected a key", line_, col_);
    return k;
  }

  std::vector<std::string> parseKeyPath() {
    std::vector<std::string> path{parseKey()};
    for (;;) {
      skipSpaces();
      if (eof() || peek() != '.') return path;
      advance();
      skipSpaces();
      path.push_back(parseKey());
    }
  }

  std::string parseString() {
    const int line = line_, col = col_;
    expect('"');
    std::string out;
    for (;;) {
      if (eof() || peek() == '\n') fail("unterminated string", line, col);
      char c = peek();
      advance();
      if (c == '"') return out;
      if (c != '\\') {
        out += c;
        continue;
      }
      if (eof()) fail("unterminated string", line, col);
      char e = peek();
      advance();
      switch (e) {
        case '"': out += '"'; break;
        case '\\': out += '\\'; break;
        case 'n': out += '\n'; break;
        case 't': out += '\t'; break;
        case 'r': out += '\r'; break;
        default: fail(std::string("unsupported escape '\\") + e + "'", line_, col_ - 1);
      }
    }
  }

  Value parseValue() {
    Value v;
    v.line = line_;
    v.column = col_;
    if (eof()) fail("expected a value", line_, col_);
    const char c = peek();
    if (c == '"') {
      v.data = parseString();
    } else if (c == '[') {
      advance();
      Array arr;
      for (;;) {
        skipInsideBrackets();
        if (eof()) fail("unterminated array", v.line, v.column);
        if (peek() == ']') {
          advance();
          break;
        }
        arr.push_back(parseValue());
        skipInsideBrackets();
        if (eof()) fail("unterminated array", v.line, v.column);
        if (peek() == ',') {
          advance();
          continue;
        }
        if (peek() != ']') fail("expected ',' or ']'", line_, col_);
      }
      v.data = std::move(arr);
    } else if (c == '{') {
      advance();
      Value t;
      t.data = Table{};
      skipSpaces();
      if (!eof() && peek() == '}') {
        advance();
      } else {
        for (;;) {
          skipSpaces();
          const int line = line_, col = col_;
          auto path = parseKeyPath();
          skipSpaces();
          expect('=');
          skipSpaces();
          Value inner = parseValue();
          Value* target = &t;
          for (std::size_t i = 0; i + 1 < path.size(); ++i)
            target = &childTable(*target, path[i], line, col);
          insert(*target, path.back(), std::move(inner), line, col);
          skipSpaces();
          if (!eof() && peek() == ',') {
            advance();
            continue;
          }
          expect('}');
          break;
        }
      }
      v.data = std::move(t.data);
    } else if (c == 't' || c == 'f') {
      std::string word;
      while (!eof() && std::isalpha(static_cast<unsigned char>(peek()))) {
        word += peek();
        advance();
      }
      if (word == "true") v.data = true;
      else if (word == "false") v.data = false;
      else fail("invalid value '" + word + "'", v.line, v.column);
    } else if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      if (c == '+' || c == '-') {
        num += c;
        advance();
      }
      while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_')) {
        if (peek() != '_') num += peek();
        advance();
      }
      if (!eof() && (peek() == '.' || peek() == 'e' || peek() == 'E'))
        fail("floating-point values are not supported; write rationals as \"a/b\" strings", line_,
             col_);
      if (num.empty() || num == "+" || num == "-") fail("invalid number", v.line, v.column);
      try {
        v.data = static_cast<std::int64_t>(std::stoll(num));
      } catch (const std::exception&) {
        fail("integer out of range", v.line, v.column);
      }
    } else {
      fail(std::string("unexpected character '") + c + "'", line_, col_);
    }
    return v;
  }

  static Value& childTable(Value& parent, const std::string& k, int line, int col) {
    auto& t = std::get<Table>(parent.data);
    for (auto& [name, v] : t)
      if (name == k) {
        if (!v.isTable()) fail("key '" + k + "' is not a table", line, col);
        return v;
      }
    Value child;
    child.data = Table{};
    child.line = line;
    child.column = col;
    t.emplace_back(k, std::move(child));
    return t.back().second;
  }

  static void insert(Value& parent, const std::string& k, Value v, int line, int col) {
    auto& t = std::get<Table>(parent.data);
    for (const auto& [name, existing] : t)
      if (name == k) fail("duplicate key '" + k + "'", line, col);
    t.emplace_back(k, std::move(v));
  }
};

}  // namespace

const std::string& Value::str() const {
  if (!isString()) fail(std::string("expected a string, found ") + typeName(*this), line, column);
  return std::get<std::string>(data);
}

std::int64_t Value::integer() const {
  if (!isInt()) fail(std::string("expected an integer, found ") + typeName(*this), line, column);
  return std::get<std::int64_t>(data);
}

bool Value::boolean() const {
  if (!isBool()) fail(std::string("expected a boolean, found ") + typeName(*this), line, column);
  return std::get<bool>(data);
}

const Array& Value::array() const {
  if (!isArray()) fail(std::string("expected an array, found ") + typeName(*this), line, column);
  return std::get<Array>(data);
}

const Table& Value::table() const {
  if (!isTable()) fail(std::string("expected a table, found ") + typeName(*this), line, column);
  return std::get<Table>(data);
}

const Value* Value::find(const std::string& k) const {
  for (const auto& [name, v] : table())
    if (name == k) return &v;
  return nullptr;
}

const Value& Value::at(const std::string& k) const {
  if (const Value* v = find(k)) return *v;
  fail("missing key '" + k + "'", line, column);
}

Value parse(const std::string& text) { return Parser(text).run(); }

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

std::string key(const std::string& s) {
  bool bare = !s.empty();
  for (char c : s) bare = bare && isBareKeyChar(c);
  return bare ? s : quote(s);
}

}  // namespace coreflect::toml
