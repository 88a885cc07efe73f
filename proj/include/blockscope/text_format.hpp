// Copyright 2026 The Blockscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Shared lexer for the line-oriented input formats: `#` starts a comment,
// blank lines are skipped, fields are separated by spaces or tabs.

#ifndef BLOCKSCOPE_TEXT_FORMAT_HPP
#define BLOCKSCOPE_TEXT_FORMAT_HPP

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "blockscope/types.hpp"

namespace blockscope {

struct Token {
  std::string_view text;
  std::size_t column = 0;  // 1-based
};

struct Line {
  std::size_t number = 0;  // 1-based
  std::vector<Token> tokens;
};

/// Errors in user-supplied text; always carries a line, and a column when
/// a single token is at fault.
class ParseError : public Error {
 public:
  ParseError(std::string rule, const std::string& what, std::size_t line, std::size_t column = 0)
      : Error(std::move(rule), format(what, line, column), line, column) {}

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    std::string out = what + " at line " + std::to_string(line);
    if (column) out += ", column " + std::to_string(column);
    return out;
  }
};

namespace detail {

/// Splits text into non-empty logical lines. Token views point into `text`.
inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

inline void expect_arity(const Line& line, std::size_t arity, std::string_view usage) {
  if (line.tokens.size() != arity) {
    const std::size_t column =
        line.tokens.size() > arity ? line.tokens[arity].column : line.tokens.back().column;
    throw ParseError("lexical",
                     "expected '" + std::string(usage) + "' (" + std::to_string(arity) +
                         " fields), found " + std::to_string(line.tokens.size()),
                     line.number, column);
  }
}

/// Unsigned decimal integer. A leading '-' on an otherwise valid number is
/// reported as a semantic negative-value error rather than a lexical one.
inline std::uint64_t parse_unsigned(const Line& line, const Token& token, std::string_view what) {
  std::string_view text = token.text;
  const bool negative = !text.empty() && text.front() == '-';
  if (negative) text.remove_prefix(1);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  const bool digits_only = !text.empty() && ptr == text.data() + text.size();
  if (ec == std::errc::result_out_of_range) {
    throw ParseError("lexical", std::string(what) + " '" + std::string(token.text) + "' out of range",
                     line.number, token.column);
  }
  if (ec != std::errc() || !digits_only) {
    throw ParseError("lexical",
                     "invalid " + std::string(what) + " '" + std::string(token.text) + "'",
                     line.number, token.column);
  }
  if (negative) {
    throw ParseError(what == "delay" ? "negative-delay" : "negative-value",
                     "negative " + std::string(what) + " '" + std::string(token.text) + "'",
                     line.number, token.column);
  }
  return value;
}

inline Picoseconds parse_delay(const Line& line, const Token& token) {
  const std::uint64_t value = parse_unsigned(line, token, "delay");
  if (value > static_cast<std::uint64_t>(INT64_MAX / 1024)) {
    throw ParseError("lexical", "delay '" + std::string(token.text) + "' out of range", line.number,
                     token.column);
  }
  return static_cast<Picoseconds>(value);
}

/// Non-negative decimal number such as `0.25` or `100000000`.
inline double parse_decimal(const Line& line, const Token& token, std::string_view what) {
  const std::string_view text = token.text;
  bool seen_digit = false;
  bool seen_dot = false;
  bool ok = !text.empty();
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      seen_digit = true;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      ok = false;
    }
  }
  if (!ok || !seen_digit || text.front() == '.' || text.back() == '.') {
    if (!text.empty() && text.front() == '-') {
      throw ParseError("negative-value", "negative " + std::string(what) + " '" + std::string(text) + "'",
                       line.number, token.column);
    }
    throw ParseError("lexical", "invalid " + std::string(what) + " '" + std::string(text) + "'",
                     line.number, token.column);
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("lexical", "invalid " + std::string(what) + " '" + std::string(text) + "'",
                     line.number, token.column);
  }
  return value;
}

/// Validates a `<magic> v<N>` header line.
inline void expect_header(const Line& line, std::string_view magic, std::string_view version) {
  if (line.tokens.front().text != magic) {
    throw ParseError("missing-header",
                     "expected header '" + std::string(magic) + " " + std::string(version) +
                         "', found '" + std::string(line.tokens.front().text) + "'",
                     line.number, line.tokens.front().column);
  }
  expect_arity(line, 2, std::string(magic) + " " + std::string(version));
  if (line.tokens[1].text != version) {
    throw ParseError("version-mismatch",
                     "unsupported " + std::string(magic) + " version '" +
                         std::string(line.tokens[1].text) + "' (expected " + std::string(version) + ")",
                     line.number, line.tokens[1].column);
  }
}

}  // namespace detail
}  // namespace blockscope

#endif  // BLOCKSCOPE_TEXT_FORMAT_HPP
