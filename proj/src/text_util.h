// Copyright 2026 The nanroute Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Small tokenizing helpers shared by the line-oriented file parsers.

#ifndef NANROUTE_SRC_TEXT_UTIL_H_
#define NANROUTE_SRC_TEXT_UTIL_H_

#include <charconv>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "nanroute/topology.h"

namespace nanroute::internal {

inline std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    start = end + 1;
  }
  return out;
}

inline std::string_view StripComment(std::string_view line) {
  size_t hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

inline bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
}

inline std::vector<std::string_view> Tokenize(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && IsSpace(s[i])) ++i;
    size_t j = i;
    while (j < s.size() && !IsSpace(s[j])) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Calls `fn(line_no, tokens)` for every non-empty statement. Statements are
// separated by newlines or ';' and '#' starts a comment.
inline void ForEachStatement(
    std::string_view text,
    const std::function<void(int, const std::vector<std::string_view>&)>& fn) {
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    std::string_view body = StripComment(line);
    size_t start = 0;
    while (start <= body.size()) {
      size_t end = body.find(';', start);
      if (end == std::string_view::npos) end = body.size();
      std::vector<std::string_view> tok =
          Tokenize(body.substr(start, end - start));
      if (!tok.empty()) fn(line_no, tok);
      start = end + 1;
    }
  }
}

inline int ParseInt(std::string_view s, int line, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, "expected " + std::string(what) + ", got '" +
                               std::string(s) + "'");
  }
  return value;
}

inline int ParsePositive(std::string_view s, int line) {
  int value = ParseInt(s, line, "a positive integer");
  if (value <= 0) {
    throw ParseError(line, "expected a positive integer, got '" +
                               std::string(s) + "'");
  }
  return value;
}

inline int ParseNonNegative(std::string_view s, int line) {
  int value = ParseInt(s, line, "a non-negative integer");
  if (value < 0) {
    throw ParseError(line, "expected a non-negative integer, got '" +
                               std::string(s) + "'");
  }
  return value;
}

}  // namespace nanroute::internal

#endif  // NANROUTE_SRC_TEXT_UTIL_H_
