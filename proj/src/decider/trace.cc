// Copyright 2026 The preomp Authors
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

#include "preomp/decider/trace.h"

#include <charconv>
#include <stdexcept>

#include <fmt/format.h>

namespace preomp::decider {

namespace {

[[noreturn]] void bad_record(std::string_view line, std::string_view why) {
  throw std::invalid_argument(
      fmt::format("malformed trace record '{}': {}", line, why));
}

template <typename T>
T parse_number(std::string_view field, std::string_view line) {
  T value{};
  auto [end, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || end != field.data() + field.size()) {
    bad_record(line, fmt::format("'{}' is not an integer", field));
  }
  return value;
}

template <typename T>
T require(std::optional<T> v, std::string_view field, std::string_view line) {
  if (!v) bad_record(line, fmt::format("unknown value '{}'", field));
  return *v;
}

}  // namespace

std::string format_trace_record(const TraceRecord& r) {
  return fmt::format("{},{},{},{},{},{},{},{}", r.loop_id, r.invocation_index,
                     r.iters, r.threads, r.outer_active ? 1 : 0,
                     r.phase ? to_string(*r.phase) : std::string_view("-"),
                     to_string(r.decision), to_string(r.reason));
}

TraceRecord parse_trace_record(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (fields.size() != 8) bad_record(line, "expected 8 fields");
  TraceRecord r;
  r.loop_id = parse_number<int>(fields[0], line);
  r.invocation_index = parse_number<std::int64_t>(fields[1], line);
  r.iters = parse_number<std::int64_t>(fields[2], line);
  r.threads = parse_number<int>(fields[3], line);
  int outer = parse_number<int>(fields[4], line);
  if (outer != 0 && outer != 1) bad_record(line, "outer_active must be 0 or 1");
  r.outer_active = outer == 1;
  if (fields[5] != "-") r.phase = require(parse_phase(fields[5]), fields[5], line);
  r.decision = require(parse_decision(fields[6]), fields[6], line);
  r.reason = require(parse_reason(fields[7]), fields[7], line);
  return r;
}

}  // namespace preomp::decider
