#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ssjoin {

// Stream text format, one record per line:
//
//   <timestamp> TAB <token> SP <token> ...
//
// Timestamps are non-decreasing decimals. Lines starting with '#' and blank
// lines are skipped. A line holding only a timestamp is an empty set.

struct RawEvent {
  double time = 0.0;
  std::vector<std::string> tokens;
  std::size_t line = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what);
  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

std::vector<RawEvent> parse_stream(std::istream& in, std::string_view source = "<stream>");
std::vector<RawEvent> read_stream_file(const std::string& path);

void write_event(std::ostream& out, double time, const std::vector<std::string>& tokens);

}  // namespace ssjoin
