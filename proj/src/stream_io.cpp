#include "ssjoin/stream_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

namespace ssjoin {

ParseError::ParseError(std::string source, std::size_t line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
      source_(std::move(source)),
      line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<RawEvent> parse_stream(std::istream& in, std::string_view source) {
  std::vector<RawEvent> events;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;

    const auto tab = view.find('\t');
    const std::string_view stamp = trim(view.substr(0, tab));
    double t = 0.0;
    auto [ptr, ec] = std::from_chars(stamp.data(), stamp.data() + stamp.size(), t);
    if (ec != std::errc() || ptr != stamp.data() + stamp.size() || !std::isfinite(t)) {
      throw ParseError(std::string(source), lineno, "bad timestamp '" + std::string(stamp) + "'");
    }
    if (!events.empty() && t < events.back().time) {
      throw ParseError(std::string(source), lineno, "timestamp decreases");
    }

    RawEvent ev{t, {}, lineno};
    if (tab != std::string_view::npos) {
      std::string_view rest = view.substr(tab + 1);
      while (!rest.empty()) {
        const auto sp = rest.find_first_of(" \t");
        std::string_view tok = rest.substr(0, sp);
        if (!tok.empty()) ev.tokens.emplace_back(tok);
        if (sp == std::string_view::npos) break;
        rest.remove_prefix(sp + 1);
      }
    }
    events.push_back(std::move(ev));
  }
  return events;
}

std::vector<RawEvent> read_stream_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open stream file '" + path + "'");
  return parse_stream(in, path);
}

void write_event(std::ostream& out, double time, const std::vector<std::string>& tokens) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), time, std::chars_format::fixed, 6);
  (void)ec;
  out.write(buf, ptr - buf);
  out.put('\t');
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.put(' ');
    out << tokens[i];
  }
  out.put('\n');
}

}  // namespace ssjoin
