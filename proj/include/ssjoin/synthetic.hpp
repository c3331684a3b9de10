#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "ssjoin/stream_io.hpp"

namespace ssjoin {

enum class Profile : std::uint8_t { Uniform, Zipf, LateHotToken };

std::string_view to_string(Profile p) noexcept;
Profile parse_profile(std::string_view name);  // uniform|zipf|late-hot-token

inline constexpr std::string_view kHotToken = "hot";

struct GeneratorConfig {
  Profile profile = Profile::Uniform;
  std::size_t events = 1000;
  std::size_t universe = 1000;  // tokens are named t0 .. t<universe-1>
  std::size_t min_size = 1;
  std::size_t max_size = 10;
  double rate = 100.0;          // mean events per second, exponential gaps
  double zipf_exponent = 1.0;
  // Probability that an event repeats one of the last `dup_horizon` sets
  // verbatim (new timestamp). Gives streams a population of exact matches.
  double dup_rate = 0.0;
  std::size_t dup_horizon = 256;
  // late-hot-token: `hot` never occurs before event events/4, afterwards it is
  // added to each fresh set with this probability.
  double hot_probability = 0.5;
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument on inconsistent parameters.
  void validate() const;
};

/// Deterministic for a given config. Timestamps are whole microseconds so the
/// text form round-trips exactly.
std::vector<RawEvent> generate_stream(const GeneratorConfig& config);
void write_stream(std::ostream& out, const std::vector<RawEvent>& events);

}  // namespace ssjoin
