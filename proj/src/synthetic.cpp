#include "ssjoin/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace ssjoin {

std::string_view to_string(Profile p) noexcept {
  switch (p) {
    case Profile::Uniform: return "uniform";
    case Profile::Zipf: return "zipf";
    case Profile::LateHotToken: return "late-hot-token";
  }
  return "unknown";
}

Profile parse_profile(std::string_view name) {
  for (auto p : {Profile::Uniform, Profile::Zipf, Profile::LateHotToken}) {
    if (to_string(p) == name) return p;
  }
  throw std::invalid_argument("unknown profile '" + std::string(name) +
                              "' (expected uniform|zipf|late-hot-token)");
}

void GeneratorConfig::validate() const {
  if (universe == 0) throw std::invalid_argument("universe must be positive");
  if (min_size > max_size) throw std::invalid_argument("min size exceeds max size");
  if (max_size > universe) throw std::invalid_argument("max size exceeds universe");
  if (!(rate > 0.0) || !std::isfinite(rate)) throw std::invalid_argument("rate must be positive");
  if (!(dup_rate >= 0.0 && dup_rate <= 1.0)) throw std::invalid_argument("dup rate must be in [0, 1]");
  if (!(hot_probability >= 0.0 && hot_probability <= 1.0)) {
    throw std::invalid_argument("hot probability must be in [0, 1]");
  }
  if (!(zipf_exponent >= 0.0)) throw std::invalid_argument("zipf exponent must be non-negative");
}

std::vector<RawEvent> generate_stream(const GeneratorConfig& config) {
  config.validate();
  std::mt19937_64 rng(config.seed);
  std::exponential_distribution<double> gap(config.rate);
  std::uniform_int_distribution<std::size_t> size_of(config.min_size, config.max_size);
  std::uniform_int_distribution<std::size_t> uniform_token(0, config.universe - 1);
  std::bernoulli_distribution dup(config.dup_rate);
  std::bernoulli_distribution hot(config.hot_probability);

  std::discrete_distribution<std::size_t> zipf_token;
  if (config.profile == Profile::Zipf) {
    std::vector<double> weights(config.universe);
    for (std::size_t i = 0; i < weights.size(); ++i) {
      weights[i] = 1.0 / std::pow(static_cast<double>(i + 1), config.zipf_exponent);
    }
    zipf_token = std::discrete_distribution<std::size_t>(weights.begin(), weights.end());
  }

  std::vector<RawEvent> out;
  out.reserve(config.events);
  std::int64_t micros = 0;
  std::vector<std::size_t> ids;
  const std::size_t hot_from = config.events / 4;
  for (std::size_t n = 0; n < config.events; ++n) {
    if (n > 0) micros += std::llround(gap(rng) * 1e6);
    RawEvent ev;
    ev.time = static_cast<double>(micros) / 1e6;
    ev.line = n + 1;

    const std::size_t recent = std::min(out.size(), config.dup_horizon);
    if (recent > 0 && config.dup_rate > 0.0 && dup(rng)) {
      std::uniform_int_distribution<std::size_t> back(1, recent);
      ev.tokens = out[out.size() - back(rng)].tokens;
      out.push_back(std::move(ev));
      continue;
    }

    const std::size_t len = size_of(rng);
    ids.clear();
    while (ids.size() < len) {
      const std::size_t id = config.profile == Profile::Zipf ? zipf_token(rng) : uniform_token(rng);
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
    }
    for (std::size_t id : ids) ev.tokens.push_back("t" + std::to_string(id));
    if (config.profile == Profile::LateHotToken && n >= hot_from && hot(rng)) {
      ev.tokens.emplace_back(kHotToken);
    }
    out.push_back(std::move(ev));
  }
  return out;
}

void write_stream(std::ostream& out, const std::vector<RawEvent>& events) {
  for (const auto& ev : events) write_event(out, ev.time, ev.tokens);
}

}  // namespace ssjoin
