#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "ssjoin/engine.hpp"
#include "ssjoin/overlap.hpp"
#include "ssjoin/runner.hpp"
#include "ssjoin/synthetic.hpp"

namespace ssjoin::cli {

namespace {

struct JoinFlags {
  std::vector<std::string> algos;
  std::size_t k = 10;
  double window = 1.0;
  std::string sim = "jaccard";
  std::string mode = "self";
  std::vector<std::string> inputs;
  std::string kernel = "auto";
  std::string metrics_out;
};

void add_join_flags(CLI::App& app, JoinFlags& f, bool many_algos) {
  auto* algo = app.add_option("--algo", f.algos, "base|swoop|swoop-noopt");
  if (!many_algos) algo->expected(1);
  app.add_option("--k", f.k, "result size")->check(CLI::PositiveNumber);
  app.add_option("--window-secs", f.window, "sliding window length in seconds")
      ->check(CLI::PositiveNumber);
  app.add_option("--sim", f.sim, "jaccard|cosine|dice|overlap|hamming");
  app.add_option("--mode", f.mode, "self|rr");
  app.add_option("--input", f.inputs, "stream file (twice for rr)")->required()->expected(1, 2);
  app.add_option("--kernel", f.kernel, "overlap kernel: auto|scalar|avx2");
  app.add_option("--metrics-out", f.metrics_out, "CSV destination (default stdout)");
}

void apply_kernel(const std::string& name) {
  if (name == "auto") return;
  if (name == "scalar") return set_overlap_kernel(OverlapKernel::Scalar);
  if (name == "avx2") return set_overlap_kernel(OverlapKernel::Avx2);
  throw std::invalid_argument("unknown kernel '" + name + "' (expected auto|scalar|avx2)");
}

EngineConfig make_config(const JoinFlags& f, const std::string& algo) {
  EngineConfig c;
  c.algorithm = parse_algorithm(algo);
  c.k = f.k;
  c.window = f.window;
  c.similarity = parse_similarity_kind(f.sim);
  c.mode = parse_join_mode(f.mode);
  c.validate();
  return c;
}

// Writes to `path`, or to `fallback` when the path is empty or "-".
template <class Fn>
void with_output(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path.empty() || path == "-") return fn(fallback);
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  fn(file);
}

}  // namespace

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continuous top-k set similarity join over sliding windows"};
  app.require_subcommand(1);

  JoinFlags run_flags;
  std::size_t snapshot_every = 0;
  std::string snapshot_out;
  double replay_speed = 0.0;
  auto* run_cmd = app.add_subcommand("run", "run one engine over a stream");
  add_join_flags(*run_cmd, run_flags, false);
  run_cmd->add_option("--snapshot-every", snapshot_every, "write the top-k every N events");
  run_cmd->add_option("--snapshot-out", snapshot_out, "snapshot log destination");
  run_cmd->add_option("--replay-speed", replay_speed,
                      "replay as a live feed at this many stream seconds per second")
      ->check(CLI::NonNegativeNumber);

  JoinFlags cmp_flags;
  std::size_t check_every = 1;
  auto* cmp_cmd = app.add_subcommand("compare", "run several engines and compare their results");
  add_join_flags(*cmp_cmd, cmp_flags, true);
  cmp_cmd->add_option("--check-every", check_every, "compare top-k every N events")
      ->check(CLI::PositiveNumber);

  GeneratorConfig gen;
  std::string profile = "uniform";
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("generate", "write a synthetic stream");
  gen_cmd->add_option("--profile", profile, "uniform|zipf|late-hot-token");
  gen_cmd->add_option("--events", gen.events, "number of sets");
  gen_cmd->add_option("--universe", gen.universe, "number of distinct tokens");
  gen_cmd->add_option("--min-size", gen.min_size, "smallest set");
  gen_cmd->add_option("--max-size", gen.max_size, "largest set");
  gen_cmd->add_option("--rate", gen.rate, "mean sets per second");
  gen_cmd->add_option("--zipf-exponent", gen.zipf_exponent, "zipf skew");
  gen_cmd->add_option("--dup-rate", gen.dup_rate, "probability of repeating a recent set");
  gen_cmd->add_option("--dup-horizon", gen.dup_horizon, "how many recent sets may be repeated");
  gen_cmd->add_option("--hot-probability", gen.hot_probability, "late-hot-token frequency");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("--output", gen_out, "destination (default stdout)");

  std::vector<std::string> argv_store{"ssjoin"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*run_cmd) {
      apply_kernel(run_flags.kernel);
      const std::string algo = run_flags.algos.empty() ? "swoop" : run_flags.algos.front();
      const EngineConfig config = make_config(run_flags, algo);
      if (snapshot_every > 0 && snapshot_out.empty()) {
        throw std::invalid_argument("--snapshot-every needs --snapshot-out");
      }
      const Workload workload = load_workload(run_flags.inputs, config.mode);
      JoinEngine engine(config);
      RunOptions opt;
      opt.replay_speed = replay_speed;
      opt.snapshot_every = snapshot_every;
      RunMetrics metrics;
      auto go = [&](std::ostream* snaps) {
        if (snaps) {
          opt.on_snapshot = [snaps](std::size_t, const StreamJoin& e) { write_snapshot(*snaps, e); };
        }
        metrics = run(engine, config, workload, opt);
      };
      if (snapshot_every > 0) {
        with_output(snapshot_out, out, [&](std::ostream& s) { go(&s); });
      } else {
        go(nullptr);
      }
      with_output(run_flags.metrics_out, out, [&](std::ostream& m) {
        write_metrics_header(m);
        write_metrics_row(m, metrics);
      });
      return 0;
    }

    if (*cmp_cmd) {
      apply_kernel(cmp_flags.kernel);
      if (cmp_flags.algos.empty()) cmp_flags.algos = {"base", "swoop"};
      std::vector<EngineSpec> specs;
      for (const auto& a : cmp_flags.algos) specs.push_back({a, make_config(cmp_flags, a), nullptr});
      const Workload workload = load_workload(cmp_flags.inputs, specs.front().config.mode);
      const CompareResult result = compare(specs, workload, check_every);
      with_output(cmp_flags.metrics_out, out, [&](std::ostream& m) { write_compare_csv(m, result); });
      if (!result.equal) {
        err << "mismatch: " << result.mismatch;
        return 1;
      }
      return 0;
    }

    if (*gen_cmd) {
      gen.profile = parse_profile(profile);
      const auto events = generate_stream(gen);
      with_output(gen_out, out, [&](std::ostream& o) { write_stream(o, events); });
      return 0;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace ssjoin::cli
