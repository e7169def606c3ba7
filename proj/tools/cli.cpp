#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "manifest.hpp"
#include "report_io.hpp"
#include "somix/bounds.hpp"
#include "somix/branching.hpp"
#include "somix/diagnostics.hpp"
#include "somix/errors.hpp"
#include "somix/labels.hpp"
#include "somix/parallel.hpp"
#include "somix/walk.hpp"
#include "somix/weyl.hpp"

#ifndef SOMIX_VERSION
#define SOMIX_VERSION "0.0.0"
#endif

namespace somix::cli {

namespace {

using io::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LawArgs {
  std::string law;
  std::optional<double> theta;
  std::optional<double> eps;

  void attach(CLI::App* sub) {
    sub->add_option("--law", law, "fixed, truncated or uniform (inferred from --theta/--eps)")
        ->check(CLI::IsMember({"fixed", "truncated", "uniform"}));
    sub->add_option("--theta", theta, "rotation angle of the fixed law");
    sub->add_option("--eps", eps, "cut width of the truncated uniform law");
  }

  AngleLaw resolve() const {
    std::string kind = law;
    if (kind.empty()) {
      if (theta && eps) throw UsageError("--theta and --eps are mutually exclusive");
      kind = theta ? "fixed" : eps ? "truncated" : "uniform";
    }
    AngleLaw out;
    if (kind == "fixed") {
      if (!theta || eps) throw UsageError("--law fixed takes --theta only");
      out = AngleLaw::fixed(*theta);
    } else if (kind == "truncated") {
      if (!eps || theta) throw UsageError("--law truncated takes --eps only");
      out = AngleLaw::truncated_uniform(*eps);
    } else {
      if (theta || eps) throw UsageError("--law uniform takes neither --theta nor --eps");
      out = AngleLaw::uniform();
    }
    out.validate();
    return out;
  }
};

struct BudgetArgs {
  int n = 1;
  int max_sum = 0;
  std::optional<int> max_top;

  void attach(CLI::App* sub) {
    sub->add_option("--n", n, "rank n of SO(2n+1)")->required();
    sub->add_option("--max-sum", max_sum, "largest a_1 + ... + a_n")->required();
    sub->add_option("--max-top", max_top, "largest a_n (default: --max-sum)");
  }

  LabelBudget resolve() const {
    LabelBudget b{n, max_sum, max_top.value_or(max_sum)};
    if (!validate_budget(b)) throw DomainError("invalid label budget");
    return b;
  }
};

struct WalkArgs {
  int N = 5;
  std::string kind = "rosenthal";
  LawArgs law;
  int steps = 1;
  long long trials = 1;
  std::optional<std::uint64_t> seed;
  bool nondeterministic = false;
  long long step_budget = 2'000'000'000;

  void attach(CLI::App* sub) {
    sub->add_option("--N", N, "matrix size")->required();
    sub->add_option("--kind", kind, "rosenthal or kac")->capture_default_str();
    law.attach(sub);
    sub->add_option("--steps", steps, "number of steps")->required();
    sub->add_option("--trials", trials, "independent trials")->required();
    auto* s = sub->add_option("--seed", seed, "master seed");
    sub->add_flag("--nondeterministic", nondeterministic, "draw the seed from the system")->excludes(s);
    sub->add_option("--step-budget", step_budget, "cap on steps * trials")->capture_default_str();
  }

  WalkConfig resolve(unsigned threads, std::uint64_t drawn_seed) const {
    if (!seed && !nondeterministic) throw UsageError("--seed is required (or pass --nondeterministic)");
    WalkConfig c;
    c.N = N;
    c.kind = parse_walk_kind(kind);
    c.law = law.resolve();
    c.steps = steps;
    c.trials = trials;
    c.seed = seed.value_or(drawn_seed);
    c.step_budget = step_budget;
    c.threads = threads;
    c.validate();
    return c;
  }
};

OddLabel parse_label(const std::string& text, int n) {
  OddLabel label = OddLabel::parse(text);
  if (label.n() != n)
    throw DomainError("label (" + label.to_string() + ") has " + std::to_string(label.n()) + " parts, expected " +
                      std::to_string(n));
  require_valid(label);
  return label;
}

std::string single_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  std::replace(s.begin(), s.end(), '\r', ' ');
  return s;
}

std::string default_csv_path(const std::string& json_path) {
  const std::string ext = ".json";
  if (json_path.size() > ext.size() && json_path.compare(json_path.size() - ext.size(), ext.size(), ext) == 0)
    return json_path.substr(0, json_path.size() - ext.size()) + ".csv";
  return json_path + ".csv";
}

class Session {
 public:
  Session(std::vector<std::string> argv, std::ostream& out) : argv_(std::move(argv)), out_(out) {}

  std::ostream& out() { return out_; }

  void write(const std::string& path, const std::function<void(std::ostream&)>& emit) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw DomainError("cannot open '" + path + "' for writing");
    emit(file);
    file.close();
    if (!file) throw DomainError("failed writing '" + path + "'");
    outputs_.push_back(path);
  }

  void write_json(const std::string& path, const json& doc) {
    io::validate_document(doc);
    write(path, [&](std::ostream& s) { s << doc.dump(2) << '\n'; });
  }

  void print_json(const json& doc) {
    io::validate_document(doc);
    out_ << doc.dump(2) << '\n';
  }

  // Replays of --nondeterministic runs must reuse the drawn seed.
  void substitute_seed(std::uint64_t seed) {
    auto it = std::find(argv_.begin(), argv_.end(), "--nondeterministic");
    if (it == argv_.end()) return;
    *it = "--seed";
    argv_.insert(it + 1, std::to_string(seed));
    seed_ = seed;
  }
  void set_seed(std::uint64_t seed) { seed_ = seed; }

  void finish(const std::string& subcommand, const json& parameters, const std::string& started) {
    if (outputs_.empty()) return;
    io::RunManifest m;
    m.subcommand = subcommand;
    m.argv = argv_;
    m.parameters = parameters;
    m.version = SOMIX_VERSION;
    m.seed = seed_;
    m.started_at = started;
    m.finished_at = io::utc_timestamp();
    for (const auto& path : outputs_)
      m.outputs.push_back({path, io::sha256_file(path), std::filesystem::file_size(path)});
    const std::string path = io::manifest_path(outputs_.front());
    std::ofstream file(path, std::ios::trunc);
    if (!file) throw DomainError("cannot open '" + path + "' for writing");
    file << m.to_json().dump(2) << '\n';
  }

 private:
  std::vector<std::string> argv_;
  std::ostream& out_;
  std::vector<std::string> outputs_;
  std::optional<std::uint64_t> seed_;
};

json collect_parameters(const CLI::App& app, const CLI::App& sub) {
  json params = json::object();
  auto record = [&](const CLI::Option* opt) {
    if (opt->get_name() == "--help" || opt->get_name() == "--version" || opt->get_name().empty()) return;
    const auto& results = opt->results();
    std::string value;
    if (!results.empty()) {
      for (std::size_t i = 0; i < results.size(); ++i) value += (i ? "," : "") + results[i];
    } else {
      value = opt->get_default_str();
    }
    params[opt->get_name()] = value;
  };
  for (const auto* opt : app.get_options()) record(opt);
  for (const auto* opt : sub.get_options()) record(opt);
  return params;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Representation-theoretic diagnostics for random walks on SO(N)", "somix"};
  app.set_version_flag("--version", SOMIX_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = default_threads();
  app.add_option("--threads", threads, "worker threads for sweeps and trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // dim / char / profile / terms
  int n = 1;
  std::string label_text;
  auto* dim_cmd = app.add_subcommand("dim", "dimension of an SO(2n+1) irrep");
  dim_cmd->add_option("--n", n)->required();
  dim_cmd->add_option("--label", label_text, "comma-separated a_1,...,a_n")->required();

  double theta = 0.0;
  auto* char_cmd = app.add_subcommand("char", "character value and ratio at R(1,2;theta)");
  char_cmd->add_option("--n", n)->required();
  char_cmd->add_option("--label", label_text)->required();
  char_cmd->add_option("--theta", theta)->required();

  bool brute = false;
  std::uint64_t path_cap = kDefaultTolerances.path_cap;
  std::string out_path;
  auto* profile_cmd = app.add_subcommand("profile", "Fourier coefficients alpha and SO(3) multiplicities beta");
  profile_cmd->add_option("--n", n)->required();
  profile_cmd->add_option("--label", label_text)->required();
  profile_cmd->add_flag("--brute-force", brute, "enumerate branching chains explicitly");
  profile_cmd->add_option("--path-cap", path_cap)->capture_default_str();
  profile_cmd->add_option("--out", out_path, "JSON output file");

  auto* terms_cmd = app.add_subcommand("terms", "terms T, weights mu, products W and the dimension-ratio chain");
  terms_cmd->add_option("--n", n)->required();
  terms_cmd->add_option("--label", label_text)->required();
  terms_cmd->add_option("--out", out_path, "JSON output file");

  // lemmas
  BudgetArgs budget;
  double lemma_eps = 0.5;
  double lemma3_constant = kDefaultTolerances.lemma3_constant;
  std::string csv_path;
  auto* lemmas_cmd = app.add_subcommand("lemmas", "lemma checks and regime classification over a label budget");
  budget.attach(lemmas_cmd);
  lemmas_cmd->add_option("--eps", lemma_eps, "truncation width for regime decay rates")->capture_default_str();
  lemmas_cmd->add_option("--lemma3-constant", lemma3_constant)->capture_default_str();
  lemmas_cmd->add_option("--out", out_path, "JSON report file");
  lemmas_cmd->add_option("--csv", csv_path, "CSV summary file (default: next to --out)");

  // bound / mixtime
  LawArgs law;
  std::vector<long long> t_grid;
  long long t_max = 64;
  std::size_t top_k = 3;
  std::string json_path;
  auto* bound_cmd = app.add_subcommand("bound", "truncated L2 bound curve");
  budget.attach(bound_cmd);
  law.attach(bound_cmd);
  bound_cmd->add_option("--t", t_grid, "comma-separated step counts")->delimiter(',');
  bound_cmd->add_option("--t-max", t_max, "grid 1..t-max when --t is absent")->capture_default_str();
  bound_cmd->add_option("--top-k", top_k)->capture_default_str();
  bound_cmd->add_option("--out", out_path, "CSV curve file");
  bound_cmd->add_option("--json", json_path, "JSON report file");

  double target = 0.25;
  auto* mix_cmd = app.add_subcommand("mixtime", "smallest t whose bound reaches the target");
  budget.attach(mix_cmd);
  law.attach(mix_cmd);
  mix_cmd->add_option("--target", target)->capture_default_str();
  mix_cmd->add_option("--top-k", top_k)->capture_default_str();
  mix_cmd->add_option("--out", out_path, "JSON output file");

  // censor
  double c = 1.0, censor_eps = 0.5;
  long long censor_t = 0;
  auto* censor_cmd = app.add_subcommand("censor", "binomial tail P[#K >= t], #K ~ Bin(round(ct), 1-eps)");
  censor_cmd->add_option("--c", c)->required();
  censor_cmd->add_option("--t", censor_t)->required();
  censor_cmd->add_option("--eps", censor_eps)->required();

  // simulate / decay-check
  WalkArgs walk;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo trace statistics of the walk");
  walk.attach(sim_cmd);
  sim_cmd->add_option("--out", out_path, "CSV statistics file");
  sim_cmd->add_option("--json", json_path, "JSON statistics file");

  auto* decay_cmd = app.add_subcommand("decay-check", "empirical character decay against d rho^t");
  walk.attach(decay_cmd);
  decay_cmd->add_option("--label", label_text, "label of the character (default: standard)");
  decay_cmd->add_option("--out", out_path, "JSON output file");

  std::vector<const char*> cargv{"somix"};
  for (const auto& a : args) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << SOMIX_VERSION << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << single_line(e.what()) << '\n';
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string started = io::utc_timestamp();
  Session session(args, out);
  Tolerances tol = kDefaultTolerances;

  try {
    if (sub == dim_cmd) {
      out << dimension(parse_label(label_text, n)) << '\n';
    } else if (sub == char_cmd) {
      const OddLabel label = parse_label(label_text, n);
      const CharacterValue v = character_value(label, theta, tol);
      out << json{{"label", label.to_string()},
                  {"theta", v.theta},
                  {"d", dimension(label).str()},
                  {"value", v.value},
                  {"ratio", v.ratio}}
                 .dump()
          << '\n';
    } else if (sub == profile_cmd) {
      const OddLabel label = parse_label(label_text, n);
      const json doc = io::to_json(brute ? brute_force_profile(label, path_cap) : fourier_profile(label));
      if (out_path.empty())
        session.print_json(doc);
      else
        session.write_json(out_path, doc);
    } else if (sub == terms_cmd) {
      const json doc = io::terms_document(parse_label(label_text, n));
      if (out_path.empty())
        session.print_json(doc);
      else
        session.write_json(out_path, doc);
    } else if (sub == lemmas_cmd) {
      tol.lemma3_constant = lemma3_constant;
      const auto reports = lemma_sweep(enumerate_odd(budget.resolve()), lemma_eps, threads, tol);
      const json doc = io::lemma_document(reports, lemma_eps);
      if (out_path.empty()) {
        session.print_json(doc);
      } else {
        session.write_json(out_path, doc);
        session.write(csv_path.empty() ? default_csv_path(out_path) : csv_path,
                      [&](std::ostream& s) { io::write_lemma_csv(s, reports); });
        out << doc["summary"].dump(2) << '\n';
      }
    } else if (sub == bound_cmd) {
      if (t_grid.empty()) {
        if (t_max < 1) throw DomainError("--t-max must be positive");
        for (long long t = 1; t <= t_max; ++t) t_grid.push_back(t);
      }
      BoundOptions options{top_k, threads, tol};
      const BoundReport report = l2_bound(budget.n, law.resolve(), budget.resolve(), t_grid, options);
      if (!json_path.empty()) session.write_json(json_path, io::to_json(report));
      if (out_path.empty())
        io::write_bound_csv(out, report);
      else
        session.write(out_path, [&](std::ostream& s) { io::write_bound_csv(s, report); });
    } else if (sub == mix_cmd) {
      const AngleLaw resolved = law.resolve();
      BoundOptions options{top_k, threads, tol};
      const json doc = io::to_json(mixing_time_estimate(budget.n, resolved, budget.resolve(), target, options),
                                   budget.n, resolved);
      if (out_path.empty())
        session.print_json(doc);
      else
        session.write_json(out_path, doc);
    } else if (sub == censor_cmd) {
      out << io::format_real(to_double(censoring_count(c, censor_t, censor_eps))) << '\n';
    } else if (sub == sim_cmd || sub == decay_cmd) {
      std::uint64_t drawn = 0;
      if (walk.nondeterministic) {
        std::random_device rd;
        drawn = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
        session.substitute_seed(drawn);
      }
      const WalkConfig config = walk.resolve(threads, drawn);
      session.set_seed(config.seed);
      if (sub == sim_cmd) {
        const TraceStats stats = simulate(config);
        if (!json_path.empty()) session.write_json(json_path, io::to_json(stats));
        if (out_path.empty())
          io::write_trace_csv(out, stats);
        else
          session.write(out_path, [&](std::ostream& s) { io::write_trace_csv(s, stats); });
      } else {
        if (config.N % 2 == 0) throw DomainError("decay-check needs odd N = 2n+1");
        const int rank = (config.N - 1) / 2;
        OddLabel label;
        if (label_text.empty()) {
          label = OddLabel::trivial(rank);
          label.parts.back() = 1;
        } else {
          label = parse_label(label_text, rank);
        }
        const json doc = io::to_json(character_decay_check(config, label));
        if (out_path.empty())
          session.print_json(doc);
        else
          session.write_json(out_path, doc);
      }
    }
    session.finish(sub->get_name(), collect_parameters(app, *sub), started);
  } catch (const UsageError& e) {
    err << "error: usage: " << single_line(e.what()) << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: domain: " << single_line(e.what()) << '\n';
    return kExitDomain;
  } catch (const ResourceError& e) {
    err << "error: resource: " << single_line(e.what()) << '\n';
    return kExitDomain;
  } catch (const ConsistencyError& e) {
    err << "error: consistency: " << single_line(e.what()) << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "error: internal: " << single_line(e.what()) << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace somix::cli
