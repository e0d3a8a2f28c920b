#include "coxbound/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "coxbound/export.hpp"
#include "coxbound/tessellation.hpp"

namespace coxbound {
namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string input;
  std::string system;
  std::string out_dir;
  std::string format;
  std::optional<int> radius;
  int depth = 3;
  int level = 2;
  std::optional<std::uint64_t> seed;
  int max_dim = 2;
  bool star = false;
  std::string epsilon;
  int n_min = 3, n_max = 6;
  std::vector<int> labels{3};
  std::size_t limit = 5000;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CoxeterSystem load(const RunConfig& cfg) {
  if (!cfg.input.empty() && !cfg.system.empty()) throw UsageError("give either --input or --system, not both");
  if (!cfg.system.empty()) return parse_system(cfg.system);
  if (cfg.input.empty()) throw UsageError("a presentation is required (--input FILE or --system TEXT)");
  return load_system(cfg.input);
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw UsageError("unsupported --format " + cfg.format + " for this command");
}

// With --out, files go to that directory; otherwise the primary output goes to stdout.
class Sink {
 public:
  Sink(const RunConfig& cfg, std::ostream& out) : dir_(cfg.out_dir), out_(out) {
    if (!dir_.empty()) fs::create_directories(dir_);
  }
  void emit(const std::string& name, const std::string& content, bool primary) {
    if (dir_.empty()) {
      if (primary) out_ << content;
      return;
    }
    const fs::path path = fs::path(dir_) / name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << content;
  }

 private:
  std::string dir_;
  std::ostream& out_;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json"});
  const auto report = classify_boundary(load(cfg));
  Sink(cfg, out).emit("report.json", dump(report_json(report)), true);
  return report.boundary.kind == BoundaryKind::OutOfScope ? 2 : 0;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json", "csv"});
  const auto rows = run_sweep({cfg.n_min, cfg.n_max, cfg.labels, cfg.limit, cfg.seed.value_or(1)});
  Sink sink(cfg, out);
  sink.emit("sweep.json", dump(sweep_json(rows)), cfg.format == "json");
  sink.emit("sweep.csv", sweep_csv(rows), cfg.format == "csv");
  return 0;
}

int cmd_nerve(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json"});
  if (cfg.max_dim < 1) throw UsageError("--max-dim must be >= 1");
  const auto sys = load(cfg);
  Sink(cfg, out).emit("nerve.json", dump(nerve_json(sys, build_nerve(sys, cfg.max_dim))), true);
  return 0;
}

int cmd_davis(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json"});
  const auto sys = load(cfg);
  int radius = 0;
  if (cfg.radius) {
    radius = *cfg.radius;
  } else {
    int m = 2;
    for (int s = 0; s < sys.rank(); ++s)
      for (int t = s + 1; t < sys.rank(); ++t)
        if (sys.order(s, t).is_finite()) m = std::max(m, sys.order(s, t).value());
    radius = m + 2;
  }
  Sink(cfg, out).emit("davis_ball.json", dump(davis_ball_json(build_davis_ball(sys, radius))), true);
  return 0;
}

int cmd_tessellate(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"svg"});
  if (cfg.depth < 0) throw UsageError("--depth must be >= 0");
  Sink(cfg, out).emit("tessellation.svg", tessellation_svg(load(cfg), cfg.depth), true);
  return 0;
}

int cmd_carpet(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json", "svg"});
  const CarpetApprox c = build_carpet_approx(cfg.level);
  std::vector<MarkedPoint> marked;
  std::optional<CarpetStar> star;
  if (cfg.star) {
    // One leg per available slot, leg k on side k of its peripheral square.
    std::vector<PeripheralRef> slots{PeripheralRef{true, {}}};
    if (cfg.level >= 1) slots.push_back({false, GridSquare{1, 1, 1}});
    if (cfg.level >= 2) {
      slots.push_back({false, GridSquare{2, 1, 1}});
      slots.push_back({false, GridSquare{2, 7, 7}});
    }
    for (std::size_t k = 0; k < slots.size(); ++k) marked.push_back(side_midpoint(slots[k], static_cast<int>(k)));
    star = embed_star_in_carpet(c, marked);
  }
  Json j = carpet_json(c, marked, star ? &*star : nullptr);
  if (!cfg.epsilon.empty()) {
    Rational eps;
    try {
      eps = Rational(cfg.epsilon);
      eps.canonicalize();
    } catch (const std::invalid_argument&) {
      throw UsageError("--epsilon must be a rational such as 1/5");
    }
    j["epsilon"] = eps.get_str();
    j["removed_with_diameter_above_epsilon"] = null_family_check(c, eps);
  }
  Sink sink(cfg, out);
  sink.emit("carpet.json", dump(j), cfg.format == "json");
  sink.emit("carpet.svg", carpet_svg(c, star ? &*star : nullptr, marked), cfg.format == "svg");
  return 0;
}

int cmd_k5(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_format(cfg, {"json", "svg"});
  K5Scaffold s;
  try {
    s = build_k5_scaffold({cfg.level, cfg.seed});
  } catch (const RoutingFailure& e) {
    err << "routing failed: " << e.what() << "\n";
    return 3;
  }
  const K5Verdict v = verify_k5_detailed(s);
  Sink sink(cfg, out);
  sink.emit("k5.json", dump(k5_json(s, v)), cfg.format == "json");
  sink.emit("k5.svg", k5_svg(s), cfg.format == "svg");
  for (const auto& f : v.failures) err << "verification: " << f << "\n";
  return v.ok ? 0 : 4;
}

void add_system_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--input,-i", cfg.input, "presentation file");
  cmd->add_option("--system", cfg.system, "inline presentation, e.g. \"gens a b c; a b 3; b c 3; a c 3\"");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Boundary classification and carpet constructions for Coxeter groups", "coxbound"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  const auto format_check = CLI::IsMember({"json", "svg", "csv"});
  auto add_common = [&](CLI::App* cmd, const char* default_format) {
    cmd->add_option("--out,-o", cfg.out_dir, "output directory");
    cmd->add_option("--format", cfg.format, "json, svg or csv")->check(format_check)->default_str(default_format);
  };

  auto* classify = app.add_subcommand("classify", "classify the visual boundary (JSON report)");
  add_system_options(classify, cfg);
  add_common(classify, "json");

  auto* sweep = app.add_subcommand("sweep", "classify every complete-graph system over a label set");
  sweep->add_option("--n-min", cfg.n_min, "smallest rank")->check(CLI::Range(3, 8));
  sweep->add_option("--n-max", cfg.n_max, "largest rank")->check(CLI::Range(3, 8));
  sweep->add_option("--labels", cfg.labels, "edge labels")->delimiter(',')->check(CLI::Range(2, 12));
  sweep->add_option("--limit", cfg.limit, "systems per rank before sampling");
  sweep->add_option("--seed", cfg.seed, "sampling seed (default 1)");
  add_common(sweep, "json");

  auto* nerve = app.add_subcommand("nerve", "nerve complex as JSON");
  add_system_options(nerve, cfg);
  nerve->add_option("--max-dim", cfg.max_dim, "largest simplex dimension stored");
  add_common(nerve, "json");

  auto* davis = app.add_subcommand("davis-ball", "ball of the Davis complex with link checks");
  add_system_options(davis, cfg);
  davis->add_option("--radius", cfg.radius, "ball radius (default: largest finite label + 2)");
  add_common(davis, "json");

  auto* tess = app.add_subcommand("tessellate", "SVG of a triangle group tessellation");
  add_system_options(tess, cfg);
  tess->add_option("--depth", cfg.depth, "word length of the rendered orbit");
  add_common(tess, "svg");

  auto* carpet = app.add_subcommand("carpet", "carpet approximation, optionally with a routed star");
  carpet->add_option("--level", cfg.level, "approximation level")->check(CLI::Range(0, kMaxCarpetLevel));
  carpet->add_flag("--star", cfg.star, "route a star to side midpoints of up to four peripheral squares");
  carpet->add_option("--epsilon", cfg.epsilon, "count removed squares with diameter above this rational");
  add_common(carpet, "svg");

  auto* k5 = app.add_subcommand("k5", "five-carpet K5 scaffold with verification");
  k5->add_option("--level", cfg.level, "carpet level")->check(CLI::Range(0, kMaxCarpetLevel));
  k5->add_option("--seed", cfg.seed, "randomize marked points");
  add_common(k5, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  auto* cmd = app.get_subcommands().front();
  if (cfg.format.empty()) cfg.format = cmd->get_option("--format")->get_default_str();

  try {
    if (cmd == classify) return cmd_classify(cfg, out);
    if (cmd == sweep) return cmd_sweep(cfg, out);
    if (cmd == nerve) return cmd_nerve(cfg, out);
    if (cmd == davis) return cmd_davis(cfg, out);
    if (cmd == tess) return cmd_tessellate(cfg, out);
    if (cmd == carpet) return cmd_carpet(cfg, out);
    if (cmd == k5) return cmd_k5(cfg, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace coxbound
