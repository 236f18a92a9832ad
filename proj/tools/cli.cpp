#include "cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "crownlab/crownlab.hpp"

namespace crownlab::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kSuites = {"manin",  "symplectic", "moment-id", "convexity-complex",
                                          "convexity-real", "realform"};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError("empty entry in --x list");
    item = item.substr(b, e - b + 1);
    double v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size())
      throw UsageError("cannot parse '" + item + "' as a number");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("--x needs at least one entry");
  return out;
}

Mutation parse_mutation(const std::string& s) {
  for (Mutation m : {Mutation::none, Mutation::pairing_sign, Mutation::exponent_sign,
                     Mutation::transposed_udl, Mutation::tau_transpose_only})
    if (to_string(m) == s) return m;
  throw UsageError("unknown mutation '" + s + "'");
}

std::string timestamp_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json matrix_json(const ComplexMatrix& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json r = json::array(), c = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      r.push_back(m(i, j).real());
      c.push_back(m(i, j).imag());
    }
    re.push_back(std::move(r));
    im.push_back(std::move(c));
  }
  return {{"re", re}, {"im", im}};
}

json vector_json(const ComplexVector& v) {
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  return {{"re", re}, {"im", im}};
}

// Raw option values as they come from flags or the config file. Anything left
// unset falls through to the next source.
struct Layer {
  std::optional<int> n;
  std::optional<std::vector<double>> x;
  std::optional<bool> center;
  std::optional<std::string> group_case;
  std::optional<std::size_t> samples;
  std::optional<std::size_t> coverage_samples;
  std::optional<int> steps;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  std::optional<std::string> output;
  std::optional<std::string> vertices;
  std::optional<std::string> format;
  std::optional<std::string> k_file;
  std::optional<bool> identity;
  std::optional<bool> timestamp;
  std::optional<std::string> mutation;
  std::optional<double> slack;
  std::optional<double> minor_tol;
  std::optional<double> coverage_threshold;
};

template <class T>
void take(std::optional<T>& dst, const json& j, const char* key) {
  if (!j.contains(key)) return;
  try {
    dst = j.at(key).get<T>();
  } catch (const json::exception&) {
    throw UsageError(std::string("config key '") + key + "' has the wrong type");
  }
}

Layer load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("config file " + path + ": " + e.what());
  }
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  static const std::vector<std::string> known = {
      "n", "x", "center", "case", "samples", "coverage_samples", "steps", "seed", "threads",
      "output", "vertices", "format", "k_file", "identity", "timestamp", "mutation", "slack",
      "minor_tol", "coverage_threshold"};
  for (const auto& [key, value] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw UsageError("unknown config key '" + key + "'");

  Layer l;
  take(l.n, j, "n");
  if (j.contains("x")) {
    if (j["x"].is_string())
      l.x = parse_list(j["x"].get<std::string>());
    else
      take(l.x, j, "x");
  }
  take(l.center, j, "center");
  take(l.group_case, j, "case");
  take(l.samples, j, "samples");
  take(l.coverage_samples, j, "coverage_samples");
  take(l.steps, j, "steps");
  take(l.seed, j, "seed");
  take(l.threads, j, "threads");
  take(l.output, j, "output");
  take(l.vertices, j, "vertices");
  take(l.format, j, "format");
  take(l.k_file, j, "k_file");
  take(l.identity, j, "identity");
  take(l.timestamp, j, "timestamp");
  take(l.mutation, j, "mutation");
  take(l.slack, j, "slack");
  take(l.minor_tol, j, "minor_tol");
  take(l.coverage_threshold, j, "coverage_threshold");
  return l;
}

template <class T>
void merge(std::optional<T>& dst, const std::optional<T>& lower) {
  if (!dst && lower) dst = lower;
}

RunConfig resolve(const std::string& command, const std::string& suite, Layer flags,
                  const Layer& config) {
  merge(flags.n, config.n);
  merge(flags.x, config.x);
  merge(flags.center, config.center);
  merge(flags.group_case, config.group_case);
  merge(flags.samples, config.samples);
  merge(flags.coverage_samples, config.coverage_samples);
  merge(flags.steps, config.steps);
  merge(flags.seed, config.seed);
  merge(flags.threads, config.threads);
  merge(flags.output, config.output);
  merge(flags.vertices, config.vertices);
  merge(flags.format, config.format);
  merge(flags.k_file, config.k_file);
  merge(flags.identity, config.identity);
  merge(flags.timestamp, config.timestamp);
  merge(flags.mutation, config.mutation);
  merge(flags.slack, config.slack);
  merge(flags.minor_tol, config.minor_tol);
  merge(flags.coverage_threshold, config.coverage_threshold);

  RunConfig c;
  c.command = command;
  c.suite = suite;
  c.n = flags.n;
  if (flags.x) c.x_entries = *flags.x;
  c.center = flags.center.value_or(true);
  c.group_case = flags.group_case.value_or("complex");
  c.samples = flags.samples;
  c.coverage_samples = flags.coverage_samples;
  c.steps = flags.steps.value_or(64);
  c.seed = flags.seed.value_or(default_seed());
  c.threads = flags.threads.value_or(1);
  c.output_path = flags.output.value_or("");
  c.vertices_path = flags.vertices.value_or("");
  c.format = flags.format.value_or("");
  c.k_file = flags.k_file.value_or("");
  c.identity_k = flags.identity.value_or(false);
  c.timestamp = flags.timestamp.value_or(true);
  c.mutation = flags.mutation.value_or("none");
  c.slack = flags.slack;
  c.minor_tol = flags.minor_tol;
  c.coverage_threshold = flags.coverage_threshold;
  return c;
}

// ---- resolved inputs -------------------------------------------------------

GroupCase group_case_of(const RunConfig& c) {
  if (c.group_case == "complex") return GroupCase::complex;
  if (c.group_case == "real" || c.group_case == "real_split") return GroupCase::real_split;
  throw UsageError("--case must be complex or real");
}

// Default X: evenly spaced, spread 1.2 < pi/2, generic.
std::vector<double> default_x(int n) {
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = 0.6 * (n - 1 - 2 * i) / (n - 1);
  return x;
}

CartanVector resolve_x(const RunConfig& c) {
  std::vector<double> x = c.x_entries;
  if (x.empty()) {
    if (!c.n) throw UsageError("need --n or --x");
    if (*c.n < 2) throw UsageError("invalid rank n=" + std::to_string(*c.n) + " (need n >= 2)");
    x = default_x(*c.n);
  }
  if (c.n && static_cast<int>(x.size()) != *c.n)
    throw UsageError("--x has " + std::to_string(x.size()) + " entries but --n is " +
                     std::to_string(*c.n));
  if (x.size() < 2) throw UsageError("invalid rank n=" + std::to_string(x.size()) + " (need n >= 2)");
  try {
    return c.center ? CartanVector::centered(std::move(x)) : CartanVector(std::move(x));
  } catch (const InvalidArgument& e) {
    throw UsageError(std::string(e.what()) + " (use centering or pass a zero-sum X)");
  }
}

SuiteOptions suite_options(const RunConfig& c) {
  if (c.steps < 1) throw UsageError("--steps must be positive");
  SuiteOptions o;
  o.seed = c.seed;
  o.threads = std::max(1u, c.threads);
  o.path.initial_steps = c.steps;
  if (c.minor_tol) o.path.minor_tol = *c.minor_tol;
  o.mutation = parse_mutation(c.mutation);
  return o;
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.output_path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + c.output_path);
  f << text;
}

ComplexMatrix load_k(const RunConfig& c, int n, GroupCase gc, const SuiteOptions& opt) {
  if (c.identity_k && !c.k_file.empty()) throw UsageError("--identity and --k-file are exclusive");
  if (c.identity_k) return ComplexMatrix::Identity(n, n);
  if (!c.k_file.empty()) {
    const auto rows = read_matrix_csv(c.k_file);
    if (rows.size() != static_cast<std::size_t>(n))
      throw UsageError("k file does not hold an n x n matrix");
    ComplexMatrix k(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto& [re, im] = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        k(i, j) = Complex(re, im);
      }
    return k;
  }
  return sample_group(gc, n, detail::key(opt, detail::kUnitary, 0));
}

// ---- commands ---------------------------------------------------------------

int cmd_decompose(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (!c.format.empty() && c.format != "json") throw UsageError("decompose only emits json");
  const CartanVector x = resolve_x(c);
  const int n = x.n();
  const GroupCase gc = group_case_of(c);
  const SuiteOptions opt = suite_options(c);
  const ComplexMatrix k = load_k(c, n, gc, opt);

  json rec;
  rec["command"] = "decompose";
  rec["n"] = n;
  rec["x"] = x.entries();
  rec["case"] = to_string(gc);
  rec["seed"] = c.seed;
  rec["steps"] = c.steps;
  rec["k"] = matrix_json(k);
  if (!in_crown_domain(x)) {
    const std::string msg = "X lies outside the crown domain (root spread " + fmt(root_spread(x)) +
                            " >= pi/2); result is a best-effort continuation";
    rec["crown_warning"] = msg;
    err << "warning: " << msg << "\n";
  }
  HoroResult r;
  try {
    r = continued_log_a(k, x, gc, opt.path);
  } catch (const DecompositionOutsideCell& e) {
    err << "error: " << e.what() << " (minor index " << e.index() << ")\n";
    return kDecomposition;
  } catch (const BranchTrackingFailure& e) {
    err << "error: " << e.what() << "\n";
    return kDecomposition;
  }
  rec["U"] = matrix_json(r.factors.upper);
  rec["L"] = matrix_json(r.factors.lower);
  rec["D"] = vector_json(r.d_final);
  rec["Z"] = vector_json(r.z);
  rec["phi"] = r.phi.entries();
  rec["path_steps"] = r.steps_used;
  json minors = json::array();
  for (Eigen::Index i = 0; i < r.factors.trailing_minors.size(); ++i)
    minors.push_back({{"re", r.factors.trailing_minors(i).real()},
                      {"im", r.factors.trailing_minors(i).imag()}});
  rec["trailing_minors"] = minors;
  if (c.timestamp) rec["timestamp"] = timestamp_now();
  emit(c, rec.dump(2) + "\n", out);
  return kOk;
}

int cmd_orbit_scan(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const std::string format = c.format.empty() ? "csv" : c.format;
  if (format != "csv" && format != "json") throw UsageError("--format must be json or csv");
  const CartanVector x = resolve_x(c);
  const int n = x.n();
  const GroupCase gc = group_case_of(c);
  const SuiteOptions opt = suite_options(c);
  const std::size_t samples = c.samples.value_or(1000);
  if (!in_crown_domain(x)) err << "warning: X lies outside the crown domain\n";

  const auto phis = sample_moments(gc, x, samples, opt);
  std::size_t failed = 0;
  std::string text;
  if (format == "csv") {
    text = "sample_index";
    for (int i = 1; i <= n; ++i) text += ",phi_" + std::to_string(i);
    text += "\n";
    for (std::size_t s = 0; s < samples; ++s) {
      if (!phis[s]) {
        ++failed;
        continue;
      }
      text += std::to_string(s);
      for (double v : phis[s]->entries()) text += "," + fmt(v);
      text += "\n";
    }
  } else {
    json rows = json::array();
    for (std::size_t s = 0; s < samples; ++s) {
      if (!phis[s]) {
        ++failed;
        continue;
      }
      rows.push_back({{"sample_index", s}, {"phi", phis[s]->entries()}});
    }
    json rec;
    rec["command"] = "orbit-scan";
    rec["n"] = n;
    rec["x"] = x.entries();
    rec["case"] = to_string(gc);
    rec["seed"] = c.seed;
    rec["samples"] = rows;
    if (c.timestamp) rec["timestamp"] = timestamp_now();
    text = rec.dump(2) + "\n";
  }
  emit(c, text, out);

  std::string vpath = c.vertices_path;
  if (vpath.empty() && !c.output_path.empty()) vpath = c.output_path + ".vertices.json";
  if (!vpath.empty()) {
    json v;
    v["n"] = n;
    v["x"] = x.entries();
    v["case"] = to_string(gc);
    json verts = json::array();
    for (const auto& w : WeylPolytope(x).vertices) verts.push_back(w.entries());
    v["vertices"] = verts;
    std::ofstream f(vpath, std::ios::binary);
    if (!f) throw UsageError("cannot write " + vpath);
    f << v.dump(2) << "\n";
  }
  if (failed > 0) {
    err << "error: " << failed << " sample(s) left the decomposition cell\n";
    return kDecomposition;
  }
  return kOk;
}

SuiteReport run_suite(const std::string& name, const RunConfig& c, const CartanVector& x,
                      const SuiteOptions& opt) {
  const int n = x.n();
  if (name == "manin") return suite_manin(n, opt, c.samples.value_or(100));
  if (name == "symplectic") return suite_symplectic(n, x, c.samples.value_or(20), opt);
  if (name == "moment-id") return suite_moment_identity(n, x, c.samples.value_or(100), opt);
  if (name == "realform") return suite_realform(n, x, c.samples.value_or(1000), opt);
  ConvexityOptions co;
  co.membership_samples = c.samples.value_or(10000);
  co.coverage_samples = c.coverage_samples.value_or(50000);
  co.coverage_threshold = c.coverage_threshold;
  if (c.slack) co.slack = *c.slack;
  const GroupCase gc = name == "convexity-complex" ? GroupCase::complex : GroupCase::real_split;
  return suite_convexity(gc, n, x, co, opt);
}

std::string reports_csv(const std::vector<SuiteReport>& reports) {
  std::string t = "suite,check,bound,extreme,mean,count,tolerance,pass\n";
  for (const auto& r : reports)
    for (const auto& ch : r.checks) {
      const char* bound =
          ch.bound == Bound::below ? "below" : ch.bound == Bound::at_least ? "at_least" : "equal";
      t += r.suite_name + "," + ch.name + "," + bound + "," + fmt(ch.extreme) + "," +
           fmt(ch.mean) + "," + std::to_string(ch.count) + "," + fmt(ch.tolerance) + "," +
           (ch.pass ? "true" : "false") + "\n";
    }
  return t;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const std::string format = c.format.empty() ? "json" : c.format;
  if (format != "csv" && format != "json") throw UsageError("--format must be json or csv");
  std::vector<std::string> names;
  if (c.suite == "all")
    names = kSuites;
  else if (std::find(kSuites.begin(), kSuites.end(), c.suite) != kSuites.end())
    names = {c.suite};
  else
    throw UsageError("unknown suite '" + c.suite + "'");

  const CartanVector x = resolve_x(c);
  const SuiteOptions opt = suite_options(c);
  std::vector<SuiteReport> reports;
  bool pass = true;
  for (const auto& name : names) {
    SuiteReport r;
    try {
      r = run_suite(name, c, x, opt);
    } catch (const InvalidArgument& e) {
      throw UsageError(name + ": " + e.what());
    }
    err << (r.pass ? "PASS " : "FAIL ") << r.suite_name << "\n";
    pass = pass && r.pass;
    reports.push_back(std::move(r));
  }

  std::string text;
  if (format == "csv") {
    text = reports_csv(reports);
  } else {
    json rec;
    if (reports.size() == 1) {
      rec = reports.front().to_json(c.timestamp);
    } else {
      rec["pass"] = pass;
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(r.to_json(c.timestamp));
      rec["reports"] = arr;
    }
    if (c.timestamp) rec["timestamp"] = timestamp_now();
    text = rec.dump(2) + "\n";
  }
  emit(c, text, out);
  return pass ? kOk : kSuiteFailure;
}

}  // namespace

std::uint64_t default_seed() {
  const char* env = std::getenv("CROWNLAB_SEED");
  if (env == nullptr) return 42;
  std::uint64_t v = 0;
  const std::string s(env);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return 42;
  return v;
}

std::vector<std::vector<std::pair<double, double>>> read_matrix_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open k file " + path);
  std::vector<std::pair<double, double>> cells;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[line.find_first_not_of(" \t")] == '#')
      continue;
    const auto parts = parse_list(line);
    if (parts.size() != 2) throw UsageError("k file lines must read 're,im': " + line);
    cells.emplace_back(parts[0], parts[1]);
  }
  std::size_t n = 0;
  while (n * n < cells.size()) ++n;
  if (n * n != cells.size() || n == 0)
    throw UsageError("k file holds " + std::to_string(cells.size()) + " cells, not a square count");
  std::vector<std::vector<std::pair<double, double>>> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i].assign(cells.begin() + i * n, cells.begin() + (i + 1) * n);
  return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"crownlab: horospherical projection and convexity laboratory", "crownlab"};
  app.require_subcommand(1);

  Layer flags;
  int n = 0;
  std::string x_text, group_case, output, vertices, format, k_file, mutation, config_path, suite;
  std::size_t samples = 0, coverage_samples = 0;
  int steps = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  double slack = 0, minor_tol = 0, coverage_threshold = 0;
  bool no_center = false, identity = false, no_timestamp = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", n, "matrix size");
    sub->add_option("--x", x_text, "comma-separated entries of X");
    sub->add_flag("--no-center", no_center, "do not subtract the mean of X");
    sub->add_option("--case", group_case, "complex (SU(n)) or real (SO(n))");
    sub->add_option("--samples", samples, "sample count");
    sub->add_option("--steps", steps, "initial path grid size");
    sub->add_option("--seed", seed, "RNG seed (default $CROWNLAB_SEED or 42)");
    sub->add_option("--threads", threads, "worker threads");
    sub->add_option("--output,-o", output, "output file (default stdout)");
    sub->add_option("--format", format, "json or csv");
    sub->add_option("--config", config_path, "JSON config file");
    
        sub->add_flag("--no-timestamp", no_timestamp, "omit timestamp and runtime fields");
    sub->add_option("--minor-tol", minor_tol, "trailing-minor tolerance");
    sub->add_option("--mutation", mutation, "inject a known formula error");
  };

  CLI::App* dec = app.add_subcommand("decompose", "UDL and moment map for one (k, X)");
  add_common(dec);
  dec->add_flag("--identity", identity, "use k = 1");
  dec->add_option("--k-file", k_file, "CSV matrix, n*n lines 're,im'");

  CLI::App* scan = app.add_subcommand("orbit-scan", "sample Phi(k exp(iX)) over Haar k");
  add_common(scan);
  scan->add_option("--vertices", vertices, "vertex sidecar path");

  CLI::App* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("suite", suite, "manin|symplectic|moment-id|convexity-complex|convexity-real|realform|all")
      ->required();
  add_common(ver);
  ver->add_option("--coverage-samples", coverage_samples, "coverage sample count");
  ver->add_option("--slack", slack, "majorization slack");
  
      ver->add_option("--coverage-threshold", coverage_threshold, "minimum hull coverage");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  // The same variables back every subcommand, so ask the active one which
  // options were actually given.
  CLI::App* active = app.get_subcommands().front();
  auto given = [&](const char* name) {
    for (CLI::Option* o : active->get_options())
      if (o->check_lname(name) && o->count() > 0) return true;
    return false;
  };
  if (given("n")) flags.n = n;
  try {
    if (given("x")) flags.x = parse_list(x_text);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (given("no-center")) flags.center = !no_center;
  if (given("case")) flags.group_case = group_case;
  if (given("samples")) flags.samples = samples;
  if (given("coverage-samples")) flags.coverage_samples = coverage_samples;
  if (given("steps")) flags.steps = steps;
  if (given("seed")) flags.seed = seed;
  if (given("threads")) flags.threads = threads;
  if (given("output")) flags.output = output;
  if (given("vertices")) flags.vertices = vertices;
  if (given("format")) flags.format = format;
  if (given("k-file")) flags.k_file = k_file;
  if (given("identity")) flags.identity = identity;
  if (given("no-timestamp")) flags.timestamp = !no_timestamp;
  if (given("mutation")) flags.mutation = mutation;
  if (given("slack")) flags.slack = slack;
  if (given("minor-tol")) flags.minor_tol = minor_tol;
  if (given("coverage-threshold")) flags.coverage_threshold = coverage_threshold;

  try {
    const Layer config = given("config") ? load_config(config_path) : Layer{};
    const RunConfig c = resolve(active->get_name(), suite, flags, config);
    if (c.command == "decompose") return cmd_decompose(c, out, err);
    if (c.command == "orbit-scan") return cmd_orbit_scan(c, out, err);
    return cmd_verify(c, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DecompositionOutsideCell& e) {
    err << "error: " << e.what() << " (minor index " << e.index() << ")\n";
    return kDecomposition;
  } catch (const BranchTrackingFailure& e) {
    err << "error: " << e.what() << "\n";
    return kDecomposition;
  } catch (const InconsistentDecomposition& e) {
    err << "error: " << e.what() << "\n";
    return kDecomposition;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kSuiteFailure;
  }
}

}  // namespace crownlab::cli
