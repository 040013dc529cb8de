#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cw/hecke.hpp"
#include "cw/io.hpp"
#include "cw/limit.hpp"
#include "cw/plancherel.hpp"
#include "cw/reps.hpp"
#include "cw/walks.hpp"

namespace {

using namespace cw;
using nlohmann::json;

constexpr int kUsage = 2;
constexpr int kTolerance = 1;

struct RunConfig {
  std::string q_text = "2";
  std::string mode = "exact";
  int grid = 256;
  std::uint64_t seed = 42;
  std::string format = "csv";
  std::string out;

  Rational q() const { return parse_rational(q_text); }
  double q_double() const { return q().get_d(); }
  Scalar::Mode scalar_mode() const { return mode == "exact" ? Scalar::Mode::kExact : Scalar::Mode::kNumeric; }
};

class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
  void row(std::vector<json> cells) { rows_.push_back(std::move(cells)); }

  std::string render(const std::string& format) const {
    std::ostringstream os;
    if (format == "json") {
      json arr = json::array();
      for (const auto& r : rows_) {
        json obj = json::object();
        for (std::size_t k = 0; k < header_.size(); ++k) obj[header_[k]] = r[k];
        arr.push_back(std::move(obj));
      }
      os << arr.dump(2) << '\n';
      return os.str();
    }
    for (std::size_t k = 0; k < header_.size(); ++k) os << (k ? "," : "") << header_[k];
    os << '\n';
    for (const auto& r : rows_) {
      for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << csv_cell(r[k]);
      os << '\n';
    }
    return os.str();
  }

 private:
  static std::string csv_cell(const json& v) {
    if (v.is_number_float()) return format_double(v.get<double>());
    if (v.is_string()) {
      const std::string s = v.get<std::string>();
      return s.empty() || s.find(',') != std::string::npos ? "\"" + s + "\"" : s;
    }
    return v.dump();
  }

  std::vector<std::string> header_;
  std::vector<std::vector<json>> rows_;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw ParseError("cannot write " + cfg.out);
  file << text;
}

std::string word_cell(const ReducedWord& w) { return format_word(w); }

void check_config(const RunConfig& cfg) {
  if (cfg.q() <= 1) throw std::invalid_argument("--q must exceed 1");
  if (cfg.grid < 16) throw std::invalid_argument("--grid must be at least 16");
}

void check_n(int n) {
  if (n < 0) throw std::invalid_argument("--n must be nonnegative");
}

AffineElement parse_element_arg(const std::string& text) {
  if (!text.empty() && text.front() == '{') return element_from_json(parse_json_text(text));
  return AffineElement::from_word(parse_word(text));
}

int cmd_walk_exact(const RunConfig& cfg, int n) {
  check_n(n);
  const double q = cfg.q_double();
  const WalkDistribution dist = exact_distribution(RadialWalkSpec::simple(), n, q);
  Table t({"word", "mu_m", "mu_n", "theta", "mass", "p_n"});
  for (const auto& [w, m] : dist.sorted()) {
    t.row({word_cell(reduced_word(w)), w.wt().m, w.wt().n,
           word_cell(w.theta().word()), m, dist.p_n(w)});
  }
  emit(cfg, t.render(cfg.format));
  return 0;
}

int cmd_walk_mc(const RunConfig& cfg, int n, std::uint64_t trials) {
  check_n(n);
  const WalkDistribution dist = mc_simulate(n, trials, cfg.seed, cfg.q_double());
  Table t({"word", "mu_m", "mu_n", "theta", "mass", "p_n", "count"});
  for (const auto& [w, m] : dist.sorted()) {
    t.row({word_cell(reduced_word(w)), w.wt().m, w.wt().n,
           word_cell(w.theta().word()), m, dist.p_n(w),
           std::llround(m * static_cast<double>(trials))});
  }
  emit(cfg, t.render(cfg.format));
  return 0;
}

int cmd_walk_llt(const RunConfig& cfg, const std::string& ns, const std::string& word) {
  const double q = cfg.q_double();
  const AffineElement w = parse_element_arg(word);
  Table t({"n", "exact", "estimate", "ratio"});
  for (int n : parse_int_list(ns)) {
    if (n < 1) throw std::invalid_argument("llt needs n >= 1");
    const double exact = exact_distribution(RadialWalkSpec::simple(), n, q).p_n(w);
    const double est = llt_estimate(w, n, q);
    t.row({n, exact, est, exact / est});
  }
  emit(cfg, t.render(cfg.format));
  return 0;
}

int cmd_walk_compare(const RunConfig& cfg, int n, const std::string& word, std::uint64_t trials, double sigmas) {
  check_n(n);
  const double q = cfg.q_double();
  const AffineElement w = parse_element_arg(word);
  const WalkDistribution exact = exact_distribution(RadialWalkSpec::simple(), n, q);
  const WalkDistribution mc = mc_simulate(n, trials, cfg.seed, q);
  const double a = exact.mass_at(w);
  const double scale = std::pow(q, -w.length());
  const double sigma = std::sqrt(a * (1 - a) / static_cast<double>(trials)) * scale;
  const double p = exact.p_n(w);
  const double mc_p = mc.p_n(w);
  const double z = sigma > 0 ? std::abs(mc_p - p) / sigma : (mc_p == p ? 0.0 : INFINITY);
  const bool ok = z <= sigmas;
  Table t({"method", "p_n", "abs_diff", "tolerance", "ok"});
  t.row({"exact", p, 0.0, 0.0, true});
  t.row({"mc", mc_p, std::abs(mc_p - p), sigmas * sigma, ok});
  if (n >= 1) {
    const double est = llt_estimate(w, n, q);
    t.row({"llt", est, std::abs(est - p), "asymptotic", nullptr});
  }
  t.row({"tv_distance", total_variation(exact, mc), nullptr, nullptr, nullptr});
  emit(cfg, t.render(cfg.format));
  return ok ? 0 : kTolerance;
}

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

int cmd_trace(const RunConfig& cfg, const std::string& method, const std::string& path, double radius,
              int series_grid, double tol) {
  const HeckeAlgebra algebra(cfg.q(), cfg.scalar_mode());
  const HeckeElement h = read_hecke_file(algebra, path);
  const double q = cfg.q_double();
  json results = json::object();
  auto record = [&](const std::string& name, Complex value, double err, int N) {
    results[name] = {{"value", value.real()}, {"value_imag", value.imag()}, {"abs_err_estimate", err}, {"N", N}};
  };
  const bool all = method == "all";
  Complex exact = 0.0;
  if (all || method == "exact") {
    exact = algebra.field().to_complex(algebra.trace(algebra.to_basis(h, Basis::kT)));
    record("exact", exact, 0.0, 0);
  }
  if (all || method == "plancherel") {
    const TraceEstimate e = plancherel_trace(algebra, h, cfg.grid);
    record("plancherel", e.value, e.abs_err_estimate, e.N);
  }
  if (all || method == "series") {
    const double r = radius > 0 ? radius : 0.5 / q;
    const TraceEstimate e = series_trace(algebra, h, r, series_grid);
    record("series", e.value, e.abs_err_estimate, e.N);
  }
  json out;
  bool ok = true;
  if (!all) {
    out = results.begin().value();
  } else {
    out = {{"q", cfg.q_text}, {"methods", results}};
    json disc = json::object();
    for (const char* m : {"plancherel", "series"}) {
      const Complex v{results[m]["value"].get<double>(), results[m]["value_imag"].get<double>()};
      disc[std::string(m) + "_vs_exact"] = std::abs(v - exact);
      ok &= std::abs(v - exact) <= tol;
    }
    out["discrepancies"] = disc;
  }
  emit(cfg, out.dump(2) + "\n");
  return ok ? 0 : kTolerance;
}

int cmd_walks(const RunConfig& cfg, const std::string& type_text, const std::string& start_text) {
  const ReducedWord type = parse_word(type_text);
  const AffineElement start = start_text.empty() ? AffineElement{} : parse_element_arg(start_text);
  Table t({"type", "tags", "end", "wt_m", "wt_n", "theta", "folds"});
  for (const AlcoveWalk& p : enumerate(type, start)) {
    t.row({word_cell(type), p.tag_string(), word_cell(reduced_word(p.end)), p.wt().m,
           p.wt().n, word_cell(p.theta().word()), p.fold_count()});
  }
  emit(cfg, t.render(cfg.format));
  return 0;
}

int cmd_reps_check(const RunConfig& cfg, const std::string& t_text, double tol) {
  std::vector<double> v;
  std::stringstream ss(t_text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ParseError("--t entry is not a number: \"" + item + "\"");
    }
  }
  if (v.size() != 4) throw ParseError("--t takes re,im,re,im");
  const double q = cfg.q_double();
  const CentralCharacter t{{v[0], v[1]}, {v[2], v[3]}};
  const Representation rep = build_principal(q, t);
  const double residual = rep.relation_residual();
  const bool irreducible = is_principal_irreducible(q, t);
  json out{{"q", cfg.q_text},
           {"t", {complex_json(t.t1), complex_json(t.t2)}},
           {"max_relation_residual", residual},
           {"irreducible", irreducible}};
  emit(cfg, out.dump(2) + "\n");
  return residual <= tol ? 0 : kTolerance;
}

int cmd_spectrum(const RunConfig& cfg, bool as_json, double tol) {
  const double q = cfg.q_double();
  const SpectralData d = spectral_data(q);
  const auto numeric = eigen_surface(0.0, 0.0, q);
  const auto induced = induced_eigenvalues(0.0, q);
  double worst = 0.0;
  for (int k = 0; k < 6; ++k) worst = std::max(worst, std::abs(numeric[k] - d.lambda[k]));
  for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(induced[k] - d.mu[k]));
  if (as_json || cfg.format == "json") {
    json out{{"q", cfg.q_text},
             {"lambda", d.lambda},
             {"lambda_numeric", numeric},
             {"a", d.a},
             {"b", d.b},
             {"v1", d.v1},
             {"beta", d.beta},
             {"mu", d.mu},
             {"mu_numeric", induced},
             {"max_abs_diff", worst}};
    emit(cfg, out.dump(2) + "\n");
  } else {
    Table t({"quantity", "closed_form", "numeric"});
    for (int k = 0; k < 6; ++k) {
      t.row({"lambda" + std::to_string(k + 1), d.lambda[k], numeric[k]});
    }
    for (int k = 0; k < 3; ++k) {
      t.row({"mu" + std::to_string(k + 1), d.mu[k], induced[k]});
    }
    t.row({"a", d.a, nullptr});
    t.row({"b", d.b, nullptr});
    t.row({"beta", d.beta, nullptr});
    emit(cfg, t.render("csv"));
  }
  return worst <= tol ? 0 : kTolerance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radial random walks on A2~ buildings: Hecke algebra, Plancherel and local limit tools"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--q", cfg.q_text, "thickness q as an integer or p/r")->capture_default_str();
  app.add_option("--mode", cfg.mode, "scalar mode")->check(CLI::IsMember({"exact", "numeric"}))->capture_default_str();
  app.add_option("--grid", cfg.grid, "quadrature grid size N")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Monte Carlo seed")->capture_default_str();
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--out", cfg.out, "output path (default stdout)");

  std::function<int()> action;

  auto* walk = app.add_subcommand("walk", "n-step distributions of the simple walk");
  walk->require_subcommand(1);
  walk->fallthrough();
  int n = 10;
  std::string word;
  std::string ns = "100,200,400";
  std::uint64_t trials = 1000000;
  double sigmas = 4.0;
  auto* exact = walk->add_subcommand("exact", "exact distribution");
  exact->add_option("--n", n)->capture_default_str();
  exact->callback([&] { action = [&] { return cmd_walk_exact(cfg, n); }; });
  auto* mc = walk->add_subcommand("mc", "Monte Carlo distribution");
  mc->add_option("--n", n)->capture_default_str();
  mc->add_option("--trials", trials)->capture_default_str();
  mc->callback([&] { action = [&] { return cmd_walk_mc(cfg, n, trials); }; });
  auto* llt = walk->add_subcommand("llt", "local limit estimate against the exact value");
  llt->add_option("--n", ns, "comma-separated step counts")->capture_default_str();
  llt->add_option("--word", word, "Weyl distance w as a word or element JSON");
  llt->callback([&] { action = [&] { return cmd_walk_llt(cfg, ns, word); }; });
  auto* compare = walk->add_subcommand("compare", "exact, Monte Carlo and LLT side by side");
  compare->add_option("--n", n)->capture_default_str();
  compare->add_option("--word", word);
  compare->add_option("--trials", trials)->capture_default_str();
  compare->add_option("--sigmas", sigmas, "Monte Carlo tolerance in binomial standard deviations")
      ->capture_default_str();
  compare->callback([&] { action = [&] { return cmd_walk_compare(cfg, n, word, trials, sigmas); }; });

  auto* trace = app.add_subcommand("trace", "canonical trace of an element");
  std::string method = "all";
  std::string element;
  double radius = 0.0;
  int series_grid = 48;
  trace->add_option("--method", method)->check(CLI::IsMember({"all", "plancherel", "exact", "series"}))
      ->capture_default_str();
  trace->add_option("--element", element, "HeckeElement JSON file")->required();
  trace->add_option("--radius", radius, "torus radius for the series method (default 1/(2q))");
  trace->add_option("--series-grid", series_grid)->capture_default_str();
  double trace_tol = 1e-8;
  trace->add_option("--tol", trace_tol, "largest accepted discrepancy from the exact trace")->capture_default_str();
  trace->callback([&] { action = [&] { return cmd_trace(cfg, method, element, radius, series_grid, trace_tol); }; });

  auto* walks = app.add_subcommand("walks", "positively folded alcove walks of a type");
  std::string type;
  std::string start;
  walks->add_option("--type", type, "reduced word, e.g. 1,2,1,0")->required();
  walks->add_option("--start", start, "start alcove as a word or element JSON");
  walks->callback([&] { action = [&] { return cmd_walks(cfg, type, start); }; });

  auto* reps = app.add_subcommand("reps", "representation checks");
  reps->require_subcommand(1);
  reps->fallthrough();
  auto* check = reps->add_subcommand("check", "relation residuals and irreducibility of the principal series");
  std::string t_text;
  double tol = 1e-12;
  check->add_option("--t", t_text, "central character re,im,re,im")->required();
  check->add_option("--tol", tol)->capture_default_str();
  check->callback([&] { action = [&] { return cmd_reps_check(cfg, t_text, tol); }; });

  auto* spectrum = app.add_subcommand("spectrum", "closed-form spectral data against numerics");
  bool as_json = false;
  double spec_tol = 1e-12;
  spectrum->add_flag("--json", as_json);
  spectrum->add_option("--tol", spec_tol)->capture_default_str();
  spectrum->callback([&] { action = [&] { return cmd_spectrum(cfg, as_json, spec_tol); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  try {
    check_config(cfg);
    return action();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
