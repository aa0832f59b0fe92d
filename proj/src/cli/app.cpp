#include "fockspace/cli/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "fockspace/cli/divisor_io.hpp"
#include "fockspace/cli/generators.hpp"
#include "fockspace/cli/report.hpp"
#include "fockspace/errors.hpp"
#include "fockspace/numerics.hpp"

namespace fockspace::cli {

namespace {

constexpr std::size_t kListedPoints = 20;

std::vector<double> parse_c_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw SchemaError("--c-list", "not a number: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw SchemaError("--c-list", "empty list");
  return out;
}

struct DegreeSweep {
  int first = 0;
  int last = 0;
  int step = 1;
};

DegreeSweep parse_sweep(const std::string& text) {
  DegreeSweep s;
  char c1 = 0;
  char c2 = 0;
  std::istringstream in(text);
  if (!(in >> s.first >> c1 >> s.last >> c2 >> s.step) || c1 != ':' || c2 != ':' || !in.eof()) {
    throw SchemaError("--degree-sweep", "expected a:b:step");
  }
  if (s.first < 0 || s.last < s.first || s.step < 1) {
    throw PreconditionError("--degree-sweep needs 0 <= a <= b and step >= 1");
  }
  return s;
}

class Emitter {
 public:
  Emitter(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  void report(const Json& doc, const std::string& path) {
    if (path.empty()) {
      out_ << dump(doc);
    } else {
      write_text_file(path, dump(doc));
    }
  }

  void warn(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) err_ << "warning: " << w << "\n";
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
};

Json warnings_json(const std::vector<std::string>& warnings) {
  Json out = Json::array();
  for (const auto& w : warnings) out.push_back(w);
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiple sampling and interpolation laboratory for the Fock space", "fockctl"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "Write a divisor file from a generator family");
  generate->require_subcommand(1);
  double gen_alpha = 1.0;
  double gen_spacing = 1.0;
  int gen_mult = 1;
  double gen_window = 0.0;
  double gen_c = 1.0;
  double gen_growth = 0.25;
  int gen_mult_step = 1;
  std::string gen_out;
  std::string gen_report;
  auto common_gen = [&](CLI::App* sub) {
    sub->add_option("--alpha", gen_alpha, "Weight alpha")->capture_default_str();
    sub->add_option("--window", gen_window, "Window radius R")->required();
    sub->add_option("--out", gen_out, "Divisor file to write")->required();
    sub->add_option("--report", gen_report, "Report file (default: stdout)");
  };
  auto* gen_lattice = generate->add_subcommand("lattice", "Square lattice clipped to the window");
  common_gen(gen_lattice);
  gen_lattice->add_option("--spacing", gen_spacing, "Lattice spacing")->required();
  gen_lattice->add_option("--mult", gen_mult, "Constant multiplicity")->capture_default_str();
  auto* gen_cover = generate->add_subcommand("covering-rings", "Rings whose shrunken discs cover the window");
  common_gen(gen_cover);
  gen_cover->add_option("--c", gen_c, "Shrink constant C")->required();
  gen_cover->add_option("--growth", gen_growth, "Covering-radius growth per unit radius")->capture_default_str();
  auto* gen_disjoint = generate->add_subcommand("disjoint-rings", "Rings whose enlarged discs are disjoint");
  common_gen(gen_disjoint);
  gen_disjoint->add_option("--c", gen_c, "Enlargement constant C")->required();
  gen_disjoint->add_option("--mult-step", gen_mult_step, "Multiplicity increment per ring")->capture_default_str();

  // commands reading a divisor
  std::string divisor_path;
  std::string report_path;
  auto divisor_cmd = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("divisor", divisor_path, "Divisor JSON file")->required();
    sub->add_option("--report", report_path, "Report file (default: stdout)");
    return sub;
  };

  double window_radius = 0.0;
  double grid_step = 0.0;
  std::string c_list_text = "1";
  double hole_radius = 0.0;
  std::string defects_dir;
  auto* check = divisor_cmd("check-geometry", "Geometric verdicts on a finite window");
  check->add_option("--window", window_radius, "Window radius R")->required();
  check->add_option("--grid-step", grid_step, "Grid pitch (default R/50)");
  check->add_option("--c-list", c_list_text, "Comma-separated ascending C values")->capture_default_str();
  check->add_option("--hole-radius", hole_radius, "Radius of the excluded central disc")->capture_default_str();
  check->add_option("--defects-dir", defects_dir, "Directory for per-check uncovered-point CSV files");

  int degree = -1;
  std::string sweep_text;
  std::string csv_path;
  auto* frame = divisor_cmd("frame-bounds", "Extreme singular values of truncated analysis matrices");
  auto* degree_opt = frame->add_option("--degree", degree, "Truncation degree N");
  auto* sweep_opt = frame->add_option("--degree-sweep", sweep_text, "Degree sweep a:b:step");
  degree_opt->excludes(sweep_opt);
  frame->add_option("--csv", csv_path, "Write N,smin,smax,ratio CSV");

  std::string values_path;
  double rcond = kDefaultRcond;
  bool dump_atoms = false;
  auto* interp = divisor_cmd("interpolate", "Minimal-norm interpolation of measurement data");
  interp->add_option("--values", values_path, "Values JSON file")->required();
  interp->add_option("--rcond", rcond, "Relative eigenvalue cutoff")->capture_default_str();
  interp->add_flag("--dump-atoms", dump_atoms, "Include the interpolant's atoms");

  auto* gram = divisor_cmd("gram", "Spectrum of the Gram matrix of the divisor's atoms");

  auto* unique = divisor_cmd("uniqueness", "Window mass of functions vanishing on the divisor");
  unique->add_option("--degree", degree, "Truncation degree N")->required();
  unique->add_option("--window", window_radius, "Window radius R")->required();

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSchema;
  }

  Emitter emit(out, err);
  try {
    if (generate->parsed()) {
      const FockParams params(gen_alpha);
      Json input;
      input["alpha"] = number(gen_alpha);
      input["window"] = number(gen_window);
      GeneratedDivisor g = [&] {
        if (gen_lattice->parsed()) {
          input["family"] = "lattice";
          input["spacing"] = number(gen_spacing);
          input["mult"] = gen_mult;
          return generate_lattice(params, gen_spacing, gen_mult, gen_window);
        }
        if (gen_cover->parsed()) {
          input["family"] = "covering-rings";
          input["c"] = number(gen_c);
          input["growth"] = number(gen_growth);
          return generate_covering_rings(params, gen_c, gen_window, gen_growth);
        }
        input["family"] = "disjoint-rings";
        input["c"] = number(gen_c);
        input["mult_step"] = gen_mult_step;
        return generate_disjoint_rings(params, gen_c, gen_window, gen_mult_step);
      }();
      write_text_file(gen_out, serialize_divisor(g.divisor));
      Json report = report_header("generate", std::move(input));
      Json result;
      result["divisor_file"] = std::filesystem::path(gen_out).filename().string();
      result["points"] = g.divisor.size();
      result["total_multiplicity"] = g.divisor.total_multiplicity();
      result["digest"] = divisor_digest(g.divisor);
      result["contract"] = g.contract;
      result["contract_verified"] = true;
      result["schedule"] = to_json(g.rings);
      report["result"] = std::move(result);
      emit.report(report, gen_report);
      return kExitOk;
    }

    const IngestedDivisor ingested = read_divisor_file(divisor_path);
    emit.warn(ingested.warnings);
    const Divisor& divisor = ingested.divisor;
    Json input;
    input["divisor"] = divisor_echo(divisor);

    if (check->parsed()) {
      const double step = grid_step > 0.0 ? grid_step : window_radius / 50.0;
      const Window window(window_radius, step);
      const std::vector<double> c_list = parse_c_list(c_list_text);
      input["window"] = number(window_radius);
      input["grid_step"] = number(step);
      input["c_list"] = Json::array();
      for (double c : c_list) input["c_list"].push_back(number(c));
      input["hole_radius"] = number(hole_radius);
      const GeometryVerdicts v = theorem_verdicts(divisor, window, c_list, hole_radius);
      Json report = report_header("check-geometry", std::move(input));
      report["warnings"] = warnings_json(ingested.warnings);
      report["verdicts"] = to_json(v, kListedPoints);
      report["notes"] = Json::array({"verdicts hold on the window |z| <= R sampled at the grid step, not on the whole plane",
                                     "finite_overlap_bound is a lower estimate of the supremum over the plane",
                                     "universal quantifiers over C are tested only on the listed values"});
      if (!defects_dir.empty()) {
        std::filesystem::create_directories(defects_dir);
        const std::filesystem::path dir(defects_dir);
        for (std::size_t i = 0; i < c_list.size(); ++i) {
          write_text_file((dir / ("sampling_necessary_c" + std::to_string(i) + ".csv")).string(),
                          points_csv(v.sampling_necessary_checks[i].uncovered));
          write_text_file((dir / ("sampling_sufficient_c" + std::to_string(i) + ".csv")).string(),
                          points_csv(v.sampling_sufficient_checks[i].uncovered));
        }
        write_text_file((dir / "uniqueness.csv").string(), points_csv(v.uniqueness_check.uncovered));
      }
      emit.report(report, report_path);
      return kExitOk;
    }

    if (frame->parsed()) {
      std::vector<int> degrees;
      if (!sweep_text.empty()) {
        const DegreeSweep s = parse_sweep(sweep_text);
        for (int n = s.first; n <= s.last; n += s.step) degrees.push_back(n);
        input["degree_sweep"] = sweep_text;
      } else {
        if (degree < 0) throw PreconditionError("frame-bounds needs --degree N >= 0 or --degree-sweep");
        degrees.push_back(degree);
        input["degree"] = degree;
      }
      if (divisor.empty()) throw PreconditionError("frame bounds of an empty divisor");
      std::vector<SpectralSummary> rows;
      for (int n : degrees) {
        SpectralSummary s = frame_bounds(analysis_matrix(divisor, n));
        s.divisor_digest = divisor_digest(divisor);
        rows.push_back(s);
      }
      Json report = report_header("frame-bounds", std::move(input));
      report["warnings"] = warnings_json(ingested.warnings);
      report["summaries"] = Json::array();
      for (const auto& s : rows) report["summaries"].push_back(to_json(s));
      report["notes"] = Json::array({"singular values of the analysis matrix restricted to span{e_0..e_N}",
                                     "ratio = (smax/smin)^2, the empirical frame-bound ratio on the truncated space"});
      if (!csv_path.empty()) write_text_file(csv_path, spectral_csv(rows));
      emit.report(report, report_path);
      return kExitOk;
    }

    if (interp->parsed()) {
      const MeasurementVector data = parse_values(read_text_file(values_path), divisor);
      input["values"] = Json::array();
      for (const Complex& v : data.values) input["values"].push_back(complex_number(v));
      input["rcond"] = number(rcond);
      if (divisor.empty()) throw PreconditionError("interpolation on an empty divisor");
      if (!(rcond > 0.0)) throw PreconditionError("--rcond must be positive");
      const InterpolationSolution sol = min_norm_interpolate(divisor, data, rcond);
      Json report = report_header("interpolate", std::move(input));
      report["warnings"] = warnings_json(ingested.warnings);
      Json result;
      result["residual"] = number(sol.residual);
      result["norm"] = number(sol.norm);
      result["data_norm"] = number(data.l2_norm());
      result["gram_condition"] = number(sol.gram_condition);
      result["truncated"] = sol.truncated;
      result["retained_rank"] = sol.retained_rank;
      if (dump_atoms) {
        result["atoms"] = Json::array();
        for (const Atom& a : sol.function.atoms()) {
          result["atoms"].push_back(Json{{"center", complex_number(a.center)},
                                         {"degree", a.degree},
                                         {"coeff", complex_number(a.coeff)}});
        }
      }
      report["result"] = std::move(result);
      emit.report(report, report_path);
      return kExitOk;
    }

    if (gram->parsed()) {
      if (divisor.empty()) throw PreconditionError("Gram matrix of an empty divisor");
      const GramMatrix g = gram_matrix(measurement_labels(divisor), divisor.params());
      SpectralSummary s = riesz_bounds(g);
      const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(g.entries, Eigen::EigenvaluesOnly);
      Json report = report_header("gram", std::move(input));
      report["warnings"] = warnings_json(ingested.warnings);
      Json result = to_json(s);
      result.erase("N");
      result["condition_number"] = number(s.ratio);
      result["eigenvalues"] = Json::array();
      for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
        result["eigenvalues"].push_back(number(eig.eigenvalues()(i)));
      }
      report["result"] = std::move(result);
      emit.report(report, report_path);
      return kExitOk;
    }

    if (unique->parsed()) {
      const Window window(window_radius, window_radius / 10.0);
      input["degree"] = degree;
      input["window"] = number(window_radius);
      if (degree < 0) throw PreconditionError("--degree must be nonnegative");
      const double mass = hole_mass_experiment(divisor, degree, window);
      Json report = report_header("uniqueness", std::move(input));
      report["warnings"] = warnings_json(ingested.warnings);
      report["result"] = Json{{"window_mass_fraction", number(mass)}};
      report["notes"] = Json::array({"maximum over unit-norm functions in span{e_0..e_N} whose measurements vanish"});
      emit.report(report, report_path);
      return kExitOk;
    }
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace fockspace::cli
