#include "fockspace/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace fockspace::cli {

std::string format_sig12(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

Json number(double value) {
  if (!std::isfinite(value)) return format_sig12(value);
  if (value == 0.0) return 0.0;
  return std::strtod(format_sig12(value).c_str(), nullptr);
}

Json complex_number(Complex z) { return Json{{"re", number(z.real())}, {"im", number(z.imag())}}; }

Json divisor_echo(const Divisor& divisor) {
  Json out;
  out["alpha"] = number(divisor.params().alpha());
  out["digest"] = divisor_digest(divisor);
  auto& points = out["points"] = Json::array();
  for (const DivisorEntry& e : divisor.entries()) {
    points.push_back(Json{{"re", number(e.point.real())}, {"im", number(e.point.imag())}, {"mult", e.multiplicity}});
  }
  return out;
}

namespace {

Json optional_number(const std::optional<double>& v) { return v ? number(*v) : Json(nullptr); }

Json coverage_json(const CoverageCheck& check, std::size_t max_listed) {
  Json out;
  out["c"] = number(check.c);
  out["holds"] = check.holds;
  out["uncovered_count"] = check.uncovered.size();
  auto& listed = out["uncovered_sample"] = Json::array();
  for (std::size_t i = 0; i < check.uncovered.size() && i < max_listed; ++i) {
    listed.push_back(complex_number(check.uncovered[i]));
  }
  return out;
}

Json disjoint_json(const DisjointCheck& check) {
  Json out;
  out["c"] = number(check.c);
  out["holds"] = check.holds;
  out["violating_pair"] =
      check.violation ? Json::array({check.violation->first, check.violation->second}) : Json(nullptr);
  return out;
}

}  // namespace

Json to_json(const GeometryVerdicts& v, std::size_t max_listed) {
  Json out;
  out["finite_overlap_bound"] = v.finite_overlap_bound;
  out["entries_in_window"] = v.entries_in_window;

  Json necessary;
  necessary["holds"] = v.sampling_necessary_holds;
  necessary["witness_c"] = optional_number(v.sampling_necessary_witness);
  necessary["checks"] = Json::array();
  for (const auto& c : v.sampling_necessary_checks) necessary["checks"].push_back(coverage_json(c, max_listed));
  out["sampling_necessary_cover_plus_c"] = std::move(necessary);

  Json sufficient;
  sufficient["holds_for_all_tested_c"] = v.sampling_sufficient_holds;
  sufficient["hole_radius"] = number(v.hole_radius);
  sufficient["checks"] = Json::array();
  for (const auto& c : v.sampling_sufficient_checks) sufficient["checks"].push_back(coverage_json(c, max_listed));
  out["sampling_sufficient_cover_minus_c"] = std::move(sufficient);

  Json interp_nec;
  interp_nec["holds"] = v.interpolation_necessary_holds;
  interp_nec["witness_c"] = optional_number(v.interpolation_necessary_witness);
  interp_nec["checks"] = Json::array();
  for (const auto& c : v.interpolation_necessary_checks) interp_nec["checks"].push_back(disjoint_json(c));
  out["interpolation_necessary_disjoint_minus_c"] = std::move(interp_nec);

  Json interp_suf;
  interp_suf["holds"] = v.interpolation_sufficient_holds;
  interp_suf["witness_c"] = optional_number(v.interpolation_sufficient_witness);
  interp_suf["checks"] = Json::array();
  for (const auto& c : v.interpolation_sufficient_checks) interp_suf["checks"].push_back(disjoint_json(c));
  out["interpolation_sufficient_disjoint_plus_c"] = std::move(interp_suf);

  Json uniqueness = coverage_json(v.uniqueness_check, max_listed);
  uniqueness["hole_radius"] = number(v.hole_radius);
  out["uniqueness_cover_outside_hole"] = std::move(uniqueness);

  out["exclusivity_consistent"] = v.exclusivity_consistent;
  return out;
}

Json to_json(const SpectralSummary& s) {
  Json out;
  out["N"] = s.max_degree ? Json(*s.max_degree) : Json(nullptr);
  out["smin"] = number(s.smin);
  out["smax"] = number(s.smax);
  out["ratio"] = number(s.ratio);
  out["rank_deficient_by_construction"] = s.rank_deficient_by_construction;
  return out;
}

Json to_json(std::span<const RingSchedule> rings) {
  Json out = Json::array();
  for (const RingSchedule& r : rings) {
    out.push_back(Json{{"radius", number(r.radius)},
                       {"count", r.count},
                       {"mult", r.multiplicity},
                       {"disc_radius", number(r.disc_radius)}});
  }
  return out;
}

Json report_header(const std::string& command, Json input) {
  Json out;
  out["tool"] = kToolName;
  out["version"] = kToolVersion;
  out["command"] = command;
  out["input"] = std::move(input);
  return out;
}

std::string dump(const Json& report) { return report.dump(2) + "\n"; }

std::string spectral_csv(std::span<const SpectralSummary> rows) {
  std::string out = "N,smin,smax,ratio\n";
  for (const SpectralSummary& s : rows) {
    out += (s.max_degree ? std::to_string(*s.max_degree) : std::string()) + "," + format_sig12(s.smin) + "," +
           format_sig12(s.smax) + "," + format_sig12(s.ratio) + "\n";
  }
  return out;
}

std::string points_csv(std::span<const Complex> points) {
  std::string out = "re,im\n";
  for (const Complex& z : points) out += format_sig12(z.real()) + "," + format_sig12(z.imag()) + "\n";
  return out;
}

}  // namespace fockspace::cli
