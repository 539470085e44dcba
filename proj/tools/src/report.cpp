#include "theta_lab_cli/report.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "theta_lab/bundle.hpp"
#include "theta_lab/curve_spec.hpp"
#include "theta_lab/error.hpp"
#include "theta_lab/hilbert_fit.hpp"
#include "theta_lab/hyperelliptic.hpp"
#include "theta_lab/lefschetz.hpp"
#include "theta_lab/verlinde.hpp"

namespace theta_lab::cli {
namespace {

// Split curve: all Weierstrass points rational.
constexpr const char* kSampleCurve = "field=Fp:13; f=0,-1,0,0,0";
// Generic curve: on y^2 = x^5 - x over F_13 every 2M is twice a point class, so the
// theta-translate intersection is always a tangency there.
constexpr const char* kGenericCurve = "field=Fp:13; f=5,3,0,0,0";

std::string pair_text(const std::string& a, const std::string& b) { return "(" + a + ", " + b + ")"; }

std::string split_text(const LefschetzScenario& s) {
  const EigenSplit split = split_eigendims(s);
  return pair_text(std::to_string(split.plus), std::to_string(split.minus));
}

HyperellipticCurve<Fp> curve_from(const char* spec) {
  return std::get<HyperellipticCurve<Fp>>(new_curve(parse_curve_spec(spec)));
}

HyperellipticCurve<Fp> sample_curve() { return curve_from(kSampleCurve); }

/// Number of distinct classes in the theta-translate intersection for the first M in
/// enumeration order whose points q1, q2 are rational and distinct.
std::string sample_theta_intersection_count() {
  const auto curve = curve_from(kGenericCurve);
  for (const auto& m : enumerate_pic(curve, 0)) {
    try {
      const auto [q1, q2] = curve.km2_points(m);
      if (q1 == q2) continue;
      const auto [l1, l2] = curve.theta_translate_intersection(m);
      return std::to_string(l1 == l2 ? 1 : 2);
    } catch (const Error&) {
      continue;
    }
  }
  return "none";
}

std::string sample_pencil_cokernel() {
  const auto curve = sample_curve();
  for (const auto& p : rational_points(curve)) {
    if (curve.is_weierstrass(p)) continue;
    return std::to_string(pencil_trick_chain(curve, p).cokernel);
  }
  return "none";
}

const std::map<std::string, std::function<std::string()>>& computations() {
  static const std::map<std::string, std::function<std::string()>> table{
      {"p(0)", [] { return hilbert_values().p0.get_str(); }},
      {"p(1)", [] { return hilbert_values().p1.get_str(); }},
      {"p(2)", [] { return verlinde_p2().get_str(); }},
      {"gamma", [] { return fit_hilbert(1, 10, verlinde_p2()).gamma.to_string(); }},
      {"basepoints", [] { return fit_hilbert(1, 10, verlinde_p2()).chern_degree.get_str(); }},
      {"canonical_power", [] { return std::to_string(canonical_power()); }},
      {"symmetry_center", [] { return symmetry_center(fit_hilbert(1, 10, verlinde_p2())).to_string(); }},
      {"theta_eigendims(2,2)",
       [] {
         const auto dims = theta_eigendims(2, 2);
         return pair_text(dims.plus.get_str(), dims.minus.get_str());
       }},
      {"lefschetz sym2", [] { return split_text(sym2_scenario()); }},
      {"lefschetz sym2-rejected", [] { return split_text(sym2_rejected_scenario()); }},
      {"lefschetz hom-ee", [] { return split_text(hom_ee_scenario()); }},
      {"lefschetz hom-ow", [] { return split_text(hom_ow_scenario()); }},
      {"moduli_dim(2,2)", [] { return std::to_string(moduli_dim(2, 2)); }},
      {"mukai_rank", [] { return std::to_string(raynaud_invariants().mukai_rank); }},
      {"duplication_degree", [] { return std::to_string(raynaud_invariants().duplication_degree); }},
      {"pullback_degree_on_Y", [] { return std::to_string(raynaud_invariants().pullback_degree_on_y); }},
      {"slope_Ec", [] { return raynaud_invariants().slope_ec.to_string(); }},
      {"chi(W*K)", [] { return std::to_string(chi(twist(BundleSymbol(4, 0), 2))); }},
      {"dim PH^1(Sym^2 E)", [] { return std::to_string(-chi(sym2(BundleSymbol(2, -1))) - 1); }},
      {"slope(F)", [] { return slope(BundleSymbol(3, 5)).to_string(); }},
      {"|J[2]|", [] { return std::to_string(sample_curve().two_torsion().size()); }},
      {"Theta^2", [] { return std::to_string(theta_self_intersection(1, 2)); }},
      {"theta-translate intersection", [] { return sample_theta_intersection_count(); }},
      {"pencil-trick cokernel", [] { return sample_pencil_cokernel(); }},
  };
  return table;
}

std::string compute(const std::string& label) {
  const auto& table = computations();
  const auto it = table.find(label);
  if (it == table.end()) return "unknown row";
  try {
    return it->second();
  } catch (const Error& e) {
    return std::string(error_code_name(e.code()));
  }
}

}  // namespace

std::vector<PinnedConstant> pinned_constants() {
  std::vector<PinnedConstant> pinned{
      {"p(0)", "1", "Verlinde value at level 0"},
      {"p(1)", "10", "Verlinde value at level 1"},
      {"p(2)", "58", "Verlinde sum at level 2"},
      {"gamma", "1/604800", "leading coefficient of the Hilbert polynomial, 6/10!"},
      {"basepoints", "6", "length of the base locus of the theta system"},
      {"canonical_power", "-6", "canonical bundle via the adjoint Dynkin index of C2"},
      {"symmetry_center", "-3", "Serre-duality symmetry of the Hilbert polynomial"},
      {"theta_eigendims(2,2)", "(10, 6)", "even/odd parts of |4 Theta| on J^1"},
      {"lefschetz sym2", "(1, 5)", "h^1(Sym^2 E) split by the hyperelliptic involution"},
      {"lefschetz sym2-rejected", "INFEASIBLE", "alternative Sym^2 E linearization"},
      {"lefschetz hom-ee", "(1, 3)", "h^1(Hom(E_f, E_e)) split"},
      {"lefschetz hom-ow", "(1, 1)", "h^1(Hom(O(-w), E_e)) split"},
      {"moduli_dim(2,2)", "10", "dimension of the moduli of rank-4 symplectic bundles, g = 2"},
      {"mukai_rank", "4", "rank of the Fourier-Mukai transform of O(-2 Theta)"},
      {"duplication_degree", "16", "degree of multiplication by 2 on J"},
      {"pullback_degree_on_Y", "64", "degree of the pullback to the duplication cover"},
      {"slope_Ec", "1", "slope of the restricted Raynaud bundle"},
      {"chi(W*K)", "4", "Riemann-Roch for a rank-4 degree-0 bundle twisted by K"},
      {"dim PH^1(Sym^2 E)", "5", "projective extension space for rank 2, degree -1"},
      {"slope(F)", "5/3", "slope of the rank-3 degree-5 subbundle"},
      {"|J[2]|", "16", "two-torsion of the Jacobian (sample curve over F_13)"},
      {"Theta^2", "2", "self-intersection of the theta divisor on a genus-2 Jacobian"},
      {"theta-translate intersection", "2", "points of t_M Theta meet t_-M Theta (generic curve over F_13)"},
      {"pencil-trick cokernel", "1", "cokernel of the multiplication map (sample curve)"},
  };
#ifdef THETA_LAB_CORRUPT_ROW
  for (auto& row : pinned) {
    if (row.label == THETA_LAB_CORRUPT_ROW) row.paper_value = THETA_LAB_CORRUPT_VALUE;
  }
#endif
  return pinned;
}

std::vector<ReportRow> build_report(const std::vector<PinnedConstant>& pinned) {
  std::vector<ReportRow> rows;
  rows.reserve(pinned.size());
  for (const auto& constant : pinned) {
    ReportRow row;
    row.label = constant.label;
    row.computed = compute(constant.label);
    row.paper_value = constant.paper_value;
    row.location = constant.location;
    row.status = row.computed == row.paper_value ? RowStatus::kMatch : RowStatus::kMismatch;
    rows.push_back(std::move(row));
  }
  return rows;
}

bool all_match(const std::vector<ReportRow>& rows) {
  for (const auto& row : rows) {
    if (row.status != RowStatus::kMatch) return false;
  }
  return true;
}

std::string render_text(const std::vector<ReportRow>& rows) {
  std::size_t label_width = 5;
  std::size_t value_width = 8;
  for (const auto& row : rows) {
    label_width = std::max(label_width, row.label.size());
    value_width = std::max({value_width, row.computed.size(), row.paper_value.size()});
  }
  const auto pad = [](const std::string& s, std::size_t width) {
    return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
  };
  std::ostringstream os;
  os << pad("label", label_width) << "  " << pad("computed", value_width) << "  "
     << pad("expected", value_width) << "  status    location\n";
  std::size_t matches = 0;
  for (const auto& row : rows) {
    const bool ok = row.status == RowStatus::kMatch;
    matches += ok ? 1 : 0;
    os << pad(row.label, label_width) << "  " << pad(row.computed, value_width) << "  "
       << pad(row.paper_value, value_width) << "  " << pad(ok ? "match" : "MISMATCH", 8) << "  "
       << row.location << "\n";
  }
  os << matches << "/" << rows.size() << " rows match\n";
  return os.str();
}

void to_json(nlohmann::json& j, const ReportRow& row) {
  j = nlohmann::json{{"label", row.label},
                     {"computed", row.computed},
                     {"paper_value", row.paper_value},
                     {"location", row.location},
                     {"status", row.status == RowStatus::kMatch ? "match" : "mismatch"}};
}

void from_json(const nlohmann::json& j, ReportRow& row) {
  j.at("label").get_to(row.label);
  j.at("computed").get_to(row.computed);
  j.at("paper_value").get_to(row.paper_value);
  j.at("location").get_to(row.location);
  const auto status = j.at("status").get<std::string>();
  if (status != "match" && status != "mismatch") {
    throw nlohmann::json::other_error::create(501, "status must be match or mismatch", &j);
  }
  row.status = status == "match" ? RowStatus::kMatch : RowStatus::kMismatch;
}

std::string render_json(const std::vector<ReportRow>& rows) {
  return nlohmann::json(rows).dump(2) + "\n";
}

std::vector<ReportRow> parse_json(const std::string& text) {
  return nlohmann::json::parse(text).get<std::vector<ReportRow>>();
}

}  // namespace theta_lab::cli
