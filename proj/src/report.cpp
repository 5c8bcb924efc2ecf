#include "lieobstruct/report.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <sstream>

#include "lieobstruct/catalog.hpp"
#include "lieobstruct/document.hpp"
#include "lieobstruct/error.hpp"
#include "lieobstruct/lifting.hpp"
#include "lieobstruct/structure.hpp"

#ifndef LIEOBSTRUCT_VERSION
#define LIEOBSTRUCT_VERSION "0.0.0"
#endif

namespace lieobstruct {

namespace {

using nlohmann::ordered_json;

ordered_json optional_coords(const std::optional<AdForm>& form) {
  return form ? ordered_json(form->coords()) : ordered_json(nullptr);
}

ordered_json optional_vector(const std::optional<FpVector>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

bool is_scalar(const ordered_json& v) { return !v.is_object() && !v.is_array(); }

std::string scalar_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

std::string inline_array(const ordered_json& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].is_array() ? inline_array(v[i]) : scalar_text(v[i]);
  }
  return out + "]";
}

bool is_flat_array(const ordered_json& v) {
  if (!v.is_array()) return false;
  for (const auto& x : v) {
    if (!is_scalar(x) && !(x.is_array() && std::all_of(x.begin(), x.end(), is_scalar))) return false;
  }
  return true;
}

void render_value(std::ostringstream& out, const std::string& key, const ordered_json& v, std::size_t indent) {
  const std::string pad(indent, ' ');
  if (is_scalar(v)) {
    out << pad << key << ": " << scalar_text(v) << "\n";
  } else if (v.is_array() && std::all_of(v.begin(), v.end(), is_scalar)) {
    out << pad << key << ": " << inline_array(v) << "\n";
  } else if (is_flat_array(v)) {
    out << pad << key << ":\n";
    for (const auto& x : v) out << pad << "  - " << (x.is_array() ? inline_array(x) : scalar_text(x)) << "\n";
  } else if (v.is_array()) {
    out << pad << key << ":\n";
    for (std::size_t i = 0; i < v.size(); ++i) render_value(out, "[" + std::to_string(i) + "]", v[i], indent + 2);
  } else {
    out << pad << key << ":\n";
    for (const auto& [k, x] : v.items()) render_value(out, k, x, indent + 2);
  }
}

void render_checks(std::ostringstream& out, const ordered_json& result) {
  for (const auto& c : result["checks"]) {
    out << (c["pass"].get<bool>() ? "PASS  " : "FAIL  ") << c["name"].get<std::string>()
        << "  expected: " << c["expected"].get<std::string>() << "  observed: " << c["observed"].get<std::string>()
        << "\n";
  }
  out << "passed: " << result["passed"].get<std::size_t>() << "/" << result["total"].get<std::size_t>() << "\n";
}

std::string dims_text(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

Report base_report(std::string command, const BracketAlgebra* input) {
  Report r;
  r.command = std::move(command);
  if (input) r.input_digest = algebra_digest(*input);
  return r;
}

ordered_json algebra_header(const LieAlgebra& algebra) {
  ordered_json h;
  h["ring"] = algebra.ring().name();
  h["n"] = algebra.dim();
  return h;
}

}  // namespace

std::string version() { return LIEOBSTRUCT_VERSION; }

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string algebra_digest(const BracketAlgebra& algebra) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(serialize(algebra))));
  return std::string("fnv1a64:") + buf;
}

std::string render(const Report& report, ReportFormat format) {
  if (format == ReportFormat::Json) {
    ordered_json doc;
    doc["version"] = "lieobstruct " + version();
    doc["command"] = report.command;
    doc["input_digest"] = report.input_digest.empty() ? ordered_json(nullptr) : ordered_json(report.input_digest);
    doc["notices"] = report.notices;
    doc["result"] = report.result;
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "lieobstruct " << version() << "\n";
  out << "command: " << report.command << "\n";
  if (!report.input_digest.empty()) out << "input: " << report.input_digest << "\n";
  for (const auto& n : report.notices) out << "notice: " << n << "\n";
  if (report.result.contains("checks")) {
    render_checks(out, report.result);
  } else {
    for (const auto& [k, v] : report.result.items()) render_value(out, k, v, 0);
  }
  return out.str();
}

Report cohomology_report(const LieAlgebra& algebra, Coefficients coeffs, unsigned threads) {
  Report r = base_report("cohomology", &algebra.as_bracket_algebra());
  const CohomologyReport h = cohomology(algebra, coeffs, {threads});
  r.result["algebra"] = algebra_header(algebra);
  r.result["coefficients"] = to_string(coeffs);
  r.result["dims"] = h.dims();
  long long euler = 0;
  for (std::size_t s = 0; s < h.degrees.size(); ++s) {
    euler += (s % 2 ? -1 : 1) * static_cast<long long>(h.degrees[s].dim());
  }
  r.result["euler_characteristic"] = euler;
  ordered_json degrees = ordered_json::array();
  for (const auto& d : h.degrees) {
    ordered_json e;
    e["s"] = d.degree;
    e["dim"] = d.dim();
    e["cochains"] = d.cochain_dim;
    e["cocycles"] = d.cocycle_dim;
    e["coboundaries"] = d.coboundary_dim;
    e["representatives"] = d.representatives;
    degrees.push_back(std::move(e));
  }
  r.result["degrees"] = std::move(degrees);
  return r;
}

Report obstruction_report(const LieAlgebra& algebra) {
  Report r = base_report("obstruct", &algebra.as_bracket_algebra());
  const ObstructionReport o = obstruction(algebra);
  r.result["algebra"] = algebra_header(algebra);
  r.result["target_ring"] = algebra.ring().at_level(algebra.ring().level() + 1).name();
  r.result["verdict"] = o.lifts() ? "lifts" : "obstructed";
  r.result["cocycle_is_zero"] = o.cocycle.is_zero();
  r.result["cocycle_closed"] = o.closed;
  r.result["cocycle"] = o.cocycle.coords();
  r.result["witness"] = optional_coords(o.witness);
  r.result["class_coordinates"] = optional_vector(o.class_coordinates);
  r.result["lifted"] = o.lifted ? to_json(o.lifted->as_bracket_algebra()) : ordered_json(nullptr);
  r.exit_code = o.lifts() ? 0 : 1;
  return r;
}

Report lifts_report(const LieAlgebra& algebra) {
  Report r = base_report("lifts", &algebra.as_bracket_algebra());
  r.result["algebra"] = algebra_header(algebra);
  r.result["target_ring"] = algebra.ring().at_level(algebra.ring().level() + 1).name();
  const auto family = lift_family(algebra);
  if (!family) {
    r.result["verdict"] = "no lifts";
    r.result["class_coordinates"] = optional_vector(obstruction(algebra).class_coordinates);
    r.exit_code = 1;
    return r;
  }
  r.result["verdict"] = "lifts";
  r.result["h2_dim"] = family->h2_dim;
  r.result["member_count"] = family->member_count;
  r.result["materialized"] = family->materialized;
  ordered_json basis = ordered_json::array();
  for (const auto& b : family->h2_basis) basis.push_back(b.coords());
  r.result["h2_basis"] = std::move(basis);
  ordered_json members = ordered_json::array();
  for (const auto& [coords, lift] : family->members) {
    ordered_json m;
    m["h2_coordinates"] = coords;
    m["algebra"] = to_json(lift.as_bracket_algebra());
    members.push_back(std::move(m));
  }
  r.result["members"] = std::move(members);
  return r;
}

Report tower_report(const LieAlgebra& residue, unsigned target_level) {
  Report r = base_report("tower", &residue.as_bracket_algebra());
  const TowerReport t = lift_tower(residue, target_level);
  r.result["algebra"] = algebra_header(residue);
  r.result["target_level"] = t.target_level;
  r.result["reached_level"] = t.reached_level;
  r.result["success"] = t.success();
  ordered_json steps = ordered_json::array();
  for (const auto& s : t.steps) {
    ordered_json e;
    e["from_level"] = s.from_level;
    e["to_level"] = s.from_level + 1;
    e["verdict"] = s.witness ? "lifts" : "obstructed";
    e["witness"] = optional_coords(s.witness);
    e["class_coordinates"] = optional_vector(s.class_coordinates);
    steps.push_back(std::move(e));
  }
  r.result["steps"] = std::move(steps);
  r.result["top"] = to_json(t.top.as_bracket_algebra());
  r.exit_code = t.success() ? 0 : 1;
  return r;
}

Report structure_report(const LieAlgebra& algebra) {
  Report r = base_report("structure", &algebra.as_bracket_algebra());
  r.result["algebra"] = algebra_header(algebra);
  r.result["center_dim"] = center(algebra).size();
  r.result["perfect"] = is_perfect(algebra);
  r.result["simple"] = is_simple(algebra);
  r.result["killing_zero"] = is_killing_zero(algebra);
  r.result["unimodular"] = is_unimodular(algebra);
  r.result["invariant_symmetric_3forms"] = invariant_symmetric_3forms(algebra).dimension;
  return r;
}

std::vector<RegressionCheck> regression_checks() {
  std::vector<RegressionCheck> checks;
  auto add = [&](std::string name, std::string expected, std::string observed) {
    const bool pass = expected == observed;
    checks.push_back({std::move(name), std::move(expected), std::move(observed), pass});
  };
  auto yn = [](bool b) { return std::string(b ? "true" : "false"); };

  const RingSpec f3 = RingSpec::padic(3, 1);
  const LieAlgebra psl = catalog("psl", 3, f3);
  const LieAlgebra sl3 = catalog("sl", 3, f3);

  const auto triv = cohomology(psl, Coefficients::Trivial).dims();
  add("psl3(F_3) trivial H^1", "0", std::to_string(triv[1]));
  add("psl3(F_3) trivial H^2", "6", std::to_string(triv[2]));
  add("psl3(F_3) trivial H^3", "0", std::to_string(triv[3]));
  std::vector<std::size_t> reversed(triv.rbegin(), triv.rend());
  add("psl3(F_3) trivial Poincare symmetry", dims_text(reversed), dims_text(triv));

  add("psl3(F_3) adjoint H^0", "0", std::to_string(degree_cohomology(psl, 0, Coefficients::Adjoint).dim()));
  add("psl3(F_3) adjoint H^1", "7", std::to_string(degree_cohomology(psl, 1, Coefficients::Adjoint).dim()));

  add("psl3(F_3) perfect", "true", yn(is_perfect(psl)));
  add("psl3(F_3) simple", "true", yn(is_simple(psl)));
  add("psl3(F_3) Killing form identically zero", "true", yn(is_killing_zero(psl)));
  add("psl3(F_3) unimodular", "true", yn(is_unimodular(psl)));
  add("psl3(F_3) invariant symmetric 3-forms", "1", std::to_string(invariant_symmetric_3forms(psl).dimension));
  add("sl3(F_3) center dimension", "1", std::to_string(center(sl3).size()));

  const ObstructionReport o = obstruction(psl);
  add("psl3 F_3 -> Z/9 obstructed", "obstructed", o.lifts() ? "lifts" : "obstructed");

  {
    const BracketLift bl = make_bracket_lift(psl);
    const AdForm j = jacobiator(bl);
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<std::uint64_t> digit(0, 2);
    std::size_t agree = 0;
    constexpr std::size_t kTrials = 50;
    for (std::size_t trial = 0; trial < kTrials; ++trial) {
      AdForm t = AdForm::zero(psl.dim(), 2, 3);
      for (auto& x : t.coords()) x = digit(rng);
      const AdForm jt = jacobiator(perturb_lift(bl, t));
      const auto eta = is_coboundary(psl, j - jt);
      if (jt == j - apply_differential(psl, t) && eta && !is_coboundary(psl, jt)) ++agree;
    }
    add("psl3 [J] independent of the bracket lift", std::to_string(kTrials) + "/" + std::to_string(kTrials),
        std::to_string(agree) + "/" + std::to_string(kTrials));
  }

  {
    std::size_t ok = 0, total = 0;
    for (std::uint64_t p : {2, 3, 5}) {
      for (const auto& [name, n] : std::vector<std::pair<std::string, std::size_t>>{
               {"abelian", 3}, {"heisenberg", 3}, {"sl", 2}, {"sl", 3}}) {
        ++total;
        if (lift_tower(catalog(name, n, RingSpec::padic(p, 1)), 3).success()) ++ok;
      }
    }
    add("integer catalog algebras lift F_p -> Z/p^3", std::to_string(total) + "/" + std::to_string(total),
        std::to_string(ok) + "/" + std::to_string(total));
  }

  {
    std::size_t ok = 0, total = 0;
    for (std::uint64_t p : {2, 3}) {
      std::vector<std::pair<std::string, std::size_t>> names{
          {"abelian", 3}, {"heisenberg", 3}, {"sl", 2}, {"sl", 3}, {"nilpotent-triangular", 3}};
      if (p == 3) names.emplace_back("psl", 3);
      for (const auto& [name, n] : names) {
        const LieAlgebra residue = catalog(name, n, RingSpec::power_series(p, 1));
        for (unsigned k : {1u, 2u}) {
          ++total;
          if (obstruction(extend_by_section(residue, k)).witness) ++ok;
        }
      }
    }
    add("power-series obstructions vanish", std::to_string(total) + "/" + std::to_string(total),
        std::to_string(ok) + "/" + std::to_string(total));
  }

  add("psl3 tower F_3 -> Z/9 stops at level 1", "1", std::to_string(lift_tower(psl, 2).reached_level));
  add("sl2 tower F_3 -> Z/81 reaches level 4", "4",
      std::to_string(lift_tower(catalog("sl", 2, f3), 4).reached_level));
  return checks;
}

Report regression_report() {
  Report r = base_report("verify-paper", nullptr);
  const auto checks = regression_checks();
  ordered_json arr = ordered_json::array();
  std::size_t passed = 0;
  for (const auto& c : checks) {
    ordered_json e;
    e["name"] = c.name;
    e["expected"] = c.expected;
    e["observed"] = c.observed;
    e["pass"] = c.pass;
    arr.push_back(std::move(e));
    passed += c.pass ? 1 : 0;
  }
  r.result["checks"] = std::move(arr);
  r.result["passed"] = passed;
  r.result["total"] = checks.size();
  r.exit_code = passed == checks.size() ? 0 : 1;
  return r;
}

}  // namespace lieobstruct
