// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: acceptance [path-to-lieobstruct-cli]

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <tuple>
#include <sstream>
#include <string>
#include <vector>

#include "lieobstruct/catalog.hpp"
#include "lieobstruct/ce_complex.hpp"
#include "lieobstruct/lifting.hpp"
#include "lieobstruct/oracle.hpp"
#include "lieobstruct/report.hpp"
#include "lieobstruct/structure.hpp"

using namespace lieobstruct;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

const RingSpec F3 = RingSpec::padic(3, 1);

std::uint64_t ipow(std::uint64_t p, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= p;
  return r;
}

std::string dims_text(const std::vector<std::size_t>& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s;
}

AdForm random_form(std::mt19937_64& rng, std::size_t n, std::size_t s, std::uint64_t p) {
  AdForm f = AdForm::zero(n, s, p);
  for (auto& x : f.coords()) x = rng() % p;
  return f;
}

std::vector<LieAlgebra> level_one_catalog(std::uint64_t p) {
  const RingSpec r = RingSpec::padic(p, 1);
  std::vector<LieAlgebra> out{catalog("abelian", 3, r),
                              catalog("heisenberg", 3, r),
                              catalog("heisenberg", 5, r),
                              catalog("sl", 2, r),
                              catalog("sl", 3, r),
                              catalog("nilpotent-triangular", 3, r),
                              catalog("nilpotent-triangular", 4, r)};
  if (p == 3) out.push_back(catalog("psl", 3, r));
  return out;
}

Outcome criterion1() {
  Outcome o;
  const auto d = cohomology(catalog("psl", 3, F3), Coefficients::Trivial).dims();
  o.detail = "dims " + dims_text(d);
  o.expect(d[1] == 0, "H^1 = " + std::to_string(d[1]) + ", expected 0");
  o.expect(d[2] == 6, "H^2 = " + std::to_string(d[2]) + ", expected 6");
  o.expect(d[3] == 0, "H^3 = " + std::to_string(d[3]) + ", expected 0");
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto d = cohomology(catalog("psl", 3, F3), Coefficients::Adjoint).dims();
  o.detail = "dims " + dims_text(d);
  o.expect(d[0] == 0, "H^0 = " + std::to_string(d[0]) + ", expected 0");
  o.expect(d[1] == 7, "H^1 = " + std::to_string(d[1]) + ", expected 7");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const LieAlgebra psl = catalog("psl", 3, F3);
  o.expect(is_perfect(psl), "not perfect");
  o.expect(is_simple(psl), "not simple");
  o.expect(is_killing_zero(psl), "Killing form nonzero");
  o.expect(is_unimodular(psl), "not unimodular");
  const std::size_t forms = invariant_symmetric_3forms(psl).dimension;
  o.expect(forms == 1, "invariant symmetric 3-forms dim " + std::to_string(forms) + ", expected 1");
  const std::size_t z = center(catalog("sl", 3, F3)).size();
  o.expect(z == 1, "center of sl3 dim " + std::to_string(z) + ", expected 1");
  return o;
}

Outcome criterion4() {
  Outcome o;
  const LieAlgebra psl = catalog("psl", 3, F3);
  const ObstructionReport rep = obstruction(psl);
  o.expect(!rep.lifts() && rep.class_coordinates.has_value(), "obstruction reported as zero");
  const DegreeCohomology h3 = degree_cohomology(psl, 3, Coefficients::Adjoint);
  const BracketLift canonical = make_bracket_lift(psl);
  std::mt19937_64 rng(4242);
  std::vector<FpVector> classes;
  for (int t = 0; t < 50; ++t) {
    const AdForm j = jacobiator(perturb_lift(canonical, random_form(rng, psl.dim(), 2, 3)));
    const auto c = class_coordinates(h3, j.coords());
    if (!c) {
      o.expect(false, "J of a random lift is not a cocycle");
      return o;
    }
    classes.push_back(*c);
  }
  std::size_t agree = 0;
  for (std::size_t a = 0; a < classes.size(); ++a) {
    for (std::size_t b = a + 1; b < classes.size(); ++b) agree += classes[a] == classes[b] ? 1 : 0;
  }
  o.expect(agree == 50 * 49 / 2, "lift classes disagree");
  o.expect(rep.class_coordinates && classes.front() == *rep.class_coordinates, "random classes differ from canonical");
  if (o.pass) o.detail = "[J] != 0; 1225/1225 pairs of random lifts cohomologous";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t lifted = 0;
  for (std::uint64_t p : {2, 3, 5}) {
    for (const auto& [name, n] : std::vector<std::pair<std::string, std::size_t>>{
             {"abelian", 3}, {"heisenberg", 3}, {"sl", 2}, {"sl", 3}}) {
      LieAlgebra cur = catalog(name, n, RingSpec::padic(p, 1));
      for (unsigned level = 1; level < 3; ++level) {
        const ObstructionReport r = obstruction(cur);
        if (!r.lifted || !r.lifted->as_bracket_algebra().satisfies_jacobi()) {
          o.expect(false, name + "(" + std::to_string(n) + ") p=" + std::to_string(p) + " stuck at level " +
                              std::to_string(level));
          break;
        }
        cur = *r.lifted;
        ++lifted;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(lifted) + "/24 lifting steps verified";
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (const auto& [name, n, p] : std::vector<std::tuple<std::string, std::size_t, std::uint64_t>>{
           {"abelian", 2, 2}, {"abelian", 2, 3}, {"heisenberg", 3, 2}}) {
    const LieAlgebra a = catalog(name, n, RingSpec::padic(p, 1));
    const OracleBudget budget = budget_from_env();
    const std::size_t classes = partition_by_psi_equivalence(enumerate_lifts_bruteforce(a, budget), budget).size();
    const std::uint64_t expected = ipow(p, degree_cohomology(a, 2, Coefficients::Adjoint).dim());
    const std::string tag = name + "(" + std::to_string(n) + ") F_" + std::to_string(p) + ": " +
                            std::to_string(classes) + " classes vs " + std::to_string(expected);
    o.expect(classes == expected, tag);
    if (classes == expected) o.detail += (o.detail.empty() ? "" : "; ") + tag;
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (std::uint64_t p : {2, 3, 5}) {
    for (const auto& a : level_one_catalog(p)) {
      for (auto c : {Coefficients::Adjoint, Coefficients::Trivial}) {
        for (std::size_t s = 0; s + 2 <= a.dim(); ++s) {
          if (!multiply(differential_matrix(a, s + 1, c), differential_matrix(a, s, c)).is_zero()) {
            o.expect(false, "d^2 != 0");
          }
        }
      }
    }
  }

  std::mt19937_64 rng(99);
  std::size_t lifts = 0, perturbations = 0;
  for (std::uint64_t p : {2, 3}) {
    for (const auto& base : level_one_catalog(p)) {
      const BracketLift bl = make_bracket_lift(base);
      const AdForm j = jacobiator(bl);
      for (int t = 0; t < 16; ++t) {
        const AdForm tf = random_form(rng, base.dim(), 2, p);
        const AdForm jt = jacobiator(perturb_lift(bl, tf));  // throws unless dJ = 0
        ++lifts;
        o.expect(jt == j - apply_differential(base, tf), "J' != J - dt");
        ++perturbations;
      }
    }
  }
  o.expect(lifts >= 200, "fewer than 200 lifts tested");

  for (std::uint64_t p : {2, 3, 5}) {
    const RingSpec r = RingSpec::padic(p, 2);
    for (int t = 0; t < 20; ++t) {
      const AdForm phi = random_form(rng, 4, 1, p);
      if (!(psi_automorphism(r, phi).compose(psi_automorphism_inverse(r, phi)) == ModuleMap::identity(r, 4))) {
        o.expect(false, "Psi o Psi^-1 != Id");
      }
    }
  }

  for (const auto& a : {catalog("psl", 3, F3), catalog("heisenberg", 3, F3)}) {
    const auto d = cohomology(a, Coefficients::Trivial).dims();
    o.expect(std::equal(d.begin(), d.end(), d.rbegin()), "Poincare symmetry fails");
  }

  for (auto fam : {RingFamily::PadicQuotient, RingFamily::PowerSeriesQuotient}) {
    for (std::uint64_t p : {2, 3, 5}) {
      for (unsigned k : {1u, 2u, 3u}) {
        const RingSpec top(fam, p, k + 1), f(fam, p, 1);
        for (std::uint64_t c = 0; c < p; ++c) {
          const RingElem x = psi(RingElem(f, c), top);
          o.expect(chi(x).value() == c && lambda_residue(x).is_zero(), "chi o psi or lambda o psi fails");
        }
        for (std::uint64_t v = 0; v < top.order(); v += top.prime_power(k)) {
          o.expect(psi(chi(RingElem(top, v)), top).value() == v, "psi o chi fails");
        }
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(lifts) + " lifts with dJ = 0, " + std::to_string(perturbations) + " J' = J - dt checks";
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t count = 0;
  for (std::uint64_t p : {2, 3}) {
    std::vector<std::pair<std::string, std::size_t>> names{
        {"abelian", 3}, {"heisenberg", 3}, {"sl", 2}, {"sl", 3}, {"nilpotent-triangular", 3}};
    if (p == 3) names.emplace_back("psl", 3);
    for (const auto& [name, n] : names) {
      const LieAlgebra r = catalog(name, n, RingSpec::power_series(p, 1));
      for (unsigned k : {1u, 2u}) {
        const ObstructionReport rep = obstruction(extend_by_section(r, k));
        o.expect(rep.witness.has_value(), name + " p=" + std::to_string(p) + " k=" + std::to_string(k));
        ++count;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(count) + "/" + std::to_string(count) + " witnesses";
  return o;
}

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  status = ::pclose(pipe);
  return out;
}

Outcome criterion9(const std::string& cli) {
  Outcome o;
  const std::vector<std::string> suite{
      "cohomology --catalog psl --n 3 --p 3 --coeffs trivial",
      "cohomology --catalog psl --n 3 --p 3 --coeffs ad",
      "cohomology --catalog psl --n 3 --p 3 --coeffs ad --threads 4",
      "cohomology --catalog abelian --n 2 --p 5 --coeffs trivial",
      "structure --catalog psl --n 3 --p 3",
      "structure --catalog sl --n 3 --p 3",
      "obstruct --catalog psl --n 3 --p 3",
      "obstruct --catalog sl --n 3 --p 3",
      "obstruct --catalog heisenberg --p 2 --family power_series",
      "lifts --catalog abelian --n 2 --p 3",
      "tower --catalog sl --n 2 --p 3 --levels 4",
      "tower --catalog psl --n 3 --p 3 --levels 2",
      "verify-paper",
  };
  std::size_t compared = 0;
  if (!cli.empty()) {
    for (const auto& args : suite) {
      for (const char* fmt : {"text", "json"}) {
        const std::string cmd = cli + " " + args + " --format " + fmt + " 2>&1";
        int s1 = 0, s2 = 0;
        const std::string a = run_capture(cmd, s1), b = run_capture(cmd, s2);
        o.expect(a == b && s1 == s2 && !a.empty(), "output differs: " + args + " (" + fmt + ")");
        ++compared;
      }
    }
    int s1 = 0, s2 = 0;
    const std::string one = run_capture(cli + " cohomology --catalog psl --n 3 --p 3 --coeffs ad --threads 1", s1);
    const std::string many = run_capture(cli + " cohomology --catalog psl --n 3 --p 3 --coeffs ad --threads 8", s2);
    o.expect(one == many, "output depends on --threads");
  }
  // In-process: builders are deterministic too.
  const LieAlgebra psl = catalog("psl", 3, F3);
  const std::vector<std::function<Report()>> builders{
      [&] { return cohomology_report(psl, Coefficients::Trivial); },
      [&] { return cohomology_report(psl, Coefficients::Adjoint, 3); },
      [&] { return structure_report(psl); },
      [&] { return obstruction_report(psl); },
      [&] { return lifts_report(catalog("abelian", 2, F3)); },
      [&] { return tower_report(catalog("sl", 2, F3), 4); },
      [&] { return regression_report(); },
  };
  for (const auto& b : builders) {
    o.expect(render(b(), ReportFormat::Json) == render(b(), ReportFormat::Json), "in-process report differs");
    ++compared;
  }
  if (o.pass) o.detail = std::to_string(compared) + " report pairs byte-identical";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  struct Criterion {
    int id;
    const char* title;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "psl3(F_3) trivial cohomology H^1=0, H^2=6, H^3=0", 5, criterion1},
      {2, "psl3(F_3) adjoint cohomology H^0=0, H^1=7", 10, criterion2},
      {3, "psl3(F_3) structure suite", 0, criterion3},
      {4, "psl3 F_3 -> Z/9 obstructed, class independent of the lift", 30, criterion4},
      {5, "integer catalog algebras lift F_p -> Z/p^2 -> Z/p^3", 0, criterion5},
      {6, "oracle Psi-classes equal p^dim H^2", 60, criterion6},
      {7, "property suite", 0, criterion7},
      {8, "power-series obstructions vanish", 0, criterion8},
      {9, "reports are byte-identical across runs", 0, [&] { return criterion9(cli); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs >= c.limit_s) o.expect(false, "over time limit");
    std::ostringstream time;
    time.setf(std::ios::fixed);
    time.precision(2);
    time << secs << "s";
    if (c.limit_s > 0) time << " < " << c.limit_s << "s";
    std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.title << " (" << time.str()
              << ")" << (o.detail.empty() ? "" : " -- " + o.detail) << "\n";
    failed += o.pass ? 0 : 1;
  }
  std::cout << (9 - failed) << "/9 criteria passed\n";
  return failed == 0 ? 0 : 1;
}
