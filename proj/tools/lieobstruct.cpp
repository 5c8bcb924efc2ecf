// lieobstruct: cohomology, lifting obstructions and lift classification
// for Lie algebras over Z/p^k and F_p[x]/(x^k).
//
// Exit status: 0 success, 1 negative verdict, 2 input error,
// 3 guard or budget exceeded, 4 internal invariant violation.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lieobstruct/catalog.hpp"
#include "lieobstruct/document.hpp"
#include "lieobstruct/error.hpp"
#include "lieobstruct/report.hpp"

namespace {

using namespace lieobstruct;

struct InputOptions {
  std::string input;
  std::string catalog;
  std::size_t n = 0;
  std::uint64_t p = 0;
  unsigned k = 1;
  std::string family = "padic";
};

struct Common {
  InputOptions in;
  std::string format = "text";
  unsigned threads = 1;
  std::string coeffs = "ad";
  std::optional<unsigned> target_level;
  unsigned levels = 0;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--input", in.input, "AlgebraDocument JSON file");
  cmd->add_option("--catalog", in.catalog, "abelian, heisenberg, sl, psl, nilpotent-triangular");
  cmd->add_option("--n", in.n, "catalog size parameter");
  cmd->add_option("--p", in.p, "prime");
  cmd->add_option("--k", in.k, "ring level (default 1)");
  cmd->add_option("--family", in.family, "padic or power_series (default padic)")
      ->check(CLI::IsMember({"padic", "power_series"}));
}

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

std::string input_echo(const InputOptions& in) {
  if (!in.input.empty()) return " --input " + in.input;
  std::string out = " --catalog " + in.catalog;
  if (in.n) out += " --n " + std::to_string(in.n);
  out += " --p " + std::to_string(in.p) + " --k " + std::to_string(in.k) + " --family " + in.family;
  return out;
}

LieAlgebra load_input(const InputOptions& in) {
  if (!in.input.empty() && !in.catalog.empty()) throw InputError("give either --input or --catalog, not both");
  if (!in.input.empty()) return require_lie(load_algebra_document(in.input));
  if (in.catalog.empty()) throw InputError("an input is required: --input FILE or --catalog NAME --p P");
  if (in.p == 0) throw InputError("--catalog needs --p");
  const RingFamily family = in.family == "padic" ? RingFamily::PadicQuotient : RingFamily::PowerSeriesQuotient;
  return catalog(parse_catalog_name(in.catalog, in.n), RingSpec(family, in.p, in.k));
}

LieAlgebra reduce_to(const LieAlgebra& algebra, unsigned level, std::vector<std::string>& notices) {
  if (algebra.ring().level() <= level) return algebra;
  notices.push_back("input over " + algebra.ring().name() + " reduced to " + algebra.ring().at_level(level).name());
  LieAlgebra out = algebra;
  while (out.ring().level() > level) out = reduce_algebra(out);
  return out;
}

int emit(Report report, const std::string& command, const std::vector<std::string>& notices,
         const std::string& format) {
  report.command = command;
  report.notices.insert(report.notices.begin(), notices.begin(), notices.end());
  std::cout << render(report, format == "json" ? ReportFormat::Json : ReportFormat::Text);
  return report.exit_code;
}

int run(CLI::App& app, Common& o) {
  std::vector<std::string> notices;
  const std::string echo_in = input_echo(o.in);

  if (app.got_subcommand("cohomology")) {
    const LieAlgebra a = reduce_to(load_input(o.in), 1, notices);
    if (o.coeffs != "ad" && o.coeffs != "trivial") throw InputError("--coeffs must be ad or trivial");
    const Coefficients c = o.coeffs == "ad" ? Coefficients::Adjoint : Coefficients::Trivial;
    return emit(cohomology_report(a, c, o.threads), "cohomology" + echo_in + " --coeffs " + o.coeffs, notices,
                o.format);
  }
  if (app.got_subcommand("obstruct")) {
    LieAlgebra a = load_input(o.in);
    const unsigned level = a.ring().level();
    const unsigned target = o.target_level.value_or(level + 1);
    if (target < 2) throw InputError("--target-level must be >= 2");
    if (target > level + 1) {
      throw InputError("--target-level " + std::to_string(target) + " is more than one level above the input (level " +
                       std::to_string(level) + "); use `tower` for multi-level lifting");
    }
    a = reduce_to(a, target - 1, notices);
    return emit(obstruction_report(a), "obstruct" + echo_in + " --target-level " + std::to_string(target), notices,
                o.format);
  }
  if (app.got_subcommand("lifts")) {
    return emit(lifts_report(load_input(o.in)), "lifts" + echo_in, notices, o.format);
  }
  if (app.got_subcommand("tower")) {
    const LieAlgebra a = reduce_to(load_input(o.in), 1, notices);
    if (o.levels < 1) throw InputError("--levels must be >= 1");
    return emit(tower_report(a, o.levels), "tower" + echo_in + " --levels " + std::to_string(o.levels), notices,
                o.format);
  }
  if (app.got_subcommand("structure")) {
    const LieAlgebra a = reduce_to(load_input(o.in), 1, notices);
    return emit(structure_report(a), "structure" + echo_in, notices, o.format);
  }
  if (app.got_subcommand("verify-paper")) {
    return emit(regression_report(), "verify-paper", notices, o.format);
  }
  if (app.got_subcommand("export")) {
    std::cout << serialize(load_input(o.in).as_bracket_algebra());
    return 0;
  }
  throw InputError("no command given; see --help");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie algebra cohomology and lifting obstructions over Z/p^k and F_p[x]/(x^k)", "lieobstruct"};
  app.set_version_flag("--version", "lieobstruct " + lieobstruct::version());
  app.require_subcommand(1);
  Common o;

  auto* coh = app.add_subcommand("cohomology", "dimensions and representatives of H^s(L, M)");
  add_input_options(coh, o.in);
  add_format_option(coh, o.format);
  coh->add_option("--coeffs", o.coeffs, "ad or trivial (default ad)")->check(CLI::IsMember({"ad", "trivial"}));
  coh->add_option("--threads", o.threads, "worker threads; output does not depend on it")
      ->check(CLI::Range(1u, 256u));

  auto* obs = app.add_subcommand("obstruct", "obstruction class for lifting one level up");
  add_input_options(obs, o.in);
  add_format_option(obs, o.format);
  obs->add_option("--target-level", o.target_level, "level of the lift (default input level + 1)");

  auto* lifts = app.add_subcommand("lifts", "lifts one level up, classified by H^2(L, ad)");
  add_input_options(lifts, o.in);
  add_format_option(lifts, o.format);

  auto* tower = app.add_subcommand("tower", "lift level by level from the residue field");
  add_input_options(tower, o.in);
  add_format_option(tower, o.format);
  tower->add_option("--levels", o.levels, "target level")->required();

  auto* st = app.add_subcommand("structure", "center, perfectness, simplicity, Killing form, invariant forms");
  add_input_options(st, o.in);
  add_format_option(st, o.format);

  auto* vp = app.add_subcommand("verify-paper", "regression checks on psl3(F_3) and catalog lifts");
  add_format_option(vp, o.format);

  auto* ex = app.add_subcommand("export", "print the algebra as an AlgebraDocument");
  add_input_options(ex, o.in);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    return run(app, o);
  } catch (const lieobstruct::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lieobstruct::GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const lieobstruct::InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
