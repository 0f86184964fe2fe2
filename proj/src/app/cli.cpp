#include "cusp/app/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "cusp/app/catalog.hpp"
#include "cusp/app/render.hpp"
#include "cusp/app/reproduce.hpp"
#include "cusp/error.hpp"

namespace cusp::app {

namespace {

struct Options {
  bool json = false;
  bool fail_on_obstruction = false;

  std::string char_seq;
  std::string knot;
  std::int64_t s = 0;
  std::int64_t m = 0;

  std::string central;
  std::vector<std::string> targets;
  std::vector<std::string> criteria;
  std::optional<std::int64_t> probe_m;

  std::int64_t a = 0, b = 0, c = 0, d = 0;
  std::int64_t p = 0, q = 0;
  std::optional<std::int64_t> r;

  std::string catalog;
};

void emit(std::ostream& out, const Options& opt, const Json& doc) {
  if (opt.json) {
    out << doc.dump(2) << "\n";
  } else {
    out << json_text(doc);
  }
}

int finish(const Options& opt, bool obstructed) {
  return opt.fail_on_obstruction && obstructed ? kExitObstructed : kExitOk;
}

std::vector<Criterion> selected_criteria(const Options& opt) {
  if (opt.criteria.empty()) return {all_criteria().begin(), all_criteria().end()};
  std::vector<Criterion> out;
  for (const auto& name : opt.criteria) {
    const Criterion c = parse_criterion(name);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

int cmd_obstruct(const Options& opt, std::ostream& out) {
  const std::int64_t cap = max_delta_from_env();
  CharSeq central = parse_capped(opt.central, cap);
  std::vector<CharSeq> targets;
  std::string name = central.to_string() + " ->";
  for (const auto& t : opt.targets) {
    targets.push_back(parse_capped(t, cap));
    name += " " + targets.back().to_string();
  }
  const auto prob = DeformationProblem::make(std::move(central), std::move(targets));
  const auto criteria = selected_criteria(opt);
  const auto report = evaluate_problem(prob, criteria, name);

  std::optional<SemigroupWitness> probe;
  if (opt.probe_m) {
    if (*opt.probe_m < 0) throw Error(ErrorCode::kRangeViolated, "--probe-m must be nonnegative");
    probe = semigroup_probe(prob.central_semigroup(), prob.target_semigroups(), *opt.probe_m);
  }

  if (opt.json) {
    Json doc = report_json(report);
    if (probe) doc["probe"] = probe_json(*probe);
    out << doc.dump(2) << "\n";
  } else {
    out << report_text(report);
    if (probe) {
      out << "  probe m=" << probe->m << " partition=(";
      for (std::size_t i = 0; i < probe->partition.size(); ++i) {
        out << (i != 0 ? "," : "") << probe->partition[i];
      }
      out << ") central count " << probe->central_count << ", target count " << probe->target_count << "\n";
    }
  }
  return finish(opt, report.any_obstructed());
}

int cmd_batch(const Options& opt, std::ostream& out) {
  const auto catalog = load_catalog(opt.catalog, max_delta_from_env());
  const auto reports = run_catalog(catalog);
  bool obstructed = false;
  if (opt.json) {
    Json doc = Json::array();
    for (const auto& r : reports) doc.push_back(report_json(r));
    out << doc.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i != 0) out << "\n";
      out << report_text(reports[i]);
    }
  }
  for (const auto& r : reports) obstructed = obstructed || r.any_obstructed();
  return finish(opt, obstructed);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Obstructions to deformations of cuspidal plane curve singularities", "cusp"};
  app.require_subcommand(1);
  app.add_flag("--json", opt.json, "Machine-readable JSON output");
  app.add_flag("--fail-on-obstruction", opt.fail_on_obstruction, "Exit with status 1 if any criterion obstructs");

  auto* semigroup = app.add_subcommand("semigroup", "Generators, delta, Milnor number, gaps, conductor");
  semigroup->add_option("charseq", opt.char_seq, "Characteristic sequence p;q1,...,qn")->required();

  auto* ups = app.add_subcommand("upsilon", "Upsilon function of the link of a singularity");
  ups->add_option("charseq", opt.char_seq, "Characteristic sequence p;q1,...,qn")->required();

  auto* dinv = app.add_subcommand("dinv", "d-invariant of large surgery on a connected sum of algebraic knots");
  dinv->add_option("knot", opt.knot, "Knot: char-seqs joined by '#', or U")->required();
  dinv->add_option("s", opt.s, "Surgery coefficient, s > 2g")->required();
  dinv->add_option("m", opt.m, "Spin^c label with -s/2 <= m < s/2")->required();

  auto* obstruct = app.add_subcommand("obstruct", "Run obstruction criteria on a deformation");
  obstruct->add_option("central", opt.central, "Central singularity")->required();
  obstruct->add_option("targets", opt.targets, "Singularities of the nearby fibre")->required();
  obstruct->add_option("--criteria", opt.criteria, "semigroup, dinv, upsilon, spectrum, mbar, multiplicity")
      ->delimiter(',');
  obstruct->add_option("--probe-m", opt.probe_m, "Also evaluate the semigroup inequality at this m");

  auto* unknot = app.add_subcommand("unknot", "Can T(a,b) appear in a minimal unknotting sequence of T(c,d)?");
  unknot->add_option("a", opt.a)->required();
  unknot->add_option("b", opt.b)->required();
  unknot->add_option("c", opt.c)->required();
  unknot->add_option("d", opt.d)->required();

  auto* spectrum = app.add_subcommand("spectrum", "Spectrum of x^p - y^q");
  spectrum->add_option("p", opt.p)->required();
  spectrum->add_option("q", opt.q)->required();

  auto* cobordism = app.add_subcommand("cobordism", "Intersection form and Spin^c data of the surgery cobordism");
  cobordism->add_option("p", opt.p)->required();
  cobordism->add_option("q", opt.q)->required();
  cobordism->add_option("r", opt.r, "Odd r with r = q mod 4");

  auto* batch = app.add_subcommand("batch", "Evaluate a JSON problem catalog");
  batch->add_option("catalog", opt.catalog, "Catalog file")->required();

  auto* reproduce = app.add_subcommand("reproduce-examples", "Recompute every worked example");
  reproduce->alias("reproduce-paper");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (semigroup->parsed()) {
      emit(out, opt, semigroup_json(parse_capped(opt.char_seq, max_delta_from_env())));
    } else if (ups->parsed()) {
      emit(out, opt, upsilon_json(parse_capped(opt.char_seq, max_delta_from_env())));
    } else if (dinv->parsed()) {
      const KnotSpec knot = parse_knot_capped(opt.knot, max_delta_from_env());
      emit(out, opt, dinv_json(knot, opt.s, opt.m));
    } else if (obstruct->parsed()) {
      return cmd_obstruct(opt, out);
    } else if (unknot->parsed()) {
      const Json doc = unknot_json(opt.a, opt.b, opt.c, opt.d);
      emit(out, opt, doc);
      return finish(opt, doc["verdict"] == "OBSTRUCTED");
    } else if (spectrum->parsed()) {
      emit(out, opt, spectrum_json(opt.p, opt.q));
    } else if (cobordism->parsed()) {
      emit(out, opt, cobordism_json(opt.p, opt.q, opt.r));
    } else if (batch->parsed()) {
      return cmd_batch(opt, out);
    } else if (reproduce->parsed()) {
      emit(out, opt, reproduce_examples());
    }
  } catch (const Error& e) {
    err << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace cusp::app
