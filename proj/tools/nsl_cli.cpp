#include <nsl/json_io.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace nsl;

namespace {

// Everything a command needs to rerun identically: flag values echoed into the
// report, plus hashes of every file that was read. No clocks anywhere.
struct RunConfig {
  std::string command;
  std::uint64_t seed = 0;
  std::size_t seeds = 20;
  std::size_t g = 4;
  long long entry_bound = 2;
  std::size_t pair_limit = 31;
  std::size_t bound = 2;
  std::size_t count = 3;
  bool slow = false;
  std::string m_out;
  std::string fixtures_dir = NSL_FIXTURE_DIR;
  std::string classes_path, period_path, base_path, out_path;
  Json inputs = Json::object();  // name -> fnv64 of the bytes consumed
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string slurp(RunConfig& cfg, const std::string& path) {
  std::string bytes = read_file(path);
  cfg.inputs[path] = fnv64_hex(bytes);
  return bytes;
}

Json config_json(const RunConfig& cfg) {
  Json j;
  j["command"] = cfg.command;
  j["seed"] = cfg.seed;
  j["seeds"] = cfg.seeds;
  j["g"] = cfg.g;
  j["entry_bound"] = cfg.entry_bound;
  j["pair_limit"] = cfg.pair_limit;
  j["bound"] = cfg.bound;
  j["count"] = cfg.count;
  j["slow"] = cfg.slow;
  j["m"] = cfg.m_out;
  j["inputs"] = cfg.inputs;
  return j;
}

void emit(const RunConfig& cfg, Json report) {
  report["config"] = config_json(cfg);
  std::string text = report.dump(2) + "\n";
  if (cfg.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + cfg.out_path);
    out << text;
  }
}

std::array<NSClass, 3> load_triple(RunConfig& cfg, const std::string& path) {
  return triple_from_json(Json::parse(slurp(cfg, path)));
}

PeriodMatrix load_period(RunConfig& cfg, const std::string& path) {
  return period_from_json(Json::parse(slurp(cfg, path)));
}

void describe_report(const FiberReport& r) {
  if (r.empty) {
    std::cout << "locus: empty\n";
    return;
  }
  std::cout << "locus: cone dimension " << r.cone_dimension << ", projective dimension "
            << r.projective_dimension;
  if (r.degree) std::cout << ", degree " << *r.degree;
  if (r.discriminant)
    std::cout << ", discriminant " << r.discriminant->str()
              << (*r.irreducible_over_q ? " (irreducible over Q)" : " (splits over Q)");
  std::cout << "\n";
  if (!r.note.empty()) std::cout << "note: " << r.note << "\n";
  for (std::size_t k = 0; k < r.points.size(); ++k) {
    const FiberPoint& p = r.points[k];
    std::cout << "point " << k + 1 << ": " << torus_kind_name(p.kind) << ", rank " << p.ns.rank;
    if (p.polarization)
      std::cout << ", polarization " << polarization_status_name(p.polarization->status);
    if (!p.polarization_note.empty()) std::cout << " (" << p.polarization_note << ")";
    std::cout << "\n";
  }
}

// descending in the ring order, the order reduced bases are stored in
void sort_descending(std::vector<Poly>& v, const MonomialOrder& ord) {
  std::stable_sort(v.begin(), v.end(), [&](const Poly& a, const Poly& b) {
    return ord.less(b.leading_monomial(), a.leading_monomial());
  });
}

int cmd_paper_example(RunConfig& cfg) {
  auto triple = load_triple(cfg, cfg.fixtures_dir + "/reference_triple.json");
  std::string gen_text = slurp(cfg, cfg.fixtures_dir + "/reference_generators.txt");

  LocusProblem prob(triple[0], triple[1], triple[2]);
  const Ring& pr = prob.projective_ring();

  std::vector<Poly> expected;
  std::istringstream lines(gen_text);
  for (std::string line; std::getline(lines, line);) {
    if (line.empty()) continue;
    expected.push_back(pr.parse(line));
  }
  sort_descending(expected, pr.order);

  FiberReport report = classify(prob, cfg.bound);
  const std::vector<Poly>& got = report.generators;

  Json diff = Json::array();
  if (expected.size() != got.size()) {
    Json d;
    d["expected_count"] = expected.size();
    d["computed_count"] = got.size();
    diff.push_back(std::move(d));
  }
  for (std::size_t k = 0; k < std::max(expected.size(), got.size()); ++k) {
    bool both = k < expected.size() && k < got.size();
    if (both && expected[k] == got[k]) continue;
    Json d;
    d["generator"] = k < expected.size() ? Json(pr.str(expected[k])) : Json(nullptr);
    d["computed"] = k < got.size() ? Json(pr.str(got[k])) : Json(nullptr);
    diff.push_back(std::move(d));
  }
  bool match = diff.empty();

  if (match)
    std::cout << "basis: all " << got.size() << " generators match the fixture\n";
  else
    std::cout << "basis: MISMATCH, " << diff.size() << " difference(s)\n";
  describe_report(report);

  Json j;
  j["match"] = match;
  j["diff"] = diff;
  j["report"] = fiber_report_to_json(report, pr);
  emit(cfg, std::move(j));
  return match ? 0 : 1;
}

int cmd_locus(RunConfig& cfg) {
  auto triple = load_triple(cfg, cfg.classes_path);
  LocusProblem prob(triple[0], triple[1], triple[2]);
  FiberReport report = classify(prob, cfg.bound);
  describe_report(report);
  Json j;
  j["report"] = fiber_report_to_json(report, prob.projective_ring());
  emit(cfg, std::move(j));
  return 0;
}

int cmd_sweep(RunConfig& cfg) {
  if (cfg.g < 3) throw std::invalid_argument("sweep: g must be at least 3");
  Json rows = Json::array();
  std::size_t empty_count = 0;
  for (std::size_t k = 0; k < cfg.seeds; ++k) {
    std::uint64_t seed = cfg.seed + k;
    auto triple = random_triple(cfg.g, seed, cfg.entry_bound);
    LocusProblem prob(triple[0], triple[1], triple[2]);
    FiberReport r = classify(prob, cfg.bound);
    empty_count += r.empty ? 1 : 0;
    std::cout << "seed " << seed << ": "
              << (r.empty ? "empty"
                          : "projective dimension " + std::to_string(r.projective_dimension))
              << "\n";
    Json row;
    row["seed"] = seed;
    row["empty"] = r.empty;
    row["cone_dimension"] = r.cone_dimension;
    row["projective_dimension"] = r.projective_dimension;
    row["degree"] = r.degree ? Json(*r.degree) : Json(nullptr);
    rows.push_back(std::move(row));
  }
  std::cout << "empty: " << empty_count << "/" << cfg.seeds << "\n";
  Json j;
  j["rows"] = rows;
  j["empty_count"] = empty_count;
  emit(cfg, std::move(j));
  return 0;
}

int cmd_rank(RunConfig& cfg) {
  PeriodMatrix tau = load_period(cfg, cfg.period_path);
  NSRankResult r = ns_rank(tau);
  std::cout << torus_kind_name(tau.kind()) << ", rank " << r.rank << "\n";
  Json j;
  j["kind"] = torus_kind_name(tau.kind());
  j["ns"] = ns_rank_to_json(r);
  emit(cfg, std::move(j));
  return 0;
}

int cmd_polarize(RunConfig& cfg) {
  PeriodMatrix tau = load_period(cfg, cfg.period_path);
  // the shortcut settles maximal-rank g=3 without a witness; a valid torus
  // additionally gets the real search so the witness form is reported
  PolarizationResult shortcut = find_polarization(tau, cfg.bound, true);
  std::optional<PolarizationResult> search;
  if (tau.kind() == TorusKind::ValidTorus) search = find_polarization(tau, cfg.bound, false);
  const PolarizationResult& main = search ? *search : shortcut;
  std::cout << polarization_status_name(main.status) << ", rank " << main.ns.rank;
  if (search && shortcut.status == PolarizationStatus::MaximalRankShortcut)
    std::cout << " (shortcut agrees)";
  std::cout << "\n";
  Json j;
  j["kind"] = torus_kind_name(tau.kind());
  j["search"] = search ? polarization_to_json(*search) : Json(nullptr);
  j["shortcut"] = polarization_to_json(shortcut);
  emit(cfg, std::move(j));
  return main.status == PolarizationStatus::NoneWithinBound ? 1 : 0;
}

int cmd_family_check(RunConfig& cfg) {
  FamilyCertificate cert = family_certificate(cfg.pair_limit, cfg.slow);
  bool ok = cert.holds && cert.specialization_contained &&
            (!cert.specialization_equals_reference || *cert.specialization_equals_reference);
  std::cout << "leading terms keep a tau variable: " << (cert.holds ? "yes" : "NO") << "\n"
            << "specialization contained in the reference scheme: "
            << (cert.specialization_contained ? "yes" : "NO") << "\n";
  if (cert.specialization_equals_reference)
    std::cout << "specialization equals the reference scheme: "
              << (*cert.specialization_equals_reference ? "yes" : "NO") << "\n";
  Json j;
  j["holds"] = cert.holds;
  j["complete"] = cert.complete;
  j["pairs_processed"] = cert.pairs_processed;
  j["basis_size"] = cert.basis_size;
  j["specialization_contained"] = cert.specialization_contained;
  j["specialization_equals_reference"] =
      cert.specialization_equals_reference ? Json(*cert.specialization_equals_reference)
                                           : Json(nullptr);
  emit(cfg, std::move(j));
  return ok ? 0 : 1;
}

int cmd_approximate(RunConfig& cfg) {
  auto triple = load_triple(cfg, cfg.classes_path);
  PeriodMatrix base = load_period(cfg, cfg.base_path);
  LocusProblem prob(triple[0], triple[1], triple[2]);
  std::optional<Rational> m_out;
  if (!cfg.m_out.empty()) m_out = Rational::parse(cfg.m_out);
  ApproxResult res = approximate_abelian(prob, base, cfg.count, m_out, cfg.bound);
  std::cout << approx_status_name(res.status);
  if (!res.message.empty()) std::cout << ": " << res.message;
  std::cout << "\n";
  for (std::size_t k = 0; k < res.points.size(); ++k)
    std::cout << "point " << k + 1 << ": " << torus_kind_name(res.points[k].tau.kind())
              << ", rank " << res.points[k].ns.rank << "\n";
  Json j;
  j["result"] = approx_result_to_json(res);
  emit(cfg, std::move(j));
  if (res.status == ApproxStatus::Ok) return 0;
  return res.status == ApproxStatus::NonlinearLocus ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"exact locus analysis for triples of integral classes on complex tori"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* c) {
    c->add_option("--bound", cfg.bound, "max-norm bound for the polarization search");
    c->add_option("--out", cfg.out_path, "write the JSON report here instead of stdout");
    c->add_option("--fixtures", cfg.fixtures_dir, "fixture directory");
  };

  CLI::App* pe = app.add_subcommand("paper-example",
                                    "replay the built-in reference computation and diff "
                                    "its reduced basis against the stored generators");
  add_common(pe);

  CLI::App* lo = app.add_subcommand("locus", "classify the holomorphy locus of a class triple");
  lo->add_option("classes", cfg.classes_path, "JSON file with three classes")->required();
  add_common(lo);

  CLI::App* sw = app.add_subcommand("sweep", "classify random triples over a seed range");
  sw->add_option("--g", cfg.g, "torus dimension (>= 3)");
  sw->add_option("--seeds", cfg.seeds, "number of seeds");
  sw->add_option("--seed", cfg.seed, "first seed");
  sw->add_option("--entry-bound", cfg.entry_bound, "coordinate bound for random classes");
  add_common(sw);

  CLI::App* rk = app.add_subcommand("rank", "rank and basis of the surviving classes at tau");
  rk->add_option("period", cfg.period_path, "period matrix JSON file")->required();
  add_common(rk);

  CLI::App* po = app.add_subcommand("polarize", "search for a positive definite class at tau");
  po->add_option("period", cfg.period_path, "period matrix JSON file")->required();
  add_common(po);

  CLI::App* fc = app.add_subcommand("family-check",
                                    "partial-basis certificate for the parametric family");
  fc->add_option("--pair-limit", cfg.pair_limit, "pair budget for the partial basis");
  fc->add_flag("--slow", cfg.slow, "also compare the specialized ideal with the reference");
  add_common(fc);

  CLI::App* ap = app.add_subcommand("approximate",
                                    "walk torus points inside a linear (C = 0) locus");
  ap->add_option("classes", cfg.classes_path, "JSON file with three classes")->required();
  ap->add_option("base", cfg.base_path, "base period matrix JSON file")->required();
  ap->add_option("--count", cfg.count, "number of points to emit");
  ap->add_option("--m", cfg.m_out, "override field parameter, a negative non-square rational");
  add_common(ap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // keep --help at 0 but fold CLI11's usage-error codes into "input error"
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (pe->parsed()) cfg.command = "paper-example";
    if (lo->parsed()) cfg.command = "locus";
    if (sw->parsed()) cfg.command = "sweep";
    if (rk->parsed()) cfg.command = "rank";
    if (po->parsed()) cfg.command = "polarize";
    if (fc->parsed()) cfg.command = "family-check";
    if (ap->parsed()) cfg.command = "approximate";

    if (pe->parsed()) return cmd_paper_example(cfg);
    if (lo->parsed()) return cmd_locus(cfg);
    if (sw->parsed()) return cmd_sweep(cfg);
    if (rk->parsed()) return cmd_rank(cfg);
    if (po->parsed()) return cmd_polarize(cfg);
    if (fc->parsed()) return cmd_family_check(cfg);
    if (ap->parsed()) return cmd_approximate(cfg);
  } catch (const Json::parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedShape& e) {
    std::cerr << "unsupported result shape: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
