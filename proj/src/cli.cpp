#include "yam/cli.hpp"

#include "yam/generators.hpp"
#include "yam/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace yam {

namespace {

namespace fs = std::filesystem;

constexpr std::size_t kShownFailures = 10;

struct Report {
  explicit Report(std::string name = {}) : command(std::move(name)) {}

  std::string command;
  bool pass = true;
  Json payload = Json::object();
  std::vector<std::string> lines;
  // Commands that produce a file print the payload alone.
  bool artifact = false;
};

std::string format_tuple(const std::vector<Index>& t) {
  std::ostringstream s;
  s << "(";
  for (std::size_t k = 0; k < t.size(); ++k) s << (k ? ", " : "") << t[k];
  s << ")";
  return s.str();
}

std::string format_vector(const Vector& v) {
  std::ostringstream s;
  s << "[";
  for (Index k = 0; k < v.size(); ++k) s << (k ? ", " : "") << to_string(Rational(v(k)));
  s << "]";
  return s.str();
}

void add_report(Report& r, const AxiomReport& a) {
  r.pass = r.pass && a.passed();
  r.lines.push_back(a.summary());
  for (std::size_t k = 0; k < a.failures.size() && k < kShownFailures; ++k) {
    const IdentityFailure& f = a.failures[k];
    r.lines.push_back("  FAIL " + f.identity + " at " + format_tuple(f.tuple) + ": residual " + format_vector(f.residual));
  }
  if (a.failures.size() > kShownFailures)
    r.lines.push_back("  ... " + std::to_string(a.failures.size() - kShownFailures) + " more failures recorded");
  r.payload["report"] = to_json(a);
}

fs::path dir_of(const std::string& path) { return fs::path(path).parent_path(); }

std::string file_kind(const Json& j) {
  if (!j.is_object()) throw InputError("expected a JSON object at the top level");
  if (j.contains("pi")) return "ym";
  if (j.contains("R")) return "rbo";
  if (j.contains("terms")) return "deformation";
  if (j.contains("total")) return "extension";
  if (j.contains("actions")) return "representation";
  if (j.contains("ops")) return "algebra";
  throw InputError("cannot tell the file kind: expected an algebra, representation, deformation, extension, "
                   "Yamaguti multiplication or Rota-Baxter file");
}

AlgebraPresentation load_algebra(const std::string& path) { return algebra_from_json(read_json_file(path), path); }

OperadKind kind_option(const std::string& s) {
  try {
    return parse_operad_kind(s);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

bool in_coboundary_span(const CochainTriple& t, const AssYRepresentation& rep) {
  const Vector v = pack(t);
  const std::vector<CochainTriple> b = coboundary_space(rep);
  if (b.empty()) return is_zero_matrix(v);
  Matrix cols(v.size(), static_cast<Index>(b.size()));
  for (std::size_t k = 0; k < b.size(); ++k) cols.col(static_cast<Index>(k)) = pack(b[k]);
  return in_span(cols, v);
}

Json names(const std::set<std::string>& s) { return Json(std::vector<std::string>(s.begin(), s.end())); }

std::string joined(const std::set<std::string>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : " ") + x;
  return out.empty() ? "none" : out;
}

Report cmd_check(const std::string& path) {
  const Json j = read_json_file(path);
  const fs::path dir = dir_of(path);
  const std::string kind = file_kind(j);
  Report r{"check"};
  r.payload["file_kind"] = kind;
  if (kind == "algebra") {
    add_report(r, check_axioms(algebra_from_json(j, path)));
  } else if (kind == "representation") {
    add_report(r, check_representation(representation_from_json(j, dir)));
  } else if (kind == "deformation") {
    add_report(r, check_deformation(deformation_from_json(j, dir)));
  } else if (kind == "ym") {
    const auto [p, ym] = ym_from_json(j);
    add_report(r, check_yamaguti_multiplication(p, ym));
  } else if (kind == "rbo") {
    add_report(r, check_rbo(rbo_from_json(j, dir)));
  } else {
    const ExtensionPresentation e = extension_from_json(j, dir);
    try {
      validate(e);
      r.lines.push_back("extension: valid");
    } catch (const std::invalid_argument& ex) {
      r.pass = false;
      r.lines.push_back(std::string("extension: invalid: ") + ex.what());
      r.payload["reason"] = ex.what();
    }
  }
  return r;
}

Report cmd_construct(const std::string& path, const std::string& target) {
  AlgebraClass to;
  try {
    to = parse_class(target);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  Report r{"construct"};
  r.artifact = true;
  r.payload = to_json(construct(load_algebra(path), to));
  return r;
}

Report cmd_envelope(const std::string& path) {
  const EnvelopePresentation env = envelope(load_algebra(path));
  Report r{"envelope"};
  r.artifact = true;
  r.payload = Json{{"m_dim", env.m_dim()},
                   {"total", to_json(env.total)},
                   {"projector0", to_json(env.split.projector0)},
                   {"projector1", to_json(env.split.projector1)}};
  return r;
}

Report cmd_diagram(const std::string& which, const std::string& path, int random, std::uint64_t seed) {
  Diagram d;
  if (which == "ass") d = Diagram::Ass;
  else if (which == "diass") d = Diagram::Diass;
  else throw InputError("--which must be ass or diass");
  if (path.empty() == (random == 0)) throw InputError("diagram: give either a file or --random N");
  Report r{"diagram"};
  if (!path.empty()) {
    const bool ok = check_diagram(d, load_algebra(path));
    r.pass = ok;
    r.lines.push_back(std::string("commutes: ") + (ok ? "true" : "false"));
    r.payload["commutes"] = ok;
    return r;
  }
  Rng rng(seed);
  int commuting = 0;
  Json failing = Json::array();
  for (int k = 0; k < random; ++k) {
    const AlgebraPresentation input = d == Diagram::Ass ? random_ass(2, rng) : random_diass(2, rng, k % 2 == 1);
    if (check_diagram(d, input)) ++commuting;
    else failing.push_back(to_json(input));
  }
  r.pass = commuting == random;
  r.lines.push_back(std::string("commutes: ") + (r.pass ? "true" : "false") + " on " + std::to_string(commuting) +
                    "/" + std::to_string(random) + " random inputs (seed " + std::to_string(seed) + ")");
  r.payload["commutes"] = r.pass;
  r.payload["inputs"] = random;
  r.payload["commuting"] = commuting;
  r.payload["seed"] = seed;
  r.payload["failing_inputs"] = failing;
  return r;
}

Report cmd_cohomology(const std::string& alg_path, const std::string& rep_path, bool representatives) {
  const AlgebraPresentation a = load_algebra(alg_path);
  const AssYRepresentation rep = representation_from_json(read_json_file(rep_path), dir_of(rep_path), &a);
  if (!(rep.base == a)) throw InputError("the representation is over a different algebra than " + alg_path);
  const CohomologyResult c = cohomology(rep);
  Report r{"cohomology"};
  r.lines.push_back("dim_Z=" + std::to_string(c.dim_Z) + " dim_B=" + std::to_string(c.dim_B) +
                    " dim_H=" + std::to_string(c.dim_H));
  r.payload["dim_Z"] = c.dim_Z;
  r.payload["dim_B"] = c.dim_B;
  r.payload["dim_H"] = c.dim_H;
  if (representatives) {
    Json reps = Json::array();
    for (std::size_t k = 0; k < c.h_representatives.size(); ++k) {
      reps.push_back(to_json(c.h_representatives[k]));
      r.lines.push_back("representative " + std::to_string(k + 1) + ": " + reps.back().dump());
    }
    r.payload["representatives"] = reps;
  }
  return r;
}

Report cmd_deform(const std::string& path) {
  const TruncatedDeformation d = deformation_from_json(read_json_file(path), dir_of(path));
  Report r{"deform"};
  const AxiomReport report = check_deformation(d);
  add_report(r, report);
  if (!report.passed()) return r;
  const auto inf = infinitesimal(d);
  if (!inf) {
    r.lines.push_back("infinitesimal: none, every term vanishes");
    r.payload["infinitesimal"] = nullptr;
    return r;
  }
  r.pass = inf->is_cocycle;
  r.lines.push_back("infinitesimal: order " + std::to_string(inf->order) +
                    ", cocycle: " + (inf->is_cocycle ? "true" : "false"));
  r.payload["infinitesimal"] =
      Json{{"order", inf->order}, {"is_cocycle", inf->is_cocycle}, {"triple", to_json(inf->triple)}};
  return r;
}

Report cmd_extension(const std::string& path) {
  const ExtensionPresentation e = extension_from_json(read_json_file(path), dir_of(path));
  Report r{"extension"};
  try {
    validate(e);
  } catch (const std::invalid_argument& ex) {
    r.pass = false;
    r.lines.push_back(std::string("extension: invalid: ") + ex.what());
    r.payload["reason"] = ex.what();
    return r;
  }
  const ExtractedCocycle ex = cocycle_from_extension(e);
  const bool cocycle = is_cocycle(ex.triple, ex.induced);
  r.pass = cocycle;
  r.lines.push_back("extension: valid");
  r.lines.push_back(std::string("cocycle: ") + (cocycle ? "true" : "false"));
  if (cocycle) {
    const bool trivial = in_coboundary_span(ex.triple, ex.induced);
    r.lines.push_back(std::string("class: ") + (trivial ? "trivial" : "nontrivial"));
    r.payload["trivial_class"] = trivial;
  }
  r.payload["is_cocycle"] = cocycle;
  r.payload["cocycle"] = to_json(ex.triple);
  r.payload["representation"] = to_json(ex.induced);
  return r;
}

Report cmd_operad_check(const std::string& kind, Index dim, int max_arity) {
  if (dim < 1) throw InputError("--dim must be positive");
  const OperadKind k = kind_option(kind);
  Report r{"operad check"};
  try {
    add_report(r, check_operad_axioms(k == OperadKind::End ? end_operad(dim) : dend_operad(dim), max_arity));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return r;
}

void add_agreement(Report& r, const CheckerAgreement& c) {
  r.lines.push_back(std::string("checkers agree: ") + (c.agree() ? "true" : "false"));
  if (!c.agree()) {
    r.pass = false;
    r.lines.push_back("  algebra checker fails: " + joined(c.algebra_failures));
    r.lines.push_back("  operad checker fails: " + joined(c.operad_failures));
  }
}

Report cmd_ym_check(const std::string& path) {
  const auto [p, ym] = ym_from_json(read_json_file(path));
  Report r{"operad ym-check"};
  add_report(r, check_yamaguti_multiplication(p, ym));
  const AlgebraPresentation a =
      p.kind == OperadKind::End ? assy_from_end_ym(ym, p.dim) : dendy_from_dend_ym(ym, p.dim);
  const CheckerAgreement c = compare_checkers(a);
  add_agreement(r, c);
  r.payload["agree"] = c.agree();
  r.payload["algebra_failures"] = names(c.algebra_failures);
  r.payload["operad_failures"] = names(c.operad_failures);
  return r;
}

// Every third draw is a valid structure so both outcomes occur.
AlgebraPresentation agreement_sample(OperadKind kind, Index dim, int trial, Rng& rng) {
  if (kind == OperadKind::End) {
    if (trial % 3 == 0) return construct(random_ass(dim, rng), AlgebraClass::AssY);
    AlgebraPresentation a = random_candidate(AlgebraClass::AssY, dim, rng);
    if (trial % 3 == 1) a.ops["dcurly"] = a.op("curly");
    return a;
  }
  if (trial % 3 == 0) {
    // x < y = xy, x > y = 0 is dendriform for any associative product
    AlgebraPresentation d = zero_algebra(AlgebraClass::Dend, dim);
    d.ops["prec"] = random_ass(dim, rng).op("dot");
    return construct(d, AlgebraClass::DendY);
  }
  return random_candidate(AlgebraClass::DendY, dim, rng);
}

Report cmd_operad_agree(const std::string& kind, Index dim, int random, std::uint64_t seed) {
  if (dim < 1 || random < 1) throw InputError("--dim and --random must be positive");
  const OperadKind k = kind_option(kind);
  Rng rng(seed);
  Report r{"operad agree"};
  int agreements = 0, passing = 0;
  Json disagreements = Json::array();
  for (int trial = 0; trial < random; ++trial) {
    const AlgebraPresentation a = agreement_sample(k, dim, trial, rng);
    const CheckerAgreement c = compare_checkers(a);
    passing += c.algebra_failures.empty();
    if (c.agree()) {
      ++agreements;
      continue;
    }
    if (disagreements.empty()) {
      r.lines.push_back("  first disagreement at sample " + std::to_string(trial) + ": " + to_json(a).dump());
      r.lines.push_back("  algebra checker fails: " + joined(c.algebra_failures));
      r.lines.push_back("  operad checker fails: " + joined(c.operad_failures));
    }
    disagreements.push_back(Json{{"sample", trial},
                                 {"algebra", to_json(a)},
                                 {"algebra_failures", names(c.algebra_failures)},
                                 {"operad_failures", names(c.operad_failures)}});
  }
  r.pass = agreements == random;
  r.lines.insert(r.lines.begin(), "checkers agree on " + std::to_string(agreements) + "/" + std::to_string(random) +
                                      " samples (" + std::to_string(passing) + " valid, seed " +
                                      std::to_string(seed) + ")");
  r.payload = Json{{"kind", to_string(k)},   {"dim", dim},         {"samples", random},
                   {"agreements", agreements}, {"valid", passing}, {"seed", seed},
                   {"disagreements", disagreements}};
  return r;
}

Report cmd_rb_check(const std::string& path) {
  const RelativeRBO rbo = rbo_from_json(read_json_file(path), dir_of(path));
  Report r{"rb check"};
  const AxiomReport report = check_rbo(rbo);
  add_report(r, report);
  const bool graph = check_graph(rbo);
  r.lines.push_back(std::string("graph closed: ") + (graph ? "true" : "false"));
  r.payload["graph_closed"] = graph;
  if (graph != report.passed()) {
    r.pass = false;
    r.lines.push_back("graph criterion disagrees with the identities");
  }
  return r;
}

Report cmd_rb_induce(const std::string& path) {
  Report r{"rb induce"};
  r.artifact = true;
  r.payload = to_json(induced_dendy(rbo_from_json(read_json_file(path), dir_of(path))));
  return r;
}

Report cmd_rb_agree(int random, std::uint64_t seed) {
  if (random < 1) throw InputError("--random must be positive");
  Rng rng(seed);
  Report r{"rb agree"};
  int agreements = 0, passing = 0;
  Json disagreements = Json::array();
  for (int trial = 0; trial < random; ++trial) {
    const AlgebraPresentation a = trial % 2 ? fixture_n2() : construct(random_ass(2, rng), AlgebraClass::AssY);
    const AssYRepresentation rep = adjoint_representation(a);
    Matrix map = Matrix::Zero(2, 2);
    for (Index i = 0; i < 2; ++i)
      for (Index j = 0; j < 2; ++j)
        if (rng() % 3 == 0) map(i, j) = random_small_rational(rng);
    const RelativeRBO rbo{rep, map};
    const bool identities = check_rbo(rbo).passed();
    const bool graph = check_graph(rbo);
    if (identities) {
      ++passing;
      induced_dendy(rbo);  // throws if the induced structure is not dendy
    }
    if (identities == graph) {
      ++agreements;
    } else {
      disagreements.push_back(Json{{"sample", trial}, {"rbo", to_json(rbo)}, {"identities", identities}, {"graph", graph}});
    }
  }
  r.pass = agreements == random;
  r.lines.push_back("graph criterion agrees on " + std::to_string(agreements) + "/" + std::to_string(random) +
                    " operators (" + std::to_string(passing) + " valid, seed " + std::to_string(seed) + ")");
  r.payload = Json{{"samples", random}, {"agreements", agreements}, {"valid", passing},
                   {"seed", seed},      {"disagreements", disagreements}};
  return r;
}

void write_artifact(const Json& payload, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << pretty(payload) << "\n";
    return;
  }
  std::ofstream f(output);
  if (!f) throw InputError("cannot write '" + output + "'");
  f << pretty(payload) << "\n";
  out << "wrote " << output << "\n";
}

void emit(const Report& r, bool json, const std::string& output, std::ostream& out) {
  if (r.artifact) {
    write_artifact(r.payload, output, out);
    return;
  }
  if (json) {
    Json doc = r.payload;
    doc["command"] = r.command;
    doc["status"] = r.pass ? "pass" : "fail";
    out << pretty(doc) << "\n";
    return;
  }
  for (const std::string& line : r.lines) out << line << "\n";
}

int report_error(const std::string& command, const std::string& status, const std::string& message, bool json,
                 int code, std::ostream& out, std::ostream& err) {
  err << command << ": " << message << "\n";
  if (json) out << pretty(Json{{"command", command}, {"status", status}, {"message", message}}) << "\n";
  return code;
}

std::uint64_t resolve_seed(std::uint64_t flag) {
  const char* env = std::getenv("YAM_SEED");
  if (!env) return flag;
  try {
    std::size_t used = 0;
    const std::string s(env);
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size() || s.front() == '-') throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError(std::string("YAM_SEED must be a nonnegative integer, got '") + env + "'");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Yamaguti-type algebras", "yam"};
  app.require_subcommand(1);
  bool json = false;
  std::uint64_t seed = 1;
  std::string output;
  app.add_flag("--json", json, "Print the report as JSON");
  app.add_option("--seed", seed, "Seed for randomized suites (YAM_SEED overrides)");

  std::string file, file2, to, which, kind = "end";
  bool representatives = false;
  int random = 0, max_arity = 3;
  Index dim = 1;

  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* s = parent->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  CLI::App* check = sub(&app, "check", "Check the axioms of a structure file");
  check->add_option("file", file, "Algebra, representation, deformation, extension, YM or RBO file")->required();

  CLI::App* construct_cmd = sub(&app, "construct", "Construct an algebra of another class");
  construct_cmd->add_option("--to", to, "Target class tag")->required();
  construct_cmd->add_option("file", file, "Algebra file")->required();
  construct_cmd->add_option("-o,--output", output, "Write the result here");

  CLI::App* envelope_cmd = sub(&app, "envelope", "Build the enveloping associative algebra");
  envelope_cmd->add_option("file", file, "assy algebra file")->required();
  envelope_cmd->add_option("-o,--output", output, "Write the result here");

  CLI::App* diagram = sub(&app, "diagram", "Compare the two paths to liey");
  diagram->add_option("--which", which, "ass or diass")->required();
  diagram->add_option("file", file, "Input algebra file");
  diagram->add_option("--random", random, "Check this many seeded random inputs instead")->check(CLI::NonNegativeNumber);

  CLI::App* cohomology_cmd = sub(&app, "cohomology", "Compute the (2,3)-cohomology");
  cohomology_cmd->add_option("algebra", file, "assy algebra file")->required();
  cohomology_cmd->add_option("rep", file2, "Representation file")->required();
  cohomology_cmd->add_flag("--representatives", representatives, "Print representatives of a basis of H");

  CLI::App* deform = sub(&app, "deform", "Check a truncated deformation");
  deform->add_option("file", file, "Deformation file")->required();

  CLI::App* extension = sub(&app, "extension", "Extract and classify the cocycle of an abelian extension");
  extension->add_option("file", file, "Extension file")->required();

  CLI::App* operad = sub(&app, "operad", "Operads End and Dend");
  operad->require_subcommand(1);
  CLI::App* operad_check = sub(operad, "check", "Check the operad axioms");
  operad_check->add_option("--kind", kind, "end or dend")->required();
  operad_check->add_option("--dim", dim, "Dimension of the underlying space");
  operad_check->add_option("--max-arity", max_arity, "Largest arity of the composed elements");
  CLI::App* ym_check = sub(operad, "ym-check", "Check a Yamaguti multiplication");
  ym_check->add_option("file", file, "Yamaguti multiplication file")->required();
  CLI::App* operad_agree = sub(operad, "agree", "Compare the operadic and algebraic checkers on random structures");
  operad_agree->add_option("--kind", kind, "end or dend");
  operad_agree->add_option("--dim", dim, "Dimension");
  operad_agree->add_option("--random", random, "Number of samples")->required();

  CLI::App* rb = sub(&app, "rb", "Relative Rota-Baxter operators");
  rb->require_subcommand(1);
  CLI::App* rb_check = sub(rb, "check", "Check a relative Rota-Baxter operator");
  rb_check->add_option("file", file, "RBO file")->required();
  CLI::App* rb_induce = sub(rb, "induce", "Print the induced dendy algebra");
  rb_induce->add_option("file", file, "RBO file")->required();
  rb_induce->add_option("-o,--output", output, "Write the result here");
  CLI::App* rb_agree = sub(rb, "agree", "Compare the graph and identity criteria on random operators");
  rb_agree->add_option("--random", random, "Number of samples")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitError;
  }

  std::string command = app.get_subcommands().front()->get_name();
  for (CLI::App* s = app.get_subcommands().front(); !s->get_subcommands().empty();) {
    s = s->get_subcommands().front();
    command += " " + s->get_name();
  }

  try {
    seed = resolve_seed(seed);
    Report r;
    if (check->parsed()) r = cmd_check(file);
    else if (construct_cmd->parsed()) r = cmd_construct(file, to);
    else if (envelope_cmd->parsed()) r = cmd_envelope(file);
    else if (diagram->parsed()) r = cmd_diagram(which, file, random, seed);
    else if (cohomology_cmd->parsed()) r = cmd_cohomology(file, file2, representatives);
    else if (deform->parsed()) r = cmd_deform(file);
    else if (extension->parsed()) r = cmd_extension(file);
    else if (operad_check->parsed()) r = cmd_operad_check(kind, dim, max_arity);
    else if (ym_check->parsed()) r = cmd_ym_check(file);
    else if (operad_agree->parsed()) r = cmd_operad_agree(kind, dim, random, seed);
    else if (rb_check->parsed()) r = cmd_rb_check(file);
    else if (rb_induce->parsed()) r = cmd_rb_induce(file);
    else r = cmd_rb_agree(random, seed);
    emit(r, json, output, out);
    return r.pass ? kExitPass : kExitFail;
  } catch (const AxiomViolation& e) {
    return report_error(command, "fail", e.what(), json, kExitFail, out, err);
  } catch (const WellDefinednessError& e) {
    return report_error(command, "fail", e.what(), json, kExitFail, out, err);
  } catch (const InputError& e) {
    return report_error(command, "error", e.what(), json, kExitError, out, err);
  } catch (const std::invalid_argument& e) {
    return report_error(command, "error", e.what(), json, kExitError, out, err);
  } catch (const std::out_of_range& e) {
    return report_error(command, "error", e.what(), json, kExitError, out, err);
  } catch (const std::logic_error& e) {
    // a stated implication failed on this input
    return report_error(command, "fail", e.what(), json, kExitFail, out, err);
  } catch (const std::exception& e) {
    return report_error(command, "error", e.what(), json, kExitError, out, err);
  }
}

}  // namespace yam
