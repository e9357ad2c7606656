/**
 * @file cli.cpp
 */
#include "klab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "klab/embeddings.hpp"
#include "klab/errors.hpp"
#include "klab/norms.hpp"
#include "klab/parallel.hpp"
#include "klab/verify.hpp"

namespace klab::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

struct Config {
  SpaceParams params;
  double a2 = 1.0;
  std::optional<double> lambda;
  double beta = 2.5;
  double R = 0.25;
  std::vector<double> betas;
  std::vector<double> lambdas;
  std::vector<int> alpha{1, 0, 0};
  std::optional<double> a_bar;
  double q1 = 2.0;
  double q2 = 2.0;
  std::string diffeo = "shear";
  std::string norm_kind = "kondratiev";
  std::string experiment;
  int k = 3;
  int shells = 1024;
  int nodes = 8;
  int max_level = 16;
  int J = 10;
  int pou_level = 10;
  double half = 1.0;
  std::string out_dir;
  bool json = false;
};

std::string num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream s;
  s.precision(15);
  s << v;
  std::string t = s.str();
  if (t.find_first_of(".en") == std::string::npos) t += ".0";
  return t;
}

ordered_json config_json(const std::string& command, const Config& c) {
  ordered_json j;
  j["command"] = command;
  if (!c.experiment.empty()) j["experiment"] = c.experiment;
  j["params"] = ordered_json::parse(c.params.to_json());
  j["family"] = {{"betas", c.betas}, {"lambdas", c.lambdas}, {"R", c.R}};
  ordered_json o;
  if (command == "norm") {
    o = {{"kind", c.norm_kind}, {"beta", c.beta}, {"lambda", c.lambda.value_or(0.0)}};
  } else if (command == "verify") {
    const std::string& e = c.experiment;
    if (e == "counterexample") o = {{"lambda", c.lambda.value_or(-0.7)}, {"shells", c.shells}};
    else if (e == "scaling") o = {{"beta", c.beta}, {"k", c.k}};
    else if (e == "rho-power") o = {{"a2", c.a2}};
    else if (e == "derivative") o = {{"alpha", c.alpha}};
    else if (e == "diffeo") o = {{"diffeo", c.diffeo}};
  } else if (command == "whitney") {
    o = {{"half", c.half}};
  }
  if (!o.is_null()) j["options"] = o;
  j["quadrature"] = {{"nodes", c.nodes}, {"max_level", c.max_level}, {"pou_level", c.pou_level}};
  j["J_max"] = c.J;
  j["threads"] = worker_count();
  return j;
}

ordered_json cover_json(int d) { return {{"c1", 1.0}, {"c2", 4.0 * std::sqrt(static_cast<double>(d))}}; }

norms::NormOptions norm_options(const Config& c) {
  norms::NormOptions o;
  o.quad.nodes = c.nodes;
  o.quad.max_level = c.max_level;
  o.wavelet_level = c.J;
  o.pou_max_level = c.pou_level;
  return o;
}

void write_file(const Config& c, const std::string& name, const std::string& text) {
  if (c.out_dir.empty()) return;
  fs::create_directories(c.out_dir);
  std::ofstream f(fs::path(c.out_dir) / name, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + (fs::path(c.out_dir) / name).string());
  f << text;
}

void add_space_options(CLI::App* app, Config& c, bool with_ell = false) {
  app->add_option("--m", c.params.m, "smoothness m");
  app->add_option("--a", c.params.a, "Kondratiev weight a");
  app->add_option("--p", c.params.p, "Kondratiev integrability p");
  app->add_option("--tau", c.params.tau, "target integrability tau");
  app->add_option("--d", c.params.d, "dimension d");
  app->add_option("--delta", c.params.delta, "dimension of the singular set");
  if (with_ell) app->add_option("--ell", c.params.ell, "dimension of the singular plane");
}

void add_quadrature_options(CLI::App* app, Config& c) {
  app->add_option("--nodes", c.nodes, "Gauss nodes per cell")->check(CLI::Range(1, 64));
  app->add_option("--max-level", c.max_level, "finest Whitney level")->check(CLI::Range(4, 24));
  app->add_option("--J", c.J, "finest wavelet level")->check(CLI::Range(1, 12));
  app->add_option("--pou-level", c.pou_level, "Whitney depth of the partition of unity")->check(CLI::Range(1, 16));
}

void add_family_options(CLI::App* app, Config& c) {
  app->add_option("--betas", c.betas, "family exponents beta")->delimiter(',');
  app->add_option("--lambdas", c.lambdas, "family log exponents lambda")->delimiter(',');
  app->add_option("--R", c.R, "cut-off radius");
}

std::string verdict_line(const embeddings::Verdict& v) {
  return embeddings::to_string(v.outcome) + " (" + v.trigger + ")";
}

int emit_verdict(const std::string& command, const Config& c, const embeddings::Verdict& v, std::ostream& out,
                 ordered_json extra = {}) {
  ordered_json j;
  j["schema"] = kSchema;
  j["config"] = config_json(command, c);
  j["verdict"] = ordered_json::parse(v.to_json());
  if (!extra.is_null()) j["route"] = extra;
  write_file(c, command + ".json", j.dump(2) + "\n");
  if (c.json) out << j.dump(2) << "\n";
  else out << verdict_line(v) << "\n";
  return kOk;
}

int emit_scalar(const std::string& command, const Config& c, const std::string& name, double value, std::ostream& out) {
  ordered_json j;
  j["schema"] = kSchema;
  j["config"] = config_json(command, c);
  j[name] = value;
  write_file(c, command + ".json", j.dump(2) + "\n");
  if (c.json) out << j.dump(2) << "\n";
  else out << num(value) << "\n";
  return kOk;
}

verify::Family family_for(const Config& c) {
  geometry::ModelDomain dom{c.params.d, c.params.ell};
  if (c.betas.empty() && c.lambdas.empty()) {
    auto f = verify::default_family(dom);
    if (c.R != 0.25)
      for (auto& u : f) u.R = c.R;
    return f;
  }
  const std::vector<double> betas = c.betas.empty() ? std::vector<double>{0.2, 0.5, 0.8, 1.2, 1.6, 2.0, 2.5} : c.betas;
  const std::vector<double> lambdas = c.lambdas.empty() ? std::vector<double>{0.0} : c.lambdas;
  return verify::make_family(betas, lambdas, dom, c.R);
}

std::string file_stem(const std::string& experiment) { return "verify-" + experiment; }

// Writes CSV + JSON summary; the summary is always recomputed from the CSV text.
int emit_report(const Config& c, const std::string& report_csv, std::ostream& out) {
  const ordered_json config = config_json("verify", c);
  const ordered_json cover = cover_json(c.params.d);
  const std::string csv = "# config=" + config.dump() + "\n# cover=" + cover.dump() + "\n" + report_csv;
  const ordered_json summary = ordered_json::parse(verify::summarize(csv));
  ordered_json j;
  j["schema"] = kSchema;
  j["config"] = config;
  j["cover"] = cover;
  j["summary"] = summary;
  write_file(c, file_stem(c.experiment) + ".csv", csv);
  write_file(c, file_stem(c.experiment) + ".json", j.dump(2) + "\n");
  const bool pass = summary["pass"].get<bool>();
  if (c.json) {
    out << j.dump(2) << "\n";
  } else {
    out << c.experiment << ": " << (pass ? "PASS" : "FAIL");
    const auto& st = summary["statistics"];
    for (const char* key : {"spread", "exponent", "predicted_exponent", "residual", "observed_factor",
                            "predicted_factor", "relative_error"}) {
      if (!st.contains(key)) continue;
      out << " " << key << "=" << (st[key].is_number() ? num(st[key].get<double>()) : st[key].dump());
    }
    out << "\n";
  }
  return pass ? kOk : kCheckFailed;
}

int run_verify(Config& c, std::ostream& out) {
  const auto opt = norm_options(c);
  const auto& s = c.params;
  const std::string& e = c.experiment;
  if (e == "counterexample") return emit_report(c, verify::check_counterexample_divergence(s, c.lambda.value_or(-0.7), c.shells).to_csv(), out);
  if (e == "scaling") {
    const auto u = testfns::make_test_function(c.beta, c.lambdas.empty() ? 0.0 : c.lambdas[0], c.R,
                                               geometry::ModelDomain{s.d, s.ell});
    return emit_report(c, verify::check_scaling_homogeneity(u, s.m, s.p, c.k, opt).to_csv(), out);
  }
  const auto family = family_for(c);
  if (e == "kmm") return emit_report(c, verify::check_norm_equivalence_Kmm(family, s.m, s.p, opt).to_csv(), out);
  if (e == "sharp") return emit_report(c, verify::check_sharp_norm(family, s.m, s.a, s.p, opt).to_csv(), out);
  if (e == "localization") return emit_report(c, verify::check_localization(family, s.m, s.a, s.p, opt).to_csv(), out);
  if (e == "rho-power")
    return emit_report(c, verify::check_rho_power_isomorphism(family, s.m, s.a, c.a2, s.p, opt).to_csv(), out);
  if (e == "embedding") return emit_report(c, verify::check_embedding_ratio(s, family, opt).to_csv(), out);
  if (e == "derivative") {
    MultiIndex alpha{};
    if (c.alpha.size() > kMaxDim) throw InvalidParams("--alpha has too many entries");
    for (std::size_t i = 0; i < c.alpha.size(); ++i) alpha[i] = c.alpha[i];
    return emit_report(c, verify::check_derivative_mapping(family, s.m, alpha, s.p, opt).to_csv(), out);
  }
  if (e == "diffeo")
    return emit_report(c, verify::check_diffeo_invariance(family, diffeo::by_name(c.diffeo, s.d), s.m, s.p, opt).to_csv(),
                       out);
  if (e == "cone") return emit_report(c, verify::check_cone_localization(family, s.m, s.a, s.p, opt).to_csv(), out);
  throw InvalidParams("unknown experiment: " + e);
}

int run_norm(const Config& c, std::ostream& out) {
  const auto& s = c.params;
  const auto u = testfns::make_test_function(c.beta, c.lambda.value_or(0.0), c.R, geometry::ModelDomain{s.d, s.ell});
  const Field f = from_test_function(u);
  const auto opt = norm_options(c);
  NormValue n;
  const std::string& k = c.norm_kind;
  if (k == "kondratiev") n = norms::kondratiev_norm(f, s.m, s.a, s.p, opt);
  else if (k == "weighted") n = norms::weighted_lp_norm(f, -s.a, s.p, opt);
  else if (k == "sobolev") n = norms::sobolev_norm(f, s.m, s.p, opt);
  else if (k == "sobolev-top") n = norms::sobolev_top_seminorm(f, s.m, s.p, opt);
  else if (k == "f") n = norms::f_norm(f, s.m, s.tau, opt);
  else if (k == "rloc") n = norms::rloc_norm_weighted(f, s.m, s.tau, opt);
  else if (k == "rloc-localized") n = norms::rloc_norm_localized(f, s.m, s.tau, norms::partition_for(f, c.pou_level), opt);
  else if (k == "kondratiev-localized")
    n = norms::kondratiev_localized(f, s.m, s.a, s.p, norms::partition_for(f, c.pou_level), opt);
  else if (k == "sharp") n = norms::kondratiev_sharp_norm(f, s.m, s.a, s.p, opt);
  else throw InvalidParams("unknown norm kind: " + k);
  const ordered_json config = config_json("norm", c);
  std::string csv = "# config=" + config.dump() + "\n# cover=" + cover_json(s.d).dump() + "\n";
  csv += norms::csv_header() + "\n" + norms::csv_row(n, s, u.beta, u.lambda) + "\n";
  write_file(c, "norm.csv", csv);
  ordered_json j;
  j["schema"] = kSchema;
  j["config"] = config;
  j["cover"] = cover_json(s.d);
  j["norm"] = ordered_json::parse(n.to_json());
  write_file(c, "norm.json", j.dump(2) + "\n");
  if (c.json) out << j.dump(2) << "\n";
  else out << n.kind << " " << num(n.value) << " " << quadrature::to_string(n.classification) << "\n";
  return kOk;
}

int run_whitney(const Config& c, std::ostream& out) {
  const auto& s = c.params;
  const geometry::ModelDomain dom{s.d, s.ell};
  const auto cover = geometry::whitney_cover(dom, geometry::Box::centered(s.d, c.half), c.max_level);
  const std::size_t bad = cover.certificate_violations();
  ordered_json j;
  j["schema"] = kSchema;
  j["config"] = config_json("whitney", c);
  j["cover"] = ordered_json::parse(cover.to_json());
  write_file(c, "whitney.json", j.dump(2) + "\n");
  if (c.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "cubes=" << cover.total_count() << " levels=" << cover.start_level() << ".." << cover.max_level()
        << " certificate_violations=" << bad << " collar_volume=" << num(cover.collar_volume()) << "\n";
  }
  return bad == 0 ? kOk : kCheckFailed;
}

int run_report(const Config& c, const std::string& dir, std::ostream& out) {
  if (!fs::is_directory(dir)) throw InvalidParams("report: not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".csv" &&
        entry.path().filename().string().rfind("verify-", 0) == 0)
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  ordered_json j;
  j["schema"] = kSchema;
  j["reports"] = ordered_json::array();
  bool consistent = true;
  for (const auto& path : files) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string csv = buf.str();
    ordered_json entry;
    entry["file"] = path.filename().string();
    std::istringstream lines(csv);
    std::string line;
    while (std::getline(lines, line))
      if (line.rfind("# config=", 0) == 0) entry["config"] = ordered_json::parse(line.substr(9));
    entry["summary"] = ordered_json::parse(verify::summarize(csv));
    fs::path stored = path;
    stored.replace_extension(".json");
    if (fs::exists(stored)) {
      std::ifstream sj(stored);
      const auto s = ordered_json::parse(sj);
      const bool same = s.contains("summary") && s["summary"].dump() == entry["summary"].dump();
      entry["matches_stored"] = same;
      consistent = consistent && same;
    }
    j["reports"].push_back(entry);
  }
  if (c.json) {
    out << j.dump(2) << "\n";
  } else {
    for (const auto& e : j["reports"]) {
      out << e["file"].get<std::string>() << ": " << (e["summary"]["pass"].get<bool>() ? "PASS" : "FAIL");
      if (e.contains("matches_stored")) out << (e["matches_stored"].get<bool>() ? " (matches stored)" : " (DIFFERS from stored)");
      out << "\n";
    }
  }
  return consistent ? kOk : kCheckFailed;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"klab: Kondratiev and refined-localization space toolkit"};
  app.require_subcommand(1);
  Config c;
  std::string report_dir;

  auto* decide = app.add_subcommand("decide", "decide K^m_{a,p} -> F^{m,rloc}_{tau,2}");
  auto* reverse = app.add_subcommand("decide-reverse", "decide F^{m,rloc}_{tau,2} -> K^m_{a,p}");
  auto* holder = app.add_subcommand("decide-holder", "Hoelder-route sufficient conditions");
  auto* pde = app.add_subcommand("pde-tau", "supremum of tau for the shifted solution");
  auto* adapt = app.add_subcommand("adaptivity", "adaptivity scale tau = (m/d + 1/2)^-1");
  auto* norm = app.add_subcommand("norm", "evaluate a norm of rho^beta (1 + |log rho|)^lambda zeta");
  auto* whitney = app.add_subcommand("whitney", "build a Whitney cover of a box");
  auto* ver = app.add_subcommand("verify", "run a named experiment");
  auto* report = app.add_subcommand("report", "regenerate summaries from stored CSVs");

  for (auto* sub : {decide, reverse, holder, pde, adapt, norm, whitney, ver, report}) {
    sub->add_option("--out", c.out_dir, "output directory");
    sub->add_flag("--json", c.json, "print the full JSON document");
  }
  add_space_options(decide, c);
  add_space_options(reverse, c);
  add_space_options(holder, c, true);
  holder->add_option("--q1", c.q1, "fine index of the first factor");
  holder->add_option("--q2", c.q2, "fine index of the second factor");
  pde->add_option("--m", c.params.m, "smoothness m")->required();
  pde->add_option("--a", c.params.a, "weight a")->required();
  pde->add_option("--d", c.params.d, "dimension d");
  pde->add_option("--delta", c.params.delta, "dimension of the singular set");
  pde->add_option("--abar", c.a_bar, "domain bound on |a|");
  double adapt_m = 1.0;
  adapt->add_option("--m", adapt_m, "smoothness m")->required();
  adapt->add_option("--d", c.params.d, "dimension d");

  add_space_options(norm, c, true);
  add_quadrature_options(norm, c);
  norm->add_option("--kind", c.norm_kind, "norm kind")
      ->check(CLI::IsMember({"kondratiev", "weighted", "sobolev", "sobolev-top", "f", "rloc", "rloc-localized",
                             "kondratiev-localized", "sharp"}));
  norm->add_option("--beta", c.beta, "exponent beta");
  norm->add_option("--lambda", c.lambda, "log exponent lambda");
  norm->add_option("--R", c.R, "cut-off radius");

  whitney->add_option("--d", c.params.d, "dimension d");
  whitney->add_option("--ell", c.params.ell, "dimension of the singular plane");
  whitney->add_option("--half", c.half, "box half-width (power of two)");
  whitney->add_option("--max-level", c.max_level, "finest level")->check(CLI::Range(0, 20));

  ver->add_option("name", c.experiment, "experiment")
      ->required()
      ->check(CLI::IsMember({"kmm", "sharp", "localization", "rho-power", "embedding", "counterexample", "derivative",
                             "diffeo", "cone", "scaling"}));
  add_space_options(ver, c, true);
  add_quadrature_options(ver, c);
  add_family_options(ver, c);
  ver->add_option("--a2", c.a2, "target weight for rho-power");
  ver->add_option("--lambda", c.lambda, "log exponent of the counterexample");
  ver->add_option("--shells", c.shells, "radial shells of the counterexample")->check(CLI::Range(16, 1 << 16));
  ver->add_option("--alpha", c.alpha, "derivative multi-index")->delimiter(',');
  ver->add_option("--diffeo", c.diffeo, "diffeomorphism")->check(CLI::IsMember({"identity", "shear", "rotation", "twist"}));
  ver->add_option("--k", c.k, "dyadic scale shift")->check(CLI::Range(0, 8));
  ver->add_option("--beta", c.beta, "exponent for the scaling check");

  report->add_option("--dir", report_dir, "directory with stored CSVs")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kInvalidInput;
  }
  for (auto* sub : {decide, reverse, holder, pde, adapt, norm, whitney, ver})
    if (sub->parsed() && sub->get_help_ptr() && sub->get_help_ptr()->count() > 0) {
      out << sub->help();
      return kOk;
    }

  if (decide->parsed()) return emit_verdict("decide", c, embeddings::decide_embedding(c.params), out);
  if (reverse->parsed()) return emit_verdict("decide-reverse", c, embeddings::decide_reverse_embedding(c.params), out);
  if (holder->parsed()) {
    const auto [v, route] = embeddings::decide_embedding_holder_route(c.params, c.q1, c.q2);
    ordered_json r = {{"applies", route.applies}, {"improved_applies", route.improved_applies},
                      {"eta", route.eta}, {"r", route.r}};
    const int code = emit_verdict("decide-holder", c, v, out, r);
    if (!c.json) out << "eta=" << num(route.eta) << " r=" << num(route.r) << "\n";
    return code;
  }
  if (pde->parsed())
    return emit_scalar("pde-tau", c, "tau",
                       embeddings::pde_regularity_tau(c.params.m, c.params.a, c.params.d, c.params.delta, c.a_bar), out);
  if (adapt->parsed())
    return emit_scalar("adaptivity", c, "tau", embeddings::adaptivity_scale(c.params.d, adapt_m), out);
  if (norm->parsed()) return run_norm(c, out);
  if (whitney->parsed()) return run_whitney(c, out);
  if (ver->parsed()) return run_verify(c, out);
  if (report->parsed()) return run_report(c, report_dir, out);
  err << app.help();
  return kInvalidInput;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const InvalidParams& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const EmptyFamily& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace klab::cli
