#include <cstdlib>
#include <deque>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "branchcalc/derivative.hpp"
#include "branchcalc/errors.hpp"
#include "branchcalc/json_io.hpp"
#include "branchcalc/suite.hpp"

namespace {

using namespace branchcalc;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCounterexample = 2;

struct Globals {
  std::string format = "json";
  std::uint64_t seed = 1;
  int jobs = default_jobs();
  bool timing = false;
};

struct Output {
  Json json;
  std::vector<std::string> text;
  int exit_code = kExitOk;
};

Json envelope(const std::string& command) { return {{"schema", kSchemaVersion}, {"command", command}}; }

void emit(const Globals& g, const Output& out) {
  if (g.format == "text") {
    for (const auto& line : out.text) std::cout << line << "\n";
  } else {
    std::cout << out.json.dump(2) << "\n";
  }
}

// Input documents may carry "lines"; declarations from all inputs are merged.
struct Inputs {
  LineRegistry lines;
  std::deque<Json> docs;

  const Json& add(const std::string& arg) {
    docs.push_back(load_json_argument(arg));
    for (const auto& [id, line] : lines_from_json(docs.back()).lines()) {
      if (lines.contains(id)) {
        if (lines.degree(id) != line.degree)
          throw SchemaError("line '" + id + "' declared with two different degrees");
        continue;
      }
      lines.declare(id, line.degree, line.dual_id == id ? std::string() : line.dual_id);
    }
    return docs.back();
  }
};

Side parse_side(const std::string& s) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  throw SchemaError("side must be left or right, got '" + s + "'");
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

// ---------------------------------------------------------------------------

Output cmd_derive(const std::string& rep_arg, int i, const std::string& side_name) {
  Inputs in;
  const Json& doc = in.add(rep_arg);
  const InducedRep rep = rep_from_json(doc, in.lines);
  const Side side = parse_side(side_name);
  const FormalSum result = derive(rep, i, side);
  Output out;
  out.json = envelope("derive");
  out.json["input"] = to_json(rep);
  out.json["i"] = i;
  out.json["side"] = to_string(side);
  out.json["result"] = to_json(result);
  out.text.push_back(std::string(side == Side::Right ? "(" + to_string(rep) + ")^(" + std::to_string(i) + ")"
                                                     : "^(" + std::to_string(i) + ")(" + to_string(rep) + ")") +
                     " = " + to_string(result));
  return out;
}

Output cmd_recombine(const std::string& arg) {
  Inputs in;
  const Multisegment m = multisegment_from_json(in.add(arg), in.lines);
  const Recombination r = recombine_traced(m);
  Output out;
  out.json = envelope("recombine");
  out.json["input"] = to_json(m);
  out.json.update(to_json(r));
  for (const auto& s : r.steps)
    out.text.push_back("rewrite " + to_string(s.first) + " + " + to_string(s.second) + " -> " +
                       to_string(s.uni) + (s.intersection ? " + " + to_string(*s.intersection) : ""));
  out.text.push_back("canonical " + to_string(r.canonical));
  return out;
}

Output cmd_truncation_lemma(const std::string& arg, std::optional<int> i, bool all_i) {
  Inputs in;
  const Multisegment m = multisegment_from_json(in.add(arg), in.lines);
  if (!i && !all_i) throw SchemaError("truncation-lemma needs --i <n> or --all-i");
  std::vector<int> orders;
  if (all_i) {
    for (int k = 0; k <= m.degree(); ++k) orders.push_back(k);
  } else {
    orders.push_back(*i);
  }
  Output out;
  out.json = envelope("truncation-lemma");
  out.json["input"] = to_json(m);
  Json results = Json::array();
  bool holds = true;
  for (int k : orders) {
    const auto r = verify_truncation_lemma(m, k);
    holds = holds && r.holds;
    results.push_back(to_json(r));
    out.text.push_back("i=" + std::to_string(k) + " " + (r.holds ? "holds" : "FAILS") + " (" +
                       std::to_string(r.checked) + " truncations)" +
                       (r.witness ? " witness " + to_string(*r.witness) : ""));
  }
  out.json["lemma_holds"] = holds;
  out.json["results"] = results;
  out.exit_code = holds ? kExitOk : kExitCounterexample;
  return out;
}

Output cmd_restrict(const std::string& arg, const std::string& side_name) {
  Inputs in;
  const InducedRep rep = rep_from_json(in.add(arg), in.lines);
  const Side side = parse_side(side_name);
  Output out;
  out.json = envelope("restrict");
  out.json["input"] = to_json(rep);
  out.json["side"] = to_string(side);
  Json layers = Json::array();
  for (const auto& layer : bz_filtration(rep, side)) {
    layers.push_back(to_json(layer));
    out.text.push_back("layer " + std::to_string(layer.index) + (layer.bottom ? " (bottom)" : "") + ": " +
                       to_string(layer.payload));
  }
  out.json["layers"] = layers;
  return out;
}

Output cmd_quotient_check(const std::string& delta_arg, const std::string& m2_arg, bool theorem) {
  Inputs in;
  const Json& delta_doc = in.add(delta_arg);
  const Json& m2_doc = in.add(m2_arg);
  const Segment delta = segment_from_json(delta_doc, in.lines);
  const Multisegment m2 = multisegment_from_json(m2_doc, in.lines);
  const auto cert = quotient_obstruction(delta, m2, theorem ? QuotientMode::Theorem : QuotientMode::Plain);
  Output out;
  out.json = envelope("quotient-check");
  out.json["mode"] = theorem ? "theorem" : "plain";
  out.json.update(to_json(cert));
  out.text.push_back(std::string(cert.obstructed ? "OBSTRUCTED" : "NOT_OBSTRUCTED") + ": St(" +
                     to_string(delta) + ") -> <" + to_string(m2) + ">, " +
                     std::to_string(cert.right.size()) + " right / " + std::to_string(cert.left.size()) +
                     " left candidates");
  if (theorem && !cert.obstructed) out.exit_code = kExitCounterexample;
  return out;
}

Output cmd_ext_certify(const std::string& m1_arg, const std::string& m2_arg, const std::string& emit_tree,
                       bool allow_nongeneric) {
  Inputs in;
  const Json& m1_doc = in.add(m1_arg);
  const Json& m2_doc = in.add(m2_arg);
  const Multisegment m1 = multisegment_from_json(m1_doc, in.lines);
  const Multisegment m2 = multisegment_from_json(m2_doc, in.lines);
  CertifyOptions options;
  options.require_generic_m2 = !allow_nongeneric;
  const auto cert = ext_vanishing_certificate(m1, m2, in.lines, options);
  const Certificate* fail = first_fail(cert.root);

  Output out;
  out.json = envelope("ext-certify");
  out.json["m1"] = to_json(m1);
  out.json.update(to_json(cert));
  if (!emit_tree.empty()) {
    std::ofstream file(emit_tree);
    if (!file) throw SchemaError("cannot write '" + emit_tree + "'");
    Json tree = envelope("ext-certify-tree");
    tree["tree"] = out.json["tree"];
    file << tree.dump(2) << "\n";
    out.json["tree"] = emit_tree;
  }
  for (const Certificate* c = &cert.root; c; c = c->children.empty() ? nullptr : &c->children.front()) {
    std::string line = std::string(to_string(c->kind)) + " m1=" + to_string(c->m1) +
                       " m_count=" + std::to_string(c->m_count);
    if (c->delta) line += " D=" + to_string(*c->delta);
    if (c->variant) line += " variant=" + std::string(to_string(*c->variant));
    if (c->linked_pair)
      line += " linked pair " + to_string(c->linked_pair->first) + ", " + to_string(c->linked_pair->second) +
              " via " + c->extraction;
    out.text.push_back(line);
  }
  out.text.push_back(fail ? "verdict FAIL" : "verdict CERTIFIED, depth " + std::to_string(depth(cert.root)));
  out.exit_code = fail ? kExitCounterexample : kExitOk;
  return out;
}

Output cmd_ep(const std::string& a, const std::string& b) {
  Inputs in;
  const Json& da = in.add(a);
  const Json& db = in.add(b);
  const InducedRep r1 = rep_from_json(da, in.lines);
  const InducedRep r2 = rep_from_json(db, in.lines);
  const int ep = ep_pairing(r1, r2);
  Output out;
  out.json = envelope("ep");
  out.json["reps"] = {to_json(r1), to_json(r2)};
  out.json["whittaker_dims"] = {whittaker_dim(r1), whittaker_dim(r2)};
  out.json["ep"] = ep;
  out.text.push_back("EP(" + to_string(r1) + ", " + to_string(r2) + ") = " + std::to_string(ep));
  return out;
}

// ---------------------------------------------------------------------------

Output cmd_hecke_verify(int m, int trials, std::uint64_t seed) {
  const HeckeAlgebra<Symbolic> H(m, Symbolic::q());
  const auto r = verify_relations(H, trials, seed);
  Output out;
  out.json = envelope("hecke verify");
  out.json.update(to_json(r));
  for (const auto& c : r.checks)
    out.text.push_back(c.name + ": " + (c.passed ? "pass" : "FAIL " + c.detail));
  out.exit_code = r.all_passed() ? kExitOk : kExitCounterexample;
  return out;
}

template <class R>
Json sigma_vector_json(const SigmaVector<R>& v) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : v) terms.push_back({{"lambda", lambda}, {"coeff", to_json(c)}});
  return terms;
}

template <class R>
std::string sigma_vector_text(const SigmaVector<R>& v) {
  if (v.empty()) return "0";
  std::vector<std::string> parts;
  for (const auto& [lambda, c] : v) parts.push_back("(" + to_string(c) + ") theta^" + to_string(lambda));
  return join(parts, " + ");
}

Output cmd_hecke_sign_module(int m, const std::string& action, const std::string& lambda_text,
                             const std::string& q_text) {
  const Weight lambda = parse_int_tuple(lambda_text);
  if (static_cast<int>(lambda.size()) != m) throw SchemaError("--lambda must have m entries");
  Output out;
  out.json = envelope("hecke sign-module");
  out.json["m"] = m;
  out.json["action"] = action;
  out.json["lambda"] = lambda;
  std::string result_text;
  if (q_text.empty()) {
    const HeckeAlgebra<Symbolic> H(m, Symbolic::q());
    const auto v = sign_module_act(H, parse_generator(H, action), lambda);
    out.json["q"] = "symbolic";
    out.json["result"] = sigma_vector_json(v);
    result_text = sigma_vector_text(v);
  } else {
    const HeckeAlgebra<Rational> H(m, parse_rational(q_text));
    const auto v = sign_module_act(H, parse_generator(H, action), lambda);
    out.json["q"] = to_json(H.q());
    out.json["result"] = sigma_vector_json(v);
    result_text = sigma_vector_text(v);
  }
  out.text.push_back(action + " . theta^" + to_string(lambda) + " (x) 1 = " + result_text);
  return out;
}

void describe_analysis(const SignQuotientAnalysis& a, Output& out) {
  out.json["analysis"] = to_json(a);
  out.text.push_back("dim " + std::to_string(a.dim) + ", sign-isotypic dim " + std::to_string(a.sign_isotypic_dim));
  out.text.push_back(std::string("generated by sign vectors: ") + (a.generated_by_sign ? "yes" : "no"));
  out.text.push_back("sign quotient dim " + std::to_string(a.quotient_dim) +
                     (a.quotient_irreducible ? ", irreducible" : ", reducible"));
  out.text.push_back(std::string("unique irreducible quotient containing the sign type: ") +
                     (a.unique_sign_quotient ? "yes" : "no"));
}

Output cmd_hecke_principal_series(int m, const std::string& chi_text, const std::string& q_text) {
  if (q_text.empty()) throw SpecializationRequired("principal-series needs a rational --q");
  const auto chi = parse_rational_tuple(chi_text);
  const FiniteModule M = principal_series(m, chi, parse_rational(q_text));
  Output out;
  out.json = envelope("hecke principal-series");
  out.json["chi"] = Json::array();
  for (const auto& c : chi) out.json["chi"].push_back(to_json(c));
  out.json["module"] = to_json(M);
  out.json["relations_hold"] = module_relations_hold(M);
  out.json["sign_isotypic_dim"] = sign_isotypic_dim(M);
  out.text.push_back("principal series, dim " + std::to_string(M.dim()) + ", sign-isotypic dim " +
                     std::to_string(sign_isotypic_dim(M)));
  describe_analysis(analyze_sign_quotients(M), out);
  return out;
}

Output cmd_hecke_central_quotient(int m, const std::string& orbit_text, const std::string& q_text) {
  if (q_text.empty()) throw SpecializationRequired("central-quotient needs a rational --q");
  const auto orbit = parse_rational_tuple(orbit_text);
  const CentralQuotient Q = central_quotient(m, orbit, parse_rational(q_text));
  Output out;
  out.json = envelope("hecke central-quotient");
  out.json["orbit"] = Json::array();
  for (const auto& c : orbit) out.json["orbit"].push_back(to_json(c));
  out.json["regular"] = Q.regular;
  out.json["module"] = to_json(Q.module);
  out.json["relations_hold"] = module_relations_hold(Q.module);
  if (!Q.regular) out.text.push_back("warning: degenerate orbit (repeated coordinates)");
  out.text.push_back("basis " + join(Q.module.basis, ", "));
  describe_analysis(analyze_sign_quotients(Q.module), out);
  return out;
}

// ---------------------------------------------------------------------------

struct UniverseArgs {
  std::string window = "0..4";
  std::string step = "1/2";
  std::vector<std::string> lines{"rho"};
  std::string lines_file;
  std::optional<int> max_segments;
};

UniverseSpec make_universe(const UniverseArgs& a, int max_degree) {
  UniverseSpec u;
  std::tie(u.lo, u.hi) = parse_window(a.window);
  u.step = parse_exponent(a.step);
  u.line_ids = a.lines;
  if (!a.lines_file.empty()) u.lines = lines_from_json(load_json_argument(a.lines_file));
  u.max_degree = max_degree;
  u.max_segments = a.max_segments;
  validate(u);
  return u;
}

void summarize(const RunReport& r, Output& out) {
  out.text.push_back("mode " + r.mode + ": " + std::to_string(r.cases) + " cases, " + std::to_string(r.passed) +
                     " passed, " + std::to_string(r.failed) + " failed");
  for (const auto& [k, v] : r.stats.items()) out.text.push_back("  " + k + " = " + v.dump());
  if (r.failed) out.text.push_back("first counterexample: " + r.first_counterexample.dump());
}

Output cmd_enumerate(const Globals& g, int degree_sum, const std::string& mode, const UniverseArgs& ua) {
  Output out;
  if (mode == "list") {
    const UniverseSpec u = make_universe(ua, degree_sum);
    Json list = Json::array();
    std::uint64_t count = 0;
    for_each_multisegment(u, [&](const Multisegment& m) {
      list.push_back(to_json(m));
      out.text.push_back(to_string(m));
      ++count;
      return true;
    });
    out.json = envelope("enumerate");
    out.json["mode"] = "list";
    out.json["count"] = count;
    out.json["multisegments"] = list;
    return out;
  }
  if (mode != "ext" && mode != "quotient") throw SchemaError("--mode must be ext, quotient or list");
  // deg(m1) + deg(m2) = 2n + 1 <= degree_sum, so the larger side has degree n + 1 <= (N + 1) / 2.
  SuiteConfig cfg;
  cfg.mode = mode;
  cfg.universe = make_universe(ua, (degree_sum + 1) / 2);
  cfg.jobs = g.jobs;
  cfg.seed = g.seed;
  const RunReport r = run_suite(cfg);
  out.json = r.to_json(g.timing);
  out.json["command"] = "enumerate";
  out.json["degree_sum"] = degree_sum;
  summarize(r, out);
  out.exit_code = r.exit_code();
  return out;
}

struct SuiteArgs {
  std::string mode;
  int max_degree = 6;
  bool inject = false;
  bool compare_longest = false;
  int trials = 1000;
  int characters = 20;
  std::string q = "4";
};

Output cmd_suite(const Globals& g, const SuiteArgs& sa, const UniverseArgs& ua) {
  SuiteConfig cfg;
  cfg.mode = sa.mode;
  cfg.universe = make_universe(ua, sa.max_degree);
  cfg.jobs = g.jobs;
  cfg.seed = g.seed;
  cfg.inject_nongeneric = sa.inject;
  cfg.compare_longest = sa.compare_longest;
  cfg.hecke_trials = sa.trials;
  cfg.hecke_characters = sa.characters;
  cfg.hecke_q = parse_rational(sa.q);
  const RunReport r = run_suite(cfg);
  Output out;
  out.json = r.to_json(g.timing);
  summarize(r, out);
  if (g.timing) out.text.push_back("wall time " + std::to_string(r.seconds) + " s");
  out.exit_code = r.exit_code();
  return out;
}

void add_universe_options(CLI::App* sub, UniverseArgs& ua) {
  sub->add_option("--window", ua.window, "exponent window a..b")->capture_default_str();
  sub->add_option("--step", ua.step, "grid step (1 or 1/2)")->capture_default_str();
  sub->add_option("--line", ua.lines, "cuspidal line ids to enumerate on")->capture_default_str();
  sub->add_option("--lines-file", ua.lines_file, "JSON document with a \"lines\" declaration");
  sub->add_option("--max-segments", ua.max_segments, "cap on the number of segments");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact segment calculus, branching certificates and affine Hecke checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--seed", g.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker threads (default from BRANCHCALC_JOBS)")->check(CLI::PositiveNumber);
  app.add_flag("--timing", g.timing, "include wall time in harness reports");

  std::optional<Output> result;
  auto run = [&](auto&& fn) { return [&, fn] { result = fn(); }; };

  std::string rep_arg, side = "right", arg2;
  int order = 0;
  auto* derive_cmd = app.add_subcommand("derive", "left or right derivative of an induced representation");
  derive_cmd->add_option("rep", rep_arg, "InducedRep JSON (file or inline)")->required();
  derive_cmd->add_option("--i", order, "order")->required();
  derive_cmd->add_option("--side", side)->check(CLI::IsMember({"left", "right"}))->capture_default_str();
  derive_cmd->callback(run([&] { return cmd_derive(rep_arg, order, side); }));

  auto* recombine_cmd = app.add_subcommand("recombine", "canonical generic form with rewrite trace");
  recombine_cmd->add_option("multisegment", rep_arg)->required();
  recombine_cmd->callback(run([&] { return cmd_recombine(rep_arg); }));

  std::optional<int> lemma_i;
  bool all_i = false;
  auto* lemma_cmd = app.add_subcommand("truncation-lemma", "check that recombined right truncations are right truncations");
  lemma_cmd->add_option("multisegment", rep_arg)->required();
  lemma_cmd->add_option("--i", lemma_i, "truncation amount");
  lemma_cmd->add_flag("--all-i", all_i, "check every amount 0..degree");
  lemma_cmd->callback(run([&] { return cmd_truncation_lemma(rep_arg, lemma_i, all_i); }));

  auto* restrict_cmd = app.add_subcommand("restrict", "Bernstein-Zelevinsky filtration layers of the restriction");
  restrict_cmd->add_option("rep", rep_arg)->required();
  restrict_cmd->add_option("--side", side)->check(CLI::IsMember({"left", "right"}))->capture_default_str();
  restrict_cmd->callback(run([&] { return cmd_restrict(rep_arg, side); }));

  bool theorem = false;
  auto* quotient_cmd = app.add_subcommand("quotient-check", "can <m2> be a quotient of St(D) restricted?");
  quotient_cmd->add_option("--delta", rep_arg, "Segment JSON")->required();
  quotient_cmd->add_option("--m2", arg2, "Multisegment JSON")->required();
  quotient_cmd->add_flag("--theorem", theorem, "require degenerate m2; NOT_OBSTRUCTED exits 2");
  quotient_cmd->callback(run([&] { return cmd_quotient_check(rep_arg, arg2, theorem); }));

  std::string emit_tree;
  bool allow_nongeneric = false;
  auto* ext_cmd = app.add_subcommand("ext-certify", "Ext-vanishing certificate for St(m1) and St(m2)");
  ext_cmd->add_option("--m1", rep_arg)->required();
  ext_cmd->add_option("--m2", arg2)->required();
  ext_cmd->add_option("--emit-tree", emit_tree, "write the certificate tree to this file");
  ext_cmd->add_flag("--allow-nongeneric-m2", allow_nongeneric, "harness mode: exercise the FAIL extractor");
  ext_cmd->callback(run([&] { return cmd_ext_certify(rep_arg, arg2, emit_tree, allow_nongeneric); }));

  auto* ep_cmd = app.add_subcommand("ep", "Euler-Poincare pairing of two irreducibles");
  ep_cmd->add_option("rep1", rep_arg)->required();
  ep_cmd->add_option("rep2", arg2)->required();
  ep_cmd->callback(run([&] { return cmd_ep(rep_arg, arg2); }));

  auto* hecke_cmd = app.add_subcommand("hecke", "affine Hecke algebra checks");
  hecke_cmd->require_subcommand(1);
  int m = 2, trials = 1000;
  std::string action, lambda, chi, orbit, q;
  auto* verify_cmd = hecke_cmd->add_subcommand("verify", "defining relations and associativity, symbolic q");
  verify_cmd->add_option("--m", m)->check(CLI::Range(1, 3))->required();
  verify_cmd->add_option("--trials", trials)->capture_default_str();
  verify_cmd->callback(run([&] { return cmd_hecke_verify(m, trials, g.seed); }));
  auto* sign_cmd = hecke_cmd->add_subcommand("sign-module", "generator action on theta^lambda (x) 1");
  sign_cmd->add_option("--m", m)->check(CLI::Range(1, 3))->required();
  sign_cmd->add_option("--action", action, "T<k>, theta<i> or theta<i>^-1")->required();
  sign_cmd->add_option("--lambda", lambda, "weight, e.g. 1,0")->required();
  sign_cmd->add_option("--q", q, "rational specialization (symbolic when omitted)");
  sign_cmd->callback(run([&] { return cmd_hecke_sign_module(m, action, lambda, q); }));
  auto* ps_cmd = hecke_cmd->add_subcommand("principal-series", "H (x)_A chi with sign-type analysis");
  ps_cmd->add_option("--m", m)->check(CLI::Range(1, 3))->required();
  ps_cmd->add_option("--chi", chi, "character values, e.g. 1,2")->required();
  ps_cmd->add_option("--q", q)->required();
  ps_cmd->callback(run([&] { return cmd_hecke_principal_series(m, chi, q); }));
  auto* cq_cmd = hecke_cmd->add_subcommand("central-quotient", "Sigma / J Sigma at a central character");
  cq_cmd->add_option("--m", m)->check(CLI::Range(1, 3))->required();
  cq_cmd->add_option("--orbit", orbit, "orbit representative, e.g. 1,2")->required();
  cq_cmd->add_option("--q", q)->required();
  cq_cmd->callback(run([&] { return cmd_hecke_central_quotient(m, orbit, q); }));

  int degree_sum = 0;
  std::string enum_mode = "ext";
  UniverseArgs ua;
  auto* enum_cmd = app.add_subcommand("enumerate", "exhaustive harness over a bounded universe");
  enum_cmd->add_option("--degree-sum", degree_sum, "bound on deg(m1) + deg(m2)")->required();
  enum_cmd->add_option("--mode", enum_mode)->check(CLI::IsMember({"ext", "quotient", "list"}))->capture_default_str();
  add_universe_options(enum_cmd, ua);
  enum_cmd->callback(run([&] { return cmd_enumerate(g, degree_sum, enum_mode, ua); }));

  SuiteArgs sa;
  auto* suite_cmd = app.add_subcommand("suite", "run a module check over an enumerated universe");
  suite_cmd->add_option("mode", sa.mode)
      ->check(CLI::IsMember({"truncation-lemma", "ext", "quotient", "duality", "hecke"}))
      ->required();
  suite_cmd->add_option("--max-degree", sa.max_degree)->capture_default_str();
  suite_cmd->add_flag("--inject-nongeneric", sa.inject, "ext: also audit the FAIL extractor on non-generic m2");
  suite_cmd->add_flag("--compare-longest", sa.compare_longest, "ext: record FAIL counts for the longest-segment choice");
  suite_cmd->add_option("--trials", sa.trials)->capture_default_str();
  suite_cmd->add_option("--characters", sa.characters)->capture_default_str();
  suite_cmd->add_option("--q", sa.q)->capture_default_str();
  add_universe_options(suite_cmd, ua);
  suite_cmd->callback(run([&] { return cmd_suite(g, sa, ua); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SpecializationRequired& e) {
    std::cerr << "specialization required: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!result) return kExitUsage;
  emit(g, *result);
  return result->exit_code;
}
