#include "branchcalc/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "branchcalc/errors.hpp"

namespace branchcalc {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw SchemaError((path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(path, std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t integer_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  return j.get<std::int64_t>();
}

}  // namespace

Json load_json_argument(const std::string& arg) {
  std::string text;
  std::string origin;
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    text = arg;
    origin = "inline JSON";
  } else {
    std::ifstream in(arg);
    if (!in) throw SchemaError("cannot open '" + arg + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
    origin = arg;
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(origin + ": parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json to_json(const Exponent& x) { return Json::array({x.numerator(), x.denominator()}); }

Exponent exponent_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Exponent(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_exponent(j.get<std::string>());
    } catch (const SchemaError& e) {
      schema_error(path, e.what());
    }
  }
  if (!j.is_array() || j.size() != 2) schema_error(path, "expected a rational [num, den]");
  const std::int64_t num = integer_from_json(j[0], path + "/0");
  const std::int64_t den = integer_from_json(j[1], path + "/1");
  if (den <= 0) schema_error(path + "/1", "denominator must be positive");
  return Exponent(num, den);
}

Json to_json(const Rational& x) {
  if (x.get_num().fits_slong_p() && x.get_den().fits_slong_p())
    return Json::array({x.get_num().get_si(), x.get_den().get_si()});
  return x.get_str();
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return make_rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const SchemaError& e) {
      schema_error(path, e.what());
    }
  }
  if (!j.is_array() || j.size() != 2) schema_error(path, "expected a rational [num, den]");
  const std::int64_t num = integer_from_json(j[0], path + "/0");
  const std::int64_t den = integer_from_json(j[1], path + "/1");
  if (den <= 0) schema_error(path + "/1", "denominator must be positive");
  return make_rational(static_cast<long>(num), static_cast<long>(den));
}

Json to_json(const Symbolic& p) {
  Json out = Json::object();
  for (const auto& [k, c] : p.coeffs()) out[std::to_string(k)] = to_json(c);
  return out;
}

Symbolic symbolic_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected {power: coefficient}");
  Symbolic out;
  for (const auto& [key, value] : j.items()) {
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      schema_error(path, "bad power '" + key + "'");
    }
    out += Symbolic(rational_from_json(value, path + "/" + key)) * Symbolic::q(k);
  }
  return out;
}

LineRegistry lines_from_json(const Json& doc) {
  LineRegistry lines;
  if (!doc.is_object()) return lines;
  auto it = doc.find("lines");
  if (it == doc.end()) return lines;
  if (!it->is_array()) schema_error("/lines", "expected an array");
  for (std::size_t k = 0; k < it->size(); ++k) {
    const std::string path = "/lines/" + std::to_string(k);
    const Json& entry = (*it)[k];
    const Json& id = member(entry, "id", path);
    if (!id.is_string()) schema_error(path + "/id", "expected a string");
    int degree = 1;
    if (entry.contains("degree")) degree = static_cast<int>(integer_from_json(entry["degree"], path + "/degree"));
    std::string dual;
    if (entry.contains("dual")) {
      if (!entry["dual"].is_string()) schema_error(path + "/dual", "expected a string");
      dual = entry["dual"].get<std::string>();
    }
    try {
      lines.declare(id.get<std::string>(), degree, dual);
    } catch (const DomainError& e) {
      schema_error(path, e.what());
    }
  }
  return lines;
}

Json to_json(const LineRegistry& lines) {
  Json out = Json::array();
  for (const auto& [id, line] : lines.lines())
    out.push_back({{"id", id}, {"degree", line.degree}, {"dual", line.dual_id}});
  return out;
}

Json to_json(const Segment& s) {
  return {{"line", s.line()}, {"a", to_json(s.a())}, {"b", to_json(s.b())}};
}

Segment segment_from_json(const Json& j, const LineRegistry& lines, const std::string& path) {
  const Json& line = member(j, "line", path);
  if (!line.is_string()) schema_error(path + "/line", "expected a string");
  const Exponent a = exponent_from_json(member(j, "a", path), path + "/a");
  const Exponent b = exponent_from_json(member(j, "b", path), path + "/b");
  const std::string id = line.get<std::string>();
  try {
    return Segment(id, a, b, lines.degree(id));
  } catch (const DomainError& e) {
    schema_error(path, e.what());
  }
}

Json to_json(const Multisegment& m) {
  Json segs = Json::array();
  for (const auto& s : m) segs.push_back(to_json(s));
  return {{"segments", segs}};
}

Multisegment multisegment_from_json(const Json& j, const LineRegistry& lines,
                                    const std::string& path) {
  const Json& segs = member(j, "segments", path);
  if (!segs.is_array()) schema_error(path + "/segments", "expected an array");
  std::vector<Segment> out;
  for (std::size_t k = 0; k < segs.size(); ++k)
    out.push_back(segment_from_json(segs[k], lines, path + "/segments/" + std::to_string(k)));
  return Multisegment(std::move(out));
}

Json to_json(const InducedRep& rep) {
  return {{"flavor", to_string(rep.flavor())}, {"m", to_json(rep.m())}, {"twist", to_json(rep.twist())}};
}

InducedRep rep_from_json(const Json& j, const LineRegistry& lines, const std::string& path) {
  const Json& flavor = member(j, "flavor", path);
  Flavor f = Flavor::Zel;
  if (flavor == "ZEL") {
    f = Flavor::Zel;
  } else if (flavor == "ST") {
    f = Flavor::St;
  } else {
    schema_error(path + "/flavor", "expected \"ZEL\" or \"ST\"");
  }
  Exponent twist = 0;
  if (j.contains("twist")) twist = exponent_from_json(j["twist"], path + "/twist");
  return InducedRep(f, multisegment_from_json(member(j, "m", path), lines, path + "/m"), twist);
}

Json to_json(const FormalSum& sum) {
  Json terms = Json::array();
  for (const auto& t : sum) terms.push_back(to_json(t));
  return {{"terms", terms}};
}

FormalSum formal_sum_from_json(const Json& j, const LineRegistry& lines, const std::string& path) {
  const Json& terms = member(j, "terms", path);
  if (!terms.is_array()) schema_error(path + "/terms", "expected an array");
  FormalSum out;
  for (std::size_t k = 0; k < terms.size(); ++k)
    out.add(rep_from_json(terms[k], lines, path + "/terms/" + std::to_string(k)));
  return out;
}

Json to_json(const Support& s) {
  Json out = Json::array();
  for (const auto& p : s) out.push_back({{"line", p.line}, {"e", to_json(p.exponent)}});
  return out;
}

namespace {

std::vector<std::string> split_tuple(const std::string& text) {
  std::string body = text;
  auto first = body.find_first_not_of(" \t");
  auto last = body.find_last_not_of(" \t");
  if (first == std::string::npos) return {};
  body = body.substr(first, last - first + 1);
  if (!body.empty() && (body.front() == '[' || body.front() == '(')) {
    const char close = body.front() == '[' ? ']' : ')';
    if (body.back() != close) throw SchemaError("unbalanced tuple '" + text + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<std::string> parts;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto a = item.find_first_not_of(" \t\"");
    auto b = item.find_last_not_of(" \t\"");
    if (a == std::string::npos) throw SchemaError("empty entry in tuple '" + text + "'");
    parts.push_back(item.substr(a, b - a + 1));
  }
  return parts;
}

}  // namespace

std::vector<int> parse_int_tuple(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : split_tuple(text)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw SchemaError("not an integer: '" + part + "' in '" + text + "'");
    }
  }
  return out;
}

std::vector<Rational> parse_rational_tuple(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& part : split_tuple(text)) out.push_back(parse_rational(part));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Json optional_segment(const std::optional<Segment>& s) {
  return s ? to_json(*s) : Json(nullptr);
}

}  // namespace

Json to_json(const Recombination& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"pair", {to_json(s.first), to_json(s.second)}},
                     {"union", to_json(s.uni)},
                     {"intersection", optional_segment(s.intersection)}});
  return {{"canonical", to_json(r.canonical)}, {"steps", steps}};
}

Json to_json(const TruncationLemmaResult& r) {
  Json out = {{"i", r.i}, {"lemma_holds", r.holds}, {"truncations_checked", r.checked}};
  out["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  out["witness_recombined"] = r.witness_recombined ? to_json(*r.witness_recombined) : Json(nullptr);
  return out;
}

Json to_json(const FiltrationLayer& layer) {
  return {{"index", layer.index},
          {"side", to_string(layer.side)},
          {"bottom", layer.bottom},
          {"payload", to_json(layer.payload)}};
}

Json to_json(const QuotientCertificate& c) {
  auto witnesses = [](const std::vector<CompatibilityWitness>& list) {
    Json out = Json::array();
    for (const auto& w : list)
      out.push_back({{"i", w.i}, {"support", to_json(w.support)}, {"subquotient", to_json(w.subquotient)}});
    return out;
  };
  return {{"delta", to_json(c.delta)},
          {"m2", to_json(c.m2)},
          {"verdict", c.obstructed ? "OBSTRUCTED" : "NOT_OBSTRUCTED"},
          {"right_candidates", witnesses(c.right)},
          {"left_candidates", witnesses(c.left)}};
}

Json to_json(const Certificate& c) {
  Json out = {{"kind", to_string(c.kind)}, {"m1", to_json(c.m1)}, {"m_count", c.m_count}};
  if (c.delta) out["delta"] = to_json(*c.delta);
  if (c.variant) out["variant"] = to_string(*c.variant);
  if (!c.witnesses.empty()) {
    Json ws = Json::array();
    for (const auto& w : c.witnesses) {
      Json pi = Json::array(), m2 = Json::array();
      for (const auto& s : w.pi_side) pi.push_back(to_json(s));
      for (const auto& s : w.m2_side) m2.push_back(to_json(s));
      ws.push_back({{"i", w.i}, {"pi_spectra", pi}, {"m2_spectra", m2}});
    }
    out["witnesses"] = ws;
  }
  if (c.fresh_line)
    out["fresh_line"] = {{"id", c.fresh_line->id}, {"degree", c.fresh_line->degree}};
  if (c.kind == CertificateKind::Fail) {
    Json cs = Json::array();
    for (const auto& col : c.collisions)
      cs.push_back({{"variant", to_string(col.variant)}, {"i", col.i}, {"support", to_json(col.support)}});
    out["collisions"] = cs;
    out["linked_pair"] = c.linked_pair
                             ? Json::array({to_json(c.linked_pair->first), to_json(c.linked_pair->second)})
                             : Json(nullptr);
    out["extraction"] = c.extraction;
  }
  if (!c.children.empty()) {
    Json ch = Json::array();
    for (const auto& child : c.children) ch.push_back(to_json(child));
    out["children"] = ch;
  }
  return out;
}

Json to_json(const ExtCertificate& c) {
  const Certificate* fail = first_fail(c.root);
  return {{"verdict", fail ? "FAIL" : "CERTIFIED"},
          {"m2", to_json(c.m2)},
          {"depth", depth(c.root)},
          {"lines", to_json(c.lines)},
          {"tree", to_json(c.root)}};
}

Json to_json(const RelationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"m", r.rank}, {"trials", r.trials}, {"seed", r.seed}, {"all_passed", r.all_passed()}, {"checks", checks}};
}

Json to_json(const RationalMatrix& a) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(to_json(Rational(a(i, j))));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const FiniteModule& M) {
  Json gens = Json::object();
  for (std::size_t k = 0; k < M.T.size(); ++k) gens["T" + std::to_string(k + 1)] = to_json(M.T[k]);
  for (std::size_t i = 0; i < M.theta.size(); ++i) {
    gens["theta" + std::to_string(i + 1)] = to_json(M.theta[i]);
    gens["theta" + std::to_string(i + 1) + "^-1"] = to_json(M.theta_inv[i]);
  }
  return {{"kind", M.kind}, {"m", M.rank}, {"q", to_json(M.q)}, {"dim", M.dim()}, {"basis", M.basis}, {"generators", gens}};
}

Json to_json(const SignQuotientAnalysis& a) {
  return {{"dim", a.dim},
          {"sign_isotypic_dim", a.sign_isotypic_dim},
          {"generated_by_sign", a.generated_by_sign},
          {"sign_free_submodule_dim", a.sign_free_dim},
          {"sign_quotient_dim", a.quotient_dim},
          {"sign_quotient_irreducible", a.quotient_irreducible},
          {"unique_irreducible_quotient_with_sign", a.unique_sign_quotient}};
}

}  // namespace branchcalc
