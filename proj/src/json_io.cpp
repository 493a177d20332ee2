#include "gradalg/json_io.hpp"

#include <fstream>

namespace gradalg {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  raise(ErrorKind::ParseError, where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<int>();
}

std::vector<int> int_list(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (size_t k = 0; k < j.size(); ++k) out.push_back(as_int(j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

std::vector<std::vector<int>> int_table(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of rows");
  std::vector<std::vector<int>> out;
  out.reserve(j.size());
  for (size_t k = 0; k < j.size(); ++k) out.push_back(int_list(j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

}  // namespace

Json group_to_json(const GroupPtr& G) {
  Json j;
  j["order"] = G->order();
  j["table"] = G->table();
  j["labels"] = G->labels();
  return j;
}

GroupPtr group_from_json(const Json& j) {
  const std::string where = "group";
  const int order = as_int(field(j, "order", where), where + ".order");
  std::vector<std::vector<int>> table = int_table(field(j, "table", where), where + ".table");
  if (static_cast<int>(table.size()) != order) bad(where, "order disagrees with table size");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& l = j.at("labels");
    if (!l.is_array()) bad(where + ".labels", "expected an array of strings");
    for (const Json& s : l) {
      if (!s.is_string()) bad(where + ".labels", "expected an array of strings");
      labels.push_back(s.get<std::string>());
    }
  }
  return Group::make(std::move(table), std::move(labels));
}

Json scalar_to_json(const CycloScalar& c) {
  Json j;
  j["n"] = c.root_order();
  Json coeffs = Json::array();
  for (const Rational& q : c.coeffs()) coeffs.push_back(to_string(q));
  j["coeffs"] = std::move(coeffs);
  return j;
}

CycloScalar scalar_from_json(const Json& j) {
  const std::string where = "scalar";
  const int n = as_int(field(j, "n", where), where + ".n");
  if (n < 1) bad(where + ".n", "root order must be positive");
  const Json& coeffs = field(j, "coeffs", where);
  if (!coeffs.is_array()) bad(where + ".coeffs", "expected an array");
  if (static_cast<int>(coeffs.size()) > euler_phi(n))
    bad(where + ".coeffs", "more coefficients than the power basis has");
  CycloScalar out = CycloScalar::zero(n);
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k].is_string()) bad(where + ".coeffs", "coefficients are \"p/q\" strings");
    const Rational q = parse_rational(coeffs[k].get<std::string>());
    if (q == 0) continue;
    out = out + CycloScalar::from_rational(n, q) * CycloScalar::root_of_unity(n, static_cast<long long>(k));
  }
  return out;
}

Json cocycle_to_json(const Cocycle& c) {
  Json j;
  j["group"] = group_to_json(c.group);
  j["n"] = c.n;
  j["exps"] = c.exps;
  return j;
}

Cocycle cocycle_from_json(const Json& j, const GroupPtr& subgroup_group) {
  const std::string where = "cocycle";
  const Json& g = field(j, "group", where);
  GroupPtr domain;
  if (g.is_string() && g.get<std::string>() == "H") {
    if (!subgroup_group) bad(where + ".group", "\"H\" is only valid inside a presentation");
    domain = subgroup_group;
  } else if (g.is_object() && g.contains("parent")) {
    GroupPtr parent = group_from_json(field(g, "parent", where + ".group"));
    Subgroup s = Subgroup::make(parent, int_list(field(g, "elements", where + ".group"),
                                                 where + ".group.elements"));
    domain = s.as_group();
  } else {
    domain = group_from_json(g);
  }
  const int n = as_int(field(j, "n", where), where + ".n");
  return Cocycle::make(std::move(domain), n, int_table(field(j, "exps", where), where + ".exps"));
}

Json presentation_to_json(const Presentation& P) {
  Json j;
  j["group"] = group_to_json(P.ambient);
  j["H"] = P.subgroup.elements();
  Json c;
  c["group"] = "H";
  c["n"] = P.cocycle.n;
  c["exps"] = P.cocycle.exps;
  j["cocycle"] = std::move(c);
  j["tuple"] = P.tuple;
  return j;
}

Presentation presentation_from_json(const Json& j) {
  const std::string where = "presentation";
  GroupPtr G = group_from_json(field(j, "group", where));
  Subgroup H = Subgroup::make(G, int_list(field(j, "H", where), where + ".H"));
  Cocycle c = cocycle_from_json(field(j, "cocycle", where), H.as_group());
  std::vector<int> tuple = int_list(field(j, "tuple", where), where + ".tuple");
  return Presentation::make(std::move(G), std::move(H), std::move(c), std::move(tuple));
}

namespace {

const char* tag_name(VarTag t) {
  switch (t) {
    case VarTag::Plain: return "plain";
    case VarTag::Designated: return "designated";
    case VarTag::Frame: return "frame";
    case VarTag::Bridge: return "bridge";
  }
  return "plain";
}

VarTag tag_from(const std::string& s, const std::string& where) {
  if (s == "plain") return VarTag::Plain;
  if (s == "designated") return VarTag::Designated;
  if (s == "frame") return VarTag::Frame;
  if (s == "bridge") return VarTag::Bridge;
  bad(where, "unknown variable tag \"" + s + "\"");
}

}  // namespace

Json polynomial_to_json(const GradedPolynomial& p) {
  Json j;
  Json vars = Json::array();
  for (const GradedVariable& v : p.variables) {
    Json jv;
    jv["id"] = v.id;
    jv["degree"] = v.degree;
    jv["tag"] = tag_name(v.tag);
    vars.push_back(std::move(jv));
  }
  j["variables"] = std::move(vars);
  Json monos = Json::array();
  for (const GradedMonomial& m : p.monomials) {
    Json jm;
    jm["coefficient"] = scalar_to_json(m.coefficient);
    jm["factors"] = m.factors;
    monos.push_back(std::move(jm));
  }
  j["monomials"] = std::move(monos);
  if (!p.composition.empty()) {
    Json comp = Json::array();
    for (const auto& [id, sub] : p.composition) {
      Json jc;
      jc["id"] = id;
      jc["polynomial"] = polynomial_to_json(sub);
      comp.push_back(std::move(jc));
    }
    j["composition"] = std::move(comp);
  }
  if (!p.alternation_sets.empty()) j["alternation_sets"] = p.alternation_sets;
  if (p.degenerate) j["degenerate"] = true;
  return j;
}

GradedPolynomial polynomial_from_json(const Json& j) {
  const std::string where = "polynomial";
  std::vector<GradedVariable> vars;
  const Json& jv = field(j, "variables", where);
  if (!jv.is_array()) bad(where + ".variables", "expected an array");
  for (const Json& v : jv) {
    GradedVariable gv;
    gv.id = as_int(field(v, "id", where + ".variables"), where + ".variables.id");
    gv.degree = as_int(field(v, "degree", where + ".variables"), where + ".variables.degree");
    const Json& t = field(v, "tag", where + ".variables");
    if (!t.is_string()) bad(where + ".variables.tag", "expected a string");
    gv.tag = tag_from(t.get<std::string>(), where + ".variables.tag");
    vars.push_back(gv);
  }
  std::vector<GradedMonomial> monos;
  const Json& jm = field(j, "monomials", where);
  if (!jm.is_array()) bad(where + ".monomials", "expected an array");
  for (const Json& m : jm) {
    GradedMonomial gm;
    gm.coefficient = scalar_from_json(field(m, "coefficient", where + ".monomials"));
    gm.factors = int_list(field(m, "factors", where + ".monomials"), where + ".monomials.factors");
    monos.push_back(std::move(gm));
  }
  std::vector<std::pair<int, GradedPolynomial>> comp;
  if (j.contains("composition")) {
    const Json& jc = j.at("composition");
    if (!jc.is_array()) bad(where + ".composition", "expected an array");
    for (const Json& c : jc) {
      const int id = as_int(field(c, "id", where + ".composition"), where + ".composition.id");
      comp.emplace_back(id, polynomial_from_json(field(c, "polynomial", where + ".composition")));
    }
  }
  std::vector<std::vector<int>> alts;
  if (j.contains("alternation_sets"))
    alts = int_table(j.at("alternation_sets"), where + ".alternation_sets");
  GradedPolynomial out =
      GradedPolynomial::make(std::move(vars), std::move(monos), std::move(comp), std::move(alts));
  if (j.contains("degenerate") && j.at("degenerate").is_boolean())
    out.degenerate = j.at("degenerate").get<bool>();
  return out;
}

Json witness_to_json(const BasisAssignment& w) {
  Json j = Json::array();
  for (const auto& [id, b] : w) {
    Json e;
    e["id"] = id;
    e["h"] = b.h;
    e["i"] = b.i;
    e["j"] = b.j;
    j.push_back(std::move(e));
  }
  return j;
}

BasisAssignment witness_from_json(const Json& j) {
  const std::string where = "witness";
  if (!j.is_array()) bad(where, "expected an array");
  BasisAssignment out;
  for (const Json& e : j) {
    const int id = as_int(field(e, "id", where), where + ".id");
    StdBasisElement b;
    b.h = as_int(field(e, "h", where), where + ".h");
    b.i = as_int(field(e, "i", where), where + ".i");
    b.j = as_int(field(e, "j", where), where + ".j");
    if (!out.emplace(id, b).second) bad(where, "duplicate variable id " + std::to_string(id));
  }
  return out;
}

Json move_to_json(const Move& m) {
  Json j;
  switch (m.kind) {
    case Move::Kind::Permute:
      j["kind"] = "permute";
      j["perm"] = m.perm;
      break;
    case Move::Kind::CosetShift:
      j["kind"] = "coset_shift";
      j["index"] = m.index;
      j["shift"] = m.shift;
      break;
    case Move::Kind::Conjugate:
      j["kind"] = "conjugate";
      j["g"] = m.conjugator;
      break;
    case Move::Kind::CocycleReplace: {
      j["kind"] = "cocycle_replace";
      Json rho;
      rho["group"] = group_to_json(m.rho->group);
      rho["n"] = m.rho->n;
      rho["vals"] = m.rho->vals;
      j["rho"] = std::move(rho);
      break;
    }
  }
  return j;
}

Move move_from_json(const Json& j) {
  const std::string where = "move";
  const Json& k = field(j, "kind", where);
  if (!k.is_string()) bad(where + ".kind", "expected a string");
  const std::string kind = k.get<std::string>();
  if (kind == "permute") return Move::permute(int_list(field(j, "perm", where), where + ".perm"));
  if (kind == "coset_shift")
    return Move::coset_shift(as_int(field(j, "index", where), where + ".index"),
                             as_int(field(j, "shift", where), where + ".shift"));
  if (kind == "conjugate") return Move::conjugate(as_int(field(j, "g", where), where + ".g"));
  if (kind == "cocycle_replace") {
    const Json& r = field(j, "rho", where);
    GroupPtr g = group_from_json(field(r, "group", where + ".rho"));
    const int n = as_int(field(r, "n", where + ".rho"), where + ".rho.n");
    return Move::cocycle_replace(CochainWitness::make(
        std::move(g), n, int_list(field(r, "vals", where + ".rho"), where + ".rho.vals")));
  }
  bad(where + ".kind", "unknown move kind \"" + kind + "\"");
}

Json move_sequence_to_json(const MoveSequence& seq) {
  Json j;
  j["certificate"] = "moves";
  j["start"] = presentation_to_json(seq.start);
  Json moves = Json::array();
  for (const Move& m : seq.moves) moves.push_back(move_to_json(m));
  j["moves"] = std::move(moves);
  return j;
}

MoveSequence move_sequence_from_json(const Json& j) {
  const std::string where = "moves certificate";
  MoveSequence seq{presentation_from_json(field(j, "start", where)), {}};
  const Json& moves = field(j, "moves", where);
  if (!moves.is_array()) bad(where + ".moves", "expected an array");
  for (const Json& m : moves) seq.moves.push_back(move_from_json(m));
  return seq;
}

Json separation_to_json(const SeparationCertificate& cert) {
  Json j;
  j["certificate"] = "separation";
  j["identity_side"] = cert.identity_side == SeparationCertificate::Side::A ? "A" : "B";
  j["verification_mode"] =
      cert.verification_mode == SeparationCertificate::Mode::Exhaustive ? "exhaustive"
                                                                        : "witness_only";
  j["polynomial"] = polynomial_to_json(cert.polynomial);
  j["witness"] = witness_to_json(cert.witness);
  return j;
}

SeparationCertificate separation_from_json(const Json& j) {
  const std::string where = "separation certificate";
  SeparationCertificate cert;
  const Json& side = field(j, "identity_side", where);
  if (!side.is_string()) bad(where + ".identity_side", "expected \"A\" or \"B\"");
  const std::string s = side.get<std::string>();
  if (s == "A")
    cert.identity_side = SeparationCertificate::Side::A;
  else if (s == "B")
    cert.identity_side = SeparationCertificate::Side::B;
  else
    bad(where + ".identity_side", "expected \"A\" or \"B\"");
  const Json& mode = field(j, "verification_mode", where);
  if (!mode.is_string()) bad(where + ".verification_mode", "expected a string");
  const std::string m = mode.get<std::string>();
  if (m == "exhaustive")
    cert.verification_mode = SeparationCertificate::Mode::Exhaustive;
  else if (m == "witness_only")
    cert.verification_mode = SeparationCertificate::Mode::WitnessOnly;
  else
    bad(where + ".verification_mode", "expected \"exhaustive\" or \"witness_only\"");
  cert.polynomial = polynomial_from_json(field(j, "polynomial", where));
  cert.witness = witness_from_json(field(j, "witness", where));
  return cert;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    raise(ErrorKind::ParseError, path + " at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) raise(ErrorKind::ParseError, "cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
  if (!out) raise(ErrorKind::ParseError, "failed writing " + path);
}

}  // namespace gradalg
