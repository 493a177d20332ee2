#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "gradalg/catalog.hpp"
#include "gradalg/json_io.hpp"

using namespace gradalg;

namespace {

std::string basis_str(const Presentation& P, const StdBasisElement& b) {
  return "u_" + P.ambient->label(P.subgroup.element(b.h)) + " (x) e_{" + std::to_string(b.i + 1) +
         "," + std::to_string(b.j + 1) + "}";
}

std::string element_str(const Presentation& P, const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [b, c] : x.terms) {
    if (!out.empty()) out += " + ";
    const std::string cs = c.str();
    if (cs != "1") out += "(" + cs + ") * ";
    out += basis_str(P, b);
  }
  return out;
}

Json element_to_json(const AlgebraElement& x) {
  Json j = Json::array();
  for (const auto& [b, c] : x.terms) {
    Json t;
    t["h"] = b.h;
    t["i"] = b.i;
    t["j"] = b.j;
    t["coefficient"] = scalar_to_json(c);
    j.push_back(std::move(t));
  }
  return j;
}

std::string degree_str(const GroupPtr& G, int g) {
  if (G && g >= 0 && g < G->order()) return G->label(g);
  return std::to_string(g);
}

std::string var_str(const GradedVariable& v, const GroupPtr& G) {
  std::string s = "x_{" + std::to_string(v.id) + "," + degree_str(G, v.degree) + "}";
  switch (v.tag) {
    case VarTag::Plain: break;
    case VarTag::Designated: s += "[designated]"; break;
    case VarTag::Frame: s += "[frame]"; break;
    case VarTag::Bridge: s += "[bridge]"; break;
  }
  return s;
}

int count_composition_nodes(const GradedPolynomial& p) {
  int n = static_cast<int>(p.composition.size());
  for (const auto& [id, sub] : p.composition) n += count_composition_nodes(sub);
  return n;
}

void print_polynomial(const GradedPolynomial& p, const GroupPtr& G) {
  std::cout << "polynomial: " << p.variables.size() << " variables, " << p.monomials.size()
            << " monomials, " << p.alternation_sets.size() << " alternation sets, "
            << count_composition_nodes(p) << " composition nodes\n";
  std::cout << "variables:";
  for (const GradedVariable& v : p.variables) std::cout << " " << var_str(v, G);
  std::cout << "\n";
  if (p.monomials.size() <= 8 && p.composition.empty()) {
    std::cout << "expansion:";
    bool first = true;
    for (const GradedMonomial& m : p.monomials) {
      std::cout << (first ? " " : " + ");
      first = false;
      const std::string cs = m.coefficient.str();
      if (cs != "1") std::cout << "(" << cs << ") * ";
      for (size_t k = 0; k < m.factors.size(); ++k) {
        const GradedVariable* v = p.find_variable(m.factors[k]);
        std::cout << (k ? " " : "")
                  << (v ? var_str(*v, G)
                        : "x_{" + std::to_string(m.factors[k]) + "}");
      }
    }
    std::cout << "\n";
  }
  for (const std::vector<int>& set : p.alternation_sets) {
    std::cout << "alternating over ids {";
    for (size_t k = 0; k < set.size(); ++k) std::cout << (k ? "," : "") << set[k];
    std::cout << "}\n";
  }
}

void print_witness(const Presentation& P, const GradedPolynomial& p, const BasisAssignment& w) {
  for (const auto& [id, b] : w)
    std::cout << "  x_{" << id << "," << degree_str(P.ambient, p.leaf_degree(id))
              << "} <- " << basis_str(P, b) << "\n";
}

std::string move_str(const GroupPtr& G, const Move& m) {
  std::ostringstream out;
  switch (m.kind) {
    case Move::Kind::Permute: {
      out << "permute: new p_k = old p_(";
      for (size_t k = 0; k < m.perm.size(); ++k) out << (k ? " " : "") << m.perm[k] + 1;
      out << ")_k";
      break;
    }
    case Move::Kind::CosetShift:
      out << "coset shift: p_" << m.index + 1 << " <- " << G->label(m.shift) << " * p_"
          << m.index + 1;
      break;
    case Move::Kind::Conjugate:
      out << "conjugate by " << G->label(m.conjugator);
      break;
    case Move::Kind::CocycleReplace: {
      out << "cocycle replace: alpha <- alpha + d(rho), rho = (";
      for (size_t k = 0; k < m.rho->vals.size(); ++k) out << (k ? " " : "") << m.rho->vals[k];
      out << ") in Z/" << m.rho->n;
      break;
    }
  }
  return out.str();
}

Presentation load_presentation(const std::string& path) {
  return presentation_from_json(load_json_file(path));
}

Subgroup parse_subgroup(const Presentation& P, const std::vector<int>& elems) {
  if (elems.empty()) return P.subgroup;
  return Subgroup::make(P.ambient, elems);
}

std::string subgroup_str(const GroupPtr& G, const Subgroup& S) {
  std::string out = "{";
  for (int k = 0; k < S.size(); ++k) out += (k ? ", " : "") + G->label(S.element(k));
  return out + "}";
}

void write_report(const std::string& path, const Json& j) {
  if (path.empty()) return;
  write_json_file(path, j);
  std::cout << "wrote " << path << "\n";
}

int cmd_validate(const std::string& gpath, const std::string& cpath, const std::string& ppath,
                 const std::string& fpath, const std::string& spath, int root_order) {
  bool any = false;
  if (!gpath.empty()) {
    any = true;
    GroupPtr G = group_from_json(load_json_file(gpath));
    std::cout << "group: valid, order " << G->order() << "\n";
  }
  if (!cpath.empty()) {
    any = true;
    Cocycle c = cocycle_from_json(load_json_file(cpath));
    CocycleCheck chk = check_cocycle(c);
    if (!chk.ok) {
      std::cout << "cocycle: INVALID, identity fails at (" << chk.witness[0] << ", "
                << chk.witness[1] << ", " << chk.witness[2] << ")\n";
      return 1;
    }
    std::cout << "cocycle: valid on an order-" << c.group->order() << " group, root order " << c.n
              << "\n";
  }
  if (!ppath.empty()) {
    any = true;
    Presentation P = load_presentation(ppath);
    CocycleCheck chk = check_cocycle(P.cocycle);
    if (!chk.ok) {
      std::cout << "presentation: INVALID cocycle at (" << chk.witness[0] << ", " << chk.witness[1]
                << ", " << chk.witness[2] << ")\n";
      return 1;
    }
    std::cout << "presentation: valid, |H| = " << P.subgroup.size() << ", r = " << P.matrix_size()
              << ", dim = " << P.dim() << "\n";
  }
  if (!fpath.empty()) {
    any = true;
    GradedPolynomial f = polynomial_from_json(load_json_file(fpath));
    std::cout << "polynomial: valid, " << f.variables.size() << " variables, "
              << f.monomials.size() << " monomials\n";
  }
  if (!spath.empty()) {
    any = true;
    CycloScalar s = scalar_from_json(load_json_file(spath));
    if (root_order > 0) s = s.embed(root_order);
    std::cout << "scalar: " << s.str() << " in Q(zeta_" << s.root_order() << ")\n";
  }
  if (!any) {
    std::cerr << "error: nothing to validate; pass at least one input file\n";
    return 1;
  }
  return 0;
}

int cmd_dims(const std::string& ppath, const std::string& json_out) {
  Presentation P = load_presentation(ppath);
  std::map<int, int> dims = component_dimensions(P);
  std::cout << "dim = |H| * r^2 = " << P.subgroup.size() << " * " << P.matrix_size() << "^2 = "
            << P.dim() << "\n";
  std::cout << std::left << std::setw(12) << "degree" << "dim\n";
  for (const auto& [g, d] : dims)
    std::cout << std::left << std::setw(12) << P.ambient->label(g) << d << "\n";
  Json j;
  j["dim"] = P.dim();
  Json comps = Json::array();
  for (const auto& [g, d] : dims) comps.push_back(Json::array({g, d}));
  j["components"] = std::move(comps);
  write_report(json_out, j);
  return 0;
}

int cmd_blocks(const std::string& ppath, const std::vector<int>& nelems,
               const std::string& json_out) {
  Presentation P = load_presentation(ppath);
  Subgroup N = parse_subgroup(P, nelems);
  BlockDecomposition dec = block_decomposition(P, N);
  std::cout << "N = " << subgroup_str(P.ambient, dec.N) << ", order " << dec.N.size() << "\n";
  std::cout << dec.blocks.size() << " block(s)\n";
  Json jblocks = Json::array();
  for (size_t k = 0; k < dec.blocks.size(); ++k) {
    const Block& b = dec.blocks[k];
    std::cout << "block " << k + 1 << ": tuple positions {";
    for (size_t t = 0; t < b.indices.size(); ++t)
      std::cout << (t ? "," : "") << b.indices[t] + 1;
    std::cout << "}, pages " << b.pages << ", omega = " << subgroup_str(P.ambient, b.omega)
              << ", coset tuple (";
    for (size_t t = 0; t < b.coset_tuple.size(); ++t)
      std::cout << (t ? ", " : "") << P.ambient->label(b.coset_tuple[t]);
    std::cout << "), block dim " << b.block_presentation.dim() << "\n";
    Json jb;
    jb["indices"] = b.indices;
    jb["pages"] = b.pages;
    jb["omega"] = b.omega.elements();
    jb["coset_tuple"] = b.coset_tuple;
    jblocks.push_back(std::move(jb));
  }
  Json j;
  j["N"] = dec.N.elements();
  j["blocks"] = std::move(jblocks);
  write_report(json_out, j);
  return 0;
}

Json invariants_to_json(const InvariantReport& rep) {
  Json j;
  Json dims = Json::array();
  for (const auto& [g, d] : rep.dims) dims.push_back(Json::array({g, d}));
  j["dims"] = std::move(dims);
  j["coset_multiplicities"] = rep.coset_multiplicities;
  j["h_order"] = rep.h_order;
  j["h_conjugacy_key"] = rep.h_conjugacy_key;
  Json profile = Json::array();
  for (const auto& row : rep.block_profile) {
    Json jr = Json::array();
    for (const auto& [mult, cls] : row) jr.push_back(Json::array({mult, cls}));
    profile.push_back(std::move(jr));
  }
  j["block_profile"] = std::move(profile);
  return j;
}

int cmd_invariants(const std::string& ppath, const std::string& json_out) {
  Presentation P = load_presentation(ppath);
  InvariantReport rep = invariant_report(P);
  std::cout << "component dimensions:";
  for (const auto& [g, d] : rep.dims) std::cout << " " << P.ambient->label(g) << ":" << d;
  std::cout << "\ncoset multiplicities (sorted):";
  for (int m : rep.coset_multiplicities) std::cout << " " << m;
  std::cout << "\n|H| = " << rep.h_order << "\nsubgroup conjugacy key:";
  for (int g : rep.h_conjugacy_key) std::cout << " " << g;
  std::cout << "\nblock profile:\n";
  for (const auto& row : rep.block_profile) {
    std::cout << "  ";
    for (const auto& [mult, cls] : row)
      std::cout << "(multiplicity " << mult << ", class " << cls << ") ";
    std::cout << "\n";
  }
  write_report(json_out, invariants_to_json(rep));
  return 0;
}

int cmd_equiv(const std::string& apath, const std::string& bpath, const std::string& json_out) {
  Presentation A = load_presentation(apath);
  Presentation B = load_presentation(bpath);
  std::optional<MoveSequence> seq = equivalent(A, B);
  if (!seq) {
    std::cout << "NOT EQUIVALENT\n";
    const std::string diff = report_difference(invariant_report(A), invariant_report(B));
    if (diff.empty())
      std::cout << "basic invariants agree; distinguished beyond them\n";
    else
      std::cout << "first differing invariant: " << diff << "\n";
    return 0;
  }
  std::cout << "EQUIVALENT: " << seq->moves.size() << " move(s)\n";
  for (size_t k = 0; k < seq->moves.size(); ++k)
    std::cout << "  " << k + 1 << ". " << move_str(A.ambient, seq->moves[k]) << "\n";
  if (!verify_moves(*seq, B)) {
    std::cerr << "error: produced certificate failed re-verification\n";
    return 1;
  }
  std::cout << "re-verified: replay lands on the target\n";
  write_report(json_out, move_sequence_to_json(*seq));
  return 0;
}

int cmd_separate(const std::string& apath, const std::string& bpath, long long budget,
                 const std::string& json_out) {
  Presentation A = load_presentation(apath);
  Presentation B = load_presentation(bpath);
  std::optional<SeparationCertificate> cert;
  try {
    cert = separate(A, B, budget);
  } catch (const Error& e) {
    if (e.kind != ErrorKind::PresentationsEquivalent) throw;
    std::cout << "EQUIVALENT: the presentations are equivalent; no graded identity separates "
                 "them\n";
    return 0;
  }
  if (!cert) {
    std::cout << "INCONCLUSIVE within budget " << budget << "\n";
    return 2;
  }
  const bool a_side = cert->identity_side == SeparationCertificate::Side::A;
  std::cout << "SEPARATED: identity of " << (a_side ? "A" : "B") << ", nonzero on "
            << (a_side ? "B" : "A") << " ("
            << (cert->verification_mode == SeparationCertificate::Mode::Exhaustive
                    ? "exhaustive scan"
                    : "witness only")
            << ")\n";
  const Presentation& nonzero_side = a_side ? B : A;
  print_polynomial(cert->polynomial, A.ambient);
  std::cout << "witness on " << (a_side ? "B" : "A") << ":\n";
  print_witness(nonzero_side, cert->polynomial, cert->witness);
  AlgebraElement value = evaluate_basis(cert->polynomial, nonzero_side, cert->witness);
  std::cout << "value = " << element_str(nonzero_side, value) << "\n";
  if (!verify_separation(*cert, A, B, budget)) {
    std::cerr << "error: produced certificate failed re-verification\n";
    return 1;
  }
  std::cout << "re-verified: yes\n";
  write_report(json_out, separation_to_json(*cert));
  return 0;
}

int cmd_identity_check(const std::string& ppath, const std::string& fpath, long long budget,
                       const std::string& json_out) {
  Presentation P = load_presentation(ppath);
  GradedPolynomial f = polynomial_from_json(load_json_file(fpath));
  IdentityVerdict v = is_identity(f, P, budget);
  Json j;
  j["assignments_tried"] = v.assignments_tried;
  switch (v.kind) {
    case IdentityVerdict::Kind::Identity:
      std::cout << "IDENTITY: zero on all standard-basis assignments (" << v.assignments_tried
                << " evaluated)\n";
      j["verdict"] = "identity";
      write_report(json_out, j);
      return 0;
    case IdentityVerdict::Kind::NonIdentity: {
      std::cout << "NON-IDENTITY after " << v.assignments_tried << " assignment(s); witness:\n";
      print_witness(P, f, v.witness);
      AlgebraElement value = evaluate_basis(f, P, v.witness);
      std::cout << "value = " << element_str(P, value) << "\n";
      j["verdict"] = "non_identity";
      j["witness"] = witness_to_json(v.witness);
      j["value"] = element_to_json(value);
      write_report(json_out, j);
      return 0;
    }
    case IdentityVerdict::Kind::Inconclusive:
      std::cout << "INCONCLUSIVE after " << v.assignments_tried << " assignments (budget "
                << budget << ")\n";
      j["verdict"] = "inconclusive";
      write_report(json_out, j);
      return 2;
  }
  return 2;
}

int cmd_verify(const std::string& apath, const std::string& bpath, const std::string& cpath,
               long long budget, const std::string& json_out) {
  Presentation A = load_presentation(apath);
  Presentation B = load_presentation(bpath);
  Json cj = load_json_file(cpath);
  const std::string kind = cj.is_object() ? cj.value("certificate", "") : "";
  bool ok = false;
  if (kind == "moves") {
    MoveSequence seq = move_sequence_from_json(cj);
    ok = seq.start.literally_equal(A) && verify_moves(seq, B);
    std::cout << "moves certificate: " << (ok ? "VERIFIED" : "FAILED") << "\n";
  } else if (kind == "separation") {
    SeparationCertificate cert = separation_from_json(cj);
    ok = verify_separation(cert, A, B, budget);
    std::cout << "separation certificate: " << (ok ? "VERIFIED" : "FAILED") << "\n";
  } else {
    raise(ErrorKind::ParseError, "certificate file lacks a known \"certificate\" field");
  }
  Json j;
  j["verified"] = ok;
  write_report(json_out, j);
  return ok ? 0 : 1;
}

int cmd_gen_probe(const Presentation& P, const ProbeResult& probe, const std::string& out,
                  const std::string& witness_out) {
  print_polynomial(probe.polynomial, P.ambient);
  std::cout << "witness:\n";
  print_witness(P, probe.polynomial, probe.witness);
  AlgebraElement value = evaluate_basis(probe.polynomial, P, probe.witness);
  std::cout << "value = " << element_str(P, value) << "\n";
  if (!out.empty()) {
    write_json_file(out, polynomial_to_json(probe.polynomial));
    std::cout << "wrote " << out << "\n";
  }
  if (!witness_out.empty()) {
    write_json_file(witness_out, witness_to_json(probe.witness));
    std::cout << "wrote " << witness_out << "\n";
  }
  return 0;
}

int run_catalog(long long budget, const std::string& json_out) {
  const std::vector<CatalogEntry>& cat = builtin_catalog();
  std::cout << "built-in catalog: " << cat.size() << " members\n";
  for (const CatalogEntry& e : cat) {
    const Presentation& p = e.presentation;
    std::cout << "  " << std::left << std::setw(22) << e.name << "|H| = " << p.subgroup.size()
              << ", r = " << p.matrix_size() << ", dim " << std::setw(3) << p.dim()
              << " over an order-" << p.ambient->order() << " ambient\n";
  }
  std::vector<PairOutcome> rows = catalog_coherence(budget);
  std::cout << "\nordered same-ambient pairs: " << rows.size() << "\n";
  int passed = 0;
  for (const PairOutcome& row : rows) {
    std::ostringstream verdict;
    verdict << (row.equivalence_found ? "EQUIV   " : row.separation_found ? "SEPARATE" : "none    ");
    std::cout << std::left << std::setw(22) << row.a << " vs " << std::setw(22) << row.b << " "
              << verdict.str() << "  " << (row.coherent ? "pass" : "FAIL");
    if (row.bruteforce_ran)
      std::cout << "  (identity spaces " << (row.bruteforce_same ? "equal" : "differ") << ")";
    std::cout << "\n";
    if (row.coherent) passed++;
  }
  std::cout << "\n" << passed << "/" << rows.size() << " pairs coherent\n";
  if (!json_out.empty()) {
    Json j = Json::array();
    for (const PairOutcome& row : rows) {
      Json r;
      r["a"] = row.a;
      r["b"] = row.b;
      r["equivalence_found"] = row.equivalence_found;
      r["separation_found"] = row.separation_found;
      r["certificate_verified"] = row.certificate_verified;
      if (row.bruteforce_ran) r["bruteforce_same"] = row.bruteforce_same;
      r["coherent"] = row.coherent;
      j.push_back(std::move(r));
    }
    write_report(json_out, j);
  }
  return passed == static_cast<int>(rows.size()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact graded-simple algebra presentations: dimensions, blocks, equivalence "
               "and separation certificates, graded identity checks"};
  app.require_subcommand(0, 1);

  long long budget = 10'000'000;
  int root_order = 0;
  int threads = 1;
  std::string json_out;
  bool do_catalog = false;
  app.add_option("--budget", budget, "assignment budget for identity scans and separations")
      ->capture_default_str();
  app.add_option("--root-order", root_order,
                 "lift printed scalars into Q(zeta_n); must be a multiple of their root order");
  app.add_option("--threads", threads,
                 "worker cap for assignment scans (reserved; scans currently run one worker)")
      ->check(CLI::PositiveNumber);
  app.add_option("--json", json_out, "also write a machine-readable report or certificate here");
  app.add_flag("--catalog", do_catalog,
               "run the built-in catalog of presentations and print its pass/fail matrix");

  std::string vg, vc, vp, vf, vs;
  CLI::App* validate = app.add_subcommand("validate", "parse input files and run their checks");
  validate->fallthrough();
  validate->add_option("-g,--group", vg, "group file");
  validate->add_option("-c,--cocycle", vc, "cocycle file");
  validate->add_option("-p,--presentation", vp, "presentation file");
  validate->add_option("-f,--polynomial", vf, "polynomial file");
  validate->add_option("-s,--scalar", vs, "scalar file");

  std::string dims_p;
  CLI::App* dims = app.add_subcommand("dims", "per-degree dimension table of a presentation");
  dims->fallthrough();
  dims->add_option("-p,--presentation", dims_p, "presentation file")->required();

  std::string blocks_p;
  std::vector<int> blocks_n;
  CLI::App* blocks =
      app.add_subcommand("blocks", "decomposition of the N-graded part into simple blocks");
  blocks->fallthrough();
  blocks->add_option("-p,--presentation", blocks_p, "presentation file")->required();
  blocks->add_option("-n,--subgroup", blocks_n,
                     "ambient elements of N, comma separated (default: H)")
      ->delimiter(',');

  std::string inv_p;
  CLI::App* invariants =
      app.add_subcommand("invariants", "move-invariant report of a presentation");
  invariants->fallthrough();
  invariants->add_option("-p,--presentation", inv_p, "presentation file")->required();

  std::string eq_a, eq_b;
  CLI::App* equiv = app.add_subcommand("equiv", "decide equivalence; emit a move certificate");
  equiv->fallthrough();
  equiv->add_option("-a", eq_a, "left presentation file")->required();
  equiv->add_option("-b", eq_b, "right presentation file")->required();

  std::string sep_a, sep_b;
  CLI::App* separate_cmd =
      app.add_subcommand("separate", "find a graded identity holding on one side only");
  separate_cmd->fallthrough();
  separate_cmd->add_option("-a", sep_a, "left presentation file")->required();
  separate_cmd->add_option("-b", sep_b, "right presentation file")->required();

  std::string idc_p, idc_f;
  CLI::App* idcheck =
      app.add_subcommand("identity-check", "exhaustive standard-basis identity scan");
  idcheck->fallthrough();
  idcheck->add_option("-p,--presentation", idc_p, "presentation file")->required();
  idcheck->add_option("-f,--polynomial", idc_f, "polynomial file")->required();

  std::string ver_a, ver_b, ver_c;
  CLI::App* verify = app.add_subcommand("verify", "re-verify an emitted certificate");
  verify->fallthrough();
  verify->add_option("-a", ver_a, "left presentation file")->required();
  verify->add_option("-b", ver_b, "right presentation file")->required();
  verify->add_option("-c,--certificate", ver_c, "certificate file")->required();

  CLI::App* gen = app.add_subcommand("gen", "construct identity candidates and probes");
  gen->require_subcommand(1);
  gen->fallthrough();

  int regev_r = 2, regev_deg = 0, regev_id = 0;
  std::string regev_out;
  CLI::App* gen_regev = gen->add_subcommand(
      "regev", "central double-alternating polynomial on 2r^2 variables");
  gen_regev->fallthrough();
  gen_regev->add_option("-r", regev_r, "matrix size")->required();
  gen_regev->add_option("--degree", regev_deg, "degree of the designated variable x_0")
      ->capture_default_str();
  gen_regev->add_option("--identity", regev_id, "ambient identity element")
      ->capture_default_str();
  gen_regev->add_option("-o,--out", regev_out, "write the polynomial here");

  std::string bin_c, bin_out;
  std::vector<int> bin_degrees, bin_pi;
  CLI::App* gen_binomial =
      gen->add_subcommand("binomial", "x_1...x_s - lambda x_pi(1)...x_pi(s) for a cocycle");
  gen_binomial->fallthrough();
  gen_binomial->add_option("-c,--cocycle", bin_c, "cocycle file")->required();
  gen_binomial->add_option("--degrees", bin_degrees, "cocycle group elements, comma separated")
      ->delimiter(',')
      ->required();
  gen_binomial->add_option("--pi", bin_pi, "permutation of 0..s-1, comma separated")
      ->delimiter(',')
      ->required();
  gen_binomial->add_option("-o,--out", bin_out, "write the polynomial here");

  std::string bp_p, bp_out, bp_wout;
  std::vector<int> bp_t;
  CLI::App* gen_block = gen->add_subcommand(
      "block-probe", "framed alternating probe of the T-block structure, with witness");
  gen_block->fallthrough();
  gen_block->add_option("-p,--presentation", bp_p, "presentation file")->required();
  gen_block->add_option("-t,--subgroup", bp_t, "ambient elements of T, comma separated (default: H)")
      ->delimiter(',');
  gen_block->add_option("-o,--out", bp_out, "write the polynomial here");
  gen_block->add_option("--witness-out", bp_wout, "write the witness here");

  std::string gp_p, gp_out, gp_wout;
  bool gp_regev = false;
  CLI::App* gen_global = gen->add_subcommand(
      "global-probe", "concatenated conjugate-subgroup probes, with witness");
  gen_global->fallthrough();
  gen_global->add_option("-p,--presentation", gp_p, "presentation file")->required();
  gen_global->add_flag("--with-regev", gp_regev, "insert composed cocycle separators");
  gen_global->add_option("-o,--out", gp_out, "write the polynomial here");
  gen_global->add_option("--witness-out", gp_wout, "write the witness here");

  std::string sep_gen_a, sep_gen_b, sep_gen_out;
  CLI::App* gen_separator = gen->add_subcommand(
      "separator", "cocycle separator telling two presentations' cocycles apart");
  gen_separator->fallthrough();
  gen_separator->add_option("-a", sep_gen_a, "left presentation file")->required();
  gen_separator->add_option("-b", sep_gen_b, "right presentation file")->required();
  gen_separator->add_option("-o,--out", sep_gen_out, "write the polynomial here");

  int rc = 0;
  validate->callback([&] { rc = cmd_validate(vg, vc, vp, vf, vs, root_order); });
  dims->callback([&] { rc = cmd_dims(dims_p, json_out); });
  blocks->callback([&] { rc = cmd_blocks(blocks_p, blocks_n, json_out); });
  invariants->callback([&] { rc = cmd_invariants(inv_p, json_out); });
  equiv->callback([&] { rc = cmd_equiv(eq_a, eq_b, json_out); });
  separate_cmd->callback([&] { rc = cmd_separate(sep_a, sep_b, budget, json_out); });
  idcheck->callback([&] { rc = cmd_identity_check(idc_p, idc_f, budget, json_out); });
  verify->callback([&] { rc = cmd_verify(ver_a, ver_b, ver_c, budget, json_out); });
  gen_regev->callback([&] {
    GradedPolynomial f = regev(regev_r, regev_deg, regev_id);
    print_polynomial(f, nullptr);
    if (!regev_out.empty()) {
      write_json_file(regev_out, polynomial_to_json(f));
      std::cout << "wrote " << regev_out << "\n";
    }
  });
  gen_binomial->callback([&] {
    Cocycle c = cocycle_from_json(load_json_file(bin_c));
    CycloScalar lambda = binomial_lambda(c, bin_degrees, bin_pi);
    if (root_order > 0) lambda = lambda.embed(root_order);
    std::cout << "lambda = " << lambda.str() << "\n";
    GradedPolynomial f = build_binomial(c, bin_degrees, bin_pi);
    print_polynomial(f, c.group);
    if (!bin_out.empty()) {
      write_json_file(bin_out, polynomial_to_json(f));
      std::cout << "wrote " << bin_out << "\n";
    }
  });
  gen_block->callback([&] {
    Presentation P = load_presentation(bp_p);
    rc = cmd_gen_probe(P, build_block_probe(P, parse_subgroup(P, bp_t)), bp_out, bp_wout);
  });
  gen_global->callback([&] {
    Presentation P = load_presentation(gp_p);
    rc = cmd_gen_probe(P, build_global_probe(P, gp_regev), gp_out, gp_wout);
  });
  gen_separator->callback([&] {
    Presentation A = load_presentation(sep_gen_a);
    Presentation B = load_presentation(sep_gen_b);
    GradedPolynomial f =
        build_cocycle_separator(A.cocycle, {B.cocycle}, A.matrix_size());
    print_polynomial(f, A.ambient);
    if (!sep_gen_out.empty()) {
      write_json_file(sep_gen_out, polynomial_to_json(f));
      std::cout << "wrote " << sep_gen_out << "\n";
    }
  });

  try {
    app.parse(argc, argv);
    if (app.get_subcommands().empty()) {
      if (do_catalog) {
        rc = run_catalog(budget, json_out);
      } else {
        std::cout << app.help();
        rc = 1;
      }
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const Error& e) {
    if (e.kind == ErrorKind::BudgetExceeded) {
      std::cout << "INCONCLUSIVE: " << e.what() << "\n";
      return 2;
    }
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
