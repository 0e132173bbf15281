#include "cli/commands.hpp"

#include <koszul/complex.hpp>
#include <koszul/fpmodule.hpp>
#include <koszul/gb.hpp>
#include <koszul/wt2.hpp>

#include <sstream>

namespace koszul::cli {

namespace {

using nlohmann::json;

json matrix_json(const RingMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json module_json(const FPModule& m) {
  return json{{"generators", m.generators()}, {"relations", matrix_json(m.relations())}};
}

json complex_json(const ChainComplex& c) {
  json ranks = json::array();
  json boundaries = json::array();
  for (int k = c.lo(); k <= c.hi(); ++k) {
    ranks.push_back(c.rank(k));
    if (k > c.lo()) boundaries.push_back(matrix_json(c.boundary(k)));
  }
  return json{{"lo", c.lo()}, {"ranks", std::move(ranks)},
              {"boundaries", std::move(boundaries)}};
}

json cube_json(const Cube& cube) {
  json ranks = json::object();
  json boundaries = json::object();
  for (SubsetMask t = 0; t < (SubsetMask(1) << cube.dims()); ++t) {
    ranks[mask_bitstring(t, cube.dims())] = cube.vertex_rank(t);
    for (int k = 1; k <= cube.dims(); ++k)
      if (mask_contains(t, k))
        boundaries[mask_bitstring(t, cube.dims()) + ":" + std::to_string(k)] =
            matrix_json(cube.boundary(t, k));
  }
  return json{{"dims", cube.dims()}, {"ranks", std::move(ranks)},
              {"boundaries", std::move(boundaries)}};
}

std::string need(const std::optional<std::string>& v, const char* what) {
  if (!v) throw DocumentError(std::string("missing parameter: ") + what);
  return *v;
}

std::vector<Polynomial> need_sequence(const Document& doc,
                                      const std::optional<std::string>& v, const char* what) {
  auto fs = doc.poly_list(need(v, what));
  if (fs.empty()) throw DocumentError(std::string(what) + ": empty sequence");
  return fs;
}

// Shared source resolution: a chain complex from --cube (totalization),
// --family (generalized Koszul) or --sequence (classical Koszul).
ChainComplex complex_source(const Document& doc, const Params& p) {
  int provided = int(p.cube.has_value()) + int(p.family.has_value()) +
                 int(p.sequence.has_value());
  if (provided != 1)
    throw DocumentError("need exactly one of: cube, family, sequence");
  if (p.cube) return total_complex(multicomplex_from_cube(doc.cube_ref(*p.cube)));
  if (p.family) return generalized_koszul(doc.family_ref(*p.family)).total;
  return classical_koszul(doc.ring, need_sequence(doc, p.sequence, "sequence"));
}

std::string seq_str(const std::vector<Polynomial>& fs) {
  std::string out;
  for (const auto& f : fs) {
    if (!out.empty()) out += ", ";
    out += f.str();
  }
  return out;
}

RunResult cmd_gb(const Document& doc, const Params& p) {
  RunResult result;
  if (p.ideal && p.columns) throw DocumentError("gb: give either ideal or columns, not both");
  if (p.ideal) {
    auto gens = doc.poly_list(*p.ideal);
    auto basis = groebner_basis(doc.ring, gens);
    json out = json::array();
    for (const auto& g : basis) out.push_back(g.str());
    result.payload = json{{"basis", std::move(out)}};
    bool sound = true;
    for (const auto& g : gens) sound = sound && normal_form(g, basis).is_zero();
    result.checks.push_back({"generators reduce to zero against the basis", sound, ""});
  } else if (p.columns) {
    const RingMatrix& m = doc.matrix_ref(*p.columns);
    auto basis = groebner_basis(doc.ring, static_cast<std::uint32_t>(m.rows()), m.columns());
    json out = json::array();
    for (const auto& g : basis) out.push_back(g.str());
    result.payload = json{{"basis", std::move(out)}, {"ambient_rank", m.rows()}};
    bool sound = true;
    for (const auto& c : m.columns()) sound = sound && normal_form(c, basis).is_zero();
    result.checks.push_back({"generators reduce to zero against the basis", sound, ""});
  } else {
    throw DocumentError("gb: need ideal (polynomial names) or columns (matrix name)");
  }
  return result;
}

RunResult cmd_regseq(const Document& doc, const Params& p) {
  RunResult result;
  auto fs = need_sequence(doc, p.sequence, "sequence");
  bool ok = is_regular_sequence(doc.ring, fs);
  result.checks.push_back({"sequence is regular", ok, seq_str(fs)});
  result.payload = json{{"regular", ok}};
  return result;
}

RunResult cmd_aseq(const Document& doc, const Params& p) {
  RunResult result;
  auto fs = need_sequence(doc, p.sequence, "sequence");
  bool ok = is_A_sequence(doc.ring, fs);
  result.checks.push_back({"sequence is regular under every permutation", ok, seq_str(fs)});
  result.payload = json{{"a_sequence", ok}};
  return result;
}

RunResult cmd_koszul(const Document& doc, const Params& p) {
  RunResult result;
  auto fs = need_sequence(doc, p.sequence, "sequence");
  ChainComplex c = classical_koszul(doc.ring, fs);
  result.checks.push_back({"boundaries compose to zero", c.boundaries_compose_to_zero(), ""});
  result.payload = json{{"complex", complex_json(c)}};
  return result;
}

RunResult cmd_gkoszul(const Document& doc, const Params& p) {
  RunResult result;
  GeneralizedKoszul gk = generalized_koszul(doc.family_ref(need(p.family, "family")));
  result.checks.push_back({"determinants equal the targets", true, ""});
  result.checks.push_back({"boundary squares commute", true, ""});
  result.checks.push_back({"boundaries compose to zero",
                           gk.total.boundaries_compose_to_zero(), ""});
  result.payload = json{{"cube", cube_json(gk.cube)}, {"total", complex_json(gk.total)}};
  return result;
}

RunResult cmd_validate_cube(const Document& doc, const Params& p) {
  RunResult result;
  const Cube& cube = doc.cube_ref(need(p.cube, "cube"));
  auto v = validate(cube);
  if (!v) {
    result.checks.push_back({"cube functor laws hold", true, ""});
    result.payload = json{{"valid", true}};
  } else {
    std::ostringstream os;
    os << "subset=" << mask_bitstring(v->subset, cube.dims());
    if (v->kind == CubeViolation::Kind::square) os << ", j=" << v->j << ", k=" << v->k;
    if (!v->detail.empty()) os << ": " << v->detail;
    result.checks.push_back({"cube functor laws hold", false, os.str()});
    result.payload = json{{"valid", false},
                          {"violation",
                           json{{"subset", mask_bitstring(v->subset, cube.dims())},
                                {"j", v->j},
                                {"k", v->k},
                                {"kind", v->kind == CubeViolation::Kind::square ? "square"
                                                                                : "shape"},
                                {"detail", v->detail}}}};
  }
  return result;
}

RunResult cmd_tot(const Document& doc, const Params& p) {
  RunResult result;
  const Cube& cube = doc.cube_ref(need(p.cube, "cube"));
  ChainComplex c = total_complex(multicomplex_from_cube(cube));
  result.checks.push_back({"multi-complex identities hold", true, ""});
  result.checks.push_back({"boundaries compose to zero", c.boundaries_compose_to_zero(), ""});
  result.payload = json{{"total", complex_json(c)}};
  return result;
}

RunResult cmd_homology(const Document& doc, const Params& p) {
  RunResult result;
  if (!p.degree) throw DocumentError("homology: missing parameter: degree");
  ChainComplex c = complex_source(doc, p);
  FPModule h = homology(c, *p.degree);
  result.checks.push_back({"boundaries compose to zero", c.boundaries_compose_to_zero(), ""});
  result.payload = json{{"degree", *p.degree},
                        {"homology", module_json(h)},
                        {"simplified", module_json(h.simplified())},
                        {"zero", h.is_zero()}};
  return result;
}

RunResult cmd_spherical(const Document& doc, const Params& p) {
  RunResult result;
  int n = p.n.value_or(0);
  ChainComplex c = complex_source(doc, p);
  bool ok = is_spherical(c, n);
  result.checks.push_back(
      {"homology vanishes away from degree " + std::to_string(n), ok, ""});
  result.payload = json{{"n", n}, {"spherical", ok}};
  return result;
}

RunResult cmd_be_check(const Document& doc, const Params& p) {
  RunResult result;
  ChainComplex c = complex_source(doc, p);
  BeReport rep = be_check(c);
  if (!rep.error.empty()) {
    result.checks.push_back({"complex is a bounded free complex starting at degree 0", false,
                             rep.error});
    result.payload = json{{"error", rep.error}};
    return result;
  }
  json rows = json::array();
  for (const auto& row : rep.rows) {
    std::ostringstream os;
    os << "i=" << row.i << ", r=" << row.r << ", grade="
       << (row.grade_infinite ? std::string("inf") : std::to_string(row.grade_value));
    result.checks.push_back({"grade I_r(d_i) >= i at i=" + std::to_string(row.i), row.pass,
                             os.str()});
    rows.push_back(json{{"i", row.i},
                        {"r", row.r},
                        {"grade", row.grade_infinite ? json("inf") : json(row.grade_value)},
                        {"pass", row.pass}});
  }
  result.payload = json{{"rows", std::move(rows)}, {"acyclic", rep.ok}};
  return result;
}

RunResult cmd_adm_check(const Document& doc, const Params& p) {
  RunResult result;
  if (p.family.has_value() == p.cube.has_value())
    throw DocumentError("adm-check: need exactly one of family, cube");
  if (p.family) {
    AdmReport rep = admcriterion_check(doc.family_ref(*p.family));
    result.checks.push_back({"targets form an A-sequence", rep.targets_a_sequence, ""});
    if (rep.targets_a_sequence) {
      result.checks.push_back({"cube is admissible", rep.admissibility.admissible,
                               rep.admissibility.admissible ? "" : rep.admissibility.str()});
      result.payload = json{{"admissible", rep.admissibility.admissible}};
    } else {
      result.payload = json{{"admissible", nullptr}, {"hypothesis", "failed"}};
    }
  } else {
    AdmissibilityReport rep = is_admissible(doc.cube_ref(*p.cube));
    result.checks.push_back(
        {"cube is admissible", rep.admissible, rep.admissible ? "" : rep.str()});
    result.payload = json{{"admissible", rep.admissible}};
  }
  return result;
}

json certificate_payload(const Wt2Certificate& cert) {
  json exps = json::array({cert.exponent_f, cert.exponent_g});
  return json{{"f", cert.f.str()},
              {"g", cert.g.str()},
              {"exponents", std::move(exps)},
              {"U", matrix_json(cert.u)},
              {"P", matrix_json(cert.p)},
              {"X", matrix_json(cert.x)},
              {"V", matrix_json(cert.v)},
              {"W", matrix_json(cert.w)},
              {"Ubar", matrix_json(cert.ubar)},
              {"Top", matrix_json(cert.top)},
              {"det_Ubar", determinant(cert.ubar).str()},
              {"cube", cube_json(cert.cube.cube)},
              {"module", module_json(cert.module)},
              {"comparison", matrix_json(cert.comparison)}};
}

void push_certificate_checks(RunResult& result) {
  for (const char* identity :
       {"det P is an associate power of f", "U*X = g*E_n + f*V holds exactly",
        "det Ubar = (-g)^n holds exactly", "cube squares commute",
        "determinant exponents are constant per direction",
        "totalization is 0-spherical", "H0(Tot) is isomorphic to the presented module"})
    result.checks.push_back({identity, true, ""});
}

RunResult cmd_resolve_wt2(const Document& doc, const Params& p) {
  RunResult result;
  FPModule module = FPModule::cokernel(doc.matrix_ref(need(p.module, "module")));
  Polynomial f = doc.poly_ref(need(p.f, "f"));
  Polynomial g = doc.poly_ref(need(p.g, "g"));
  auto outcome = resolve_wt2(module, f, g);
  if (std::holds_alternative<ResolveFailure>(outcome)) {
    const auto& fail = std::get<ResolveFailure>(outcome);
    result.checks.push_back({"module admits a weight-two Koszul cube", false,
                             fail.stage + ": " + fail.detail});
    result.payload = json{{"certified", false}, {"stage", fail.stage}, {"detail", fail.detail}};
    return result;
  }
  const auto& cert = std::get<Wt2Certificate>(outcome);
  push_certificate_checks(result);
  result.checks.push_back({"certificate module matches the input module", true, ""});
  result.payload = json{{"certified", true}, {"certificate", certificate_payload(cert)}};
  return result;
}

RunResult cmd_check_wt(const Document& doc, const Params& p) {
  RunResult result;
  FPModule module = FPModule::cokernel(doc.matrix_ref(need(p.module, "module")));
  auto fs = need_sequence(doc, p.weights, "weights");
  WtReport rep = wt_membership(module, fs, false);
  result.checks.push_back({"support lies in V(weights)", rep.support_ok, ""});
  std::string pd_witness =
      rep.projective_dimension ? "pd = " + std::to_string(*rep.projective_dimension)
                               : "not computed";
  result.checks.push_back({"projective dimension at most " + std::to_string(fs.size()),
                           rep.result == WtMembership::member, pd_witness});
  const char* verdict = rep.result == WtMembership::member      ? "member"
                        : rep.result == WtMembership::not_member ? "not_member"
                                                                 : "unknown";
  result.payload = json{{"result", verdict}, {"detail", rep.detail}};
  if (rep.projective_dimension) result.payload["projective_dimension"] = *rep.projective_dimension;
  return result;
}

RunResult cmd_boundary_lemma(const Document& doc, const Params& p) {
  RunResult result;
  const RingMatrix& psi = doc.matrix_ref(need(p.matrix, "matrix"));
  Polynomial f = doc.poly_ref(need(p.f, "f"));
  BoundaryLemmaReport rep = boundary_condition_check(psi, f);
  result.checks.push_back({"det psi is an associate power of f", rep.applicable,
                           rep.applicable ? "exponent " + std::to_string(rep.power.exponent)
                                          : "direction (1) not applicable"});
  if (rep.applicable) {
    result.checks.push_back({"psi is injective", rep.injective, ""});
    result.checks.push_back({"coker psi is supported on V(f)", rep.supported_on_vf, ""});
    result.checks.push_back({"projective dimension at most one", rep.pd_at_most_one,
                             "exhibited by 0 -> A^n -> A^n"});
  }
  result.payload = json{{"applicable", rep.applicable}, {"ok", rep.ok()}};
  if (rep.applicable) result.payload["exponent"] = rep.power.exponent;
  return result;
}

}  // namespace

const std::vector<std::string> kCommands = {
    "gb",        "regseq",       "aseq",       "koszul",      "gkoszul",
    "validate-cube", "tot",      "homology",   "spherical",   "be-check",
    "adm-check", "resolve-wt2",  "check-wt",   "boundary-lemma"};

RunResult run_command(const std::string& command, const Document& doc, const Params& params) {
  RunResult result;
  try {
    if (command == "gb") result = cmd_gb(doc, params);
    else if (command == "regseq") result = cmd_regseq(doc, params);
    else if (command == "aseq") result = cmd_aseq(doc, params);
    else if (command == "koszul") result = cmd_koszul(doc, params);
    else if (command == "gkoszul") result = cmd_gkoszul(doc, params);
    else if (command == "validate-cube") result = cmd_validate_cube(doc, params);
    else if (command == "tot") result = cmd_tot(doc, params);
    else if (command == "homology") result = cmd_homology(doc, params);
    else if (command == "spherical") result = cmd_spherical(doc, params);
    else if (command == "be-check") result = cmd_be_check(doc, params);
    else if (command == "adm-check") result = cmd_adm_check(doc, params);
    else if (command == "resolve-wt2") result = cmd_resolve_wt2(doc, params);
    else if (command == "check-wt") result = cmd_check_wt(doc, params);
    else if (command == "boundary-lemma") result = cmd_boundary_lemma(doc, params);
    else throw DocumentError("unknown command '" + command + "'");
  } catch (const CheckError& e) {
    result.checks.push_back({e.what(), false, ""});
    if (result.payload.is_null()) result.payload = json::object();
  }
  for (const auto& check : result.checks)
    if (!check.pass) result.exit_code = 1;
  return result;
}

nlohmann::json certificate_json(const std::string& command, const nlohmann::json& document,
                                const Params& params, const RunResult& result) {
  json out = document.is_object() ? document : json::object();
  out.erase("command");
  out.erase("checks");
  out.erase("result");
  out["command"] = command;
  out["params"] = params_to_json(params);
  json checks = json::array();
  for (const auto& check : result.checks)
    checks.push_back(json{{"identity", check.identity},
                          {"status", check.pass ? "pass" : "fail"},
                          {"witness", check.witness}});
  out["checks"] = std::move(checks);
  out["result"] = result.payload;
  return out;
}

std::string human_report(const std::string& command, const RunResult& result) {
  std::ostringstream os;
  os << "command: " << command << "\n";
  for (const auto& check : result.checks) {
    os << "  [" << (check.pass ? "pass" : "FAIL") << "] " << check.identity;
    if (!check.witness.empty()) os << " (" << check.witness << ")";
    os << "\n";
  }
  if (!result.payload.is_null() && !result.payload.empty())
    os << "result: " << result.payload.dump(2) << "\n";
  os << (result.exit_code == 0 ? "status: ok" : "status: check failed") << "\n";
  return os.str();
}

}  // namespace koszul::cli
