// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "tphi/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tphi/complex.hpp"
#include "tphi/error.hpp"
#include "tphi/homology.hpp"
#include "tphi/hyperfield.hpp"
#include "tphi/mccord.hpp"
#include "tphi/models.hpp"
#include "tphi/phased.hpp"
#include "tphi/poset.hpp"
#include "tphi/text_io.hpp"

namespace tphi {

namespace {

using Json = nlohmann::ordered_json;

struct GlobalOptions {
  std::string format = "text";
  std::size_t cap = kDefaultCap;
  bool serial = false;

  Exec exec() const { return serial ? Exec::kSerial : Exec::kParallel; }
  bool json() const { return format == "json-lines"; }
};

// Writes either the text form or the JSON object of each result line.
class Emitter {
 public:
  Emitter(std::ostream& out, bool json) : out_(out), json_(json) {}

  void Record(const std::string& text, const Json& obj) {
    if (json_) {
      out_ << obj.dump() << '\n';
    } else {
      out_ << text << '\n';
    }
  }
  void Comment(const std::string& key, const std::string& text) { Record("# " + text, Json{{key, text}}); }

 private:
  std::ostream& out_;
  bool json_;
};

std::string ReadAll(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string Join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string TupleText(const Tuple& t) {
  std::vector<std::string> parts;
  for (int v : t) parts.push_back(std::to_string(v));
  return Join(parts, " ");
}

Json IntegerJson(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

// Each argument is a vector "v1,...,vn" or a file with one vector per line.
std::vector<PhasedVector> ReadVectors(const std::vector<std::string>& args) {
  std::vector<PhasedVector> out;
  for (const std::string& a : args) {
    std::ifstream in(a);
    if (in) {
      for (const SourceLine& line : ReadContentLines(in)) out.push_back(PhasedVector::Parse(line.text));
    } else {
      out.push_back(PhasedVector::Parse(a));
    }
  }
  return out;
}

PosetFile ReadPoset(const std::string& path) {
  std::istringstream in(ReadAll(path));
  return ParsePosetFile(in);
}

void EmitHomology(Emitter& em, const HomologySummary& h) {
  const std::vector<std::string> lines = h.Lines();
  for (std::size_t i = 0; i < h.dims.size(); ++i) {
    Json torsion = Json::array();
    for (const Integer& t : h.dims[i].torsion) torsion.push_back(IntegerJson(t));
    em.Record(lines[i], Json{{"dim", h.dims[i].dim}, {"reduced", h.reduced}, {"betti", h.dims[i].betti},
                             {"torsion", torsion}});
  }
}

// Poset-format lines as {"kind": first token, "args": [rest]}.
void EmitFormatted(Emitter& em, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (Trim(line).empty()) continue;
    const auto tokens = SplitWhitespace(line);
    Json args = Json::array();
    for (std::size_t i = 1; i < tokens.size(); ++i) args.push_back(std::string(tokens[i]));
    em.Record(line, Json{{"kind", std::string(tokens.front())}, {"args", args}});
  }
}

void EmitGrassmannian(Emitter& em, const std::vector<GPFunction>& fns, int n, int r, std::int64_t k) {
  for (std::size_t i = 0; i < fns.size(); ++i) {
    Json values = Json::array();
    for (const TPhiValue& v : fns[i].values()) values.push_back(v.ToString());
    em.Record(fns[i].ToCompactString(), Json{{"index", i}, {"values", values}});
  }
  em.Record("# count: " + std::to_string(fns.size()) + " (n=" + std::to_string(n) + ", r=" + std::to_string(r) +
                ", k=" + std::to_string(k) + ")",
            Json{{"count", fns.size()}, {"n", n}, {"r", r}, {"k", k}});
}

int CmdHfcalc(Emitter& em, const std::vector<std::string>& expr_parts) {
  const std::string expr = Join(expr_parts, " ");
  std::vector<TPhiValue> terms;
  for (std::string_view term : Split(expr, '+')) {
    if (Trim(term).empty()) throw Error(ErrorKind::kParse, "empty term in '" + expr + "'");
    TPhiValue product = TPhiValue::Unit(0, 1);
    for (std::string_view factor : Split(term, '*')) product = product * TPhiValue::Parse(Trim(factor));
    terms.push_back(product);
  }
  const ArcSet result = boxplus_fold(terms);
  em.Record(result.ToString(), Json{{"expr", expr}, {"result", result.ToString()},
                                    {"contains_zero", result.contains_zero()}});
  return kExitOk;
}

int CmdPerp(Emitter& em, const GlobalOptions& g, const std::vector<std::string>& vec_args, std::int64_t k,
            const std::string& member) {
  const std::vector<PhasedVector> vs = ReadVectors(vec_args);
  if (vs.empty()) throw Error(ErrorKind::kInvalidArgument, "no vectors given");
  if (!member.empty()) {
    const PhasedVector x = PhasedVector::Parse(member);
    const bool in = perp_membership(vs, x);
    em.Record(in ? "member" : "not a member", Json{{"vector", x.ToString()}, {"member", in}});
    return in ? kExitOk : kExitFail;
  }
  if (k <= 0) throw Error(ErrorKind::kInvalidArgument, "--k is required");
  const std::vector<PhasedVector> xs = perp_enumerate(vs, k, g.exec(), g.cap);
  for (const PhasedVector& x : xs) em.Record(x.ToString(), Json{{"vector", x.ToString()}});
  em.Record("# count: " + std::to_string(xs.size()), Json{{"count", xs.size()}});
  return kExitOk;
}

int CmdGpCheck(Emitter& em, const GlobalOptions& g, const std::string& path, bool all_tuples) {
  std::istringstream in(ReadAll(path));
  const GPFunction phi = GPFunction::Parse(in);
  const GPReport rep = gp_verify_all(phi, all_tuples ? RelationSweep::kAllTuples : RelationSweep::kSubsets, g.exec());
  Json obj{{"pass", rep.pass}, {"relations_checked", rep.relations_checked}, {"reason", rep.reason}};
  if (rep.failing_xs) obj["failing_xs"] = *rep.failing_xs;
  if (rep.failing_ys) obj["failing_ys"] = *rep.failing_ys;
  if (rep.pass) {
    obj["normalized"] = gp_normalize(phi).ToCompactString();
    em.Record("PASS: " + std::to_string(rep.relations_checked) + " relations checked", obj);
    em.Record("normalized: " + gp_normalize(phi).ToCompactString(),
              Json{{"normalized", gp_normalize(phi).ToCompactString()}});
    return kExitOk;
  }
  em.Record("FAIL: " + rep.reason, obj);
  return kExitFail;
}

int CmdTransversal(Emitter& em, int n, int r) {
  if (n < 1 || r < 1 || r > n) throw Error(ErrorKind::kInvalidArgument, "need 1 <= r <= n");
  const Transversal t = transversal(n, r);
  for (const Tuple& tu : t.tuples) em.Record(TupleText(tu), Json{{"tuple", tu}});
  const TransversalCheck c = check_transversal(n, r, t);
  auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
  em.Record("# d = " + std::to_string(t.d()) + ", C(n,r) = " + std::to_string(Binomial(n, r)) +
                ", no repeated entries: " + yn(c.no_repeated_entries) +
                ", covers by transposition: " + yn(c.covers_by_transposition) +
                ", closed to transposition: " + yn(c.closed_to_transposition),
            Json{{"d", t.d()}, {"binomial", Binomial(n, r)}, {"no_repeated_entries", c.no_repeated_entries},
                 {"covers_by_transposition", c.covers_by_transposition},
                 {"closed_to_transposition", c.closed_to_transposition}});
  return c.ok() ? kExitOk : kExitFail;
}

void EmitCheck(Emitter& em, const std::string& name, const CheckReport& rep) {
  em.Record(name + ": " + (rep.pass ? "PASS" : "FAIL"), Json{{"check", name}, {"pass", rep.pass}});
  for (const std::string& v : rep.violations) em.Record("  violation: " + v, Json{{"check", name}, {"violation", v}});
  for (const std::string& note : rep.notes) em.Record("  note: " + note, Json{{"check", name}, {"note", note}});
}

int CmdPosetCheck(Emitter& em, const std::string& path) {
  const PosetFile pf = ReadPoset(path);
  const FinitePoset& p = pf.poset;
  em.Record("elements: " + std::to_string(p.size()), Json{{"elements", p.size()}});
  em.Record("relations: " + std::to_string(p.RelationCount()), Json{{"relations", p.RelationCount()}});
  em.Record("cover pairs: " + std::to_string(p.Covers().size()), Json{{"cover_pairs", p.Covers().size()}});
  em.Record("discrete type classes: " + std::to_string(discrete_type_classes(p).size()),
            Json{{"discrete_type_classes", discrete_type_classes(p).size()}});
  if (!pf.mirrored) {
    em.Comment("note", "no mirror given; only the order axioms were checked");
    return kExitOk;
  }
  const CheckReport m = mirror_check(*pf.mirrored);
  const CheckReport gdc = geometric_discrete_check(*pf.mirrored);
  EmitCheck(em, "mirror_check", m);
  EmitCheck(em, "geometric_discrete_check", gdc);
  return m.pass && gdc.pass ? kExitOk : kExitFail;
}

int CmdOrderComplex(Emitter& em, const GlobalOptions& g, const std::string& path) {
  const PosetFile pf = ReadPoset(path);
  const SimplicialComplex c = order_complex(pf.poset, g.cap, g.exec());
  for (const std::string& line : c.CanonicalLines()) {
    Json labels = Json::array();
    for (std::string_view t : SplitWhitespace(line)) labels.push_back(std::string(t));
    em.Record(line, Json{{"simplex", labels}});
  }
  return kExitOk;
}

int CmdHomology(Emitter& em, const GlobalOptions& g, const std::string& path, bool reduced, bool poset_input) {
  HomologySummary h;
  if (poset_input) {
    h = order_complex_homology(ReadPoset(path).poset, reduced, g.cap, g.exec());
  } else {
    std::istringstream in(ReadAll(path));
    h = homology_groups(SimplicialComplex::Parse(in), reduced, Coefficients::kIntegers, g.exec());
  }
  EmitHomology(em, h);
  return kExitOk;
}

int CmdMccord(Emitter& em, const GlobalOptions& g, const std::string& path) {
  const FinitePoset p = ReadPoset(path).poset;
  const McCordReport rep = basis_certificates(p, g.cap, g.exec());
  em.Record("element\tcertificate\tsimplices", Json{{"columns", {"element", "certificate", "simplices"}}});
  for (ElementId x : p.ByLabel()) {
    const BasisCertificate& e = rep.entries[x];
    em.Record(e.label + "\t" + CertificateStrengthName(e.strength) + "\t" + std::to_string(e.simplices),
              Json{{"element", e.label}, {"certificate", CertificateStrengthName(e.strength)},
                   {"simplices", e.simplices}});
  }
  EmitHomology(em, rep.homology);
  em.Record(std::string("verdict: ") + (rep.verdict ? "PASS" : "FAIL"), Json{{"verdict", rep.verdict}});
  return rep.verdict ? kExitOk : kExitFail;
}

int CmdCwReport(Emitter& em, const GlobalOptions& g, const std::string& path) {
  const FinitePoset p = ReadPoset(path).poset;
  const CwTypeReport rep = cw_type_report(p, g.cap);
  for (std::size_t i = 0; i < rep.components.size(); ++i) {
    const ComponentReport& c = rep.components[i];
    std::vector<std::string> labels;
    for (ElementId e : c.elements) labels.push_back(p.label(e));
    std::string detail = c.evidence;
    if (c.status != ComponentStatus::kContractible) detail += ": " + Join(c.reduced_homology.Lines(), ", ");
    em.Record("component " + std::to_string(i + 1) + " (" + std::to_string(c.elements.size()) +
                  " elements): " + ComponentStatusName(c.status) + " [" + detail + "]",
              Json{{"component", i + 1}, {"elements", labels}, {"status", ComponentStatusName(c.status)},
                   {"evidence", detail}});
  }
  em.Record("verdict: " + rep.Verdict(), Json{{"verdict", rep.Verdict()}});
  return kExitOk;
}

int CmdModelBuild(Emitter& em, const GlobalOptions& g, const std::string& family,
                  const std::vector<std::string>& vec_args, int n, int r, std::int64_t k) {
  if (family == "power") {
    if (n <= 0 || k <= 0) throw Error(ErrorKind::kInvalidArgument, "power models need --n and --k");
    EmitFormatted(em, FormatMirroredPoset(build_tphi_power(n, k, g.cap)));
    return kExitOk;
  }
  if (family == "perp") {
    if (k <= 0) throw Error(ErrorKind::kInvalidArgument, "perp models need --k");
    const std::vector<PhasedVector> vs = ReadVectors(vec_args);
    if (vs.empty()) throw Error(ErrorKind::kInvalidArgument, "perp models need at least one vector");
    if (n > 0 && static_cast<std::size_t>(n) != vs.front().size()) {
      throw Error(ErrorKind::kLengthMismatch, "--n differs from the vector length");
    }
    const PerpModel model = build_perp_poset(vs, k, g.cap, g.exec());
    em.Comment("caveat", discretization_caveat(vs, k));
    if (!model.pruned_strata.empty()) {
      std::vector<std::string> parts;
      for (int s : model.pruned_strata) parts.push_back(std::to_string(s));
      em.Comment("pruned_strata", "empty strata pruned from the index poset: " + Join(parts, " "));
    }
    EmitFormatted(em, FormatMirroredPoset(model.poset));
    return kExitOk;
  }
  if (family == "grassmannian") {
    if (n <= 0 || r <= 0 || k <= 0) throw Error(ErrorKind::kInvalidArgument, "grassmannian models need --n, --r and --k");
    EmitGrassmannian(em, enum_grassmannian(n, r, k, g.cap, g.exec()), n, r, k);
    return kExitOk;
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown model family '" + family + "' (power, perp, grassmannian)");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on tropical phase hyperfield models and finite posets", "tphi"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json-lines"}));
  app.add_option("--cap", g.cap, "Size cap for enumerations and complexes");
  app.add_flag("--serial", g.serial, "Run serially (output is identical)");

  int n = 0;
  int r = 0;
  std::int64_t k = 0;
  bool reduced = false;
  bool all_tuples = false;
  bool poset_input = false;
  std::string path;
  std::string member;
  std::string family;
  std::vector<std::string> items;

  auto* hfcalc = app.add_subcommand("hfcalc", "Evaluate a hyperfield sum such as \"0/1 + 1/2\"");
  hfcalc->add_option("expr", items, "Terms separated by '+', factors by '*'")->required();
  auto* perp = app.add_subcommand("perp", "Enumerate the perp set in (TPhi_k)^n - {0}");
  perp->add_option("vectors", items, "Vectors v1,...,vn or files of vectors")->required();
  perp->add_option("--k", k, "Discretization order (even)");
  perp->add_option("--member", member, "Only test this vector for membership");
  auto* gp_check = app.add_subcommand("gp-check", "Verify the strong Grassmann-Pluecker relations");
  gp_check->add_option("file", path, "GP function file")->required();
  gp_check->add_flag("--all-tuples", all_tuples, "Sweep ordered tuples instead of increasing ones");
  auto* gp_enum = app.add_subcommand("gp-enum", "Enumerate normalized strong GP functions over TPhi_k");
  gp_enum->add_option("--n", n)->required();
  gp_enum->add_option("--r", r)->required();
  gp_enum->add_option("--k", k)->required();
  auto* trans = app.add_subcommand("transversal", "Greedy transposition transversal of distinct r-tuples");
  trans->add_option("--n", n)->required();
  trans->add_option("--r", r)->required();
  auto* poset_check = app.add_subcommand("poset-check", "Check order and mirror axioms of a poset file");
  poset_check->add_option("file", path)->required();
  auto* oc = app.add_subcommand("order-complex", "Order complex of a poset file");
  oc->add_option("file", path)->required();
  auto* hom = app.add_subcommand("homology", "Integer homology of a complex file");
  hom->add_option("file", path)->required();
  hom->add_flag("--reduced", reduced, "Reduced homology");
  hom->add_flag("--poset", poset_input, "Input is a poset file; use its order complex");
  auto* mc = app.add_subcommand("mccord-verify", "Certificates for preimages of basic opens");
  mc->add_option("file", path)->required();
  auto* cw = app.add_subcommand("cw-report", "CW homotopy type report by discrete type class");
  cw->add_option("file", path)->required();
  auto* mb = app.add_subcommand("model-build", "Build a model: power, perp or grassmannian");
  mb->add_option("family", family)->required();
  mb->add_option("vectors", items, "Vectors for perp models");
  mb->add_option("--n", n);
  mb->add_option("--r", r);
  mb->add_option("--k", k);
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> argv_store;
  argv_store.emplace_back("tphi");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << '\n';
    return kExitInput;
  }

  Emitter em(out, g.json());
  try {
    if (hfcalc->parsed()) return CmdHfcalc(em, items);
    if (perp->parsed()) return CmdPerp(em, g, items, k, member);
    if (gp_check->parsed()) return CmdGpCheck(em, g, path, all_tuples);
    if (gp_enum->parsed()) {
      EmitGrassmannian(em, enum_grassmannian(n, r, k, g.cap, g.exec()), n, r, k);
      return kExitOk;
    }
    if (trans->parsed()) return CmdTransversal(em, n, r);
    if (poset_check->parsed()) return CmdPosetCheck(em, path);
    if (oc->parsed()) return CmdOrderComplex(em, g, path);
    if (hom->parsed()) return CmdHomology(em, g, path, reduced, poset_input);
    if (mc->parsed()) return CmdMccord(em, g, path);
    if (cw->parsed()) return CmdCwReport(em, g, path);
    if (mb->parsed()) return CmdModelBuild(em, g, family, items, n, r, k);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  err << "error: usage: no subcommand\n";
  return kExitInput;
}

}  // namespace tphi
