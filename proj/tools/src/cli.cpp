#include "polyfree_cli/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "polyfree_cli/serialize.hpp"

namespace polyfree::cli {

namespace {

struct CommonOpts {
  std::string algebra;
  int n = 0;
  int r = 1;
  int labels = 1;
  int max_weight = 3;
  std::string format = "json";
  std::string out_path;
};

void add_algebra_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--algebra", o.algebra, "mccool|dk|monomial|surface|poison|free")
      ->required();
  cmd->add_option("--n", o.n, "strand / point count (rank for free)");
  cmd->add_option("--r", o.r, "root-of-unity order (monomial family)");
  cmd->add_option("--labels", o.labels, "label group order (surface family)");
}

void add_output_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--max-weight", o.max_weight, "weight bound (default 3)");
  cmd->add_option("--format", o.format, "json|csv (csv: dimension tables only)");
  cmd->add_option("--out", o.out_path, "output path (default: stdout)");
}

AlgebraSpec make_algebra(const CommonOpts& o) {
  if (o.algebra == "mccool") return AlgebraSpec::mccool_plus(o.n);
  if (o.algebra == "dk") return AlgebraSpec::drinfeld_kohno(o.n);
  if (o.algebra == "monomial") return AlgebraSpec::monomial_orbit(o.r, o.n);
  if (o.algebra == "surface") return AlgebraSpec::surface_orbit(o.labels, o.n);
  if (o.algebra == "poison") return AlgebraSpec::poison_model();
  if (o.algebra == "free") return AlgebraSpec::free_algebra(o.n);
  throw std::invalid_argument("unknown algebra '" + o.algebra + "'");
}

void emit(const CommonOpts& o, std::ostream& out, const std::string& text) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file '" + o.out_path + "'");
  f << text;
}

// --------------------------------------------------------------------------
// Small parsers
// --------------------------------------------------------------------------

std::vector<std::string> split_top_level(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (ch == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<std::string> split_generator_list(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& p : split_top_level(text, ',')) {
    std::string s = strip(p);
    if (!s.empty()) out.push_back(s);
  }
  return out;
}

LieElement parse_combination(const AlgebraSpec& a, const std::string& expr,
                             int truncation) {
  LieElement result(truncation);
  std::string term;
  int sign = 1;
  bool any = false;
  auto flush = [&]() {
    std::string t = strip(term);
    term.clear();
    if (t.empty()) return;
    any = true;
    Int coeff = sign;
    if (auto star = t.find('*'); star != std::string::npos) {
      coeff *= Int(strip(t.substr(0, star)));
      t = strip(t.substr(star + 1));
    }
    LieElement g = a.generator(t, truncation);
    g.scale(coeff);
    result += g;
  };
  int depth = 0;
  for (size_t i = 0; i < expr.size(); ++i) {
    char ch = expr[i];
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (depth == 0 && (ch == '+' || ch == '-')) {
      flush();
      sign = ch == '+' ? 1 : -1;
    } else {
      term.push_back(ch);
    }
  }
  flush();
  if (!any) throw std::invalid_argument("empty element expression '" + expr + "'");
  return result;
}

namespace {

AffineForm parse_affine(const std::string& expr, int nvars) {
  std::vector<Int> coef(nvars, Int(0));
  Int constant = 0;
  std::string term;
  int sign = 1;
  auto flush = [&]() {
    std::string t = strip(term);
    term.clear();
    if (t.empty()) return;
    Int c = sign;
    std::string var;
    if (auto star = t.find('*'); star != std::string::npos) {
      c *= Int(strip(t.substr(0, star)));
      var = strip(t.substr(star + 1));
    } else if (t[0] == 'x') {
      var = t;
    } else {
      constant += sign * Int(t);
      return;
    }
    if (var.empty() || var[0] != 'x')
      throw std::invalid_argument("bad affine term '" + t + "'");
    int idx = std::stoi(var.substr(1));
    if (idx < 1 || idx > nvars)
      throw std::invalid_argument("variable out of range in '" + t + "'");
    coef[idx - 1] += c;
  };
  for (char ch : expr) {
    if (ch == '+' || ch == '-') {
      flush();
      sign = ch == '+' ? 1 : -1;
    } else {
      term.push_back(ch);
    }
  }
  flush();
  return AffineForm::from_ints(coef, constant);
}

// --------------------------------------------------------------------------
// Subcommand bodies (return exit status)
// --------------------------------------------------------------------------

int run_dims(const CommonOpts& o, std::ostream& out) {
  AlgebraSpec a = make_algebra(o);
  if (o.format == "csv") {
    std::ostringstream os;
    os << "weight,dim\n";
    for (int w = 1; w <= o.max_weight; ++w)
      os << w << "," << weight_basis(a, w).size() << "\n";
    emit(o, out, os.str());
    return 0;
  }
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["algebra"] = a.family();
  Json dims = Json::array();
  for (int w = 1; w <= o.max_weight; ++w)
    dims.push_back(Json{{"w", w}, {"dim", weight_basis(a, w).size()}});
  j["dims"] = dims;
  emit(o, out, dump(j));
  return 0;
}

int run_basis(const CommonOpts& o, std::ostream& out) {
  AlgebraSpec a = make_algebra(o);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["algebra"] = a.family();
  Json weights = Json::array();
  for (int w = 1; w <= o.max_weight; ++w) {
    Json basis = Json::array();
    for (const auto& k : weight_basis(a, w))
      basis.push_back(basis_key_to_string(a, k));
    weights.push_back(Json{{"w", w}, {"basis", basis}});
  }
  j["weights"] = weights;
  emit(o, out, dump(j));
  return 0;
}

int run_bracket(const CommonOpts& o, const std::string& xs, const std::string& ys,
                std::ostream& out) {
  AlgebraSpec a = make_algebra(o);
  LieElement x = parse_combination(a, xs, o.max_weight);
  LieElement y = parse_combination(a, ys, o.max_weight);
  LieElement b = bracket(a, x, y, o.max_weight);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["algebra"] = a.family();
  j["x"] = xs;
  j["y"] = ys;
  j["truncation"] = o.max_weight;
  j["value"] = element_to_json(a, b);
  emit(o, out, dump(j));
  return 0;
}

int run_centralizer(const CommonOpts& o, const std::string& gens, bool center_mode,
                    std::ostream& out) {
  AlgebraSpec a = make_algebra(o);
  std::vector<std::string> s;
  if (center_mode) {
    s = a.generator_names();
  } else if (gens.empty()) {
    s = a.top_layer_generators();
  } else {
    s = split_generator_list(gens);
  }
  CentralizerProfile p = centralizer_profile(a, s, o.max_weight);
  emit(o, out, dump(profile_to_json(a, p)));
  return 0;
}

int run_adkernel(const CommonOpts& o, const std::string& gens, std::ostream& out) {
  AlgebraSpec a = make_algebra(o);
  std::vector<std::string> ideal =
      gens.empty() ? a.top_layer_generators() : split_generator_list(gens);
  bool equal = adkernel_compare(a, ideal, o.max_weight);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["algebra"] = a.family();
  j["ideal_generators"] = ideal;
  j["max_weight"] = o.max_weight;
  j["equal"] = equal;
  if (!equal) {
    // exhibit the first differing weight
    CentralizerProfile c = center_profile(a, o.max_weight);
    CentralizerProfile i = centralizer_profile(a, ideal, o.max_weight);
    for (size_t w = 0; w < c.weights.size(); ++w) {
      if (!lattice_equal(c.weights[w].lattice, i.weights[w].lattice)) {
        j["witness"] = Json{{"w", c.weights[w].weight},
                            {"center", lattice_to_json(c.weights[w].lattice)},
                            {"ideal_centralizer", lattice_to_json(i.weights[w].lattice)}};
        break;
      }
    }
  }
  emit(o, out, dump(j));
  return equal ? 0 : 1;
}

int run_jacobi(const CommonOpts& o, std::ostream& out) {
  AlgebraSpec a = make_algebra(o);
  ConsistencyReport r = validate_consistency(a, std::max(3, o.max_weight));
  Json j = consistency_to_json(a, r);
  j["schema_version"] = kSchemaVersion;
  emit(o, out, dump(j));
  return r.pass() ? 0 : 1;
}

LieMap make_named_map(const std::string& name, int r, int n) {
  if (name == "gn") return induced_generator_images(r, n);
  if (name == "poison-palpha") {
    AlgebraSpec h = AlgebraSpec::poison_model();
    AlgebraSpec target = AlgebraSpec::product(
        AlgebraSpec::free_algebra(std::vector<std::string>{"phi1", "phi2"}),
        AlgebraSpec::abelian(3));
    std::map<std::string, LieElement> images;
    LieElement p1 = target.generator("phi1", 1);
    p1 += target.generator("e1", 1);
    LieElement p2 = target.generator("phi2", 1);
    p2 += target.generator("e2", 1);
    images.emplace("phi1", p1);
    images.emplace("phi2", p2);
    images.emplace("a3", target.generator("e3", 1));
    return LieMap(h, target, std::move(images));
  }
  if (name == "poison-j") {
    AlgebraSpec f3 =
        AlgebraSpec::free_algebra(std::vector<std::string>{"a1", "a2", "a3"});
    AlgebraSpec h = AlgebraSpec::poison_model();
    std::map<std::string, LieElement> images;
    images.emplace("a1", LieElement(1));
    images.emplace("a2", LieElement(1));
    images.emplace("a3", h.generator("a3", 1));
    return LieMap(f3, h, std::move(images));
  }
  throw std::invalid_argument("unknown map '" + name +
                              "' (expected gn|poison-palpha|poison-j)");
}

int run_map_verify(const CommonOpts& o, const std::string& map_name,
                   std::ostream& out) {
  LieMap f = make_named_map(map_name, o.r, o.n);
  HomReport hom = verify_hom(f, o.max_weight + 1);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["map"] = map_name;
  j["domain"] = f.domain.family();
  j["codomain"] = f.codomain.family();
  j["hom"] = hom_report_to_json(f, hom);
  Json inj;
  for (int w = 1; w <= o.max_weight; ++w)
    inj[std::to_string(w)] = injectivity_rank_check(f, w);
  j["injective"] = inj;
  emit(o, out, dump(j));
  return hom.pass() ? 0 : 1;
}

int run_pullback_compare(const CommonOpts& o, int max_weight, std::ostream& out) {
  AlgebraSpec pull = pullback_algebra(o.r, o.n);
  AlgebraSpec direct = AlgebraSpec::monomial_orbit(o.r, o.n + 1);
  GeneratorDictionary dict;
  for (const auto& name : pull.generator_names()) dict.emplace(name, name);
  bool equal = algebras_equal(pull, direct, dict, max_weight);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["r"] = o.r;
  j["n"] = o.n;
  j["pullback"] = pull.family();
  j["direct"] = direct.family();
  j["max_weight"] = max_weight;
  j["equal"] = equal;
  emit(o, out, dump(j));
  return equal ? 0 : 1;
}

int run_arr_partition(const CommonOpts& o, std::ostream& out) {
  IncidenceReport r = incidence_sets(o.r, o.n);
  emit(o, out, dump(incidence_to_json(r)));
  return r.is_partition ? 0 : 1;
}

int run_arr_images(const CommonOpts& o, std::ostream& out) {
  LieMap f = induced_generator_images(o.r, o.n);
  emit(o, out, dump(map_to_json(f)));
  return 0;
}

int run_slf_check(const CommonOpts& o, bool monomial, int vars,
                  const std::string& base, const std::string& factors,
                  std::ostream& out) {
  RootMapInput input;
  Json desc;
  if (monomial) {
    input = monomial_root_map(o.r, o.n);
    desc = Json{{"monomial", Json{{"r", o.r}, {"n", o.n}}}};
  } else {
    for (const auto& part : split_top_level(base, ';'))
      if (!strip(part).empty()) input.base_forms.push_back(parse_affine(part, vars));
    for (const auto& part : split_top_level(factors, ';'))
      if (!strip(part).empty())
        input.fiber_factors.push_back(parse_affine(part, vars));
    desc = Json{{"base", base}, {"factors", factors}, {"vars", vars}};
  }
  bool accepted = slf_check(input);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["input"] = desc;
  j["accepted"] = accepted;
  emit(o, out, dump(j));
  return accepted ? 0 : 1;
}

int run_mccool_relations(const CommonOpts& o, std::ostream& out) {
  McCoolReport r = verify_mccool_relations(o.n);
  Json j = mccool_report_to_json(r);
  j["schema_version"] = kSchemaVersion;
  j["n"] = o.n;
  emit(o, out, dump(j));
  return r.pass() ? 0 : 1;
}

int run_poison_check(const CommonOpts& o, std::ostream& out) {
  const std::vector<std::string> a_names{"a1", "a2", "a3"};
  const std::vector<std::string> phi_names{"phi1", "phi2"};

  PoisonElement witness{FreeWord::generator(0), FreeWord()};
  auto [p, alpha] = poison_p_alpha(witness);

  AlgebraSpec h = AlgebraSpec::poison_model();
  CentralizerProfile center = center_profile(h, std::max(1, o.max_weight));

  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kernel_witness"] = format_word(witness.w, a_names);
  j["alpha"] = alpha;
  j["p"] = format_word(p, phi_names);
  j["is_identity"] = witness.is_identity();
  j["center_rank"] = center.rank_at(1);
  j["center_concentrated_in_weight1"] = center.concentrated_in_weight1_cyclic();
  emit(o, out, dump(j));

  bool pass = !witness.is_identity() && alpha == std::array<long long, 3>{0, 0, 0} &&
              p.is_identity() && center.rank_at(1) == 1 &&
              center.concentrated_in_weight1_cyclic();
  return pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact workbench for graded Lie algebras of poly-free groups"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string gens, xs, ys, map_name = "gn", base, factors;
  int vars = 1, pullback_weight = 4;
  bool monomial = false;

  auto* dims = app.add_subcommand("dims", "graded dimension table");
  add_algebra_flags(dims, o);
  add_output_flags(dims, o);

  auto* basis = app.add_subcommand("basis", "weight bases");
  add_algebra_flags(basis, o);
  add_output_flags(basis, o);

  auto* br = app.add_subcommand("bracket", "bracket of weight-1 combinations");
  add_algebra_flags(br, o);
  add_output_flags(br, o);
  br->add_option("--x", xs, "left element")->required();
  br->add_option("--y", ys, "right element")->required();

  auto* cent = app.add_subcommand("centralizer", "per-weight centralizer lattices");
  add_algebra_flags(cent, o);
  add_output_flags(cent, o);
  cent->add_option("--gens", gens, "generators to centralize (default: top layer)");

  auto* ctr = app.add_subcommand("center", "per-weight center lattices");
  add_algebra_flags(ctr, o);
  add_output_flags(ctr, o);

  auto* adk = app.add_subcommand("adkernel", "center vs ideal-centralizer comparison");
  add_algebra_flags(adk, o);
  add_output_flags(adk, o);
  adk->add_option("--gens", gens, "ideal generators (default: top layer)");

  auto* jac = app.add_subcommand("jacobi", "antisymmetry and Jacobi validation");
  add_algebra_flags(jac, o);
  add_output_flags(jac, o);

  auto* mv = app.add_subcommand("map-verify", "verify a shipped map");
  mv->add_option("--map", map_name, "gn|poison-palpha|poison-j")->required();
  mv->add_option("--r", o.r, "monomial r (gn)");
  mv->add_option("--n", o.n, "monomial n (gn)");
  add_output_flags(mv, o);

  auto* pc = app.add_subcommand("pullback-compare",
                                "pullback vs directly constructed algebra");
  pc->add_option("--r", o.r)->required();
  pc->add_option("--n", o.n)->required();
  pc->add_option("--max-weight", pullback_weight, "comparison weight (default 4)");
  pc->add_option("--format", o.format);
  pc->add_option("--out", o.out_path);

  auto* ap = app.add_subcommand("arr-partition", "incidence partition check");
  ap->add_option("--r", o.r)->required();
  ap->add_option("--n", o.n)->required();
  ap->add_option("--format", o.format);
  ap->add_option("--out", o.out_path);

  auto* ai = app.add_subcommand("arr-images", "induced generator images");
  ai->add_option("--r", o.r)->required();
  ai->add_option("--n", o.n)->required();
  ai->add_option("--format", o.format);
  ai->add_option("--out", o.out_path);

  auto* slf = app.add_subcommand("slf-check", "strictly-linearly-fibered root check");
  slf->add_flag("--monomial", monomial, "use the monomial family instance");
  slf->add_option("--r", o.r, "monomial r");
  slf->add_option("--n", o.n, "monomial n");
  slf->add_option("--vars", vars, "number of base variables");
  slf->add_option("--base", base, "semicolon-separated base forms");
  slf->add_option("--factors", factors, "semicolon-separated fiber roots");
  slf->add_option("--format", o.format);
  slf->add_option("--out", o.out_path);

  auto* mc = app.add_subcommand("mccool-relations", "presentation relations check");
  mc->add_option("--n", o.n)->required();
  mc->add_option("--format", o.format);
  mc->add_option("--out", o.out_path);

  auto* poison = app.add_subcommand("poison-check", "split extension sanity battery");
  poison->add_option("--max-weight", o.max_weight);
  poison->add_option("--format", o.format);
  poison->add_option("--out", o.out_path);

  std::vector<const char*> argv;
  argv.push_back("polyfree");
  for (const auto& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << app.help();
    return 2;
  }

  try {
    if (o.format != "json" && o.format != "csv")
      throw std::invalid_argument("unknown format '" + o.format + "'");
    if (o.format == "csv" && !dims->parsed())
      throw std::invalid_argument("csv output is limited to dimension tables");

    if (dims->parsed()) return run_dims(o, out);
    if (basis->parsed()) return run_basis(o, out);
    if (br->parsed()) return run_bracket(o, xs, ys, out);
    if (cent->parsed()) return run_centralizer(o, gens, false, out);
    if (ctr->parsed()) return run_centralizer(o, gens, true, out);
    if (adk->parsed()) return run_adkernel(o, gens, out);
    if (jac->parsed()) return run_jacobi(o, out);
    if (mv->parsed()) return run_map_verify(o, map_name, out);
    if (pc->parsed()) return run_pullback_compare(o, pullback_weight, out);
    if (ap->parsed()) return run_arr_partition(o, out);
    if (ai->parsed()) return run_arr_images(o, out);
    if (slf->parsed()) return run_slf_check(o, monomial, vars, base, factors, out);
    if (mc->parsed()) return run_mccool_relations(o, out);
    if (poison->parsed()) return run_poison_check(o, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace polyfree::cli
