#include "polyfree_cli/serialize.hpp"

namespace polyfree::cli {

Json json_int(const Int& v) {
  if (fits_int64(v)) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(int_to_string(v));
}

Json to_json(const AlgebraSpec& a) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["family"] = a.family();
  Json layers = Json::array();
  for (const auto& l : a.layers())
    layers.push_back(Json{{"id", l.id}, {"generators", l.generators}});
  j["layers"] = layers;
  Json action = Json::array();
  for (const auto& e : a.action_entries()) {
    Json value = Json::array();
    for (const auto& [k, c] : e.value.terms())
      value.push_back(Json::array({json_int(c), Json::array({k.layer, k.word.letters()})}));
    action.push_back(Json{{"actor", a.generator_name(e.actor)},
                          {"target", a.generator_name(e.target)},
                          {"value", value}});
  }
  j["action"] = action;
  return j;
}

Json element_to_json(const AlgebraSpec& a, const LieElement& x) {
  Json terms = Json::array();
  for (const auto& [k, c] : x.terms())
    terms.push_back(Json::array({json_int(c), basis_key_to_string(a, k)}));
  return terms;
}

Json lattice_to_json(const Lattice& l) {
  Json rows = Json::array();
  for (int i = 0; i < l.basis().rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < l.basis().cols(); ++j) row.push_back(json_int(l.basis().at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json profile_to_json(const AlgebraSpec& a, const CentralizerProfile& p) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["algebra"] = p.algebra;
  j["generators"] = p.generators;
  Json weights = Json::array();
  for (const auto& c : p.weights) {
    Json basis = Json::array();
    for (const auto& k : c.basis) basis.push_back(basis_key_to_string(a, k));
    weights.push_back(Json{{"w", c.weight},
                           {"basis", basis},
                           {"rank", c.lattice.rank()},
                           {"lattice", lattice_to_json(c.lattice)}});
  }
  j["weights"] = weights;
  return j;
}

Json incidence_to_json(const IncidenceReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["r"] = r.r;
  j["n"] = r.n;
  j["ell"] = r.ell;
  j["total"] = r.total;
  j["is_partition"] = r.is_partition;
  Json sizes;
  Json sets;
  for (const auto& [h, pairs] : r.sets) {
    sizes[h.label()] = pairs.size();
    Json list = Json::array();
    for (const auto& [a, b] : pairs) list.push_back(Json::array({a, b}));
    sets[h.label()] = list;
  }
  j["sizes"] = sizes;
  j["sets"] = sets;
  return j;
}

Json map_to_json(const LieMap& f) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["domain"] = to_json(f.domain);
  j["codomain"] = to_json(f.codomain);
  Json images;
  for (const auto& name : f.domain.generator_names()) {
    Json terms = Json::array();
    for (const auto& [k, c] : f.images.at(name).terms())
      terms.push_back(Json::array({json_int(c), basis_key_to_string(f.codomain, k)}));
    images[name] = terms;
  }
  j["images"] = images;
  return j;
}

Json hom_report_to_json(const LieMap& f, const HomReport& r) {
  Json j;
  j["pass"] = r.pass();
  j["checked"] = r.checked;
  Json v = Json::array();
  for (const auto& viol : r.violations) {
    v.push_back(Json{{"x", basis_key_to_string(f.domain, viol.x)},
                     {"y", basis_key_to_string(f.domain, viol.y)},
                     {"f_of_bracket", element_to_json(f.codomain, viol.expected)},
                     {"bracket_of_images", element_to_json(f.codomain, viol.actual)}});
    if (v.size() >= 10) break;  // witnesses, not a dump
  }
  j["violations"] = v;
  return j;
}

Json consistency_to_json(const AlgebraSpec& a, const ConsistencyReport& r) {
  Json j;
  j["algebra"] = a.family();
  j["pass"] = r.pass();
  j["checked"] = r.checked;
  Json v = Json::array();
  for (const auto& viol : r.violations) {
    v.push_back(Json{{"x", basis_key_to_string(a, viol.x)},
                     {"y", basis_key_to_string(a, viol.y)},
                     {"z", basis_key_to_string(a, viol.z)},
                     {"defect", element_to_json(a, viol.defect)}});
    if (v.size() >= 10) break;
  }
  j["violations"] = v;
  return j;
}

Json mccool_report_to_json(const McCoolReport& r) {
  static const std::vector<std::string> names{"x1", "x2", "x3", "x4", "x5",
                                              "x6", "x7", "x8", "x9", "x10"};
  Json j;
  j["pass"] = r.pass();
  j["relations_checked"] = r.relations_checked;
  Json fails = Json::array();
  for (const auto& f : r.failures) {
    fails.push_back(Json{{"family", f.family}, {"indices", f.indices}});
    if (fails.size() >= 10) break;
  }
  j["failures"] = fails;
  j["witness_is_identity"] = r.witness_is_identity;
  j["witness_x3"] = format_word(r.witness_image_of_x3, names);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace polyfree::cli
