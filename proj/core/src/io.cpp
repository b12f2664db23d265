#include "chainmetric/io.hpp"

#include <algorithm>
#include <fstream>

#include "chainmetric/errors.hpp"

namespace chainmetric::io {
namespace {

json vector_json(const Vector& v) {
  json out = json::array();
  for (FieldElement e : v) out.push_back(e.index);
  return out;
}

Vector vector_from_json(const Field& f, const json& j) {
  if (!j.is_array()) throw ValidationError("vector must be an array of element indices");
  Vector out;
  for (const json& e : j) {
    if (!e.is_number_unsigned() || e.get<std::uint64_t>() >= f.q())
      throw ValidationError("vector coordinate is not a valid element index");
    out.push_back(f.element(static_cast<unsigned>(e.get<std::uint64_t>())));
  }
  return out;
}

json elements_json(const std::vector<FieldElement>& elems) {
  json out = json::array();
  for (FieldElement e : elems) out.push_back(e.index);
  return out;
}

const char* form_name(AnticodeForm form) {
  switch (form) {
    case AnticodeForm::ball: return "ball";
    case AnticodeForm::translated_star: return "translated-star";
    default: return "none";
  }
}

void flatten(const json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      flatten(value, prefix.empty() ? key : prefix + "." + key, rows);
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

}  // namespace

json field_json(const Field& f) {
  json out;
  out["p"] = f.p();
  out["k"] = f.k();
  out["q"] = f.q();
  if (f.k() > 1) out["reduction"] = f.reduction_polynomial_text();
  return out;
}

json weight_json(const WeightTable& w) {
  json out = json::array();
  for (unsigned v : w.values()) out.push_back(v);
  return out;
}

WeightTable weight_from_json(const Field& f, const json& j) {
  if (!j.is_array() || j.size() != f.q())
    throw ValidationError("weight file must be an array with one value per element");
  std::vector<unsigned> values;
  for (const json& e : j) {
    if (!e.is_number_unsigned()) throw ValidationError("weight values must be non-negative integers");
    values.push_back(static_cast<unsigned>(e.get<std::uint64_t>()));
  }
  return WeightTable(f, std::move(values));
}

json weight_stats_json(const WeightTable& w) {
  WeightStats s = weight_stats(w);
  json out;
  out["field"] = field_json(w.field());
  out["values"] = weight_json(w);
  out["max_weight"] = s.max_weight;
  out["min_nonzero_weight"] = s.min_nonzero_weight;
  out["image"] = s.image;
  out["threshold"] = s.threshold;
  out["non_archimedean"] = s.non_archimedean;
  return out;
}

json poset_json(const Poset& p) {
  json covers = json::array();
  for (auto [a, b] : p.cover_relations()) covers.push_back(json::array({a, b}));
  json out;
  out["n"] = p.size();
  out["covers"] = covers;
  return out;
}

Poset poset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("covers"))
    throw ValidationError("poset file must be an object with n and covers");
  unsigned n = j.at("n").get<unsigned>();
  std::vector<std::pair<unsigned, unsigned>> covers;
  for (const json& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2) throw ValidationError("cover relations must be pairs");
    covers.emplace_back(c[0].get<unsigned>(), c[1].get<unsigned>());
  }
  return Poset::from_covers(n, covers);
}

json code_json(const Code& c) {
  json words = json::array();
  for (const Vector& v : c.words()) words.push_back(vector_json(v));
  json out;
  out["q"] = c.field().q();
  out["n"] = c.length();
  out["words"] = words;
  return out;
}

Code code_from_json(const json& j) {
  if (!j.is_object() || !j.contains("q") || !j.contains("n") || !j.contains("words"))
    throw ValidationError("code file must be an object with q, n, words");
  Field f = Field::of_order(j.at("q").get<unsigned>());
  unsigned n = j.at("n").get<unsigned>();
  std::vector<Vector> words;
  for (const json& wj : j.at("words")) words.push_back(vector_from_json(f, wj));
  return Code(f, n, std::move(words));
}

json vector_set_json(const Field& f, unsigned n, const std::vector<Vector>& vectors) {
  json words = json::array();
  for (const Vector& v : vectors) words.push_back(vector_json(v));
  json out;
  out["q"] = f.q();
  out["n"] = n;
  out["words"] = words;
  return out;
}

std::vector<Vector> vector_set_from_json(const Field& f, unsigned n, const json& j) {
  if (!j.is_object() || !j.contains("words"))
    throw ValidationError("vector set file must be an object with words");
  if (j.contains("q") && j.at("q").get<unsigned>() != f.q())
    throw ValidationError("vector set field does not match");
  if (j.contains("n") && j.at("n").get<unsigned>() != n)
    throw ValidationError("vector set length does not match");
  std::vector<Vector> out;
  for (const json& wj : j.at("words")) {
    Vector v = vector_from_json(f, wj);
    if (v.size() != n) throw ValidationError("vector length does not match n");
    out.push_back(std::move(v));
  }
  return out;
}

json radius_json(const RadiusDecomposition& r) {
  json out;
  out["requested"] = r.requested;
  out["normalized"] = r.normalized;
  out["S"] = r.S;
  out["R"] = r.R;
  return out;
}

json ball_size_json(const BallSizeResult& b) {
  json out;
  out["size"] = b.size;
  out["radius"] = radius_json(b.radius);
  out["whole_space"] = b.whole_space;
  out["clamped"] = b.clamped;
  return out;
}

json anticode_size_json(const AnticodeSize& a) {
  json out;
  out["size"] = a.a_star;
  out["branch"] =
      a.branch == AnticodeBranch::below_threshold ? "below-threshold" : "at-or-above-threshold";
  out["radius"] = radius_json(a.radius);
  out["threshold"] = a.threshold;
  out["whole_space"] = a.whole_space;
  return out;
}

json w_families_json(const Field& f, const WFamilies& fam) {
  (void)f;
  json out;
  out["S"] = fam.S;
  out["lower_defined"] = fam.lower_defined;
  out["upper_defined"] = fam.upper_defined;
  json lower = json::array();
  for (const auto& member : fam.lower) lower.push_back(elements_json(member));
  json upper = json::array();
  for (const auto& member : fam.upper) upper.push_back(elements_json(member));
  if (fam.lower_defined) out["lower"] = lower;
  if (fam.upper_defined) out["upper"] = upper;
  return out;
}

json anticode_check_json(const Field& f, const AnticodeCheck& c) {
  (void)f;
  json out;
  out["optimal"] = c.optimal;
  out["diameter"] = c.diameter;
  out["best_size"] = c.a_star;
  out["form"] = form_name(c.form);
  if (c.center.has_value()) out["center"] = vector_json(*c.center);
  if (c.K.has_value()) out["K"] = elements_json(*c.K);
  return out;
}

json criterion_json(const ThresholdCriterion& c) {
  json out;
  out["S"] = c.S;
  out["above_threshold"] = c.above_threshold;
  out["anticode_factor"] = c.anticode_factor;
  out["upper_family_size"] = c.upper_family_size;
  out["product"] = c.product;
  out["q"] = c.q;
  out["holds"] = c.holds;
  out["admits_perfect"] = c.admits_perfect;
  return out;
}

json code_report_json(const CodeReport& r) {
  json out;
  out["size"] = r.size;
  out["order_distance"] = r.distances.order_distance;
  out["pair_weight"] = r.distances.pair_weight;
  out["weighted_distance"] = r.distances.weighted_distance;
  json singleton;
  singleton["bound"] = r.singleton.bound;
  singleton["mds"] = r.singleton.mds;
  out["singleton"] = singleton;
  out["formula_packing_radius"] = r.formula_packing_radius;
  json diameter;
  diameter["floor_radius"] = r.diameter.floor_radius;
  diameter["anticode_size"] = r.diameter.anticode_size;
  diameter["product"] = r.diameter.product;
  diameter["space_size"] = r.diameter.space_size;
  diameter["diameter_perfect"] = r.diameter.diameter_perfect;
  out["diameter"] = diameter;
  if (r.packing.has_value()) {
    json packing;
    packing["enumerated_radius"] = r.packing->enumerated_radius;
    packing["disjoint_at_radius"] = r.packing->disjoint_at_radius;
    packing["collision_just_above"] = r.packing->collision_just_above;
    out["packing"] = packing;
  }
  if (r.perfection.has_value()) {
    json perfection;
    perfection["packing_radius"] = r.perfection->packing_radius;
    perfection["covering_radius"] = r.perfection->covering_radius;
    perfection["perfect"] = r.perfection->perfect;
    out["perfection"] = perfection;
  }
  return out;
}

json check_results_json(const std::vector<CheckResult>& results, std::uint64_t seed) {
  json checks = json::array();
  unsigned passed = 0, failed = 0, skipped = 0;
  for (const CheckResult& r : results) {
    json c;
    c["id"] = r.id;
    c["status"] = to_string(r.status);
    c["cases"] = r.cases;
    if (!r.detail.empty()) c["detail"] = r.detail;
    checks.push_back(c);
    if (r.status == CheckStatus::passed) ++passed;
    if (r.status == CheckStatus::failed) ++failed;
    if (r.status == CheckStatus::skipped) ++skipped;
  }
  json out;
  out["seed"] = seed;
  out["passed"] = passed;
  out["failed"] = failed;
  out["skipped"] = skipped;
  out["checks"] = checks;
  return out;
}

json equality_hunt_json(const EqualityHuntResult& r) {
  json instances = json::array();
  for (const EqualityInstance& inst : r.instances) {
    json i;
    i["q"] = inst.q;
    i["weight_values"] = inst.weight_values;
    i["S"] = inst.S;
    i["product"] = inst.product;
    i["code_diameter_perfect"] = inst.code_diameter_perfect;
    instances.push_back(i);
  }
  json out;
  out["tables_scanned"] = r.tables_scanned;
  out["valid_tables"] = r.valid_tables;
  out["levels_checked"] = r.levels_checked;
  out["equality_instances"] = instances;
  out["all_verified"] = r.all_verified;
  return out;
}

std::string render_table(const json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::size_t width = 0;
  for (const auto& [key, value] : rows) width = std::max(width, key.size());
  std::string out;
  for (const auto& [key, value] : rows) {
    out += key;
    out.append(width - key.size() + 2, ' ');
    out += value;
    out += '\n';
  }
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace chainmetric::io
