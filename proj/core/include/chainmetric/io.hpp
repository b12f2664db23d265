#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "chainmetric/anticode.hpp"
#include "chainmetric/codes.hpp"
#include "chainmetric/field.hpp"
#include "chainmetric/poset.hpp"
#include "chainmetric/verify.hpp"
#include "chainmetric/weight.hpp"

// JSON serialization for the CLI and file formats. Field elements are always
// written as canonical indices (residues for prime fields, base-p packed
// polynomial coefficients for extensions).

namespace chainmetric::io {

using json = nlohmann::ordered_json;

json field_json(const Field& f);

// A weight table file is a bare array of q values indexed by element.
json weight_json(const WeightTable& w);
WeightTable weight_from_json(const Field& f, const json& j);

json weight_stats_json(const WeightTable& w);

// {"n": ..., "covers": [[a, b], ...]} with 1-based labels, a below b.
json poset_json(const Poset& p);
Poset poset_from_json(const json& j);

// {"q": ..., "n": ..., "words": [[...], ...]}; the same shape stores plain
// vector sets.
json code_json(const Code& c);
Code code_from_json(const json& j);
json vector_set_json(const Field& f, unsigned n, const std::vector<Vector>& vectors);
std::vector<Vector> vector_set_from_json(const Field& f, unsigned n, const json& j);

json radius_json(const RadiusDecomposition& r);
json ball_size_json(const BallSizeResult& b);
json anticode_size_json(const AnticodeSize& a);
json w_families_json(const Field& f, const WFamilies& fam);
json anticode_check_json(const Field& f, const AnticodeCheck& c);
json criterion_json(const ThresholdCriterion& c);
json code_report_json(const CodeReport& r);
json check_results_json(const std::vector<CheckResult>& results, std::uint64_t seed);
json equality_hunt_json(const EqualityHuntResult& r);

// Flat "key = value" rendering of a JSON object tree for terminal reading.
std::string render_table(const json& j);

json load_json_file(const std::string& path);

}  // namespace chainmetric::io
