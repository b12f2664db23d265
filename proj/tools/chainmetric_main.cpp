#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chainmetric/anticode.hpp"
#include "chainmetric/codes.hpp"
#include "chainmetric/errors.hpp"
#include "chainmetric/io.hpp"
#include "chainmetric/metric.hpp"
#include "chainmetric/oracle.hpp"
#include "chainmetric/poset.hpp"
#include "chainmetric/verify.hpp"
#include "chainmetric/weight.hpp"

namespace {

using chainmetric::io::json;

// Exit codes: 0 success, 1 a check reported a negative verdict, 2 usage or
// validation error, 3 budget exceeded.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct Common {
  std::string format = "json";
  std::uint64_t budget = chainmetric::kDefaultEnumerationBudget;
};

void add_format(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
}

void add_budget(CLI::App* cmd, Common& common) {
  cmd->add_option("--budget", common.budget, "Enumeration budget")->capture_default_str();
}

void emit(const json& out, const Common& common) {
  if (common.format == "table")
    std::cout << chainmetric::io::render_table(out);
  else
    std::cout << out.dump(2) << "\n";
}

chainmetric::WeightTable load_weight(const chainmetric::Field& f, const std::string& spec) {
  if (spec == "hamming")
    return chainmetric::make_standard_weight(f, chainmetric::WeightKind::hamming);
  if (spec == "lee") return chainmetric::make_standard_weight(f, chainmetric::WeightKind::lee);
  return chainmetric::io::weight_from_json(f, chainmetric::io::load_json_file(spec));
}

chainmetric::Poset load_poset(unsigned n, const std::string& spec) {
  if (spec == "chain") return chainmetric::Poset::chain(n);
  if (spec == "antichain") return chainmetric::Poset::antichain(n);
  chainmetric::Poset p =
      chainmetric::io::poset_from_json(chainmetric::io::load_json_file(spec));
  if (p.size() != n)
    throw chainmetric::ValidationError("poset size does not match --n");
  return p;
}

const char* axiom_name(chainmetric::WeightAxiom axiom) {
  switch (axiom) {
    case chainmetric::WeightAxiom::zero_iff_zero: return "zero-iff-zero";
    case chainmetric::WeightAxiom::symmetry: return "symmetry";
    default: return "triangle";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chain order metrics over finite fields: closed forms, extremal "
               "constructions, and theorem verification"};
  app.require_subcommand(1);

  int rc = kOk;

  // ---- weight ----
  CLI::App* weight = app.add_subcommand("weight", "Weight table queries");
  weight->require_subcommand(1);
  {
    static Common common;
    static std::string qstr, wspec;
    CLI::App* stats = weight->add_subcommand("stats", "Derived weight quantities");
    stats->add_option("--q", qstr, "Field order, e.g. 5 or 2^3")->required();
    stats->add_option("--weight", wspec, "hamming, lee, or a file path")->required();
    add_format(stats, common);
    stats->callback([&] {
      chainmetric::Field f = chainmetric::Field::parse(qstr);
      chainmetric::WeightTable w = load_weight(f, wspec);
      chainmetric::require_valid_weight(w);
      emit(chainmetric::io::weight_stats_json(w), common);
    });
  }
  {
    static Common common;
    static std::string qstr, wspec;
    CLI::App* validate = weight->add_subcommand("validate", "Check the weight axioms");
    validate->add_option("--q", qstr, "Field order")->required();
    validate->add_option("--weight", wspec, "hamming, lee, or a file path")->required();
    add_format(validate, common);
    validate->callback([&] {
      chainmetric::Field f = chainmetric::Field::parse(qstr);
      chainmetric::WeightTable w = load_weight(f, wspec);
      auto violations = chainmetric::validate_weight(w);
      json out;
      out["field"] = chainmetric::io::field_json(f);
      out["values"] = chainmetric::io::weight_json(w);
      out["valid"] = violations.empty();
      json list = json::array();
      for (const auto& v : violations) {
        json item;
        item["axiom"] = axiom_name(v.axiom);
        item["a"] = v.a.index;
        item["b"] = v.b.index;
        item["detail"] = v.detail;
        list.push_back(item);
      }
      out["violations"] = list;
      emit(out, common);
      if (!violations.empty()) rc = kCheckFailed;
    });
  }

  // ---- ball ----
  CLI::App* ball_cmd = app.add_subcommand("ball", "Metric balls in chain spaces");
  ball_cmd->require_subcommand(1);
  {
    static Common common;
    static std::string qstr, wspec;
    static unsigned n = 1;
    static std::uint64_t D = 0;
    CLI::App* size = ball_cmd->add_subcommand("size", "Closed-form ball size");
    size->add_option("--q", qstr, "Field order")->required();
    size->add_option("--n", n, "Dimension")->required();
    size->add_option("--weight", wspec, "hamming, lee, or a file path")->required();
    size->add_option("--D", D, "Radius")->required();
    add_format(size, common);
    size->callback([&] {
      chainmetric::Field f = chainmetric::Field::parse(qstr);
      chainmetric::WeightTable w = load_weight(f, wspec);
      chainmetric::require_valid_weight(w);
      emit(chainmetric::io::ball_size_json(chainmetric::ball_size(w, n, D)), common);
    });
  }
  {
    static Common common;
    static std::string qstr, wspec, pspec = "chain";
    static unsigned n = 1;
    static std::uint64_t D = 0, center = 0;
    CLI::App* enumerate = ball_cmd->add_subcommand("enumerate", "List the ball members");
    enumerate->add_option("--q", qstr, "Field order")->required();
    enumerate->add_option("--n", n, "Dimension")->required();
    enumerate->add_option("--weight", wspec, "hamming, lee, or a file path")->required();
    enumerate->add_option("--poset", pspec, "chain, antichain, or a file path")
        ->capture_default_str();
    enumerate->add_option("--D", D, "Radius")->required();
    enumerate->add_option("--center", center, "Center as a vector rank")->capture_default_str();
    add_format(enumerate, common);
    add_budget(enumerate, common);
    enumerate->callback([&] {
      chainmetric::Field f = chainmetric::Field::parse(qstr);
      chainmetric::MetricSpace space(f, n, load_poset(n, pspec), load_weight(f, wspec));
      std::vector<chainmetric::Vector> members = chainmetric::ball(
          space, chainmetric::vector_from_rank(f, n, center), D, common.budget);
      json out = chainmetric::io::vector_set_json(f, n, members);
      out["size"] = members.size();
      out["D"] = D;
      emit(out, common);
    });
  }

  // ---- anticode ----
  CLI::App* anticode = app.add_subcommand("anticode", "Maximum sets of bounded diameter");
  anticode->require_subcommand(1);
  {
    static Common common;
    static std::string qstr, wspec;
    static unsigned n = 1;
    static std::uint64_t D = 0;
    CLI::App* size = anticode->add_subcommand("size", "Closed-form best anticode size");
    size->add_option("--q", qstr, "Field order")->required();
    size->add_option("--n", n, "Dimension")->required();
    size->add_option("--weight", wspec, "hamming, lee, or a file path")->required();
    size->add_option("--D", D, "Diameter")->required();
    add_format(size, common);
    size->callback([&] {
      chainmetric::Field f = chainmetric::Field::parse(qstr);
      chainmetric::WeightTable w = load_weight(f, wspec);
      chainmetric::require_valid_weight(w);
      emit(chainmetric::io::anticode_size_json(chainmetric::optimal_anticode_size(w, n, D)),
           common);
    });
  }
  {
    static Common common;
    static std::string qstr, wspec;
    static unsigned n = 1;
    static std::uint64_t D = 0, center = 0;
    static std::vector<unsigned> kspec;
    CLI::App* build = anticode->add_subcommand("build", "Construct a best anticode");
    build->add_option("--q", qstr, "Field order")->required();
    build->add_option("--n", n, "Dimension")->required();
    build->add_option("--weight", wspec, "hamming, lee, or a file path")->required();
    build->add_option("--D", D, "Diameter")->required();
    build->add_option("--center", center, "Center as a vector rank")->capture_default_str();
    build->add_option("--K", kspec, "Element indices of the lower-family member to use");
    add_format(build, common);
    build->callback([&] {
      chainmetric::Field f = chainmetric::Field::parse(qstr);
      chainmetric::WeightTable w = load_weight(f, wspec);
      std::optional<std::vector<chainmetric::FieldElement>> K;
      if (!kspec.empty()) {
        K.emplace();
        for (unsigned idx : kspec) K->push_back(f.element(idx));
      }
      std::vector<chainmetric::Vector> A = chainmetric::build_optimal_anticode(
          w, n, chainmetric::vector_from_rank(f, n, center), D, K);
      json out = chainmetric::io::vector_set_json(f, n, A);
      out["size"] = A.size();
      out["D"] = D;
      emit(out, common);
    });
  }
  {
    static Common common;
    static std::string qstr, wspec, set_path;
    static unsigned n = 1;
    static std::uint64_t D = 0;
    CLI::App* check = anticode->add_subcommand("check", "Test a vector set for optimality");
    check->add_option("--q", qstr, "Field order")->required();
    check->add_option("--n", n, "Dimension")->required();
    check->add_option("--weight", wspec, "hamming, lee, or a file path")->required();
    check->add_option("--D", D, "Diameter")->required();
    check->add_option("--set", set_path, "Vector set file ({q, n, words})")->required();
    add_format(check, common);
    check->callback([&] {
      chainmetric::Field f = chainmetric::Field::parse(qstr);
      chainmetric::WeightTable w = load_weight(f, wspec);
      std::vector<chainmetric::Vector> A = chainmetric::io::vector_set_from_json(
          f, n, chainmetric::io::load_json_file(set_path));
      chainmetric::AnticodeCheck res = chainmetric::is_optimal_anticode(A, w, n, D);
      emit(chainmetric::io::anticode_check_json(f, res), common);
      if (!res.optimal) rc = kCheckFailed;
    });
  }

  // ---- code ----
  CLI::App* code = app.add_subcommand("code", "Block codes in chain spaces");
  code->require_subcommand(1);
  {
    static Common common;
    static std::string qstr, wspec, code_path;
    CLI::App* report = code->add_subcommand("report", "Distances, bounds, and perfection");
    report->add_option("--q", qstr, "Field order")->required();
    report->add_option("--weight", wspec, "hamming, lee, or a file path")->required();
    report->add_option("--code", code_path, "Code file ({q, n, words})")->required();
    add_format(report, common);
    add_budget(report, common);
    report->callback([&] {
      chainmetric::Field f = chainmetric::Field::parse(qstr);
      chainmetric::Code C = chainmetric::io::code_from_json(
          chainmetric::io::load_json_file(code_path));
      if (!(C.field() == f))
        throw chainmetric::ValidationError("code file field does not match --q");
      chainmetric::WeightTable w = load_weight(f, wspec);
      json out = chainmetric::io::code_report_json(chainmetric::analyze_code(w, C, common.budget));
      out["field"] = chainmetric::io::field_json(f);
      emit(out, common);
    });
  }
  {
    static Common common;
    static std::string qstr;
    static unsigned n = 1, d = 1;
    CLI::App* build = code->add_subcommand("build-mds", "Zero-prefix code meeting the bound");
    build->add_option("--q", qstr, "Field order")->required();
    build->add_option("--n", n, "Length")->required();
    build->add_option("--d", d, "Order distance")->required();
    add_format(build, common);
    build->callback([&] {
      chainmetric::Field f = chainmetric::Field::parse(qstr);
      emit(chainmetric::io::code_json(chainmetric::construct_mds(f, n, d)), common);
    });
  }
  {
    static Common common;
    static std::string qstr, wspec;
    static unsigned n = 1, R = 1;
    static std::uint64_t S = 0;
    CLI::App* build = code->add_subcommand("build-threshold",
                                           "Upper-family code anchored at level S");
    build->add_option("--q", qstr, "Field order")->required();
    build->add_option("--n", n, "Length")->required();
    build->add_option("--weight", wspec, "hamming, lee, or a file path")->required();
    build->add_option("--S", S, "Anchor weight value")->required();
    build->add_option("--R", R, "Anchor coordinate")->capture_default_str();
    add_format(build, common);
    build->callback([&] {
      chainmetric::Field f = chainmetric::Field::parse(qstr);
      chainmetric::WeightTable w = load_weight(f, wspec);
      emit(chainmetric::io::code_json(chainmetric::construct_threshold_code(w, n, S, R)), common);
    });
  }
  {
    static Common common;
    static std::string qstr, wspec, code_path;
    CLI::App* check = code->add_subcommand(
        "check", "Verify the formula-backed quantities of a code by enumeration");
    check->add_option("--q", qstr, "Field order")->required();
    check->add_option("--weight", wspec, "hamming, lee, or a file path")->required();
    check->add_option("--code", code_path, "Code file ({q, n, words})")->required();
    add_format(check, common);
    add_budget(check, common);
    check->callback([&] {
      chainmetric::Field f = chainmetric::Field::parse(qstr);
      chainmetric::Code C = chainmetric::io::code_from_json(
          chainmetric::io::load_json_file(code_path));
      if (!(C.field() == f))
        throw chainmetric::ValidationError("code file field does not match --q");
      chainmetric::WeightTable w = load_weight(f, wspec);
      chainmetric::CodeReport report = chainmetric::analyze_code(w, C, common.budget);
      json out = chainmetric::io::code_report_json(report);
      out["field"] = chainmetric::io::field_json(f);
      bool ok = report.diameter.bound_holds && report.singleton.bound >= report.size;
      if (report.packing.has_value()) ok = ok && report.packing->disjoint_at_radius;
      out["consistent"] = ok;
      emit(out, common);
      if (!ok) rc = kCheckFailed;
    });
  }

  // ---- verify ----
  {
    static Common common;
    static chainmetric::SweepConfig config;
    static std::vector<std::string> only;
    static unsigned criterion = 0;
    static bool list_only = false;
    CLI::App* verify = app.add_subcommand("verify", "Run the theorem-verification sweeps");
    verify->add_option("--seed", config.seed, "Sweep seed")->capture_default_str();
    verify->add_option("--random-weights", config.random_weights,
                       "Random tables per field in formula sweeps")
        ->capture_default_str();
    verify->add_option("--heavy-random-weights", config.heavy_random_weights,
                       "Random tables per field in search-backed sweeps")
        ->capture_default_str();
    verify->add_option("--random-codes", config.random_codes, "Random codes per (q, n)")
        ->capture_default_str();
    verify->add_option("--check", only, "Run only these check ids");
    verify->add_option("--criterion", criterion, "Run only the checks behind one criterion");
    verify->add_flag("--list", list_only, "List check ids and exit");
    add_format(verify, common);
    verify->add_option("--budget", config.budget, "Enumeration budget")->capture_default_str();
    verify->callback([&] {
      if (list_only) {
        json out;
        out["checks"] = chainmetric::check_ids();
        emit(out, common);
        return;
      }
      std::vector<std::string> ids = only;
      if (criterion != 0) {
        auto extra = chainmetric::criterion_checks(criterion);
        if (extra.empty()) throw chainmetric::DomainError("no checks behind that criterion");
        ids.insert(ids.end(), extra.begin(), extra.end());
      }
      std::vector<chainmetric::CheckResult> results;
      if (ids.empty()) {
        results = chainmetric::run_verification_suite(config);
      } else {
        for (const std::string& id : ids) results.push_back(chainmetric::run_check(id, config));
      }
      emit(chainmetric::io::check_results_json(results, config.seed), common);
      for (const chainmetric::CheckResult& r : results)
        if (r.status == chainmetric::CheckStatus::failed) rc = kCheckFailed;
    });
  }

  // ---- search-equality ----
  {
    static Common common;
    static std::vector<unsigned> orders = {4, 8, 9};
    static unsigned max_value = 4;
    CLI::App* hunt = app.add_subcommand(
        "search-equality", "Scan weight tables for criterion equality and verify each hit");
    hunt->add_option("--orders", orders, "Field orders to scan")->capture_default_str();
    hunt->add_option("--max-value", max_value, "Largest weight value in the scan")
        ->capture_default_str();
    add_format(hunt, common);
    hunt->callback([&] {
      chainmetric::EqualityHuntResult res = chainmetric::equality_hunt(orders, max_value);
      emit(chainmetric::io::equality_hunt_json(res), common);
      if (!res.all_verified) rc = kCheckFailed;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const chainmetric::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const chainmetric::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return rc;
}
