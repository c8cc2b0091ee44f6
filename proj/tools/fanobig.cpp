// fanobig — exact divisor-class engine for tangent-bundle bigness on
// Picard-rank-2 Fano threefolds.
//
// Subcommands:
//   table     render all verdicts (runs the threshold and discriminant checks)
//   check     verify one model's certificate
//   class     materialize one family class of a model's certificate as JSON
//   enum      classical space-curve counts for a (d, g) pair
//   validate  run every registry-data invariant
//
// Exit codes: 0 success, 1 verification or theorem-check failure, 2 usage
// error (unknown model, unknown family tag, malformed input).

#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "fanobig/json_io.hpp"

namespace {

using namespace fanobig;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<FanoModel> resolve_models(const std::string& models_path) {
    if (models_path.empty()) return registry();
    return load_models_file(models_path);
}

/// The named family classes of a model: every distinct non-pullback term of
/// its certificate recipe, tagged by term kind ("conic-fiber",
/// "quadric-lines", ...) with "-2", "-3", ... suffixes when one kind occurs
/// several times.
std::vector<std::pair<std::string, ClassTerm>> family_terms(const FanoModel& model) {
    std::vector<ClassTerm> terms;
    auto simple = [&](const SimpleRecipe& r) {
        std::visit(overloaded{
                       [&](const BigInteriorCone& c) {
                           for (const auto& [term, coeff] : c.terms) terms.push_back(term);
                       },
                       [&](const NotBigLemmaRepeat& l) {
                           for (const ClassTerm& term : l.dagger_terms) terms.push_back(term);
                       },
                       [](const auto&) {},
                   },
                   r);
    };
    std::visit(overloaded{
                   simple,
                   [&](const Disjunction& d) {
                       for (const SimpleRecipe& branch : d.branches) simple(branch);
                   },
               },
               model.recipe);

    std::vector<std::pair<std::string, ClassTerm>> out;
    std::map<std::string, int> kind_counts;
    std::set<std::string> seen;
    for (const ClassTerm& term : terms) {
        if (std::holds_alternative<TermPullback>(term)) continue;  // not a family
        if (!seen.insert(to_json(term).dump()).second) continue;
        std::string tag = class_term_name(term);
        int n = ++kind_counts[tag];
        if (n > 1) tag += "-" + std::to_string(n);
        out.emplace_back(std::move(tag), term);
    }
    return out;
}

int run_table(const std::string& models_path, const std::string& format_name) {
    std::vector<FanoModel> models = resolve_models(models_path);
    std::vector<TableRow> rows = build_table(models);
    ThresholdReport threshold = check_threshold(rows);
    CorollaryReport corollary = check_corollary(rows, models);

    TableFormat format = TableFormat::Pretty;
    if (format_name == "tsv") format = TableFormat::Tsv;
    if (format_name == "json") format = TableFormat::Json;
    std::cout << format_table(rows, format);

    if (format == TableFormat::Pretty) {
        std::cout << "\nthreshold: Big iff degree >= " << threshold.boundary_big_degree
                  << "  (largest NotBig: " << threshold.boundary_not_big_id << " at "
                  << threshold.boundary_not_big_degree
                  << ", smallest Big: " << threshold.boundary_big_id << " at "
                  << threshold.boundary_big_degree << ")\n";
        std::cout << "conic bundles: NotBig iff discriminant non-empty  ("
                  << corollary.not_big_ids.size() << " with, " << corollary.big_ids.size()
                  << " without)\n";
    }
    return 0;
}

int run_check(const std::string& models_path, const std::string& id,
              const std::string& subcase, bool as_json) {
    std::vector<FanoModel> models = resolve_models(models_path);
    FanoModel model = get_from(models, id, subcase);
    Verdict verdict = evaluate_model(model);

    if (as_json) {
        Json j = Json::object();
        j["id"] = model.id;
        j["subcase"] = model.subcase;
        j["degree"] = model.anticanonical_degree;
        j["result"] = to_json(verdict);
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << model.key() << " (degree " << model.anticanonical_degree
              << "): " << bigness_name(verdict.value) << " via "
              << recipe_kind_name(verdict.certificate) << " [" << verdict.anchor << "]\n";
    for (const DivisorClass& total : verdict.totals)
        std::cout << "  certified sum: " << total.str() << '\n';
    return 0;
}

int run_class(const std::string& models_path, const std::string& id,
              const std::string& subcase, const std::string& family) {
    std::vector<FanoModel> models = resolve_models(models_path);
    FanoModel model = get_from(models, id, subcase);

    std::vector<std::pair<std::string, ClassTerm>> families = family_terms(model);
    for (const auto& [tag, term] : families) {
        if (tag != family) continue;
        DivisorClass cls = materialize(model, term);
        Json j = Json::object();
        j["model"] = model.key();
        j["family"] = tag;
        j["term"] = to_json(term);
        j["class"] = to_json(cls);
        j["display"] = cls.str();
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::string tags;
    for (const auto& [tag, term] : families) tags += (tags.empty() ? "" : ", ") + tag;
    throw UnknownFamily("\"" + family + "\" on model " + model.key() +
                        (tags.empty() ? " (model has no family classes)"
                                      : " (available: " + tags + ")"));
}

int run_enum(long d, long g) {
    CurveDG c{d, g};
    Json j = Json::object();
    j["d"] = d;
    j["g"] = g;
    j["nodes_general_projection"] = nodes_general_projection(c);
    j["nodes_projection_from_point_on_curve"] = nodes_projection_from_point_on_curve(c);
    j["secant_pairs_in_hyperplane"] = secant_pairs_in_hyperplane(d);
    j["dual_plane_curve_degree"] = dual_plane_curve_degree(c);
    j["tangential_surface_degree"] = tangential_surface_degree(c);
    j["edge_surface_degree"] = edge_surface_degree(c);
    j["edges_through_point"] = edges_through_point(c);
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_validate(const std::string& models_path) {
    std::vector<FanoModel> models = resolve_models(models_path);
    long issue_count = 0;
    for (const FanoModel& model : models) {
        for (const std::string& issue : validate(model)) {
            std::cerr << model.key() << ": " << issue << '\n';
            ++issue_count;
        }
    }
    if (issue_count > 0) {
        std::cerr << issue_count << " issue(s) across " << models.size() << " rows\n";
        return 1;
    }
    std::cout << models.size() << " rows valid\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact divisor-class verdicts for tangent-bundle bigness on "
                 "Picard-rank-2 Fano threefolds"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "1.0.0");

    std::string models_path;
    std::string format_name = "pretty";
    std::string id;
    std::string subcase;
    std::string family;
    bool as_json = false;
    long d = 0;
    long g = 0;

    CLI::App* table = app.add_subcommand("table", "Render all model verdicts");
    table->add_option("--models", models_path, "Override registry file (JSON array)");
    table->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"pretty", "tsv", "json"}))
        ->capture_default_str();

    CLI::App* check = app.add_subcommand("check", "Verify one model's certificate");
    check->add_option("id", id, "Model id, e.g. 2-13")->required();
    check->add_option("--subcase", subcase, "Subcase row (a or b)")
        ->check(CLI::IsMember({"a", "b"}));
    check->add_flag("--json", as_json, "Emit the verdict as JSON");
    check->add_option("--models", models_path, "Override registry file (JSON array)");

    CLI::App* cls = app.add_subcommand("class", "Materialize one family class as JSON");
    cls->add_option("--model", id, "Model id, e.g. 2-13")->required();
    cls->add_option("--subcase", subcase, "Subcase row (a or b)")
        ->check(CLI::IsMember({"a", "b"}));
    cls->add_option("--family", family, "Family tag, e.g. conic-fiber, secant-lines")
        ->required();
    cls->add_option("--models", models_path, "Override registry file (JSON array)");

    CLI::App* counts = app.add_subcommand("enum", "Classical space-curve counts");
    counts->add_option("--d", d, "Curve degree")->required();
    counts->add_option("--g", g, "Curve genus")->required();

    CLI::App* validate_cmd = app.add_subcommand("validate", "Check registry-data invariants");
    validate_cmd->add_option("--models", models_path, "Override registry file (JSON array)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // 0 covers --help/--version
    }

    try {
        if (table->parsed()) return run_table(models_path, format_name);
        if (check->parsed()) return run_check(models_path, id, subcase, as_json);
        if (cls->parsed()) return run_class(models_path, id, subcase, family);
        if (counts->parsed()) return run_enum(d, g);
        if (validate_cmd->parsed()) return run_validate(models_path);
    } catch (const UnknownModel& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const UnknownFamily& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
