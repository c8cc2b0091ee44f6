#include "fanobig/json_io.hpp"

#include <array>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>
#include <variant>

#include "fanobig/errors.hpp"

namespace fanobig {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const Json& require(const Json& j, const char* field) {
    if (!j.is_object() || !j.contains(field))
        throw ParseError(std::string("missing field \"") + field + "\"");
    return j.at(field);
}

std::string require_string(const Json& j, const char* field) {
    const Json& v = require(j, field);
    if (!v.is_string()) throw ParseError(std::string("field \"") + field + "\" must be a string");
    return v.get<std::string>();
}

long require_long(const Json& j, const char* field) {
    const Json& v = require(j, field);
    if (!v.is_number_integer())
        throw ParseError(std::string("field \"") + field + "\" must be an integer");
    return v.get<long>();
}

bool optional_bool(const Json& j, const char* field, bool fallback) {
    if (!j.is_object() || !j.contains(field)) return fallback;
    const Json& v = j.at(field);
    if (!v.is_boolean()) throw ParseError(std::string("field \"") + field + "\" must be a boolean");
    return v.get<bool>();
}

std::size_t require_index(const Json& j, const char* field) {
    long v = require_long(j, field);
    if (v < 0) throw ParseError(std::string("field \"") + field + "\" must be nonnegative");
    return static_cast<std::size_t>(v);
}

}  // namespace

// ---- serialization ---------------------------------------------------------------

Json to_json(const Rational& r) { return Json(r.str()); }

Json to_json(const ParamLin& c) {
    if (c.is_constant()) return to_json(c.constant());
    Json terms = Json::object();
    for (const auto& [name, term] : c.terms()) terms[name] = to_json(term.coeff);
    Json j = Json::object();
    j["constant"] = to_json(c.constant());
    j["terms"] = std::move(terms);
    return j;
}

Json to_json(const DivisorClass& cls) {
    Json j = Json::object();
    j["basis"] = cls.basis().symbols();
    Json coeffs = Json::array();
    for (const ParamLin& coeff : cls.coeffs()) coeffs.push_back(to_json(coeff));
    j["coeffs"] = std::move(coeffs);
    return j;
}

Json to_json(const FamilyData& fd) {
    Json j = Json::object();
    j["k"] = fd.k;
    j["r"] = fd.r;
    j["polarization"] = fd.polarization;
    Json s = Json::object();
    for (const auto& [symbol, value] : fd.s) s[symbol] = value;
    j["s"] = std::move(s);
    Json m = Json::object();
    for (const auto& [symbol, value] : fd.m) m[symbol] = value;
    j["m"] = std::move(m);
    return j;
}

Json to_json(const ClassTerm& term) {
    Json j = Json::object();
    j["kind"] = class_term_name(term);
    std::visit(overloaded{
                   [&](const TermConicFiber& t) { j["contraction"] = t.contraction; },
                   [&](const TermPushforwardDagger& t) {
                       j["family"] = to_json(t.fd);
                       j["anchor"] = t.anchor;
                       j["source"] = dagger_source_name(t.source);
                   },
                   [&](const TermSecant& t) { j["contraction"] = t.contraction; },
                   [&](const TermIncidentP3& t) {
                       j["contraction"] = t.contraction;
                       j["slack"] = t.slack_name;
                   },
                   [&](const TermQuadricLines& t) { j["contraction"] = t.contraction; },
                   [&](const TermQuadricIncident& t) {
                       j["contraction"] = t.contraction;
                       j["m"] = t.m;
                   },
                   [&](const TermV5Lines& t) { j["contraction"] = t.contraction; },
                   [&](const TermBlowupTransform& t) {
                       j["contraction"] = t.contraction;
                       j["class"] = to_json(t.z_class);
                       j["order"] = to_json(t.vanishing_order);
                       j["anchor"] = t.anchor;
                   },
                   [&](const TermAssumedDagger& t) {
                       j["class"] = to_json(t.cls);
                       j["anchor"] = t.anchor;
                   },
                   [&](const TermPullback& t) { j["class"] = to_json(t.cls); },
               },
               term);
    return j;
}

Json to_json(const SimpleRecipe& recipe) {
    Json j = Json::object();
    j["kind"] = recipe_kind_name(recipe);
    std::visit(
        overloaded{
            [&](const BigInteriorCone& c) {
                Json terms = Json::array();
                for (const auto& [term, coeff] : c.terms) {
                    Json entry = Json::object();
                    entry["term"] = to_json(term);
                    entry["coefficient"] = to_json(coeff);
                    terms.push_back(std::move(entry));
                }
                j["terms"] = std::move(terms);
            },
            [&](const NotBigLemmaRepeat& l) {
                Json terms = Json::array();
                for (const ClassTerm& term : l.dagger_terms) terms.push_back(to_json(term));
                j["terms"] = std::move(terms);
                Json residual = Json::array();
                for (const auto& [name, coeff] : l.residual) {
                    Json entry = Json::object();
                    entry["generator"] = name;
                    entry["coefficient"] = to_json(coeff);
                    residual.push_back(std::move(entry));
                }
                j["residual"] = std::move(residual);
            },
            [&](const RuleToric&) {},
            [&](const RuleBlowupDescent& r) { j["ambient"] = r.ambient; },
            [&](const RuleDelPezzoFibration& r) { j["fiber_degree"] = r.fiber_degree; },
            [&](const RuleThreeFamily& r) {
                auto curve = [](const ThreeFamilyCurve& c) {
                    Json e = Json::object();
                    e["a1"] = c.a1;
                    e["a2"] = c.a2;
                    e["h1_dot"] = c.h1_dot;
                    e["h2_dot"] = c.h2_dot;
                    return e;
                };
                j["curve1"] = curve(r.data.curve1);
                j["curve2"] = curve(r.data.curve2);
                j["anchor"] = r.data.vmrt_avoidance_anchor;
            },
        },
        recipe);
    return j;
}

Json to_json(const CertificateRecipe& recipe) {
    return std::visit(overloaded{
                          [](const SimpleRecipe& r) { return to_json(r); },
                          [](const Disjunction& d) {
                              Json j = Json::object();
                              j["kind"] = "disjunction";
                              Json branches = Json::array();
                              for (const SimpleRecipe& branch : d.branches)
                                  branches.push_back(to_json(branch));
                              j["branches"] = std::move(branches);
                              return j;
                          },
                      },
                      recipe);
}

Json to_json(const ContractionData& contraction) {
    Json j = Json::object();
    std::visit(overloaded{
                   [&](const ConicBundleData& cb) {
                       j["kind"] = "conic-bundle";
                       j["pulled_back_canonical"] = to_json(cb.pulled_back_canonical);
                       j["discriminant_degree"] = cb.d_delta;
                       j["p1_fibration"] = cb.p1_fibration;
                   },
                   [&](const DelPezzoFibrationData& dp) {
                       j["kind"] = "del-pezzo-fibration";
                       j["fiber_degree"] = dp.fiber_degree;
                   },
                   [&](const BlowupData& bl) {
                       j["kind"] = "blow-up";
                       j["ambient"] = ambient_name(bl.ambient);
                       j["d"] = bl.d;
                       j["g"] = bl.g;
                       j["nondegenerate"] = bl.nondegenerate;
                       j["has_trisecant"] = bl.has_trisecant;
                       j["has_quadrisecant"] = bl.has_quadrisecant;
                       j["in_two_hyperplane_sections"] = bl.in_two_hyperplane_sections;
                       j["center_is_line"] = bl.center_is_line;
                       j["polarization"] = to_json(bl.polarization);
                       j["exceptional"] = to_json(bl.exceptional);
                   },
                   [&](const DoubleCoverData& dc) {
                       j["kind"] = "double-cover";
                       j["target"] = dc.target;
                       j["branch_note"] = dc.branch_note;
                   },
               },
               contraction);
    return j;
}

namespace {

/// Collects the parameter declarations used anywhere in the model (recipes
/// reference parameters only through ParamLin terms, which carry the
/// positivity flavor).
void collect_params(const ParamLin& coeff, std::map<std::string, bool>& params) {
    for (const auto& [name, term] : coeff.terms()) params.emplace(name, term.nonneg);
}

void collect_params(const DivisorClass& cls, std::map<std::string, bool>& params) {
    for (const ParamLin& coeff : cls.coeffs()) collect_params(coeff, params);
}

void collect_params(const ClassTerm& term, std::map<std::string, bool>& params) {
    std::visit(overloaded{
                   [&](const TermIncidentP3& t) { params.emplace(t.slack_name, true); },
                   [&](const TermBlowupTransform& t) {
                       collect_params(t.z_class, params);
                       collect_params(t.vanishing_order, params);
                   },
                   [&](const TermAssumedDagger& t) { collect_params(t.cls, params); },
                   [&](const TermPullback& t) { collect_params(t.cls, params); },
                   [](const auto&) {},
               },
               term);
}

std::map<std::string, bool> collect_params(const CertificateRecipe& recipe) {
    std::map<std::string, bool> params;
    auto simple = [&](const SimpleRecipe& r) {
        std::visit(overloaded{
                       [&](const BigInteriorCone& c) {
                           for (const auto& [term, coeff] : c.terms) {
                               collect_params(term, params);
                               collect_params(coeff, params);
                           }
                       },
                       [&](const NotBigLemmaRepeat& l) {
                           for (const ClassTerm& term : l.dagger_terms)
                               collect_params(term, params);
                           for (const auto& [name, coeff] : l.residual)
                               collect_params(coeff, params);
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
               recipe);
    return params;
}

}  // namespace

Json to_json(const FanoModel& model) {
    Json j = Json::object();
    j["id"] = model.id;
    j["subcase"] = model.subcase;
    j["degree"] = model.anticanonical_degree;
    j["description"] = model.description;
    j["toric"] = model.is_toric;
    j["basis"] = model.basis.symbols();

    Json params = Json::array();
    for (const auto& [name, nonneg] : collect_params(model.recipe)) {
        Json p = Json::object();
        p["name"] = name;
        p["positivity"] = nonneg ? "nonnegative" : "positive";
        params.push_back(std::move(p));
    }
    j["parameters"] = std::move(params);

    Json relations = Json::array();
    for (const LinearRelation& rel : model.relations) {
        Json r = Json::object();
        r["symbol"] = rel.lhs;
        r["class"] = to_json(rel.rhs);
        relations.push_back(std::move(r));
    }
    j["relations"] = std::move(relations);

    j["canonical_class"] = to_json(model.canonical_class);
    Json aliases = Json::array();
    for (const DivisorClass& alias : model.anticanonical_aliases)
        aliases.push_back(to_json(alias));
    j["anticanonical_aliases"] = std::move(aliases);

    Json gens = Json::array();
    for (const EffectiveGenerator& gen : model.effective_generators) {
        Json g = Json::object();
        g["name"] = gen.name;
        g["class"] = to_json(gen.cls);
        gens.push_back(std::move(g));
    }
    j["effective_generators"] = std::move(gens);

    Json entries = Json::array();
    for (const auto& [triple, value] : model.intersection.entries()) {
        Json e = Json::object();
        e["triple"] = triple;
        e["value"] = to_json(value);
        entries.push_back(std::move(e));
    }
    j["intersection"] = std::move(entries);

    Json contractions = Json::array();
    for (const ContractionData& c : model.contractions) contractions.push_back(to_json(c));
    j["contractions"] = std::move(contractions);

    j["recipe"] = to_json(model.recipe);
    j["expected_verdict"] = bigness_name(model.expected_verdict);
    j["anchor"] = model.table_anchor;
    return j;
}

Json to_json(const Verdict& verdict) {
    Json j = Json::object();
    j["verdict"] = bigness_name(verdict.value);
    j["certificate"] = to_json(verdict.certificate);
    j["anchor"] = verdict.anchor;
    Json totals = Json::array();
    for (const DivisorClass& total : verdict.totals) totals.push_back(to_json(total));
    j["totals"] = std::move(totals);
    return j;
}

Json to_json(const TableRow& row) {
    Json j = Json::object();
    j["id"] = row.id;
    j["subcase"] = row.subcase;
    j["degree"] = row.anticanonical_degree;
    j["verdict"] = bigness_name(row.verdict);
    j["certificate"] = row.certificate_kind;
    j["anchor"] = row.anchor;
    j["description"] = row.description;
    return j;
}

Json rows_to_json(const std::vector<TableRow>& rows) {
    Json j = Json::array();
    for (const TableRow& row : rows) j.push_back(to_json(row));
    return j;
}

// ---- parsing -----------------------------------------------------------------------

void ParamDeclarations::declare(const std::string& name, bool nonneg) {
    nonneg_[name] = nonneg;
}

PosParam ParamDeclarations::resolve(const std::string& name) const {
    auto it = nonneg_.find(name);
    bool nonneg = it != nonneg_.end() && it->second;
    return PosParam{name, nonneg};
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw ParseError("rational values must be integers or \"p/q\" strings");
}

ParamLin paramlin_from_json(const Json& j, const ParamDeclarations& params) {
    if (j.is_number_integer() || j.is_string()) return ParamLin(rational_from_json(j));
    if (!j.is_object()) throw ParseError("coefficient must be a rational or an object");
    ParamLin out = j.contains("constant") ? ParamLin(rational_from_json(j.at("constant")))
                                          : ParamLin(0);
    if (j.contains("terms")) {
        const Json& terms = j.at("terms");
        if (!terms.is_object()) throw ParseError("\"terms\" must map parameter names");
        for (const auto& [name, coeff] : terms.items())
            out += ParamLin::param(params.resolve(name), rational_from_json(coeff));
    }
    return out;
}

DivisorClass class_from_json(const Json& j, const ParamDeclarations& params) {
    const Json& basis_json = require(j, "basis");
    if (!basis_json.is_array()) throw ParseError("\"basis\" must be an array of symbols");
    std::vector<std::string> symbols;
    for (const Json& s : basis_json) {
        if (!s.is_string()) throw ParseError("basis symbols must be strings");
        symbols.push_back(s.get<std::string>());
    }
    const Json& coeffs_json = require(j, "coeffs");
    if (!coeffs_json.is_array() || coeffs_json.size() != symbols.size())
        throw ParseError("\"coeffs\" must list one coefficient per basis symbol");
    std::vector<ParamLin> coeffs;
    for (const Json& c : coeffs_json) coeffs.push_back(paramlin_from_json(c, params));
    try {
        return DivisorClass(Basis(std::move(symbols)), std::move(coeffs));
    } catch (const Error& e) {
        throw ParseError(std::string("malformed class: ") + e.what());
    }
}

FamilyData family_from_json(const Json& j) {
    FamilyData fd;
    fd.k = require_long(j, "k");
    fd.r = require_long(j, "r");
    fd.polarization = require_string(j, "polarization");
    const Json& s = require(j, "s");
    if (!s.is_object()) throw ParseError("\"s\" must map basis symbols to integers");
    for (const auto& [symbol, value] : s.items()) {
        if (!value.is_number_integer()) throw ParseError("\"s\" entries must be integers");
        fd.s[symbol] = value.get<long>();
    }
    if (j.contains("m")) {
        const Json& m = j.at("m");
        if (!m.is_object()) throw ParseError("\"m\" must map basis symbols to integers");
        for (const auto& [symbol, value] : m.items()) {
            if (!value.is_number_integer()) throw ParseError("\"m\" entries must be integers");
            fd.m[symbol] = value.get<long>();
        }
    }
    return fd;
}

namespace {

DaggerSource source_from_name(const std::string& name) {
    for (DaggerSource source :
         {DaggerSource::ConicFiberVMRT, DaggerSource::SecantFamily,
          DaggerSource::IncidentLinesP3, DaggerSource::QuadricLines,
          DaggerSource::QuadricIncident, DaggerSource::V5Lines, DaggerSource::DelPezzoPencil,
          DaggerSource::Assumed}) {
        if (name == dagger_source_name(source)) return source;
    }
    throw ParseError("unknown dagger source \"" + name + "\"");
}

DivisorClass class_on(const Json& j, const ParamDeclarations& params, const Basis& expected,
                      const char* what) {
    DivisorClass cls = class_from_json(j, params);
    if (cls.basis() != expected)
        throw ParseError(std::string(what) + " must be expressed over the expected basis");
    return cls;
}

}  // namespace

ClassTerm term_from_json(const Json& j, const Basis& x_basis, const ParamDeclarations& params) {
    std::string kind = require_string(j, "kind");
    if (kind == "conic-fiber") return TermConicFiber{require_index(j, "contraction")};
    if (kind == "pushforward-family") {
        TermPushforwardDagger t{family_from_json(require(j, "family")),
                                require_string(j, "anchor")};
        if (j.contains("source")) t.source = source_from_name(require_string(j, "source"));
        return t;
    }
    if (kind == "secant-lines") return TermSecant{require_index(j, "contraction")};
    if (kind == "incident-lines")
        return TermIncidentP3{require_index(j, "contraction"), require_string(j, "slack")};
    if (kind == "quadric-lines") return TermQuadricLines{require_index(j, "contraction")};
    if (kind == "quadric-incident")
        return TermQuadricIncident{require_index(j, "contraction"), require_long(j, "m")};
    if (kind == "v5-lines") return TermV5Lines{require_index(j, "contraction")};
    if (kind == "transform") {
        std::vector<std::string> eta_symbols = {"eta"};
        for (const std::string& s : x_basis.symbols()) eta_symbols.push_back(s);
        return TermBlowupTransform{
            require_index(j, "contraction"),
            class_on(require(j, "class"), params, Basis(eta_symbols), "transform class"),
            paramlin_from_json(require(j, "order"), params), require_string(j, "anchor")};
    }
    if (kind == "assumed-family")
        return TermAssumedDagger{
            class_on(require(j, "class"), params, x_basis.with_zeta(), "assumed-family class"),
            require_string(j, "anchor")};
    if (kind == "pullback")
        return TermPullback{
            class_on(require(j, "class"), params, x_basis, "pullback class")};
    throw ParseError("unknown term kind \"" + kind + "\"");
}

namespace {

SimpleRecipe simple_recipe_from_json(const Json& j, const Basis& x_basis,
                                     const ParamDeclarations& params) {
    std::string kind = require_string(j, "kind");
    if (kind == "interior-cone") {
        BigInteriorCone cone;
        for (const Json& entry : require(j, "terms")) {
            cone.terms.emplace_back(term_from_json(require(entry, "term"), x_basis, params),
                                    paramlin_from_json(require(entry, "coefficient"), params));
        }
        return cone;
    }
    if (kind == "dagger-sum") {
        NotBigLemmaRepeat lemma;
        for (const Json& term : require(j, "terms"))
            lemma.dagger_terms.push_back(term_from_json(term, x_basis, params));
        if (j.contains("residual")) {
            for (const Json& entry : j.at("residual")) {
                lemma.residual.emplace_back(
                    require_string(entry, "generator"),
                    paramlin_from_json(require(entry, "coefficient"), params));
            }
        }
        return lemma;
    }
    if (kind == "toric") return RuleToric{};
    if (kind == "blow-up-descent") return RuleBlowupDescent{require_string(j, "ambient")};
    if (kind == "del-pezzo-fibration")
        return RuleDelPezzoFibration{require_long(j, "fiber_degree")};
    if (kind == "three-family") {
        auto curve = [&](const char* field) {
            const Json& c = require(j, field);
            return ThreeFamilyCurve{require_long(c, "a1"), require_long(c, "a2"),
                                    require_long(c, "h1_dot"), require_long(c, "h2_dot")};
        };
        return RuleThreeFamily{
            ThreeFamilyData{curve("curve1"), curve("curve2"), require_string(j, "anchor")}};
    }
    throw ParseError("unknown recipe kind \"" + kind + "\"");
}

}  // namespace

CertificateRecipe recipe_from_json(const Json& j, const Basis& x_basis,
                                   const ParamDeclarations& params) {
    if (require_string(j, "kind") == "disjunction") {
        Disjunction d;
        for (const Json& branch : require(j, "branches"))
            d.branches.push_back(simple_recipe_from_json(branch, x_basis, params));
        return d;
    }
    return SimpleRecipe{simple_recipe_from_json(j, x_basis, params)};
}

ContractionData contraction_from_json(const Json& j, const Basis& x_basis) {
    ParamDeclarations no_params;  // contraction classes are constant
    std::string kind = require_string(j, "kind");
    if (kind == "conic-bundle") {
        return ConicBundleData{class_on(require(j, "pulled_back_canonical"), no_params,
                                        x_basis, "conic bundle pullback"),
                               require_long(j, "discriminant_degree"),
                               optional_bool(j, "p1_fibration", false)};
    }
    if (kind == "del-pezzo-fibration")
        return DelPezzoFibrationData{require_long(j, "fiber_degree")};
    if (kind == "blow-up") {
        std::string ambient = require_string(j, "ambient");
        std::optional<AmbientId> id = parse_ambient(ambient);
        if (!id) throw ParseError("unknown ambient \"" + ambient + "\"");
        return BlowupData{
            *id,
            require_long(j, "d"),
            require_long(j, "g"),
            optional_bool(j, "nondegenerate", true),
            optional_bool(j, "has_trisecant", false),
            optional_bool(j, "has_quadrisecant", false),
            optional_bool(j, "in_two_hyperplane_sections", false),
            optional_bool(j, "center_is_line", false),
            class_on(require(j, "polarization"), no_params, x_basis, "blow-up polarization"),
            class_on(require(j, "exceptional"), no_params, x_basis, "blow-up exceptional"),
        };
    }
    if (kind == "double-cover") {
        DoubleCoverData dc;
        dc.target = require_string(j, "target");
        if (j.contains("branch_note")) dc.branch_note = require_string(j, "branch_note");
        return dc;
    }
    throw ParseError("unknown contraction kind \"" + kind + "\"");
}

FanoModel model_from_json(const Json& j) {
    const Json& basis_json = require(j, "basis");
    if (!basis_json.is_array()) throw ParseError("\"basis\" must be an array");
    std::vector<std::string> symbols;
    for (const Json& s : basis_json) {
        if (!s.is_string()) throw ParseError("basis symbols must be strings");
        symbols.push_back(s.get<std::string>());
    }
    Basis basis(std::move(symbols));

    ParamDeclarations params;
    if (j.contains("parameters")) {
        for (const Json& p : j.at("parameters")) {
            std::string positivity = require_string(p, "positivity");
            if (positivity != "positive" && positivity != "nonnegative")
                throw ParseError("parameter positivity must be \"positive\" or \"nonnegative\"");
            params.declare(require_string(p, "name"), positivity == "nonnegative");
        }
    }

    std::vector<LinearRelation> relations;
    if (j.contains("relations")) {
        for (const Json& r : j.at("relations")) {
            relations.emplace_back(require_string(r, "symbol"),
                                   class_on(require(r, "class"), params, basis, "relation"));
        }
    }

    std::vector<DivisorClass> aliases;
    if (j.contains("anticanonical_aliases")) {
        for (const Json& a : j.at("anticanonical_aliases"))
            aliases.push_back(class_from_json(a, params));
    }

    std::vector<EffectiveGenerator> generators;
    if (j.contains("effective_generators")) {
        for (const Json& g : j.at("effective_generators")) {
            generators.push_back(EffectiveGenerator{
                require_string(g, "name"),
                class_on(require(g, "class"), params, basis, "effective generator")});
        }
    }

    TrilinearForm form;
    for (const Json& entry : require(j, "intersection")) {
        const Json& triple = require(entry, "triple");
        if (!triple.is_array() || triple.size() != 3)
            throw ParseError("intersection entries need a symbol triple");
        std::array<std::string, 3> t;
        for (std::size_t i = 0; i < 3; ++i) {
            if (!triple.at(i).is_string()) throw ParseError("triple symbols must be strings");
            t[i] = triple.at(i).get<std::string>();
        }
        form.set(t[0], t[1], t[2], rational_from_json(require(entry, "value")));
    }

    std::vector<ContractionData> contractions;
    if (j.contains("contractions")) {
        for (const Json& c : j.at("contractions"))
            contractions.push_back(contraction_from_json(c, basis));
    }

    std::string verdict = require_string(j, "expected_verdict");
    if (verdict != "Big" && verdict != "NotBig")
        throw ParseError("expected_verdict must be \"Big\" or \"NotBig\"");

    return FanoModel{
        .id = require_string(j, "id"),
        .subcase = j.contains("subcase") ? require_string(j, "subcase") : "",
        .anticanonical_degree = require_long(j, "degree"),
        .description = j.contains("description") ? require_string(j, "description") : "",
        .is_toric = optional_bool(j, "toric", false),
        .basis = basis,
        .relations = std::move(relations),
        .canonical_class =
            class_on(require(j, "canonical_class"), params, basis, "canonical class"),
        .anticanonical_aliases = std::move(aliases),
        .effective_generators = std::move(generators),
        .intersection = std::move(form),
        .contractions = std::move(contractions),
        .recipe = recipe_from_json(require(j, "recipe"), basis, params),
        .expected_verdict = verdict == "Big" ? Bigness::Big : Bigness::NotBig,
        .table_anchor = j.contains("anchor") ? require_string(j, "anchor") : "",
    };
}

std::vector<FanoModel> models_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("models file must contain a JSON array");
    std::vector<FanoModel> models;
    models.reserve(j.size());
    for (const Json& entry : j) models.push_back(model_from_json(entry));
    return models;
}

std::vector<FanoModel> load_models_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open models file \"" + path + "\"");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("models file is not valid JSON: ") + e.what());
    }
    return models_from_json(j);
}

}  // namespace fanobig
