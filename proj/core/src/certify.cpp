#include "fanobig/certify.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fanobig/errors.hpp"
#include "linalg.hpp"

namespace fanobig {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

// ---- display names --------------------------------------------------------------

const char* class_term_name(const ClassTerm& term) {
    return std::visit(overloaded{
                          [](const TermConicFiber&) { return "conic-fiber"; },
                          [](const TermPushforwardDagger&) { return "pushforward-family"; },
                          [](const TermSecant&) { return "secant-lines"; },
                          [](const TermIncidentP3&) { return "incident-lines"; },
                          [](const TermQuadricLines&) { return "quadric-lines"; },
                          [](const TermQuadricIncident&) { return "quadric-incident"; },
                          [](const TermV5Lines&) { return "v5-lines"; },
                          [](const TermBlowupTransform&) { return "transform"; },
                          [](const TermAssumedDagger&) { return "assumed-family"; },
                          [](const TermPullback&) { return "pullback"; },
                      },
                      term);
}

const char* recipe_kind_name(const SimpleRecipe& recipe) {
    return std::visit(overloaded{
                          [](const BigInteriorCone&) { return "interior-cone"; },
                          [](const NotBigLemmaRepeat&) { return "dagger-sum"; },
                          [](const RuleToric&) { return "toric"; },
                          [](const RuleBlowupDescent&) { return "blow-up-descent"; },
                          [](const RuleDelPezzoFibration&) { return "del-pezzo-fibration"; },
                          [](const RuleThreeFamily&) { return "three-family"; },
                      },
                      recipe);
}

std::string recipe_kind_name(const CertificateRecipe& recipe) {
    return std::visit(
        overloaded{
            [](const SimpleRecipe& r) { return std::string(recipe_kind_name(r)); },
            [](const Disjunction& d) {
                std::string joined;
                for (const SimpleRecipe& branch : d.branches) {
                    if (!joined.empty()) joined += "+";
                    joined += recipe_kind_name(branch);
                }
                return joined;
            },
        },
        recipe);
}

// ---- helpers --------------------------------------------------------------------

namespace {

/// Every parameter appearing in the class, mapped to 1 (the interior-cone
/// span test evaluates at the all-ones point).
void collect_params(const DivisorClass& cls, std::map<std::string, Rational>& assignment) {
    for (const ParamLin& coeff : cls.coeffs()) {
        for (const auto& [name, term] : coeff.terms()) assignment.emplace(name, Rational(1));
    }
}

/// The label of the argument a dagger-sum certificate embodies: the anchor
/// of an assumed input when one leads, the construction family otherwise.
std::string lemma_anchor(const NotBigLemmaRepeat& cert) {
    return std::visit(
        overloaded{
            [](const TermConicFiber&) { return std::string("conic-fiber-sum"); },
            [](const TermPushforwardDagger& t) { return t.anchor; },
            [](const TermSecant&) { return std::string("secant-family"); },
            [](const TermIncidentP3&) { return std::string("space-curve-combination"); },
            [](const TermQuadricLines&) { return std::string("quadric-lines"); },
            [](const TermQuadricIncident&) { return std::string("quadric-incident"); },
            [](const TermV5Lines&) { return std::string("v5-lines"); },
            [](const TermBlowupTransform& t) { return t.anchor; },
            [](const TermAssumedDagger& t) { return t.anchor; },
            [](const TermPullback&) { return std::string("interior-cone"); },
        },
        cert.dagger_terms.front());
}

const EffectiveGenerator& generator_by_name(const FanoModel& model, const std::string& name) {
    for (const EffectiveGenerator& gen : model.effective_generators) {
        if (gen.name == name) return gen;
    }
    throw PreconditionFailed("residual names unknown effective generator \"" + name + "\"");
}

std::vector<DivisorClass> generator_classes(const FanoModel& model) {
    std::vector<DivisorClass> classes;
    classes.reserve(model.effective_generators.size());
    for (const EffectiveGenerator& gen : model.effective_generators) classes.push_back(gen.cls);
    return classes;
}

/// The non-ζ part of a class over ["zeta"] ++ basis(X), as a class on X.
DivisorClass drop_zeta(const DivisorClass& cls) {
    Basis x_basis = cls.basis().without_zeta();
    std::vector<ParamLin> coeffs(cls.coeffs().begin() + 1, cls.coeffs().end());
    return DivisorClass(x_basis, std::move(coeffs));
}

}  // namespace

// ---- cone membership --------------------------------------------------------------

std::optional<std::vector<Rational>> cone_membership(
    const DivisorClass& cls, const std::vector<DivisorClass>& generators) {
    if (!cls.is_constant())
        throw PreconditionFailed("cone membership is decided for constant classes only");
    const std::size_t rank = cls.basis().rank();
    if (rank != 2)
        throw PreconditionFailed("cone membership is implemented for rank-2 lattices");
    for (const DivisorClass& gen : generators) {
        if (gen.basis() != cls.basis())
            throw BasisMismatch("cone generator over a different basis");
        if (!gen.is_constant())
            throw PreconditionFailed("cone generators must be constant classes");
    }

    const Rational x = cls.coeff(std::size_t{0}).constant();
    const Rational y = cls.coeff(std::size_t{1}).constant();
    std::vector<Rational> coeffs(generators.size(), Rational(0));
    if (x.is_zero() && y.is_zero()) return coeffs;

    auto gen_at = [&](std::size_t i, std::size_t c) {
        return generators[i].coeff(c).constant();
    };

    // One generator: cls = t·g with t ≥ 0.
    for (std::size_t i = 0; i < generators.size(); ++i) {
        Rational gx = gen_at(i, 0);
        Rational gy = gen_at(i, 1);
        Rational t;
        if (!gx.is_zero()) {
            t = x / gx;
        } else if (!gy.is_zero()) {
            t = y / gy;
        } else {
            continue;
        }
        if (t.sign() >= 0 && t * gx == x && t * gy == y) {
            coeffs[i] = t;
            return coeffs;
        }
    }

    // Two generators: in rank 2 any cone point is a nonnegative combination
    // of at most two generators, so the exhaustive pair scan is complete.
    for (std::size_t i = 0; i < generators.size(); ++i) {
        for (std::size_t j = i + 1; j < generators.size(); ++j) {
            Rational det = gen_at(i, 0) * gen_at(j, 1) - gen_at(j, 0) * gen_at(i, 1);
            if (det.is_zero()) continue;
            Rational a = (x * gen_at(j, 1) - gen_at(j, 0) * y) / det;
            Rational b = (gen_at(i, 0) * y - x * gen_at(i, 1)) / det;
            if (a.sign() >= 0 && b.sign() >= 0) {
                std::fill(coeffs.begin(), coeffs.end(), Rational(0));
                coeffs[i] = a;
                coeffs[j] = b;
                return coeffs;
            }
        }
    }
    return std::nullopt;
}

// ---- Big verification ---------------------------------------------------------------

Verdict verify_big(const FanoModel& model, const BigInteriorCone& cert) {
    if (cert.terms.empty()) throw IdentityFails("interior-cone certificate has no terms");
    Basis zb = model.basis.with_zeta();
    DivisorClass total = DivisorClass::zero(zb);
    std::vector<DivisorClass> classes;
    classes.reserve(cert.terms.size());

    std::vector<DivisorClass> gens = generator_classes(model);
    for (const auto& [term, coeff] : cert.terms) {
        if (!coeff.certified_positive())
            throw NonPositiveCoefficient(std::string(class_term_name(term)) +
                                         " carries coefficient " + coeff.str());
        DivisorClass cls = materialize(model, term);
        if (const auto* pull = std::get_if<TermPullback>(&term)) {
            if (!cone_membership(pull->cls, gens))
                throw ResidualNotEffective("pullback of " + pull->cls.str() +
                                           " is not a nonnegative combination of the "
                                           "effective generators");
        }
        classes.push_back(cls);
        total = add(total, scale(coeff, cls));
    }

    for (std::size_t i = 1; i < zb.rank(); ++i) {
        if (!total.coeff(i).is_zero())
            throw IdentityFails("certificate sums to " + total.str() +
                                ", not a multiple of " + kZeta);
    }
    const ParamLin& multiple = total.coeff(std::size_t{0});
    if (!multiple.certified_positive())
        throw IdentityFails("zeta multiple " + multiple.str() + " is not certified positive");

    // Span test at parameters = 1: the classes must generate the full
    // rank-3 lattice, placing the zeta multiple in the cone's interior.
    std::map<std::string, Rational> ones;
    for (const DivisorClass& cls : classes) collect_params(cls, ones);
    linalg::Matrix rows;
    rows.reserve(classes.size());
    for (const DivisorClass& cls : classes) {
        DivisorClass at_ones = cls.evaluate(ones);
        std::vector<Rational> row;
        row.reserve(zb.rank());
        for (std::size_t i = 0; i < zb.rank(); ++i) row.push_back(at_ones.coeff(i).constant());
        rows.push_back(std::move(row));
    }
    if (linalg::rank_exact(rows) != zb.rank())
        throw SpanDeficient("certificate classes span a proper sublattice");

    return Verdict{Bigness::Big, CertificateRecipe{SimpleRecipe{cert}}, "interior-cone",
                   {total}};
}

// ---- NotBig verification --------------------------------------------------------------

Verdict verify_not_big(const FanoModel& model, const NotBigLemmaRepeat& cert) {
    if (cert.dagger_terms.empty())
        throw IdentityFails("dagger-sum certificate has no terms");
    Basis zb = model.basis.with_zeta();
    DivisorClass total = DivisorClass::zero(zb);
    for (const ClassTerm& term : cert.dagger_terms) {
        DaggerClass dagger = materialize_dagger(model, term);
        total = add(total, dagger.cls());
    }

    const ParamLin& k = total.coeff(std::size_t{0});
    if (!k.is_constant() || !(k.constant() > Rational(0)))
        throw NonPositiveZeta("sum has zeta coefficient " + k.str());

    DivisorClass expected = DivisorClass::zero(model.basis);
    for (const auto& [name, coeff] : cert.residual) {
        if (!coeff.certified_nonnegative())
            throw ResidualNotEffective("coefficient " + coeff.str() + " on " + name +
                                       " is not certified nonnegative");
        expected = add(expected, scale(coeff, generator_by_name(model, name).cls));
    }
    DivisorClass rest = drop_zeta(total);
    if (rest != expected)
        throw IdentityFails("sum " + total.str() + " has residual " + rest.str() +
                            ", certificate declares " + expected.str());

    return Verdict{Bigness::NotBig, CertificateRecipe{SimpleRecipe{cert}},
                   lemma_anchor(cert), {total}};
}

// ---- named rules ------------------------------------------------------------------------

Verdict verify_rule(const FanoModel& model, const RuleToric& rule) {
    if (!model.is_toric) throw RuleInapplicable(model.key() + " is not toric");
    return Verdict{Bigness::Big, CertificateRecipe{SimpleRecipe{rule}}, "toric", {}};
}

Verdict verify_rule(const FanoModel& model, const RuleBlowupDescent& rule) {
    std::optional<AmbientId> target = parse_ambient(rule.ambient);
    if (!target) throw RuleInapplicable("unknown ambient \"" + rule.ambient + "\"");
    if (!is_known_not_big_ambient(*target))
        throw RuleInapplicable(rule.ambient + " is not a known not-big ambient");
    bool found = std::any_of(model.contractions.begin(), model.contractions.end(),
                             [&](const ContractionData& c) {
                                 const auto* bl = std::get_if<BlowupData>(&c);
                                 return bl && bl->ambient == *target;
                             });
    if (!found)
        throw RuleInapplicable(model.key() + " has no blow-up contraction to " + rule.ambient);
    return Verdict{Bigness::NotBig, CertificateRecipe{SimpleRecipe{rule}},
                   "del-pezzo-descent", {}};
}

Verdict verify_rule(const FanoModel& model, const RuleDelPezzoFibration& rule) {
    if (rule.fiber_degree < 1 || rule.fiber_degree > 4)
        throw RuleInapplicable("fiber degree " + std::to_string(rule.fiber_degree) +
                               " is outside the range of the fibration rule");
    bool found = std::any_of(model.contractions.begin(), model.contractions.end(),
                             [&](const ContractionData& c) {
                                 const auto* dp = std::get_if<DelPezzoFibrationData>(&c);
                                 return dp && dp->fiber_degree == rule.fiber_degree;
                             });
    if (!found)
        throw RuleInapplicable(model.key() + " has no del Pezzo fibration of degree " +
                               std::to_string(rule.fiber_degree));
    return Verdict{Bigness::NotBig, CertificateRecipe{SimpleRecipe{rule}},
                   "del-pezzo-fibration", {}};
}

Verdict verify_rule(const FanoModel& model, const RuleThreeFamily& rule) {
    const ThreeFamilyData& data = rule.data;
    for (const ThreeFamilyCurve& curve : {data.curve1, data.curve2}) {
        if (!(curve.a2 <= curve.a1 && curve.a1 <= 0))
            throw RuleInapplicable("normal bundle O(" + std::to_string(curve.a1) + ")+O(" +
                                   std::to_string(curve.a2) + ") is not semi-negative");
    }
    if (!(data.curve1.h1_dot == 0 && data.curve1.h2_dot > 0 && data.curve2.h1_dot > 0 &&
          data.curve2.h2_dot == 0))
        throw RuleInapplicable("intersection pattern is not crossing");
    for (std::size_t i = 0; i < model.basis.rank(); ++i) {
        DivisorClass unit = DivisorClass::unit(model.basis, model.basis.symbol(i));
        bool effective = std::any_of(model.effective_generators.begin(),
                                     model.effective_generators.end(),
                                     [&](const EffectiveGenerator& g) { return g.cls == unit; });
        if (!effective)
            throw RuleInapplicable("basis divisor " + model.basis.symbol(i) +
                                   " is not listed effective");
    }
    if (!anchor_documentation().count(data.vmrt_avoidance_anchor))
        throw RuleInapplicable("avoidance anchor \"" + data.vmrt_avoidance_anchor +
                               "\" is not documented");
    return Verdict{Bigness::NotBig, CertificateRecipe{SimpleRecipe{rule}},
                   data.vmrt_avoidance_anchor, {}};
}

// ---- dispatch -----------------------------------------------------------------------------

Verdict verify_recipe(const FanoModel& model, const SimpleRecipe& recipe) {
    return std::visit(
        overloaded{
            [&](const BigInteriorCone& c) { return verify_big(model, c); },
            [&](const NotBigLemmaRepeat& l) { return verify_not_big(model, l); },
            [&](const RuleToric& r) { return verify_rule(model, r); },
            [&](const RuleBlowupDescent& r) { return verify_rule(model, r); },
            [&](const RuleDelPezzoFibration& r) { return verify_rule(model, r); },
            [&](const RuleThreeFamily& r) { return verify_rule(model, r); },
        },
        recipe);
}

Verdict evaluate_model(const FanoModel& model) {
    return std::visit(
        overloaded{
            [&](const SimpleRecipe& recipe) { return verify_recipe(model, recipe); },
            [&](const Disjunction& disjunction) {
                if (disjunction.branches.empty())
                    throw PreconditionFailed(model.key() + " has an empty disjunction");
                std::vector<Verdict> verdicts;
                verdicts.reserve(disjunction.branches.size());
                for (const SimpleRecipe& branch : disjunction.branches)
                    verdicts.push_back(verify_recipe(model, branch));
                for (const Verdict& v : verdicts) {
                    if (v.value != verdicts.front().value)
                        throw InternalMismatch(model.key() +
                                               ": disjunction branches disagree on the verdict");
                }
                std::vector<DivisorClass> totals;
                for (const Verdict& v : verdicts)
                    totals.insert(totals.end(), v.totals.begin(), v.totals.end());
                return Verdict{verdicts.front().value, CertificateRecipe{disjunction},
                               verdicts.front().anchor, std::move(totals)};
            },
        },
        model.recipe);
}

}  // namespace fanobig
