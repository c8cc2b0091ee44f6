#include "fanobig/vmrt.hpp"

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fanobig/errors.hpp"
#include "linalg.hpp"

namespace fanobig {

namespace {

/// Symbol for the tautological class on an ambient ℙ(T_Z).
const std::string kEta = "eta";

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace

// ---- dagger classes -----------------------------------------------------------

const char* dagger_source_name(DaggerSource source) {
    switch (source) {
        case DaggerSource::ConicFiberVMRT: return "conic-fiber dual VMRT";
        case DaggerSource::SecantFamily: return "secant-lines family";
        case DaggerSource::IncidentLinesP3: return "incident-lines family";
        case DaggerSource::QuadricLines: return "quadric ambient-lines family";
        case DaggerSource::QuadricIncident: return "quadric incident-lines family";
        case DaggerSource::V5Lines: return "V5 ambient-lines family";
        case DaggerSource::DelPezzoPencil: return "del Pezzo fiber-pencil family";
        case DaggerSource::Assumed: return "assumed family";
    }
    return "unknown";
}

DaggerClass::DaggerClass(DivisorClass cls, DaggerSource source, std::string anchor)
    : cls_(std::move(cls)), source_(source), anchor_(std::move(anchor)) {
    if (!cls_.basis().has_zeta())
        throw BasisMismatch("dagger class must live over a ℙ(T_X) basis with leading ζ");
    const ParamLin& k = cls_.coeff(kZeta);
    if (!k.is_constant() || k.constant().sign() <= 0)
        throw PreconditionFailed("dagger class needs a positive constant ζ-coefficient, got " +
                                 k.str());
}

// ---- raw constructors -----------------------------------------------------------

const Basis& canonical_blowup_basis() {
    static const Basis basis({kZeta, "H", "D"});
    return basis;
}

DaggerClass secant_lines_class(CurveDG c, bool has_trisecant) {
    if (c.d < 4)
        throw PreconditionFailed("secant-lines class needs a center of degree ≥ 4, got d=" +
                                 std::to_string(c.d));
    const long delta = nodes_general_projection(c);
    if (delta <= 0)
        throw PreconditionFailed("secant family is not dominating: δ(" + std::to_string(c.d) +
                                 "," + std::to_string(c.g) + ") = " + std::to_string(delta));
    const long m = has_trisecant ? nodes_projection_from_point_on_curve(c) : 0;
    DivisorClass cls(canonical_blowup_basis(),
                     {ParamLin(delta), ParamLin(c.d + c.g - 1), ParamLin(m - (c.d - 1))});
    return DaggerClass(std::move(cls), DaggerSource::SecantFamily);
}

DaggerClass incident_lines_class_p3(CurveDG c, const PosParam& slack) {
    if (c.d < 3)
        throw PreconditionFailed("incident-lines class needs a nondegenerate center (d ≥ 3), got d=" +
                                 std::to_string(c.d));
    if (!slack.nonneg)
        throw PreconditionFailed("incident-lines slack '" + slack.name +
                                 "' must be a nonnegative parameter");
    const long k = dual_plane_curve_degree(c);
    DivisorClass cls(canonical_blowup_basis(),
                     {ParamLin(k), ParamLin(-k), ParamLin(k - 2) + ParamLin::param(slack)});
    return DaggerClass(std::move(cls), DaggerSource::IncidentLinesP3);
}

DaggerClass quadric_lines_class() {
    DivisorClass cls(canonical_blowup_basis(), {2, -2, 2});
    return DaggerClass(std::move(cls), DaggerSource::QuadricLines);
}

DaggerClass quadric_incident_class(long d, long m) {
    if (d < 1)
        throw PreconditionFailed("quadric incident-lines class needs a curve center, got d=" +
                                 std::to_string(d));
    if (m < 0)
        throw PreconditionFailed("quadric incident-lines class needs m ≥ 0, got m=" +
                                 std::to_string(m));
    DivisorClass cls(canonical_blowup_basis(), {ParamLin(d), ParamLin(0), ParamLin(m - 2)});
    return DaggerClass(std::move(cls), DaggerSource::QuadricIncident);
}

DaggerClass v5_lines_class(const BlowupData& blowup) {
    if (blowup.ambient != AmbientId::V5)
        throw WrongContractionKind(std::string("V5 ambient-lines class needs a V5 blow-up, got ") +
                                   ambient_name(blowup.ambient));
    if (!blowup.in_two_hyperplane_sections)
        throw PreconditionFailed(
            "V5 ambient-lines class needs the center inside an intersection of two hyperplane "
            "sections");
    if (blowup.center_is_line)
        throw PreconditionFailed("V5 ambient-lines class is unavailable when the center is a line");
    DivisorClass cls(canonical_blowup_basis(), {3, -1, 3});
    return DaggerClass(std::move(cls), DaggerSource::V5Lines);
}

// ---- model-level constructors ----------------------------------------------------

DaggerClass conic_bundle_vmrt(const FanoModel& model, const ContractionData& contraction) {
    const auto* cb = std::get_if<ConicBundleData>(&contraction);
    if (cb == nullptr)
        throw WrongContractionKind("conic-fiber dual VMRT needs a conic-bundle contraction");
    DivisorClass on_x = add(model.canonical_class, scale(ParamLin(-1), cb->pulled_back_canonical));
    DivisorClass cls = add(zeta_unit(model.basis), pullback_to_pt(on_x));
    return DaggerClass(std::move(cls), DaggerSource::ConicFiberVMRT);
}

DivisorClass universal_family_pushforward(const FanoModel& model, const FamilyData& fd) {
    const Basis& basis = model.basis;
    const auto& symbols = basis.symbols();
    if (fd.k <= 0)
        throw PreconditionFailed("pushforward family needs evaluation degree k > 0, got k=" +
                                 std::to_string(fd.k));
    if (fd.r < 0)
        throw PreconditionFailed("pushforward family needs c₂ ≥ 0, got r=" + std::to_string(fd.r));
    if (!basis.has(fd.polarization))
        throw BasisMismatch("family polarization '" + fd.polarization + "' is not a basis symbol");
    for (const auto& symbol : symbols)
        if (fd.s.find(symbol) == fd.s.end())
            throw PreconditionFailed("family data misses the relative class s[" + symbol + "]");
    for (const auto& [name, value] : fd.s) {
        if (!basis.has(name)) throw BasisMismatch("relative class s[" + name + "] names no basis symbol");
        if (value < 0)
            throw PreconditionFailed("relative class s[" + name + "] must be nonnegative");
    }
    if (fd.s.at(fd.polarization) != 1)
        throw PreconditionFailed("family polarization must have s[" + fd.polarization + "] = 1");
    for (const auto& [name, mult] : fd.m) {
        if (!basis.has(name))
            throw BasisMismatch("exceptional multiplicity m[" + name + "] names no basis symbol");
        if (mult < 0)
            throw PreconditionFailed("exceptional multiplicity m[" + name + "] must be nonnegative");
    }

    // Rows over the unknowns a_C, one per basis symbol B:
    //   Σ_C a_C·(C·P·B) = k·(P·P·B) + s_B·r.
    const std::size_t n = basis.rank();
    const std::string& p = fd.polarization;
    linalg::Matrix rows;
    std::vector<Rational> rhs;
    for (const auto& b : symbols) {
        std::vector<Rational> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = triple(model.intersection, symbols[j], p, b);
        rows.push_back(std::move(row));
        rhs.push_back(Rational(fd.k) * triple(model.intersection, p, p, b) +
                      Rational(fd.s.at(b)) * Rational(fd.r));
    }
    // A pair (B₁,B₂) with vanishing relative classes pairs to zero against
    // the pushforward: Σ_C a_C·(C·B₁·B₂) = 0, usable when every entry is
    // stored.
    for (std::size_t i1 = 0; i1 < n; ++i1) {
        for (std::size_t i2 = i1; i2 < n; ++i2) {
            const std::string& b1 = symbols[i1];
            const std::string& b2 = symbols[i2];
            if (fd.s.at(b1) != 0 || fd.s.at(b2) != 0) continue;
            bool known = true;
            for (std::size_t j = 0; j < n && known; ++j)
                known = model.intersection.knows(symbols[j], b1, b2);
            if (!known) continue;
            std::vector<Rational> row(n);
            for (std::size_t j = 0; j < n; ++j)
                row[j] = triple(model.intersection, symbols[j], b1, b2);
            rows.push_back(std::move(row));
            rhs.emplace_back(0);
        }
    }

    auto result = linalg::solve_exact(rows, rhs);
    if (result.kind == linalg::SolveKind::Underdetermined)
        throw SingularSystem("pushforward system of the degree-" + std::to_string(fd.k) +
                             " family on " + model.key() + " is underdetermined");
    if (result.kind == linalg::SolveKind::Inconsistent)
        throw SingularSystem("pushforward system of the degree-" + std::to_string(fd.k) +
                             " family on " + model.key() + " is inconsistent");

    // kζ + Π*(−2k·P + Σ a_C·C + Σ m_B·B).
    std::vector<ParamLin> coeffs;
    coeffs.reserve(n + 1);
    coeffs.emplace_back(fd.k);
    for (std::size_t j = 0; j < n; ++j) {
        Rational c = result.solution[j];
        if (symbols[j] == p) c += Rational(-2 * fd.k);
        if (auto it = fd.m.find(symbols[j]); it != fd.m.end()) c += Rational(it->second);
        coeffs.emplace_back(std::move(c));
    }
    return DivisorClass(basis.with_zeta(), std::move(coeffs));
}

DivisorClass strict_transform_pullback(const FanoModel& model, const DivisorClass& z_class,
                                       const BlowupData& blowup,
                                       const ParamLin& vanishing_order) {
    std::vector<std::string> expected_symbols{kEta};
    expected_symbols.insert(expected_symbols.end(), model.basis.symbols().begin(),
                            model.basis.symbols().end());
    if (z_class.basis() != Basis(expected_symbols))
        throw BasisMismatch("strict-transform input must live over [" + kEta + "] ++ basis(X)");

    const ParamLin& k = z_class.coeff(kEta);
    std::vector<ParamLin> f_coeffs(z_class.coeffs().begin() + 1, z_class.coeffs().end());
    DivisorClass f_pullback(model.basis, std::move(f_coeffs));
    // kζ + k·Π*D + Π*f*F − order·Π*D.
    DivisorClass on_x = add(f_pullback, scale(k - vanishing_order, blowup.exceptional));

    std::vector<ParamLin> coeffs{k};
    coeffs.insert(coeffs.end(), on_x.coeffs().begin(), on_x.coeffs().end());
    return DivisorClass(model.basis.with_zeta(), std::move(coeffs));
}

DaggerClass into_model(const FanoModel& model, const BlowupData& blowup, const DaggerClass& raw) {
    const DivisorClass& rc = raw.cls();
    if (rc.basis() != canonical_blowup_basis())
        throw BasisMismatch("raw family classes live over the canonical blow-up basis");
    DivisorClass on_x = add(scale(rc.coeff("H"), blowup.polarization),
                            scale(rc.coeff("D"), blowup.exceptional));
    DivisorClass cls =
        add(scale(rc.coeff(kZeta), zeta_unit(model.basis)), pullback_to_pt(on_x));
    return DaggerClass(std::move(cls), raw.source(), raw.anchor());
}

// ---- term materialization ----------------------------------------------------------

const BlowupData& blowup_at(const FanoModel& model, std::size_t index) {
    if (index >= model.contractions.size())
        throw PreconditionFailed("contraction index " + std::to_string(index) +
                                 " out of range on " + model.key());
    const auto* blowup = std::get_if<BlowupData>(&model.contractions[index]);
    if (blowup == nullptr)
        throw WrongContractionKind("contraction " + std::to_string(index) + " of " + model.key() +
                                   " is not a blow-up");
    return *blowup;
}

const ConicBundleData& conic_bundle_at(const FanoModel& model, std::size_t index) {
    if (index >= model.contractions.size())
        throw PreconditionFailed("contraction index " + std::to_string(index) +
                                 " out of range on " + model.key());
    const auto* cb = std::get_if<ConicBundleData>(&model.contractions[index]);
    if (cb == nullptr)
        throw WrongContractionKind("contraction " + std::to_string(index) + " of " + model.key() +
                                   " is not a conic bundle");
    return *cb;
}

namespace {

void require_ambient(const BlowupData& blowup, AmbientId ambient, const char* what) {
    if (blowup.ambient != ambient)
        throw WrongContractionKind(std::string(what) + " needs a " + ambient_name(ambient) +
                                   " blow-up, got " + ambient_name(blowup.ambient));
}

}  // namespace

DaggerClass materialize_dagger(const FanoModel& model, const ClassTerm& term) {
    return std::visit(
        overloaded{
            [&](const TermConicFiber& t) -> DaggerClass {
                if (t.contraction >= model.contractions.size())
                    throw PreconditionFailed("contraction index " + std::to_string(t.contraction) +
                                             " out of range on " + model.key());
                return conic_bundle_vmrt(model, model.contractions[t.contraction]);
            },
            [&](const TermPushforwardDagger& t) -> DaggerClass {
                return DaggerClass(universal_family_pushforward(model, t.fd), t.source, t.anchor);
            },
            [&](const TermSecant& t) -> DaggerClass {
                const BlowupData& b = blowup_at(model, t.contraction);
                require_ambient(b, AmbientId::P3, "secant-lines class");
                if (!b.nondegenerate)
                    throw PreconditionFailed("secant-lines class needs a nondegenerate center");
                if (b.has_quadrisecant)
                    throw PreconditionFailed(
                        "secant-lines class needs a center without quadrisecant lines");
                return into_model(model, b, secant_lines_class({b.d, b.g}, b.has_trisecant));
            },
            [&](const TermIncidentP3& t) -> DaggerClass {
                const BlowupData& b = blowup_at(model, t.contraction);
                require_ambient(b, AmbientId::P3, "incident-lines class");
                if (!b.nondegenerate)
                    throw PreconditionFailed("incident-lines class needs a nondegenerate center");
                return into_model(
                    model, b,
                    incident_lines_class_p3({b.d, b.g}, PosParam::nonnegative(t.slack_name)));
            },
            [&](const TermQuadricLines& t) -> DaggerClass {
                const BlowupData& b = blowup_at(model, t.contraction);
                require_ambient(b, AmbientId::Q3, "quadric ambient-lines class");
                return into_model(model, b, quadric_lines_class());
            },
            [&](const TermQuadricIncident& t) -> DaggerClass {
                const BlowupData& b = blowup_at(model, t.contraction);
                require_ambient(b, AmbientId::Q3, "quadric incident-lines class");
                if (b.has_trisecant)
                    throw PreconditionFailed(
                        "quadric incident-lines class needs a center without trisecant lines");
                return into_model(model, b, quadric_incident_class(b.d, t.m));
            },
            [&](const TermV5Lines& t) -> DaggerClass {
                const BlowupData& b = blowup_at(model, t.contraction);
                return into_model(model, b, v5_lines_class(b));
            },
            [&](const TermBlowupTransform&) -> DaggerClass {
                throw PreconditionFailed("a strict-transform term is not a dagger class");
            },
            [&](const TermAssumedDagger& t) -> DaggerClass {
                if (t.cls.basis() != model.basis.with_zeta())
                    throw BasisMismatch("assumed dagger class must live over [ζ] ++ basis(X)");
                return DaggerClass(t.cls, DaggerSource::Assumed, t.anchor);
            },
            [&](const TermPullback&) -> DaggerClass {
                throw PreconditionFailed("a pullback term is not a dagger class");
            },
        },
        term);
}

DivisorClass materialize(const FanoModel& model, const ClassTerm& term) {
    if (const auto* t = std::get_if<TermBlowupTransform>(&term)) {
        const BlowupData& b = blowup_at(model, t->contraction);
        return strict_transform_pullback(model, t->z_class, b, t->vanishing_order);
    }
    if (const auto* t = std::get_if<TermPullback>(&term)) {
        if (t->cls.basis() != model.basis)
            throw BasisMismatch("pullback term must live over basis(X)");
        return pullback_to_pt(t->cls);
    }
    return materialize_dagger(model, term).cls();
}

}  // namespace fanobig
