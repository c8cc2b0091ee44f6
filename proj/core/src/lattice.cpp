#include "fanobig/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fanobig/errors.hpp"

namespace fanobig {

// ---- Basis --------------------------------------------------------------

Basis::Basis(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    std::set<std::string> seen;
    for (const auto& s : symbols_) {
        if (s.empty()) throw Error("empty basis symbol");
        if (!seen.insert(s).second) throw Error("duplicate basis symbol '" + s + "'");
    }
    for (std::size_t i = 1; i < symbols_.size(); ++i)
        if (symbols_[i] == kZeta) throw Error("zeta must be the first basis symbol");
}

bool Basis::has(const std::string& symbol) const {
    return std::find(symbols_.begin(), symbols_.end(), symbol) != symbols_.end();
}

std::size_t Basis::index_of(const std::string& symbol) const {
    auto it = std::find(symbols_.begin(), symbols_.end(), symbol);
    if (it == symbols_.end())
        throw BasisMismatch("symbol '" + symbol + "' not in basis");
    return static_cast<std::size_t>(it - symbols_.begin());
}

Basis Basis::with_zeta() const {
    if (has_zeta()) return *this;
    std::vector<std::string> symbols{kZeta};
    symbols.insert(symbols.end(), symbols_.begin(), symbols_.end());
    return Basis(std::move(symbols));
}

Basis Basis::without_zeta() const {
    if (!has_zeta()) throw BasisMismatch("basis has no zeta to drop");
    return Basis(std::vector<std::string>(symbols_.begin() + 1, symbols_.end()));
}

// ---- DivisorClass -------------------------------------------------------

DivisorClass::DivisorClass(Basis basis, std::vector<ParamLin> coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != basis_.rank())
        throw BasisMismatch("coefficient count " + std::to_string(coeffs_.size()) +
                            " does not match basis rank " + std::to_string(basis_.rank()));
}

DivisorClass DivisorClass::zero(const Basis& basis) {
    return DivisorClass(basis, std::vector<ParamLin>(basis.rank()));
}

DivisorClass DivisorClass::unit(const Basis& basis, const std::string& symbol) {
    std::vector<ParamLin> coeffs(basis.rank());
    coeffs[basis.index_of(symbol)] = ParamLin(1);
    return DivisorClass(basis, std::move(coeffs));
}

DivisorClass DivisorClass::make(const Basis& basis,
                                const std::map<std::string, ParamLin>& coeffs) {
    std::vector<ParamLin> v(basis.rank());
    for (const auto& [symbol, c] : coeffs) v[basis.index_of(symbol)] = c;
    return DivisorClass(basis, std::move(v));
}

const ParamLin& DivisorClass::coeff(const std::string& symbol) const {
    return coeffs_[basis_.index_of(symbol)];
}

bool DivisorClass::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const ParamLin& c) { return c.is_zero(); });
}

bool DivisorClass::is_constant() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const ParamLin& c) { return c.is_constant(); });
}

DivisorClass DivisorClass::evaluate(const std::map<std::string, Rational>& assignment) const {
    std::vector<ParamLin> coeffs;
    coeffs.reserve(coeffs_.size());
    for (const auto& c : coeffs_) coeffs.emplace_back(c.evaluate(assignment));
    return DivisorClass(basis_, std::move(coeffs));
}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
}

std::string DivisorClass::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const ParamLin& c = coeffs_[i];
        if (c.is_zero()) continue;
        const std::string symbol = basis_.symbol(i) == kZeta ? "ζ" : basis_.symbol(i);
        if (c.is_constant()) {
            const Rational& r = c.constant();
            if (r.sign() >= 0 && !first) os << "+";
            if (r == Rational(-1))
                os << "-";
            else if (r != Rational(1))
                os << r.str();
            os << symbol;
        } else {
            if (!first) os << "+";
            os << "(" << c.str() << ")" << symbol;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

// ---- LinearRelation ------------------------------------------------------

LinearRelation::LinearRelation(std::string lhs_, DivisorClass rhs_)
    : lhs(std::move(lhs_)), rhs(std::move(rhs_)) {
    if (!rhs.is_constant())
        throw Error("relation '" + lhs + "' has parameter-carrying right-hand side");
}

// ---- TrilinearForm -------------------------------------------------------

std::array<std::string, 3> TrilinearForm::key(const std::string& a, const std::string& b,
                                              const std::string& c) {
    std::array<std::string, 3> k{a, b, c};
    std::sort(k.begin(), k.end());
    return k;
}

void TrilinearForm::set(const std::string& a, const std::string& b, const std::string& c,
                        const Rational& value) {
    auto k = key(a, b, c);
    auto it = entries_.find(k);
    if (it != entries_.end() && it->second != value)
        throw Error("conflicting values for intersection entry (" + a + "," + b + "," + c + ")");
    entries_[k] = value;
}

bool TrilinearForm::knows(const std::string& a, const std::string& b,
                          const std::string& c) const {
    return entries_.count(key(a, b, c)) != 0;
}

Rational TrilinearForm::triple(const std::string& a, const std::string& b,
                               const std::string& c) const {
    auto it = entries_.find(key(a, b, c));
    if (it == entries_.end())
        throw UnknownEntry("(" + a + "," + b + "," + c + ")");
    return it->second;
}

// ---- operations -----------------------------------------------------------

DivisorClass add(const DivisorClass& a, const DivisorClass& b) {
    if (a.basis() != b.basis())
        throw BasisMismatch("add over different bases");
    std::vector<ParamLin> coeffs;
    coeffs.reserve(a.coeffs().size());
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        coeffs.push_back(a.coeffs()[i] + b.coeffs()[i]);
    return DivisorClass(a.basis(), std::move(coeffs));
}

DivisorClass scale(const ParamLin& c, const DivisorClass& a) {
    std::vector<ParamLin> coeffs;
    coeffs.reserve(a.coeffs().size());
    for (const auto& x : a.coeffs()) coeffs.push_back(c * x);
    return DivisorClass(a.basis(), std::move(coeffs));
}

namespace {

/// Expands `symbol` over `target` by substituting relations (depth-limited
/// so inconsistent relation sets terminate).
DivisorClass expand_symbol(const std::string& symbol,
                           const std::vector<LinearRelation>& relations, const Basis& target,
                           std::size_t depth) {
    if (target.has(symbol)) return DivisorClass::unit(target, symbol);
    if (depth > relations.size())
        throw InsufficientRelations("substitution for '" + symbol + "' does not terminate");
    for (const auto& rel : relations) {
        if (rel.lhs != symbol) continue;
        DivisorClass result = DivisorClass::zero(target);
        const auto& rhs = rel.rhs;
        for (std::size_t i = 0; i < rhs.basis().rank(); ++i) {
            if (rhs.coeffs()[i].is_zero()) continue;
            DivisorClass piece =
                expand_symbol(rhs.basis().symbol(i), relations, target, depth + 1);
            result = add(result, scale(rhs.coeffs()[i], piece));
        }
        return result;
    }
    throw InsufficientRelations("no relation expresses '" + symbol + "' in the target basis");
}

}  // namespace

DivisorClass change_basis(const DivisorClass& a, const std::vector<LinearRelation>& relations,
                          const Basis& target) {
    DivisorClass result = DivisorClass::zero(target);
    for (std::size_t i = 0; i < a.basis().rank(); ++i) {
        if (a.coeffs()[i].is_zero()) continue;
        DivisorClass piece = expand_symbol(a.basis().symbol(i), relations, target, 0);
        result = add(result, scale(a.coeffs()[i], piece));
    }
    return result;
}

Rational triple(const TrilinearForm& form, const std::string& a, const std::string& b,
                const std::string& c) {
    return form.triple(a, b, c);
}

DivisorClass pullback_to_pt(const DivisorClass& a) {
    if (a.basis().has_zeta())
        throw BasisMismatch("pullback of a class already over a zeta basis");
    std::vector<ParamLin> coeffs;
    coeffs.reserve(a.coeffs().size() + 1);
    coeffs.emplace_back();  // ζ-coefficient 0
    coeffs.insert(coeffs.end(), a.coeffs().begin(), a.coeffs().end());
    return DivisorClass(a.basis().with_zeta(), std::move(coeffs));
}

DivisorClass zeta_unit(const Basis& x_basis) {
    return DivisorClass::unit(x_basis.has_zeta() ? x_basis : x_basis.with_zeta(), kZeta);
}

}  // namespace fanobig
