#include "fanobig/param.hpp"

#include <sstream>

#include "fanobig/errors.hpp"

namespace fanobig {

ParamLin ParamLin::param(const PosParam& p, const Rational& coeff) {
    ParamLin e;
    if (!coeff.is_zero()) e.terms_[p.name] = Term{coeff, p.nonneg};
    return e;
}

bool ParamLin::certified_positive() const {
    if (constant_.sign() < 0) return false;
    bool strict_witness = constant_.sign() > 0;
    for (const auto& [name, t] : terms_) {
        (void)name;
        if (t.coeff.sign() < 0) return false;
        if (!t.nonneg && t.coeff.sign() > 0) strict_witness = true;
    }
    return strict_witness;
}

bool ParamLin::certified_nonnegative() const {
    if (constant_.sign() < 0) return false;
    for (const auto& [name, t] : terms_) {
        (void)name;
        if (t.coeff.sign() < 0) return false;
    }
    return true;
}

Rational ParamLin::evaluate(const std::map<std::string, Rational>& assignment) const {
    Rational value = constant_;
    for (const auto& [name, t] : terms_) {
        auto it = assignment.find(name);
        if (it == assignment.end()) throw Error("unassigned parameter '" + name + "'");
        value += t.coeff * it->second;
    }
    return value;
}

ParamLin ParamLin::operator-() const {
    ParamLin e;
    e.constant_ = -constant_;
    for (const auto& [name, t] : terms_) e.terms_[name] = Term{-t.coeff, t.nonneg};
    return e;
}

ParamLin& ParamLin::operator+=(const ParamLin& o) {
    constant_ += o.constant_;
    for (const auto& [name, t] : o.terms_) {
        auto it = terms_.find(name);
        if (it == terms_.end()) {
            terms_[name] = t;
        } else {
            if (it->second.nonneg != t.nonneg)
                throw Error("parameter '" + name + "' declared with conflicting positivity");
            it->second.coeff += t.coeff;
        }
    }
    normalize();
    return *this;
}

ParamLin& ParamLin::operator-=(const ParamLin& o) { return *this += -o; }

ParamLin operator*(const ParamLin& a, const ParamLin& b) {
    if (!a.is_constant() && !b.is_constant())
        throw NonlinearParameterProduct("(" + a.str() + ")·(" + b.str() + ")");
    const ParamLin& lin = a.is_constant() ? b : a;
    const Rational& c = a.is_constant() ? a.constant() : b.constant();
    ParamLin e;
    e.constant_ = lin.constant_ * c;
    if (!c.is_zero())
        for (const auto& [name, t] : lin.terms_)
            e.terms_[name] = ParamLin::Term{t.coeff * c, t.nonneg};
    return e;
}

bool operator==(const ParamLin& a, const ParamLin& b) {
    if (a.constant_ != b.constant_) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (auto ita = a.terms_.begin(), itb = b.terms_.begin(); ita != a.terms_.end();
         ++ita, ++itb) {
        if (ita->first != itb->first) return false;
        if (ita->second.coeff != itb->second.coeff) return false;
    }
    return true;
}

std::string ParamLin::str() const {
    std::ostringstream os;
    bool first = true;
    if (!constant_.is_zero() || terms_.empty()) {
        os << constant_.str();
        first = false;
    }
    for (const auto& [name, t] : terms_) {
        if (t.coeff.sign() >= 0 && !first) os << "+";
        if (t.coeff == Rational(-1)) {
            os << "-";
        } else if (t.coeff != Rational(1)) {
            os << t.coeff.str();
        }
        os << name;
        first = false;
    }
    return os.str();
}

void ParamLin::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.coeff.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

}  // namespace fanobig
