#pragma once

#include <map>
#include <string>

#include "fanobig/rational.hpp"

namespace fanobig {

/// A named certificate parameter.
///
/// Semantically ranges over strictly positive rationals, or over
/// nonnegative rationals when `nonneg` is set (slack parameters).
/// Names are unique within one certificate context.
struct PosParam {
    std::string name;
    bool nonneg = false;

    static PosParam positive(std::string name) { return {std::move(name), false}; }
    static PosParam nonnegative(std::string name) { return {std::move(name), true}; }
};

/// Affine-linear expression in certificate parameters:
/// constant + Σ coeff·param.
///
/// "Certified positive": constant ≥ 0, every term coefficient ≥ 0, and at
/// least one of the constant or a strictly-positive-parameter coefficient
/// is > 0. "Certified nonnegative": constant ≥ 0 and all coefficients ≥ 0.
/// Products of two parameter-carrying expressions are rejected
/// (NonlinearParameterProduct); everything in the engine stays affine-linear.
class ParamLin {
public:
    struct Term {
        Rational coeff;
        bool nonneg = false;  // positivity flavor of the parameter
    };

    ParamLin() = default;
    ParamLin(Rational c) : constant_(std::move(c)) {}  // NOLINT(google-explicit-constructor)
    ParamLin(int c) : constant_(c) {}                  // NOLINT
    ParamLin(long c) : constant_(c) {}                 // NOLINT

    /// The expression coeff·p.
    static ParamLin param(const PosParam& p, const Rational& coeff = Rational(1));

    const Rational& constant() const { return constant_; }
    const std::map<std::string, Term>& terms() const { return terms_; }
    bool is_constant() const { return terms_.empty(); }
    bool is_zero() const { return constant_.is_zero() && terms_.empty(); }

    bool certified_positive() const;
    bool certified_nonnegative() const;

    /// Substitutes values for all parameters. Every parameter appearing in
    /// the expression must be assigned; throws Error otherwise.
    Rational evaluate(const std::map<std::string, Rational>& assignment) const;

    ParamLin operator-() const;
    ParamLin& operator+=(const ParamLin& o);
    ParamLin& operator-=(const ParamLin& o);

    friend ParamLin operator+(ParamLin a, const ParamLin& b) { return a += b; }
    friend ParamLin operator-(ParamLin a, const ParamLin& b) { return a -= b; }

    /// Product; throws NonlinearParameterProduct unless at least one factor
    /// is constant.
    friend ParamLin operator*(const ParamLin& a, const ParamLin& b);

    friend bool operator==(const ParamLin& a, const ParamLin& b);
    friend bool operator!=(const ParamLin& a, const ParamLin& b) { return !(a == b); }

    /// Canonical display, e.g. "3", "k", "2k+1", "20+c", "-2k+3m".
    std::string str() const;

private:
    void normalize();

    Rational constant_;
    std::map<std::string, Term> terms_;  // keyed by parameter name; no zero coeffs
};

}  // namespace fanobig
