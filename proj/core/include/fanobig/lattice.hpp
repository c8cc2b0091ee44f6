#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "fanobig/param.hpp"

namespace fanobig {

/// Reserved symbol for the tautological class O_{ℙ(T_X)}(1).
inline const std::string kZeta = "zeta";

/// Ordered list of named lattice generators, e.g. ["zeta","H","D"] for
/// N¹(ℙ(T_X)) or ["H","D"] for N¹(X).
///
/// Invariants: symbols distinct; "zeta", when present, is the first symbol.
class Basis {
public:
    explicit Basis(std::vector<std::string> symbols);

    std::size_t rank() const { return symbols_.size(); }
    const std::vector<std::string>& symbols() const { return symbols_; }
    const std::string& symbol(std::size_t i) const { return symbols_.at(i); }
    bool has(const std::string& symbol) const;
    /// Index of `symbol`; throws BasisMismatch when absent.
    std::size_t index_of(const std::string& symbol) const;
    bool has_zeta() const { return !symbols_.empty() && symbols_.front() == kZeta; }

    /// ["zeta"] ++ symbols — the ℙ(T_X) basis over this X basis.
    Basis with_zeta() const;
    /// Drops the leading "zeta"; requires has_zeta().
    Basis without_zeta() const;

    friend bool operator==(const Basis& a, const Basis& b) { return a.symbols_ == b.symbols_; }
    friend bool operator!=(const Basis& a, const Basis& b) { return !(a == b); }

private:
    std::vector<std::string> symbols_;
};

/// A divisor class: one ParamLin coefficient per basis symbol.
/// Equality is coefficient-wise (after the ParamLins' own normalization).
class DivisorClass {
public:
    DivisorClass(Basis basis, std::vector<ParamLin> coeffs);

    static DivisorClass zero(const Basis& basis);
    /// The class 1·symbol.
    static DivisorClass unit(const Basis& basis, const std::string& symbol);
    /// Builds from a sparse symbol → coefficient map (absent symbols are 0).
    static DivisorClass make(const Basis& basis, const std::map<std::string, ParamLin>& coeffs);

    const Basis& basis() const { return basis_; }
    const std::vector<ParamLin>& coeffs() const { return coeffs_; }
    const ParamLin& coeff(const std::string& symbol) const;
    const ParamLin& coeff(std::size_t i) const { return coeffs_.at(i); }

    bool is_zero() const;
    /// True when no coefficient carries a parameter.
    bool is_constant() const;

    /// Coefficient-wise parameter substitution.
    DivisorClass evaluate(const std::map<std::string, Rational>& assignment) const;

    friend bool operator==(const DivisorClass& a, const DivisorClass& b);
    friend bool operator!=(const DivisorClass& a, const DivisorClass& b) { return !(a == b); }

    /// Canonical display, e.g. "2ζ-2H+2D" (zeta rendered as ζ).
    std::string str() const;

private:
    Basis basis_;
    std::vector<ParamLin> coeffs_;
};

/// Rewrite rule lhs ∼ rhs used for basis changes, e.g. D ∼ 2H−h.
/// The right-hand side must have constant coefficients.
struct LinearRelation {
    LinearRelation(std::string lhs, DivisorClass rhs);

    std::string lhs;
    DivisorClass rhs;
};

/// The symmetric trilinear intersection form of a threefold.
///
/// Entries are stored under unordered symbol triples; a missing triple is
/// Unknown, and evaluating one is a hard error (never a silent zero).
class TrilinearForm {
public:
    TrilinearForm() = default;

    /// Records an entry; re-setting a triple to a different value throws.
    void set(const std::string& a, const std::string& b, const std::string& c,
             const Rational& value);
    bool knows(const std::string& a, const std::string& b, const std::string& c) const;
    /// Throws UnknownEntry when the triple is not stored.
    Rational triple(const std::string& a, const std::string& b, const std::string& c) const;

    const std::map<std::array<std::string, 3>, Rational>& entries() const { return entries_; }

private:
    static std::array<std::string, 3> key(const std::string& a, const std::string& b,
                                          const std::string& c);
    std::map<std::array<std::string, 3>, Rational> entries_;
};

// ---- operations -------------------------------------------------------------

/// Coefficient-wise sum; throws BasisMismatch when the bases differ.
DivisorClass add(const DivisorClass& a, const DivisorClass& b);

/// Coefficient-wise product c·a. Throws NonlinearParameterProduct when c and
/// some coefficient of a both carry parameters.
DivisorClass scale(const ParamLin& c, const DivisorClass& a);

/// Rewrites `a` over `target` by substituting the relations, e.g.
/// 2ζ−2H+2D with D ∼ 2H−h becomes 2ζ+2H−2h. Throws InsufficientRelations
/// when some source symbol cannot be expressed in target symbols.
DivisorClass change_basis(const DivisorClass& a, const std::vector<LinearRelation>& relations,
                          const Basis& target);

/// The form evaluated on three symbols (order-independent).
Rational triple(const TrilinearForm& form, const std::string& a, const std::string& b,
                const std::string& c);

/// Π*: embeds a class on X into the ℙ(T_X) lattice ["zeta"] ++ basis(X)
/// with ζ-coefficient 0.
DivisorClass pullback_to_pt(const DivisorClass& a);

/// ζ-unit convenience: the class 1·ζ over ["zeta"] ++ basis(X).
DivisorClass zeta_unit(const Basis& x_basis);

}  // namespace fanobig
