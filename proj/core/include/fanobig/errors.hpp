#pragma once

#include <stdexcept>
#include <string>

namespace fanobig {

/// Base class for every error raised by the engine.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// ---- lattice -------------------------------------------------------------

/// Two classes over different bases were combined.
struct BasisMismatch : Error {
    explicit BasisMismatch(const std::string& what) : Error("basis mismatch: " + what) {}
};

/// A product of two parameter-carrying expressions was requested.
/// All certificates are affine-linear in their parameters, so this is
/// rejected rather than expanded.
struct NonlinearParameterProduct : Error {
    explicit NonlinearParameterProduct(const std::string& what)
        : Error("nonlinear parameter product: " + what) {}
};

/// A basis change could not express every source symbol in target symbols.
struct InsufficientRelations : Error {
    explicit InsufficientRelations(const std::string& what)
        : Error("insufficient relations: " + what) {}
};

/// A trilinear form was evaluated on a triple it does not store.
/// Unknown entries are hard errors, never silent zeros.
struct UnknownEntry : Error {
    explicit UnknownEntry(const std::string& what) : Error("unknown intersection entry: " + what) {}
};

// ---- models ---------------------------------------------------------------

/// Lookup of a registry id (or subcase) that does not exist.
struct UnknownModel : Error {
    explicit UnknownModel(const std::string& what) : Error("unknown model: " + what) {}
};

// ---- enumerative ----------------------------------------------------------

/// A classical count evaluated to a negative number, i.e. the (d, g) input
/// lies outside the range where the generality hypotheses hold.
struct NegativeCount : Error {
    explicit NegativeCount(const std::string& what) : Error("negative count: " + what) {}
};

/// Two supposedly-identical computation routes disagreed.
struct InternalMismatch : Error {
    explicit InternalMismatch(const std::string& what) : Error("internal mismatch: " + what) {}
};

// ---- vmrt -----------------------------------------------------------------

/// The pushforward linear system has no unique solution.
struct SingularSystem : Error {
    explicit SingularSystem(const std::string& what) : Error("singular system: " + what) {}
};

/// A class constructor was handed a contraction of the wrong kind.
struct WrongContractionKind : Error {
    explicit WrongContractionKind(const std::string& what)
        : Error("wrong contraction kind: " + what) {}
};

/// A documented precondition of an operation does not hold.
struct PreconditionFailed : Error {
    explicit PreconditionFailed(const std::string& what) : Error("precondition failed: " + what) {}
};

// ---- certify --------------------------------------------------------------

/// Base class for certificate verification failures.
struct VerificationFailure : Error {
    explicit VerificationFailure(const std::string& what) : Error(what) {}
};

/// The summed class does not match the certificate's claimed form.
struct IdentityFails : VerificationFailure {
    explicit IdentityFails(const std::string& what)
        : VerificationFailure("identity fails: " + what) {}
};

/// A combination coefficient is not certified positive.
struct NonPositiveCoefficient : VerificationFailure {
    explicit NonPositiveCoefficient(const std::string& what)
        : VerificationFailure("non-positive coefficient: " + what) {}
};

/// The certificate's classes do not span the full lattice.
struct SpanDeficient : VerificationFailure {
    explicit SpanDeficient(const std::string& what)
        : VerificationFailure("span deficient: " + what) {}
};

/// The ζ-coefficient of a summed dagger class is not a certified-positive constant.
struct NonPositiveZeta : VerificationFailure {
    explicit NonPositiveZeta(const std::string& what)
        : VerificationFailure("non-positive zeta coefficient: " + what) {}
};

/// The declared residual is not a certified-nonnegative combination of
/// effective generators.
struct ResidualNotEffective : VerificationFailure {
    explicit ResidualNotEffective(const std::string& what)
        : VerificationFailure("residual not effective: " + what) {}
};

/// A named rule's applicability conditions fail for the model.
struct RuleInapplicable : VerificationFailure {
    explicit RuleInapplicable(const std::string& what)
        : VerificationFailure("rule inapplicable: " + what) {}
};

// ---- report ---------------------------------------------------------------

/// The Big ⟺ degree ≥ 34 threshold failed on some row.
struct ThresholdViolation : Error {
    explicit ThresholdViolation(const std::string& what)
        : Error("threshold violation: " + what) {}
};

/// The conic-bundle discriminant corollary failed on some row.
struct CorollaryViolation : Error {
    explicit CorollaryViolation(const std::string& what)
        : Error("corollary violation: " + what) {}
};

// ---- serialization ----------------------------------------------------------

/// Malformed JSON input (models override file, rational literals, ...).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

/// A `class --family` tag that names no family on the model.
struct UnknownFamily : Error {
    explicit UnknownFamily(const std::string& what) : Error("unknown family: " + what) {}
};

}  // namespace fanobig
