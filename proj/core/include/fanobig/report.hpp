#pragma once

#include <string>
#include <vector>

#include "fanobig/certify.hpp"

namespace fanobig {

/// One table line (one registry row; subcases of an id share degree and
/// verdict).
struct TableRow {
    std::string id;
    std::string subcase;
    long anticanonical_degree = 0;
    Bigness verdict = Bigness::NotBig;
    std::string certificate_kind;
    std::string anchor;
    std::string description;
};

/// Evaluates every model of the registry (or an override list); rows sorted
/// by id then subcase. A verdict differing from the model's expected verdict
/// aborts with the failing id; every emitted anchor must appear in the
/// documentation map.
std::vector<TableRow> build_table();
std::vector<TableRow> build_table(const std::vector<FanoModel>& models);

/// Result of the degree-threshold check over a table.
struct ThresholdReport {
    /// Largest NotBig degree with a witness id, e.g. ("2-25", 32).
    std::string boundary_not_big_id;
    long boundary_not_big_degree = 0;
    /// Smallest Big degree with a witness id, e.g. ("2-26", 34).
    std::string boundary_big_id;
    long boundary_big_degree = 0;
};

/// Asserts verdict = Big ⟺ degree ≥ 34 on every row and reports the
/// boundary pair. Throws ThresholdViolation naming the offending row.
ThresholdReport check_threshold(const std::vector<TableRow>& rows);

/// Result of the conic-bundle discriminant check.
struct CorollaryReport {
    std::vector<std::string> not_big_ids;  // conic-bundle models with d_Δ > 0
    std::vector<std::string> big_ids;      // conic-bundle models, every d_Δ = 0
};

/// Over the models carrying a conic-bundle structure, asserts
/// NotBig ⟺ some discriminant degree > 0. Throws CorollaryViolation.
CorollaryReport check_corollary(const std::vector<TableRow>& rows);
CorollaryReport check_corollary(const std::vector<TableRow>& rows,
                                const std::vector<FanoModel>& models);

enum class TableFormat { Pretty, Tsv, Json };

/// Renders rows in the requested format; deterministic (JSON output is
/// byte-identical across runs).
std::string format_table(const std::vector<TableRow>& rows, TableFormat format);

}  // namespace fanobig
