#include "fanobig/report.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <variant>

#include "fanobig/errors.hpp"
#include "fanobig/json_io.hpp"

namespace fanobig {

namespace {

long id_number(const std::string& id) {
    return std::stol(id.substr(id.find('-') + 1));
}

void sort_rows(std::vector<TableRow>& rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
        long na = id_number(a.id);
        long nb = id_number(b.id);
        if (na != nb) return na < nb;
        return a.subcase < b.subcase;
    });
}

}  // namespace

std::vector<TableRow> build_table() { return build_table(registry()); }

std::vector<TableRow> build_table(const std::vector<FanoModel>& models) {
    std::vector<TableRow> rows;
    rows.reserve(models.size());
    const auto& docs = anchor_documentation();
    for (const FanoModel& model : models) {
        Verdict verdict = evaluate_model(model);
        if (verdict.value != model.expected_verdict)
            throw InternalMismatch(model.key() + " verified to " +
                                   bigness_name(verdict.value) + " but the registry expects " +
                                   bigness_name(model.expected_verdict));
        if (!docs.count(model.table_anchor))
            throw InternalMismatch(model.key() + " emits undocumented anchor \"" +
                                   model.table_anchor + "\"");
        rows.push_back(TableRow{model.id, model.subcase, model.anticanonical_degree,
                                verdict.value, recipe_kind_name(model.recipe),
                                model.table_anchor, model.description});
    }
    sort_rows(rows);
    return rows;
}

ThresholdReport check_threshold(const std::vector<TableRow>& rows) {
    ThresholdReport report;
    bool have_not_big = false;
    bool have_big = false;
    for (const TableRow& row : rows) {
        bool is_big = row.verdict == Bigness::Big;
        if (is_big != (row.anticanonical_degree >= 34))
            throw ThresholdViolation(row.id + row.subcase + " of degree " +
                                     std::to_string(row.anticanonical_degree) + " is " +
                                     bigness_name(row.verdict));
        if (is_big) {
            if (!have_big || row.anticanonical_degree < report.boundary_big_degree) {
                have_big = true;
                report.boundary_big_id = row.id;
                report.boundary_big_degree = row.anticanonical_degree;
            }
        } else {
            if (!have_not_big ||
                row.anticanonical_degree > report.boundary_not_big_degree) {
                have_not_big = true;
                report.boundary_not_big_id = row.id;
                report.boundary_not_big_degree = row.anticanonical_degree;
            }
        }
    }
    if (!have_not_big || !have_big)
        throw ThresholdViolation("table must contain rows on both sides of the threshold");
    return report;
}

CorollaryReport check_corollary(const std::vector<TableRow>& rows) {
    return check_corollary(rows, registry());
}

CorollaryReport check_corollary(const std::vector<TableRow>& rows,
                                const std::vector<FanoModel>& models) {
    CorollaryReport report;
    for (const TableRow& row : rows) {
        FanoModel model = get_from(models, row.id, row.subcase);
        bool has_conic_structure = false;
        bool has_discriminant = false;
        for (const ContractionData& c : model.contractions) {
            if (const auto* cb = std::get_if<ConicBundleData>(&c)) {
                has_conic_structure = true;
                if (cb->d_delta > 0) has_discriminant = true;
            }
        }
        if (!has_conic_structure) continue;
        if (row.verdict == Bigness::NotBig && !has_discriminant)
            throw CorollaryViolation(row.id + row.subcase +
                                     " is NotBig yet every conic-bundle structure has an "
                                     "empty discriminant");
        if (row.verdict == Bigness::Big && has_discriminant)
            throw CorollaryViolation(row.id + row.subcase +
                                     " is Big yet carries a conic-bundle structure with a "
                                     "nonempty discriminant");
        auto& bucket = has_discriminant ? report.not_big_ids : report.big_ids;
        if (bucket.empty() || bucket.back() != row.id) bucket.push_back(row.id);
    }
    return report;
}

std::string format_table(const std::vector<TableRow>& rows, TableFormat format) {
    if (format == TableFormat::Json) {
        return rows_to_json(rows).dump(2) + "\n";
    }

    const std::array<std::string, 6> header = {"model", "degree", "verdict",
                                               "certificate", "anchor", "description"};
    auto cells = [](const TableRow& row) {
        return std::array<std::string, 6>{
            row.id + row.subcase,           std::to_string(row.anticanonical_degree),
            bigness_name(row.verdict),      row.certificate_kind,
            row.anchor,                     row.description};
    };

    std::ostringstream out;
    if (format == TableFormat::Tsv) {
        for (std::size_t c = 0; c < header.size(); ++c)
            out << header[c] << (c + 1 < header.size() ? '\t' : '\n');
        for (const TableRow& row : rows) {
            auto line = cells(row);
            for (std::size_t c = 0; c < line.size(); ++c)
                out << line[c] << (c + 1 < line.size() ? '\t' : '\n');
        }
        return out.str();
    }

    // Pretty: column-aligned, description last and unpadded.
    std::array<std::size_t, 6> width{};
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const TableRow& row : rows) {
        auto line = cells(row);
        for (std::size_t c = 0; c + 1 < line.size(); ++c)
            width[c] = std::max(width[c], line[c].size());
    }
    auto emit = [&](const std::array<std::string, 6>& line) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (c + 1 < line.size()) {
                out << line[c] << std::string(width[c] - line[c].size() + 2, ' ');
            } else {
                out << line[c] << '\n';
            }
        }
    };
    emit(header);
    std::array<std::string, 6> rule;
    for (std::size_t c = 0; c < rule.size(); ++c) rule[c] = std::string(width[c], '-');
    emit(rule);
    for (const TableRow& row : rows) emit(cells(row));
    return out.str();
}

}  // namespace fanobig
