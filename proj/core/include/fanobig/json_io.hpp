#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fanobig/report.hpp"

namespace fanobig {

using Json = nlohmann::ordered_json;

// Serialization (deterministic field order throughout).
Json to_json(const Rational& r);
Json to_json(const ParamLin& c);
Json to_json(const DivisorClass& cls);
Json to_json(const FamilyData& fd);
Json to_json(const ClassTerm& term);
Json to_json(const SimpleRecipe& recipe);
Json to_json(const CertificateRecipe& recipe);
Json to_json(const ContractionData& contraction);
Json to_json(const FanoModel& model);
Json to_json(const Verdict& verdict);
Json to_json(const TableRow& row);
Json rows_to_json(const std::vector<TableRow>& rows);

// Parsing (ParseError on malformed input). Parameter positivity is
// declared per model under "parameters": [{"name","positivity"}]; the
// declarations context resolves names inside coefficient objects.
class ParamDeclarations {
public:
    void declare(const std::string& name, bool nonneg);
    PosParam resolve(const std::string& name) const;  // default: strictly positive

private:
    std::map<std::string, bool> nonneg_;
};

Rational rational_from_json(const Json& j);
ParamLin paramlin_from_json(const Json& j, const ParamDeclarations& params);
DivisorClass class_from_json(const Json& j, const ParamDeclarations& params);
FamilyData family_from_json(const Json& j);
ClassTerm term_from_json(const Json& j, const Basis& x_basis, const ParamDeclarations& params);
CertificateRecipe recipe_from_json(const Json& j, const Basis& x_basis,
                                   const ParamDeclarations& params);
ContractionData contraction_from_json(const Json& j, const Basis& x_basis);
FanoModel model_from_json(const Json& j);

/// Parses a JSON array of model records (the --models override format).
std::vector<FanoModel> models_from_json(const Json& j);
std::vector<FanoModel> load_models_file(const std::string& path);

}  // namespace fanobig
