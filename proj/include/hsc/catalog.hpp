#pragma once

#include <optional>

#include <json.hpp>

#include "hsc/complex_ops.hpp"

namespace hsc {

using Json = nlohmann::ordered_json;

// Model document wire format: exact scalars as strings ("p/q" or
// "p/q+r/s i"), multi-indices as strictly increasing "1,2,3" strings.
// Floats are rejected everywhere.

struct LoadedModel {
    std::shared_ptr<const ComplexModel> cm;
    std::map<std::string, Form> forms;
    Json document;
};

Json form_to_json(const Form& f);
Form form_from_json(const Json& j, int dim2n);

Json model_document(const LieAlgebraModel& model, const Mat& J,
                    const std::map<std::string, Form>& forms);

// Parses and fully validates (Jacobi, J^2 = -id, integrability); rejects
// unknown fields and any non-string scalar.
LoadedModel load_model(const Json& doc);
LoadedModel load_model_text(const std::string& text);

// Built-in models plus any *.json documents from $HSC_CATALOG_DIR
// (same-name documents override builtins).
std::vector<Json> catalog();
std::optional<LoadedModel> catalog_find(const std::string& name);

}  // namespace hsc
