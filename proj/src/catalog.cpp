#include "hsc/catalog.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace hsc {

Json form_to_json(const Form& f) {
    Json j = Json::object();
    j["degree"] = f.degree;
    Json coeffs = Json::object();
    for (const auto& [m, c] : f.coeffs) coeffs[multi_index_str(m)] = scalar_str(c);
    j["coeffs"] = coeffs;
    return j;
}

static void expect_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : keys)
            if (it.key() == k) known = true;
        if (!known) throw parse_error("unknown field \"" + it.key() + "\" in " + where);
    }
}

static std::string scalar_field(const Json& j, const std::string& where) {
    if (!j.is_string())
        throw parse_error("scalar in " + where + " must be an exact string (floats are forbidden)");
    return j.get<std::string>();
}

Form form_from_json(const Json& j, int dim2n) {
    expect_keys(j, {"degree", "coeffs"}, "form");
    if (!j.contains("degree") || !j.contains("coeffs")) throw parse_error("form needs degree and coeffs");
    int degree = j.at("degree").get<int>();
    Form f = Form::zero(dim2n, degree);
    for (auto it = j.at("coeffs").begin(); it != j.at("coeffs").end(); ++it) {
        uint32_t mask = parse_multi_index(it.key(), dim2n);
        if (std::popcount(mask) != degree)
            throw parse_error("multi-index " + it.key() + " does not match form degree");
        f.set(mask, parse_scalar(scalar_field(it.value(), "form coefficient")));
    }
    return f;
}

Json model_document(const LieAlgebraModel& model, const Mat& J,
                    const std::map<std::string, Form>& forms) {
    Json j = Json::object();
    j["schema_version"] = 1;
    j["name"] = model.name;
    j["dim"] = model.dim2n;
    Json sc = Json::array();
    for (const auto& [key, val] : model.c) {
        auto [i, jj, k] = key;
        sc.push_back(Json::array({i, jj, k, scalar_str(val)}));
    }
    j["structure_constants"] = sc;
    Json rows = Json::array();
    for (int r = 0; r < J.rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < J.cols; ++c) {
            if (J.at(r, c).im != 0) throw parse_error("complex structure matrix must be real");
            row.push_back(rat_str(J.at(r, c).re));
        }
        rows.push_back(row);
    }
    j["complex_structure"] = rows;
    if (!forms.empty()) {
        Json fj = Json::object();
        for (const auto& [name, f] : forms) fj[name] = form_to_json(f);
        j["forms"] = fj;
    }
    return j;
}

LoadedModel load_model(const Json& doc) {
    expect_keys(doc, {"schema_version", "name", "dim", "structure_constants", "complex_structure", "forms"},
                "model document");
    for (const char* req : {"schema_version", "name", "dim", "structure_constants", "complex_structure"})
        if (!doc.contains(req)) throw parse_error(std::string("model document missing field ") + req);
    if (doc.at("schema_version").get<int>() != 1) throw parse_error("unsupported schema_version");
    int dim = doc.at("dim").get<int>();
    std::string name = doc.at("name").get<std::string>();

    std::map<std::tuple<int, int, int>, Scalar> constants;
    for (const Json& e : doc.at("structure_constants")) {
        if (!e.is_array() || e.size() != 4) throw parse_error("structure constant entries are [i,j,k,scalar]");
        int i = e[0].get<int>(), j = e[1].get<int>(), k = e[2].get<int>();
        constants[{i, j, k}] = parse_scalar(scalar_field(e[3], "structure constants"));
    }
    LieAlgebraModel model = LieAlgebraModel::make(dim, name, std::move(constants));

    const Json& rows = doc.at("complex_structure");
    if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
        throw parse_error("complex_structure must be a " + std::to_string(dim) + "x" + std::to_string(dim) +
                          " matrix");
    Mat J(dim, dim);
    for (int r = 0; r < dim; ++r) {
        if (static_cast<int>(rows[r].size()) != dim) throw parse_error("complex_structure row has wrong length");
        for (int c = 0; c < dim; ++c) J.at(r, c) = Scalar(parse_rat(scalar_field(rows[r][c], "complex_structure")));
    }

    LoadedModel lm;
    lm.cm = std::make_shared<const ComplexModel>(model, J);  // validates J
    if (doc.contains("forms"))
        for (auto it = doc.at("forms").begin(); it != doc.at("forms").end(); ++it)
            lm.forms.emplace(it.key(), form_from_json(it.value(), dim));
    lm.document = model_document(model, J, lm.forms);
    return lm;
}

LoadedModel load_model_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(e.what());
    }
    return load_model(doc);
}

// --- built-in models ---

static Mat standard_j(int dim2n) {
    Mat J(dim2n, dim2n);
    for (int p = 0; p < dim2n / 2; ++p) {
        J.at(2 * p + 1, 2 * p) = Scalar(1);   // J e_{2p+1} = e_{2p+2}
        J.at(2 * p, 2 * p + 1) = Scalar(-1);  // J e_{2p+2} = -e_{2p+1}
    }
    return J;
}

static Form two_form(int dim2n, std::initializer_list<std::pair<std::pair<int, int>, Scalar>> entries) {
    Form f = Form::zero(dim2n, 2);
    for (const auto& [ij, c] : entries) f.set((1u << (ij.first - 1)) | (1u << (ij.second - 1)), c);
    return f;
}

static std::vector<Json> builtin_catalog() {
    std::vector<Json> docs;
    using K = std::tuple<int, int, int>;

    // Abelian 6-torus with the standard complex structure and Kähler form.
    {
        LieAlgebraModel m = LieAlgebraModel::make(6, "torus6", {});
        Form omega = two_form(6, {{{1, 2}, Scalar(1)}, {{3, 4}, Scalar(1)}, {{5, 6}, Scalar(1)}});
        docs.push_back(model_document(m, standard_j(6), {{"omega", omega}}));
    }

    // Torus with a non-standard rational J on the first block.
    {
        LieAlgebraModel m = LieAlgebraModel::make(6, "torus6_rotj", {});
        Mat J = standard_j(6);
        J.at(0, 0) = Scalar(Rat(3, 4));
        J.at(0, 1) = Scalar(Rat(25, 16));
        J.at(1, 0) = Scalar(-1);
        J.at(1, 1) = Scalar(Rat(-3, 4));
        Form omega = two_form(6, {{{1, 2}, Scalar(-1)}, {{3, 4}, Scalar(1)}, {{5, 6}, Scalar(1)}});
        docs.push_back(model_document(m, J, {{"omega", omega}}));
    }

    // Iwasawa: complex Heisenberg, d w3 = -w1 ∧ w2 in the complex frame.
    {
        LieAlgebraModel m = LieAlgebraModel::make(
            6, "iwasawa",
            {{K{1, 3, 5}, Scalar(1)}, {K{2, 4, 5}, Scalar(-1)}, {K{1, 4, 6}, Scalar(1)}, {K{2, 3, 6}, Scalar(1)}});
        docs.push_back(model_document(m, standard_j(6), {}));
    }

    // Kodaira-Thurston x T^2: 3-dim Heisenberg ⊕ R^3.
    {
        LieAlgebraModel m = LieAlgebraModel::make(6, "kt_x_t2", {{K{1, 2, 3}, Scalar(1)}});
        docs.push_back(model_document(m, standard_j(6), {}));
    }

    // 5-dim Heisenberg ⊕ R.
    {
        LieAlgebraModel m =
            LieAlgebraModel::make(6, "h5_x_r", {{K{1, 2, 5}, Scalar(1)}, {K{3, 4, 5}, Scalar(1)}});
        docs.push_back(model_document(m, standard_j(6), {}));
    }

    // e(2) ⊕ e(2): flat solvable model with an invariant Kähler structure;
    // the only catalog entry whose Laplacian has a nonzero part.
    {
        LieAlgebraModel m = LieAlgebraModel::make(6, "e2e2",
                                                  {{K{1, 2, 3}, Scalar(1)},
                                                   {K{1, 3, 2}, Scalar(-1)},
                                                   {K{4, 5, 6}, Scalar(1)},
                                                   {K{4, 6, 5}, Scalar(-1)}});
        Mat J(6, 6);
        auto set_pair = [&](int a, int b) {  // J e_a = e_b, J e_b = -e_a (1-based)
            J.at(b - 1, a - 1) = Scalar(1);
            J.at(a - 1, b - 1) = Scalar(-1);
        };
        set_pair(1, 4);
        set_pair(2, 3);
        set_pair(5, 6);
        Form omega = two_form(6, {{{1, 4}, Scalar(1)}, {{2, 3}, Scalar(1)}, {{5, 6}, Scalar(1)}});
        docs.push_back(model_document(m, J, {{"omega", omega}}));
    }
    return docs;
}

std::vector<Json> catalog() {
    std::vector<Json> docs = builtin_catalog();
    const char* dir = std::getenv("HSC_CATALOG_DIR");
    if (dir && *dir) {
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::directory_iterator(dir))
            if (entry.path().extension() == ".json") files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& path : files) {
            std::ifstream in(path);
            std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
            LoadedModel lm = load_model_text(text);
            std::string name = lm.document.at("name").get<std::string>();
            bool replaced = false;
            for (Json& d : docs)
                if (d.at("name") == name) {
                    d = lm.document;
                    replaced = true;
                }
            if (!replaced) docs.push_back(lm.document);
        }
    }
    return docs;
}

std::optional<LoadedModel> catalog_find(const std::string& name) {
    for (const Json& doc : catalog())
        if (doc.at("name") == name) return load_model(doc);
    return std::nullopt;
}

}  // namespace hsc
