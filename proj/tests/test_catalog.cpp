#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "hsc/catalog.hpp"

using namespace hsc;

TEST_CASE("catalog contains the required models") {
    auto docs = catalog();
    std::vector<std::string> names;
    for (const auto& d : docs) names.push_back(d.at("name").get<std::string>());
    for (const char* required : {"torus6", "torus6_rotj", "iwasawa", "kt_x_t2", "h5_x_r", "e2e2"})
        CHECK(std::find(names.begin(), names.end(), required) != names.end());
}

TEST_CASE("torus6 ships the standard reference form") {
    auto lm = *catalog_find("torus6");
    Form omega = Form::zero(6, 2);
    omega.set(0b000011u, Scalar(1));  // e^{1,2}
    omega.set(0b001100u, Scalar(1));  // e^{3,4}
    omega.set(0b110000u, Scalar(1));  // e^{5,6}
    CHECK(lm.forms.at("omega") == omega);
}

TEST_CASE("every catalog document round-trips byte-identically") {
    for (const auto& doc : catalog()) {
        std::string text = doc.dump(2);
        LoadedModel lm = load_model_text(text);
        CHECK(lm.document.dump(2) == text);
        // and a second cycle is a fixed point
        CHECK(load_model_text(lm.document.dump(2)).document.dump(2) == text);
    }
}

TEST_CASE("floats are rejected everywhere") {
    auto doc = catalog_find("torus6")->document;
    doc["forms"]["omega"]["coeffs"]["1,2"] = "0.5";
    CHECK_THROWS_AS(load_model(doc), parse_error);
    doc["forms"]["omega"]["coeffs"]["1,2"] = 0.5;  // raw JSON number
    CHECK_THROWS_AS(load_model(doc), parse_error);
    auto doc2 = catalog_find("torus6")->document;
    doc2["complex_structure"][0][0] = "1e-3";
    CHECK_THROWS_AS(load_model(doc2), parse_error);
}

TEST_CASE("unknown fields are rejected by name") {
    auto doc = catalog_find("torus6")->document;
    doc["extra_field"] = 1;
    CHECK_THROWS_WITH_AS(load_model(doc), doctest::Contains("extra_field"), parse_error);
}

TEST_CASE("jacobi-violating documents are rejected naming a triple") {
    auto doc = catalog_find("torus6")->document;
    doc["structure_constants"] = Json::array({Json::array({1, 2, 3, "1"}),
                                              Json::array({1, 3, 4, "1"}),
                                              Json::array({2, 3, 5, "1"}),
                                              Json::array({4, 5, 1, "1"})});
    CHECK_THROWS_WITH_AS(load_model(doc), doctest::Contains("Jacobi"), model_error);
}

TEST_CASE("malformed input diagnostics") {
    CHECK_THROWS_AS(load_model_text("{not json"), parse_error);
    auto doc = catalog_find("torus6")->document;
    doc.erase("complex_structure");
    CHECK_THROWS_AS(load_model(doc), parse_error);
    auto doc2 = catalog_find("torus6")->document;
    doc2["forms"]["omega"]["coeffs"]["2,1"] = "1";  // non-increasing index
    CHECK_THROWS_AS(load_model(doc2), parse_error);
    auto doc3 = catalog_find("torus6")->document;
    doc3["forms"]["omega"]["coeffs"]["1,2,3"] = "1";  // degree mismatch
    CHECK_THROWS_AS(load_model(doc3), parse_error);
}

TEST_CASE("catalog override directory") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "hsc_catalog_test";
    fs::create_directories(dir);
    // override torus6 with a renamed copy plus a brand-new model
    auto doc = catalog_find("torus6")->document;
    doc["name"] = "custom_abelian";
    std::ofstream(dir / "custom.json") << doc.dump(2);
    setenv("HSC_CATALOG_DIR", dir.c_str(), 1);
    auto found = catalog_find("custom_abelian");
    unsetenv("HSC_CATALOG_DIR");
    fs::remove_all(dir);
    REQUIRE(found.has_value());
    CHECK(found->document.at("name") == "custom_abelian");
    // and without the env var it is gone again
    CHECK_FALSE(catalog_find("custom_abelian").has_value());
}

TEST_CASE("form serialization round-trip with gaussian-rational coefficients") {
    Form f = Form::zero(6, 2);
    f.set(0b000101u, Scalar(Rat(-7, 3), Rat(1, 2)));
    f.set(0b100001u, Scalar(Rat(0), Rat(-5)));
    Json j = form_to_json(f);
    CHECK(form_from_json(j, 6) == f);
    CHECK(form_to_json(form_from_json(j, 6)).dump() == j.dump());
}

TEST_CASE("every catalog model loads with a validated complex structure") {
    for (const auto& doc : catalog()) {
        auto lm = load_model(doc);
        CHECK(lm.cm != nullptr);
        CHECK((lm.cm->d * lm.cm->d).is_zero());
        CHECK(lm.cm->del + lm.cm->delbar == lm.cm->d);
    }
}
