#pragma once

#include "hsc/exterior.hpp"

namespace hsc {

// Bidegree machinery for an almost complex structure J (2n x 2n rational,
// J^2 = -id). Covector (1,0)/(0,1) projectors are P = (id ∓ i J^t)/2,
// extended multiplicatively to all degrees.
struct BidegreeTable {
    int dim2n = 0;
    Mat J;  // real entries
    // proj[k] maps (p) -> projector matrix onto A^{p,k-p} within degree k.
    std::vector<std::vector<Mat>> proj;

    BidegreeTable(int dim2n, const Mat& J);

    const Mat& projector(int p, int q) const;
    GradedOperator projector_op(int p, int q) const;

    // I acting as i^{p-q} on (p,q)-components, and its inverse.
    GradedOperator i_action_op() const;
    GradedOperator i_action_inverse_op() const;
};

struct JValidationReport {
    bool square_ok = false;
    bool integrable = false;
    // (0,2)-part of d on the (1,0)-projection of each generator; first nonzero one.
    Form integrability_residual;
    bool pass() const { return square_ok && integrable; }
    std::string summary() const;
};

JValidationReport validate_complex_structure(const LieAlgebraModel& model, const Mat& J);

struct BigradedForm {
    int total_degree = 0;
    std::map<std::pair<int, int>, Form> components;  // only nonzero ones

    Form component(int p, int q, int dim2n) const;
    Form sum(int dim2n) const;
};

BigradedForm bidegree_decompose(const Form& a, const BidegreeTable& bt);

Form i_action(const Form& a, const BidegreeTable& bt);

// A validated (model, J) pair with the derived differentials.
struct ComplexModel {
    LieAlgebraModel model;
    BidegreeTable bt;
    GradedOperator d, del, delbar, dc;

    ComplexModel(LieAlgebraModel model, const Mat& J);  // throws validation_error

    int n() const { return model.dim2n / 2; }
};

// Standalone constructors (each validates integrability).
GradedOperator d_c(const LieAlgebraModel& model, const Mat& J);
std::pair<GradedOperator, GradedOperator> del_delbar(const LieAlgebraModel& model, const Mat& J);

}  // namespace hsc
