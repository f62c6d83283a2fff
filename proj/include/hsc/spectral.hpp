#pragma once

#include "hsc/hermitian.hpp"

namespace hsc {

// Exact zero/nonzero splitting of each degree under the Laplacian
// Δ = {d, {d^c, Λ11}}: zero_basis spans ker Δ^m, nonzero_basis spans im Δ^m,
// where m is the least power at which the rank stabilizes.
struct SpectralDecomposition {
    GradedOperator delta;
    std::vector<Mat> zero_basis;     // per degree
    std::vector<Mat> nonzero_basis;  // per degree
    std::vector<int> stabilization;  // per degree
    bool equivariant = false;        // d and d^c map parts into matching parts

    // Projection of a onto the nonzero (resp. zero) part of its degree.
    Form project_nonzero(const Form& a) const;
    Form project_zero(const Form& a) const;
    bool in_nonzero_part(const Form& a) const;
};

SpectralDecomposition fitting_decompose(const HermitianSymplecticData& data);

struct ExactnessCertificate {
    Form beta_formula;  // (d^c Λ11 - Λ11 d^c) Δ^{-1} a, with d beta = a
    Form beta_direct;   // independent linear-solve primitive
};

// For closed a in the nonzero part, produce beta with d beta = a via the
// inverse of Δ on that part, cross-checked against a direct solve.
ExactnessCertificate nonzero_closed_is_exact(const HermitianSymplecticData& data,
                                             const SpectralDecomposition& dec, const Form& a);

struct PipelineStep {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct Ddc11PipelineReport {
    std::vector<PipelineStep> steps;
    bool pass = false;
    int dim_S = 0;  // d-closed, d^c-exact (1,1)-forms
};

// Stepwise replay of the (1,1) dd^c-lemma argument on the invariant complex:
// split into zero/nonzero parts, dd^c-exactness of the nonzero part via Δ^{-1},
// nilpotency descent on the zero part, exact-primitive vanishing.
Ddc11PipelineReport ddc11_pipeline(const HermitianSymplecticData& data);

}  // namespace hsc
