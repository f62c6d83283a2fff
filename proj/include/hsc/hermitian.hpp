#pragma once

#include <memory>

#include "hsc/complex_ops.hpp"

namespace hsc {

// Validated Hermitian symplectic datum: d-closed real 2-form omega whose
// (1,1)-part induces a positive definite metric h = omega11(., J.).
// Everything derived from it (Gram matrices, volume) is exact.
struct HermitianSymplecticData {
    std::shared_ptr<const ComplexModel> cm;
    Form omega;    // real, closed
    Form omega11;  // (1,1)-part
    Form alpha;    // (2,0)+(0,2)-part
    Mat h;         // metric on vectors, symmetric positive definite
    Mat h_inv;
    std::vector<Mat> gram;  // per degree, inner product on forms
    Form vol;               // (omega11)^n / n!

    int dim2n() const { return cm->model.dim2n; }
    int n() const { return cm->n(); }
    const GradedOperator& d() const { return cm->d; }
    const GradedOperator& dc() const { return cm->dc; }

    // <a,b> with conjugation on the second slot.
    Scalar inner(const Form& a, const Form& b) const;
};

HermitianSymplecticData validate_hs(std::shared_ptr<const ComplexModel> cm, const Form& omega);

// ∂∂̄ omega11; zero for every validly constructed datum (SKT property).
Form skt_check(const HermitianSymplecticData& data);

struct LefschetzOps {
    GradedOperator L, Lam, L11, Lam11;
};

// L = omega ∧ ., L11 = omega11 ∧ ., adjoints via Gram matrices.
LefschetzOps lefschetz_ops(const HermitianSymplecticData& data);

// Complex-linear Hodge star: a ∧ *(conj b) = <a,b> vol.
GradedOperator hodge_star(const HermitianSymplecticData& data);

// *B - (-1)^{r(r+1)/2} i^{p-q} (omega11)^{n-r} ∧ B / (n-r)!  for primitive B.
Form weil_residual(const HermitianSymplecticData& data, const Form& B, int p, int q);

// Δ = {d, {d^c, Λ11}}.
GradedOperator hs_laplacian(const HermitianSymplecticData& data);

// a = Σ L^s B_s with Λ B_s = 0; uses omega11 operators when use_omega11.
std::vector<std::pair<int, Form>> primitive_decompose(const HermitianSymplecticData& data,
                                                      const Form& a, bool use_omega11 = true);

}  // namespace hsc
