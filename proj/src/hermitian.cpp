#include "hsc/hermitian.hpp"

#include <bit>

namespace hsc {

// omega(e_a, e_b) from the coefficient map of a 2-form (1-based a, b).
static Scalar eval2(const Form& w, int a, int b) {
    if (a == b) return Scalar(0);
    Scalar sign(1);
    if (a > b) {
        std::swap(a, b);
        sign = Scalar(-1);
    }
    return sign * w.coeff((1u << (a - 1)) | (1u << (b - 1)));
}

Scalar HermitianSymplecticData::inner(const Form& a, const Form& b) const {
    if (a.degree != b.degree) return Scalar(0);
    Mat r = a.to_column().transpose() * gram[a.degree] * b.to_column().conjugate();
    return r.at(0, 0);
}

HermitianSymplecticData validate_hs(std::shared_ptr<const ComplexModel> cm, const Form& omega) {
    const LieAlgebraModel& model = cm->model;
    int d2n = model.dim2n;
    int n = d2n / 2;
    if (omega.degree != 2 || omega.dim2n != d2n)
        throw precondition_error("validate_hs: omega must be a 2-form on the model");
    if (!omega.is_real()) throw validation_error("validate_hs: omega must be real");

    Form dw = cm->d.apply(omega);
    if (!dw.is_zero())
        throw validation_error("validate_hs: omega is not closed; d(omega) = " + dw.str());

    HermitianSymplecticData data;
    data.cm = cm;
    data.omega = omega;
    BigradedForm bg = bidegree_decompose(omega, cm->bt);
    data.omega11 = bg.component(1, 1, d2n);
    data.alpha = bg.component(2, 0, d2n) + bg.component(0, 2, d2n);

    // h(X,Y) = omega11(X, JY); real since omega is real and omega11 J-invariant.
    data.h = Mat(d2n, d2n);
    for (int a = 1; a <= d2n; ++a)
        for (int b = 1; b <= d2n; ++b) {
            Scalar v(0);
            for (int m = 1; m <= d2n; ++m) {
                const Scalar& jmb = cm->bt.J.at(m - 1, b - 1);
                if (!jmb.is_zero()) v += eval2(data.omega11, a, m) * jmb;
            }
            if (v.im != 0) throw validation_error("validate_hs: metric is not real");
            data.h.at(a - 1, b - 1) = v;
        }
    if (!(data.h - data.h.transpose()).is_zero())
        throw validation_error("validate_hs: metric is not symmetric");

    // Sylvester: all leading principal minors positive, exactly.
    for (int r = 1; r <= d2n; ++r) {
        Mat lead(r, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) lead.at(i, j) = data.h.at(i, j);
        Scalar minor = determinant(lead);
        if (!(minor.re > 0))
            throw validation_error("validate_hs: metric not positive definite, leading principal minor " +
                                   std::to_string(r) + " = " + scalar_str(minor));
    }
    data.h_inv = inverse(data.h);

    if (wedge_pow(omega, n).is_zero())
        throw validation_error("validate_hs: omega^n = 0 (degenerate)");

    Rat nfact(1);
    for (int i = 2; i <= n; ++i) nfact *= i;
    data.vol = Scalar(Rat(1) / nfact) * wedge_pow(data.omega11, n);
    if (data.vol.is_zero()) throw validation_error("validate_hs: volume form vanishes");

    // Gram matrices: <e^S, e^T> = det(h_inv[s_a, t_b]).
    const BasisTable& bt = BasisTable::get(d2n);
    data.gram.resize(d2n + 1);
    for (int k = 0; k <= d2n; ++k) {
        int dk = bt.dim(k);
        data.gram[k] = Mat(dk, dk);
        for (int si = 0; si < dk; ++si)
            for (int ti = 0; ti < dk; ++ti) {
                std::vector<int> S, T;
                for (int j = 0; j < d2n; ++j) {
                    if (bt.mask(k, si) & (1u << j)) S.push_back(j);
                    if (bt.mask(k, ti) & (1u << j)) T.push_back(j);
                }
                Mat g(k, k);
                for (int a = 0; a < k; ++a)
                    for (int b = 0; b < k; ++b) g.at(a, b) = data.h_inv.at(S[a], T[b]);
                data.gram[k].at(si, ti) = (k == 0) ? Scalar(1) : determinant(g);
            }
    }
    return data;
}

Form skt_check(const HermitianSymplecticData& data) {
    Form res = data.cm->del.apply(data.cm->delbar.apply(data.omega11));
    // A nonzero residual contradicts d(omega)=0; the datum was corrupted.
    if (!res.is_zero())
        throw std::logic_error("skt_check: nonzero residual on a validated datum: " + res.str());
    return res;
}

static GradedOperator gram_adjoint(const HermitianSymplecticData& data, const GradedOperator& L) {
    // Adjoint of a degree +2 operator: Λ_{k+2} = G_k^{-1} L_k^T G_{k+2}.
    GradedOperator lam = GradedOperator::zero(data.dim2n(), -L.shift);
    for (int k = 0; k + L.shift <= data.dim2n(); ++k)
        lam.blocks[k + L.shift] =
            inverse(data.gram[k]) * L.blocks[k].transpose() * data.gram[k + L.shift];
    return lam;
}

LefschetzOps lefschetz_ops(const HermitianSymplecticData& data) {
    LefschetzOps ops;
    ops.L = wedge_operator(data.omega);
    ops.L11 = wedge_operator(data.omega11);
    ops.Lam = gram_adjoint(data, ops.L);
    ops.Lam11 = gram_adjoint(data, ops.L11);
    return ops;
}

GradedOperator hodge_star(const HermitianSymplecticData& data) {
    int d2n = data.dim2n();
    const BasisTable& bt = BasisTable::get(d2n);
    uint32_t full = (1u << d2n) - 1;
    Scalar v = data.vol.coeff(full);
    GradedOperator star = GradedOperator::zero(d2n, d2n, -1);
    for (int k = 0; k <= d2n; ++k)
        for (int ti = 0; ti < bt.dim(k); ++ti)
            for (int si = 0; si < bt.dim(k); ++si) {
                // e^S ∧ *e^T = G[S,T] vol fixes the e^{S^c} coefficient.
                uint32_t S = bt.mask(k, si);
                int sigma = wedge_sign(S, full & ~S);
                star.blocks[k].at(bt.index(full & ~S), ti) += data.gram[k].at(si, ti) * v / Scalar(sigma);
            }
    return star;
}

Form weil_residual(const HermitianSymplecticData& data, const Form& B, int p, int q) {
    int n = data.n();
    int r = p + q;
    if (B.degree != r || r > n) throw precondition_error("weil_residual: need deg B = p+q <= n");
    LefschetzOps ops = lefschetz_ops(data);
    Form lam = ops.Lam11.apply(B);
    if (!lam.is_zero())
        throw precondition_error("weil_residual: B is not primitive, Λ11 B = " + lam.str());
    Mat bg = data.cm->bt.projector(p, q) * B.to_column();
    if (!(Form::from_column(data.dim2n(), r, bg) == B))
        throw precondition_error("weil_residual: B is not of pure bidegree (" + std::to_string(p) + "," +
                                 std::to_string(q) + ")");
    Form star_b = hodge_star(data).apply(B);
    Rat fact(1);
    for (int i = 2; i <= n - r; ++i) fact *= i;
    long e = static_cast<long>(r) * (r + 1) / 2;
    Scalar coef = ((e % 2) ? Scalar(-1) : Scalar(1)) * i_pow(p - q) * Scalar(Rat(1) / fact);
    return star_b - coef * wedge(wedge_pow(data.omega11, n - r), B);
}

GradedOperator hs_laplacian(const HermitianSymplecticData& data) {
    LefschetzOps ops = lefschetz_ops(data);
    return graded_commutator(data.d(), graded_commutator(data.dc(), ops.Lam11));
}

std::vector<std::pair<int, Form>> primitive_decompose(const HermitianSymplecticData& data,
                                                      const Form& a, bool use_omega11) {
    int k = a.degree;
    int n = data.n();
    if (k > n) throw precondition_error("primitive_decompose: degree must be <= n");
    LefschetzOps ops = lefschetz_ops(data);
    const GradedOperator& L = use_omega11 ? ops.L11 : ops.L;
    const GradedOperator& Lam = use_omega11 ? ops.Lam11 : ops.Lam;
    const BasisTable& bt = BasisTable::get(data.dim2n());

    // Columns: L^s applied to a primitive basis of degree k-2s, for all s.
    std::vector<std::pair<int, Mat>> pieces;  // (s, primitive basis)
    Mat sys(bt.dim(k), 0);
    for (int s = 0; 2 * s <= k; ++s) {
        int deg = k - 2 * s;
        Mat prim = kernel_basis(Lam.blocks[deg]);
        Mat lifted = prim;
        for (int t = 0; t < s; ++t) {
            Mat next(bt.dim(deg + 2 * (t + 1)), lifted.cols);
            next = L.blocks[deg + 2 * t] * lifted;
            lifted = next;
        }
        pieces.emplace_back(s, prim);
        sys = Mat::hcat(sys, lifted);
    }
    Mat x;
    if (!solve(sys, a.to_column(), x))
        throw std::logic_error("primitive_decompose: Lefschetz decomposition failed (degenerate form?)");
    std::vector<std::pair<int, Form>> out;
    int off = 0;
    for (const auto& [s, prim] : pieces) {
        Mat coef(prim.cols, 1);
        for (int j = 0; j < prim.cols; ++j) coef.at(j, 0) = x.at(off + j, 0);
        off += prim.cols;
        Form B = Form::from_column(data.dim2n(), k - 2 * s, prim * coef);
        if (!B.is_zero() || s == 0) out.emplace_back(s, B);
    }
    return out;
}

}  // namespace hsc
