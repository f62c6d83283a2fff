#include "hsc/spectral.hpp"

#include "hsc/cohomology.hpp"

namespace hsc {

// Coordinates of the columns of sub in the basis [Z | N]; bottom rows give
// the nonzero-part component.
static Mat part_coords(const Mat& Z, const Mat& N, const Mat& v) {
    Mat full = Mat::hcat(Z, N);
    Mat x;
    if (!solve(full, v, x)) throw std::logic_error("fitting parts do not span");
    return x;
}

Form SpectralDecomposition::project_nonzero(const Form& a) const {
    int k = a.degree;
    const Mat& Z = zero_basis[k];
    const Mat& N = nonzero_basis[k];
    Mat x = part_coords(Z, N, a.to_column());
    Mat c(N.cols, 1);
    for (int j = 0; j < N.cols; ++j) c.at(j, 0) = x.at(Z.cols + j, 0);
    return Form::from_column(a.dim2n, k, N * c);
}

Form SpectralDecomposition::project_zero(const Form& a) const { return a - project_nonzero(a); }

bool SpectralDecomposition::in_nonzero_part(const Form& a) const {
    return in_span(nonzero_basis[a.degree], a.to_column());
}

SpectralDecomposition fitting_decompose(const HermitianSymplecticData& data) {
    int d2n = data.dim2n();
    SpectralDecomposition dec;
    dec.delta = hs_laplacian(data);
    dec.zero_basis.resize(d2n + 1);
    dec.nonzero_basis.resize(d2n + 1);
    dec.stabilization.resize(d2n + 1);
    for (int k = 0; k <= d2n; ++k) {
        const Mat& D = dec.delta.blocks[k];
        Mat P = D;
        int m = 1;
        while (rank(P) != rank(P * D)) {
            P = P * D;
            ++m;
        }
        // Fitting lemma sanity: one more power cannot change the rank.
        if (rank(P) != rank(P * D * D)) throw std::logic_error("fitting: rank did not stabilize");
        dec.stabilization[k] = m;
        dec.zero_basis[k] = kernel_basis(P);
        dec.nonzero_basis[k] = column_space_basis(P);
        if (dec.zero_basis[k].cols + dec.nonzero_basis[k].cols != D.cols ||
            intersect_columns(dec.zero_basis[k], dec.nonzero_basis[k]).cols != 0)
            throw std::logic_error("fitting: parts do not form a direct sum");
    }
    dec.equivariant = true;
    for (int k = 0; k < d2n; ++k) {
        for (const GradedOperator* op : {&data.d(), &data.dc()}) {
            if (!contained_in(column_space_basis(op->blocks[k] * dec.zero_basis[k]), dec.zero_basis[k + 1]) ||
                !contained_in(column_space_basis(op->blocks[k] * dec.nonzero_basis[k]), dec.nonzero_basis[k + 1]))
                dec.equivariant = false;
        }
    }
    return dec;
}

// Solve Δ x = b with x in the nonzero part of degree k (unique there).
static Mat delta_inverse_on_nonzero(const SpectralDecomposition& dec, int k, const Mat& b) {
    const Mat& N = dec.nonzero_basis[k];
    Mat c;
    if (!solve(dec.delta.blocks[k] * N, b, c))
        throw std::logic_error("delta not invertible on nonzero part");
    return N * c;
}

ExactnessCertificate nonzero_closed_is_exact(const HermitianSymplecticData& data,
                                             const SpectralDecomposition& dec, const Form& a) {
    int k = a.degree;
    if (!data.d().apply(a).is_zero())
        throw precondition_error("nonzero_closed_is_exact: form is not closed");
    if (!a.is_zero() && !dec.in_nonzero_part(a))
        throw precondition_error("nonzero_closed_is_exact: form is not in the nonzero part");

    ExactnessCertificate cert;
    if (a.is_zero()) {
        cert.beta_formula = Form::zero(a.dim2n, k > 0 ? k - 1 : 0);
        cert.beta_direct = cert.beta_formula;
        return cert;
    }
    LefschetzOps ops = lefschetz_ops(data);
    Form mu = Form::from_column(a.dim2n, k, delta_inverse_on_nonzero(dec, k, a.to_column()));
    // Δ = d S + S d with S = {d^c, Λ11}; d a = 0 kills the S d term.
    GradedOperator S = graded_commutator(data.dc(), ops.Lam11);
    cert.beta_formula = S.apply(mu);
    if (!(data.d().apply(cert.beta_formula) == a))
        throw std::logic_error("exactness formula failed: d beta != a");

    Mat y;
    if (!solve(data.d().blocks[k - 1], a.to_column(), y))
        throw std::logic_error("direct solve found no primitive for a closed nonzero-part form");
    cert.beta_direct = Form::from_column(a.dim2n, k - 1, y);
    return cert;
}

Ddc11PipelineReport ddc11_pipeline(const HermitianSymplecticData& data) {
    if (data.n() != 3) throw precondition_error("ddc11_pipeline: requires complex dimension 3");
    const ComplexModel& cm = *data.cm;
    Ddc11PipelineReport rep;
    auto step = [&](const std::string& name, bool ok, const std::string& detail) {
        rep.steps.push_back({name, ok, detail});
        return ok;
    };

    // S = ker d ∩ im d^c within (1,1).
    Mat B11 = pq_basis(cm, 1, 1);
    Mat im_dc = column_space_basis(cm.dc.blocks[1]);
    Mat cand = intersect_columns(im_dc, B11);
    Mat S = (cand.cols == 0) ? cand : column_space_basis(cand * kernel_basis(cm.d.blocks[2] * cand));
    rep.dim_S = S.cols;
    step("collect", true, "dim(ker d ∩ im d^c ∩ A^{1,1}) = " + std::to_string(S.cols));

    SpectralDecomposition dec = fitting_decompose(data);
    LefschetzOps ops = lefschetz_ops(data);
    GradedOperator ddc = cm.d * cm.dc;
    bool all_ok = true;

    for (int j = 0; j < S.cols; ++j) {
        Form alpha = Form::from_column(data.dim2n(), 2, S.col(j));
        Form a_nz = dec.project_nonzero(alpha);
        Form a_z = alpha - a_nz;

        // (i) the parts stay d-closed and d^c-exact.
        bool parts_ok = cm.d.apply(a_nz).is_zero() && cm.d.apply(a_z).is_zero() &&
                        in_span(im_dc, a_nz.to_column()) && in_span(im_dc, a_z.to_column());
        all_ok &= step("split", parts_ok, "basis element " + std::to_string(j));
        if (!parts_ok) continue;

        // (ii) nonzero part: alpha_nz = dd^c Λ11 Δ^{-1} alpha_nz.
        if (!a_nz.is_zero()) {
            Form mu = Form::from_column(data.dim2n(), 2,
                                        [&] {
                                            Mat c;
                                            if (!solve(dec.delta.blocks[2] * dec.nonzero_basis[2],
                                                       a_nz.to_column(), c))
                                                throw std::logic_error("pipeline: delta inverse failed");
                                            return dec.nonzero_basis[2] * c;
                                        }());
            Form f = ops.Lam11.apply(mu);
            bool ok = ddc.apply(f) == a_nz;
            all_ok &= step("nonzero-ddc-exact", ok,
                           ok ? "alpha_nz = dd^c Λ11 Δ^{-1} alpha_nz" : "identity failed");
        } else {
            step("nonzero-ddc-exact", true, "nonzero part vanishes");
        }

        // (iii) zero part: descend the nilpotency index. For each j >= 1,
        // Δ^j alpha_0 is a dd^c-exact primitive (1,1)-form and must vanish,
        // so the index drops until Δ alpha_0 = 0.
        int m = 0;
        for (Form t = a_z; !t.is_zero(); t = dec.delta.apply(t)) ++m;
        bool descent_ok = true;
        std::string why = "nilpotency index " + std::to_string(m);
        Mat im_ddc0 = column_space_basis(ddc.blocks[0]);
        for (int jj = m - 1; jj >= 1 && descent_ok; --jj) {
            Form chi = a_z;
            for (int t = 0; t < jj; ++t) chi = dec.delta.apply(chi);
            if (!ops.Lam.apply(chi).is_zero() || !ops.Lam11.apply(chi).is_zero()) {
                descent_ok = false;
                why = "Δ^" + std::to_string(jj) + " alpha_0 not primitive";
            } else if (!in_span(im_ddc0, chi.to_column())) {
                descent_ok = false;
                why = "Δ^" + std::to_string(jj) + " alpha_0 not dd^c-exact";
            } else if (!chi.is_zero()) {
                descent_ok = false;
                why = "Δ^" + std::to_string(jj) + " alpha_0 nonzero: " + chi.str();
            }
        }
        descent_ok = descent_ok && dec.delta.apply(a_z).is_zero();
        all_ok &= step("zero-descent", descent_ok, why);
        if (!descent_ok) continue;

        // (iv) alpha_0 in ker Δ, d-closed, d^c-exact: Lefschetz-split it as
        // c·omega + B, check the symplectic-class obstruction kills c, then
        // the exact-primitive vanishing kills B.
        auto parts = primitive_decompose(data, a_z, /*use_omega11=*/false);
        Scalar c(0);
        for (const auto& [s, B] : parts)
            if (s == 1) c = B.coeff(0);
        Scalar pairing = integrate(wedge(a_z, wedge(data.omega, data.omega)), data.vol);
        bool c_ok = pairing.is_zero() && c.is_zero();
        all_ok &= step("symplectic-class", c_ok,
                       "∫ alpha_0 ∧ ω ∧ ω = " + scalar_str(pairing) + ", c = " + scalar_str(c));
        if (!c_ok) continue;

        Scalar norm11 = integrate(wedge(wedge(a_z, a_z), data.omega11), data.vol);
        Scalar norm_full = integrate(wedge(wedge(a_z, a_z), data.omega), data.vol);
        bool vanish_ok = norm11 == norm_full && norm11.is_zero() && a_z.is_zero();
        all_ok &= step("exact-primitive-vanishing", vanish_ok,
                       vanish_ok ? "alpha_0 = 0" : "nonzero exact primitive: " + a_z.str());
    }

    // Conclusion must agree with the independent rank check.
    Mat T = (B11.cols == 0) ? B11 : intersect_columns(column_space_basis(ddc.blocks[0]), B11);
    bool concl = contained_in(S, T);
    all_ok &= step("conclusion", concl, "S ⊆ im dd^c: " + std::string(concl ? "yes" : "no"));
    rep.pass = all_ok;
    return rep;
}

}  // namespace hsc
