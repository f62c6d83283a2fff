#include "hsc/cohomology.hpp"

namespace hsc {

Mat pq_basis(const ComplexModel& cm, int p, int q) {
    return column_space_basis(cm.bt.projector(p, q));
}

// Basis of ker(op) within span(space), both in degree-k coordinates.
static Mat kernel_within(const Mat& op_block, const Mat& space) {
    if (space.cols == 0) return space;
    return column_space_basis(space * kernel_basis(op_block * space));
}

static Mat image_of(const Mat& op_block, const Mat& space) {
    if (space.cols == 0) return Mat(op_block.rows, 0);
    return column_space_basis(op_block * space);
}

CohomologyReport cohomology_report(const ComplexModel& cm) {
    const GradedOperator& d = cm.d;
    int d2n = cm.model.dim2n;
    int n = cm.n();
    CohomologyReport rep;

    for (int k = 0; k <= d2n; ++k) {
        int kerdim = d.blocks[k].cols - rank(d.blocks[k]);
        int imdim = (k == 0) ? 0 : rank(d.blocks[k - 1]);
        rep.betti[k] = kerdim - imdim;
    }

    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            Mat Bpq = pq_basis(cm, p, q);
            int k = p + q;
            Mat ker_db = kernel_within(cm.delbar.blocks[k], Bpq);
            int im_db = (q == 0) ? 0 : image_of(cm.delbar.blocks[k - 1], pq_basis(cm, p, q - 1)).cols;
            rep.hodge[{p, q}] = ker_db.cols - im_db;

            Mat ker_both = kernel_within(cm.del.blocks[k], ker_db);
            Mat im_deldb;
            if (p > 0 && q > 0)
                im_deldb = image_of((cm.del * cm.delbar).blocks[k - 2], pq_basis(cm, p - 1, q - 1));
            else
                im_deldb = Mat(ker_both.rows, 0);
            rep.bott_chern[{p, q}] = ker_both.cols - im_deldb.cols;

            Mat ker_dd = kernel_within((cm.del * cm.delbar).blocks[k], Bpq);
            Mat sum(Bpq.rows, 0);
            if (p > 0) sum = Mat::hcat(sum, image_of(cm.del.blocks[k - 1], pq_basis(cm, p - 1, q)));
            if (q > 0) sum = Mat::hcat(sum, image_of(cm.delbar.blocks[k - 1], pq_basis(cm, p, q - 1)));
            rep.aeppli[{p, q}] = ker_dd.cols - rank(sum);
        }

    FrolicherReport fr = frolicher_check(cm);
    rep.frolicher_pages = {fr.e1, fr.e2};
    return rep;
}

DdcVerdict ddc_lemma_check(const ComplexModel& cm, int p, int q, bool swap_roles) {
    const GradedOperator& D1 = swap_roles ? cm.dc : cm.d;   // closedness operator
    const GradedOperator& D2 = swap_roles ? cm.d : cm.dc;   // exactness operator
    int k = p + q;
    Mat Bpq = pq_basis(cm, p, q);

    // S = ker D1 ∩ im D2 within A^{p,q}.
    Mat im_d2 = (k == 0) ? Mat(Bpq.rows, 0) : column_space_basis(D2.blocks[k - 1]);
    Mat S = kernel_within(D1.blocks[k], intersect_columns(im_d2, Bpq));

    // T = im (D1 D2) within A^{p,q}.
    Mat T(Bpq.rows, 0);
    if (k >= 2) T = intersect_columns(column_space_basis((D1 * D2).blocks[k - 2]), Bpq);

    DdcVerdict v;
    v.dim_S = S.cols;
    v.dim_T = T.cols;
    v.holds = contained_in(S, T);
    if (!v.holds) {
        for (int j = 0; j < S.cols; ++j)
            if (!in_span(T, S.col(j))) {
                v.witness = Form::from_column(cm.model.dim2n, k, S.col(j));
                break;
            }
    }
    return v;
}

Ddc1Verdict ddc_1form_check(const ComplexModel& cm) {
    Ddc1Verdict v;
    v.holds = true;
    // im d ∩ ker d^c in degree 1 (and the swapped direction).
    for (int dir = 0; dir < 2; ++dir) {
        const GradedOperator& De = dir == 0 ? cm.d : cm.dc;
        const GradedOperator& Dc = dir == 0 ? cm.dc : cm.d;
        Mat E = column_space_basis(De.blocks[0]);
        Mat bad = kernel_within(Dc.blocks[1], E);
        if (bad.cols > 0) {
            v.holds = false;
            if (!v.witness) v.witness = Form::from_column(cm.model.dim2n, 1, bad.col(0));
        }
    }
    return v;
}

GauduchonReport gauduchon_equality(const ComplexModel& cm) {
    GauduchonReport rep;
    const GradedOperator& d = cm.d;
    rep.b1 = (d.blocks[1].cols - rank(d.blocks[1])) - rank(d.blocks[0]);
    Mat B10 = pq_basis(cm, 1, 0), B01 = pq_basis(cm, 0, 1);
    rep.h10 = kernel_within(cm.delbar.blocks[1], B10).cols - 0;
    rep.h01 = kernel_within(cm.delbar.blocks[1], B01).cols - rank(cm.delbar.blocks[0]);
    rep.eq_2h10 = rep.b1 == 2 * rep.h10;
    rep.eq_2h01 = rep.b1 == 2 * rep.h01;
    rep.ddc11 = ddc_lemma_check(cm, 1, 1).holds;
    return rep;
}

HoloClosednessVerdict holomorphic_closedness(const ComplexModel& cm, int p,
                                             const HermitianSymplecticData* data) {
    int n = cm.n();
    if (p < 0 || p > n) throw precondition_error("holomorphic_closedness: need 0 <= p <= n");
    HoloClosednessVerdict v;
    Mat K = kernel_within(cm.delbar.blocks[p], pq_basis(cm, p, 0));
    v.holds = true;
    for (int j = 0; j < K.cols; ++j) {
        Form alpha = Form::from_column(cm.model.dim2n, p, K.col(j));
        if (!cm.d.apply(alpha).is_zero()) {
            v.holds = false;
            v.witness = alpha;
            break;
        }
    }
    if (data && p == n - 2) {
        // Norm argument: ||∂α||^2 = ∫ ∂α ∧ conj(∂α) ∧ omega11 must vanish.
        v.norm_argument_checked = true;
        for (int j = 0; j < K.cols; ++j) {
            Form alpha = Form::from_column(cm.model.dim2n, p, K.col(j));
            Form eta = cm.del.apply(alpha);
            Scalar integral = integrate(wedge(wedge(eta, eta.conj()), data->omega11), data->vol);
            if (!integral.is_zero() || !eta.is_zero()) {
                v.holds = false;
                v.witness = alpha;
                break;
            }
        }
    }
    return v;
}

FrolicherReport frolicher_check(const ComplexModel& cm) {
    FrolicherReport rep;
    int n = cm.n();
    const GradedOperator& d = cm.d;
    for (int k = 0; k <= cm.model.dim2n; ++k) {
        int kerdim = d.blocks[k].cols - rank(d.blocks[k]);
        int imdim = (k == 0) ? 0 : rank(d.blocks[k - 1]);
        rep.betti[k] = kerdim - imdim;
    }

    // E1 = Dolbeault; d1 induced by ∂ on ∂̄-cohomology.
    std::map<std::pair<int, int>, int> r1;  // rank of d1: E1^{p,q} -> E1^{p+1,q}
    std::map<std::pair<int, int>, Mat> kerdb;
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            int k = p + q;
            Mat Bpq = pq_basis(cm, p, q);
            Mat K = kernel_within(cm.delbar.blocks[k], Bpq);
            kerdb[{p, q}] = K;
            int im_db = (q == 0) ? 0 : image_of(cm.delbar.blocks[k - 1], pq_basis(cm, p, q - 1)).cols;
            rep.e1[{p, q}] = K.cols - im_db;
        }
    for (int p = 0; p < n; ++p)
        for (int q = 0; q <= n; ++q) {
            int k = p + q;
            Mat dK = (kerdb[{p, q}].cols == 0) ? Mat(pq_basis(cm, p + 1, q).rows, 0)
                                               : Mat(cm.del.blocks[k] * kerdb[{p, q}]);
            Mat im_db_target = (q == 0) ? Mat(dK.rows, 0)
                                        : image_of(cm.delbar.blocks[k], pq_basis(cm, p + 1, q - 1));
            r1[{p, q}] = rank(Mat::hcat(im_db_target, dK)) - rank(im_db_target);
        }
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            int out = (p < n) ? r1[{p, q}] : 0;
            int in = (p > 0) ? r1[{p - 1, q}] : 0;
            rep.e2[{p, q}] = rep.e1[{p, q}] - out - in;
        }

    rep.degenerates_at_e1 = true;
    rep.e2_totals_match_betti = true;
    for (int k = 0; k <= cm.model.dim2n; ++k) {
        int tot1 = 0, tot2 = 0;
        for (int p = 0; p <= n; ++p) {
            int q = k - p;
            if (q < 0 || q > n) continue;
            tot1 += rep.e1[{p, q}];
            tot2 += rep.e2[{p, q}];
        }
        if (tot1 != rep.betti[k]) rep.degenerates_at_e1 = false;
        if (tot2 != rep.betti[k]) rep.e2_totals_match_betti = false;
    }
    rep.first_nondegenerate_page = rep.degenerates_at_e1 ? 0 : 1;
    return rep;
}

}  // namespace hsc
