#include "hsc/complex_ops.hpp"

#include <bit>

namespace hsc {

BidegreeTable::BidegreeTable(int d, const Mat& Jm) : dim2n(d), J(Jm) {
    if (J.rows != d || J.cols != d) throw validation_error("complex structure has wrong shape");
    const BasisTable& basis = BasisTable::get(d);
    Mat Jt = J.transpose();
    Scalar half(Rat(1, 2));
    Mat P10 = half * (Mat::identity(d) - Scalar::i() * Jt);
    Mat P01 = half * (Mat::identity(d) + Scalar::i() * Jt);

    // u[j], v[j]: (1,0)/(0,1) parts of e^{j+1} as 1-forms.
    std::vector<Form> u(d), v(d);
    for (int j = 0; j < d; ++j) {
        u[j] = Form::from_column(d, 1, P10.col(j));
        v[j] = Form::from_column(d, 1, P01.col(j));
    }

    proj.resize(d + 1);
    for (int k = 0; k <= d; ++k) proj[k].assign(k + 1, Mat(basis.dim(k), basis.dim(k)));
    for (int k = 0; k <= d; ++k) {
        for (int idx = 0; idx < basis.dim(k); ++idx) {
            uint32_t S = basis.mask(k, idx);
            std::vector<int> gens;
            for (int j = 0; j < d; ++j)
                if (S & (1u << j)) gens.push_back(j);
            // Expand ∧_j (u_j + v_j); a subset T choosing u contributes to (|T|, k-|T|).
            for (uint32_t T = 0; T < (1u << k); ++T) {
                Form w = Form::constant(d, Scalar(1));
                for (int t = 0; t < k; ++t) w = wedge(w, (T & (1u << t)) ? u[gens[t]] : v[gens[t]]);
                int p = std::popcount(T);
                Mat col = w.to_column();
                for (int r = 0; r < col.rows; ++r) proj[k][p].at(r, idx) += col.at(r, 0);
            }
        }
    }
}

const Mat& BidegreeTable::projector(int p, int q) const {
    static const Mat empty;
    int k = p + q;
    if (k < 0 || k > dim2n || p < 0 || q < 0) throw std::out_of_range("projector: bad bidegree");
    return proj[k][p];
}

GradedOperator BidegreeTable::projector_op(int p, int q) const {
    GradedOperator op = GradedOperator::zero(dim2n, 0);
    op.blocks[p + q] = projector(p, q);
    return op;
}

GradedOperator BidegreeTable::i_action_op() const {
    GradedOperator op = GradedOperator::zero(dim2n, 0);
    for (int k = 0; k <= dim2n; ++k)
        for (int p = 0; p <= k; ++p) op.blocks[k] = op.blocks[k] + i_pow(p - (k - p)) * proj[k][p];
    return op;
}

GradedOperator BidegreeTable::i_action_inverse_op() const {
    GradedOperator op = GradedOperator::zero(dim2n, 0);
    for (int k = 0; k <= dim2n; ++k)
        for (int p = 0; p <= k; ++p) op.blocks[k] = op.blocks[k] + i_pow((k - p) - p) * proj[k][p];
    return op;
}

JValidationReport validate_complex_structure(const LieAlgebraModel& model, const Mat& J) {
    JValidationReport rep;
    rep.integrability_residual = Form::zero(model.dim2n, 2);
    if (J.rows != model.dim2n || J.cols != model.dim2n)
        throw validation_error("complex structure has wrong shape for model " + model.name);
    rep.square_ok = (J * J + Mat::identity(model.dim2n)).is_zero();
    if (!rep.square_ok) return rep;

    BidegreeTable bt(model.dim2n, J);
    GradedOperator d = ce_differential(model);
    rep.integrable = true;
    for (int j = 0; j < model.dim2n; ++j) {
        Form alpha10 = Form::from_column(model.dim2n, 1, bt.projector(1, 0).col(j));
        Form res = Form::from_column(model.dim2n, 2, bt.projector(0, 2) * d.apply(alpha10).to_column());
        if (!res.is_zero()) {
            rep.integrable = false;
            rep.integrability_residual = res;
            break;
        }
    }
    return rep;
}

std::string JValidationReport::summary() const {
    if (!square_ok) return "fail: J^2 != -id";
    if (!integrable) return "fail: non-integrable, (0,2) residual " + integrability_residual.str();
    return "pass";
}

Form BigradedForm::component(int p, int q, int dim2n) const {
    auto it = components.find({p, q});
    return it == components.end() ? Form::zero(dim2n, p + q) : it->second;
}

Form BigradedForm::sum(int dim2n) const {
    Form s = Form::zero(dim2n, total_degree);
    for (const auto& [pq, f] : components) s = s + f;
    return s;
}

BigradedForm bidegree_decompose(const Form& a, const BidegreeTable& bt) {
    BigradedForm r;
    r.total_degree = a.degree;
    Mat col = a.to_column();
    for (int p = 0; p <= a.degree; ++p) {
        Form comp = Form::from_column(a.dim2n, a.degree, bt.projector(p, a.degree - p) * col);
        if (!comp.is_zero()) r.components.emplace(std::make_pair(p, a.degree - p), comp);
    }
    return r;
}

Form i_action(const Form& a, const BidegreeTable& bt) {
    Form r = Form::zero(a.dim2n, a.degree);
    Mat col = a.to_column();
    for (int p = 0; p <= a.degree; ++p)
        r = r + i_pow(p - (a.degree - p)) * Form::from_column(a.dim2n, a.degree, bt.projector(p, a.degree - p) * col);
    return r;
}

static GradedOperator build_del(const GradedOperator& d, const BidegreeTable& bt, int dp, int dq) {
    GradedOperator op = GradedOperator::zero(bt.dim2n, 1);
    for (int k = 0; k + 1 <= bt.dim2n; ++k)
        for (int p = 0; p <= k; ++p) {
            int tp = p + dp, tq = (k - p) + dq;
            if (tp < 0 || tq < 0 || tp + tq > bt.dim2n) continue;
            op.blocks[k] = op.blocks[k] + bt.projector(tp, tq) * d.blocks[k] * bt.projector(p, k - p);
        }
    return op;
}

ComplexModel::ComplexModel(LieAlgebraModel m, const Mat& J)
    : model(std::move(m)), bt(model.dim2n, J), d(ce_differential(model)) {
    JValidationReport rep = validate_complex_structure(model, J);
    if (!rep.pass())
        throw validation_error("invalid complex structure on " + model.name + ": " + rep.summary());
    del = build_del(d, bt, 1, 0);
    delbar = build_del(d, bt, 0, 1);
    if (!(del + delbar == d))
        throw validation_error("d has bigraded components outside (1,0)+(0,1) on " + model.name);
    dc = bt.i_action_op() * d * bt.i_action_inverse_op();
}

GradedOperator d_c(const LieAlgebraModel& model, const Mat& J) {
    return ComplexModel(model, J).dc;
}

std::pair<GradedOperator, GradedOperator> del_delbar(const LieAlgebraModel& model, const Mat& J) {
    ComplexModel cm(model, J);
    return {cm.del, cm.delbar};
}

}  // namespace hsc
