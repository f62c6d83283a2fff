#include "hsc/search.hpp"

#include <Eigen/Dense>
#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace hsc {

std::vector<Form> closed_two_form_space(const LieAlgebraModel& model) {
    GradedOperator d = ce_differential(model);
    Mat K = kernel_basis(d.blocks[2]);
    std::vector<Form> basis;
    for (int j = 0; j < K.cols; ++j) {
        Form f = Form::from_column(model.dim2n, 2, K.col(j));
        if (!f.is_real()) throw std::logic_error("closed_two_form_space: non-real kernel vector");
        basis.push_back(std::move(f));
    }
    return basis;
}

static Scalar eval2(const Form& w, int a, int b) {
    if (a == b) return Scalar(0);
    Scalar sign(1);
    if (a > b) {
        std::swap(a, b);
        sign = Scalar(-1);
    }
    return sign * w.coeff((1u << (a - 1)) | (1u << (b - 1)));
}

static Mat h_map_of(const ComplexModel& cm, const Form& omega) {
    int d2n = cm.model.dim2n;
    Form om11 = Form::from_column(d2n, 2, cm.bt.projector(1, 1) * omega.to_column());
    Mat H(d2n, d2n);
    for (int a = 1; a <= d2n; ++a)
        for (int b = 1; b <= d2n; ++b) {
            Scalar v(0);
            for (int m = 1; m <= d2n; ++m) {
                const Scalar& jmb = cm.bt.J.at(m - 1, b - 1);
                if (!jmb.is_zero()) v += eval2(om11, a, m) * jmb;
            }
            H.at(a - 1, b - 1) = v;
        }
    // Symmetrize; the antisymmetric part is zero for (1,1)-forms but the
    // affine map contract asks for sym().
    return Scalar(Rat(1, 2)) * (H + H.transpose());
}

FeasibilityProblem make_problem(std::shared_ptr<const ComplexModel> cm) {
    FeasibilityProblem p;
    p.cm = cm;
    p.closed_basis = closed_two_form_space(cm->model);
    for (const Form& f : p.closed_basis) p.h_maps.push_back(h_map_of(*cm, f));
    return p;
}

CertifyResult certify_candidate(const FeasibilityProblem& problem, const std::vector<Rat>& x) {
    CertifyResult res;
    if (x.size() != problem.closed_basis.size()) {
        res.reason = "coefficient vector has wrong length";
        return res;
    }
    Form omega = Form::zero(problem.cm->model.dim2n, 2);
    for (size_t i = 0; i < x.size(); ++i) omega = omega + Scalar(x[i]) * problem.closed_basis[i];
    try {
        res.data = validate_hs(problem.cm, omega);
        res.ok = true;
    } catch (const validation_error& e) {
        res.reason = e.what();
    }
    return res;
}

// Best rational approximation with denominator <= bound (continued fractions).
static Rat rationalize(double v, long bound) {
    if (!std::isfinite(v)) return Rat(0);
    bool neg = v < 0;
    double x = std::fabs(v);
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(x);
        if (fl > 1e15) break;
        long a = static_cast<long>(fl);
        long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > bound || q2 <= 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double frac = x - fl;
        if (frac < 1e-15) break;
        x = 1.0 / frac;
    }
    Rat r(p1, q1 == 0 ? 1 : q1);
    r.canonicalize();
    return neg ? Rat(-r) : r;
}

namespace {
struct RestartOutcome {
    double best_lmin = -1e300;
    std::vector<double> best_x;
    bool certified = false;
    std::vector<Rat> candidate;
};
}  // namespace

static double min_eig(const std::vector<Eigen::MatrixXd>& hs, const std::vector<double>& x,
                      Eigen::VectorXd* vec) {
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(hs[0].rows(), hs[0].cols());
    for (size_t i = 0; i < hs.size(); ++i) H += x[i] * hs[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
    if (vec) *vec = es.eigenvectors().col(0);
    return es.eigenvalues()(0);
}

SearchReport feasibility_search(const FeasibilityProblem& problem, const SearchParams& params) {
    SearchReport rep;
    rep.seed = params.seed;
    rep.status = "not_found";
    size_t dim = problem.closed_basis.size();
    if (dim == 0) return rep;

    int d2n = problem.cm->model.dim2n;
    std::vector<Eigen::MatrixXd> hs(dim, Eigen::MatrixXd(d2n, d2n));
    for (size_t i = 0; i < dim; ++i)
        for (int r = 0; r < d2n; ++r)
            for (int c = 0; c < d2n; ++c)
                hs[i](r, c) = problem.h_maps[i].at(r, c).re.get_d();

    std::vector<RestartOutcome> outcomes(params.restarts);

#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < params.restarts; ++r) {
        std::seed_seq sq{static_cast<unsigned long long>(params.seed), static_cast<unsigned long long>(r)};
        std::mt19937_64 rng(sq);
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::vector<double> x(dim);
        double norm = 0;
        for (double& v : x) {
            v = gauss(rng);
            norm += v * v;
        }
        norm = std::sqrt(norm);
        for (double& v : x) v /= norm;

        RestartOutcome& out = outcomes[r];
        // Projected subgradient ascent on λ_min over the unit sphere;
        // subgradient of λ_min at x is (v^T H_i v)_i for the minimal eigenvector v.
        for (int it = 0; it < params.max_iters; ++it) {
            Eigen::VectorXd v;
            double lmin = min_eig(hs, x, &v);
            if (lmin > out.best_lmin) {
                out.best_lmin = lmin;
                out.best_x = x;
            }
            double stepsize = params.step / (1.0 + 0.05 * it);
            double n2 = 0;
            for (size_t i = 0; i < dim; ++i) {
                double g = v.dot(hs[i] * v);
                x[i] += stepsize * g;
                n2 += x[i] * x[i];
            }
            n2 = std::sqrt(n2);
            if (n2 < 1e-12) break;
            for (double& xi : x) xi /= n2;
        }
        if (out.best_lmin > params.tol) {
            // Round with doubling denominator bounds until the exact check passes.
            for (long bound = 16; bound <= (1L << 20); bound *= 2) {
                std::vector<Rat> cand(dim);
                for (size_t i = 0; i < dim; ++i) cand[i] = rationalize(out.best_x[i], bound);
                CertifyResult cr = certify_candidate(problem, cand);
                if (cr.ok) {
                    out.certified = true;
                    out.candidate = std::move(cand);
                    break;
                }
            }
        }
    }

    // Deterministic merge: the first certified restart wins.
    rep.best_min_eigenvalue = -std::numeric_limits<double>::infinity();
    for (int r = 0; r < params.restarts; ++r) {
        rep.best_min_eigenvalue = std::max(rep.best_min_eigenvalue, outcomes[r].best_lmin);
        if (outcomes[r].certified && rep.status != "found") {
            rep.status = "found";
            rep.certified = true;
            rep.candidate = outcomes[r].candidate;
            rep.restarts_used = r + 1;
        }
    }
    if (rep.status != "found") rep.restarts_used = params.restarts;
    return rep;
}

}  // namespace hsc
