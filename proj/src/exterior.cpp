#include "hsc/exterior.hpp"

#include <bit>
#include <map>
#include <sstream>

namespace hsc {

static void enumerate_lex(int dim2n, int k, int start, uint32_t acc, std::vector<uint32_t>& out) {
    if (k == 0) {
        out.push_back(acc);
        return;
    }
    for (int j = start; j <= dim2n - k + 1; ++j)
        enumerate_lex(dim2n, k - 1, j + 1, acc | (1u << (j - 1)), out);
}

BasisTable::BasisTable(int d) : dim2n(d) {
    masks.resize(d + 1);
    index_of_mask.assign(1u << d, -1);
    for (int k = 0; k <= d; ++k) {
        enumerate_lex(d, k, 1, 0, masks[k]);
        for (size_t i = 0; i < masks[k].size(); ++i) index_of_mask[masks[k][i]] = static_cast<int>(i);
    }
}

const BasisTable& BasisTable::get(int dim2n) {
    static std::map<int, BasisTable> cache;
    auto it = cache.find(dim2n);
    if (it == cache.end()) it = cache.emplace(dim2n, BasisTable(dim2n)).first;
    return it->second;
}

int wedge_sign(uint32_t A, uint32_t B) {
    if (A & B) return 0;
    // Count transpositions needed to merge: for each b in B, the elements of A above it.
    int inv = 0;
    uint32_t b = B;
    while (b) {
        uint32_t low = b & (~b + 1);
        inv += std::popcount(A & ~(low - 1) & ~low);
        b &= b - 1;
    }
    return (inv & 1) ? -1 : 1;
}

std::string multi_index_str(uint32_t mask) {
    std::string s;
    for (int j = 0; j < 32; ++j)
        if (mask & (1u << j)) {
            if (!s.empty()) s += ',';
            s += std::to_string(j + 1);
        }
    return s;
}

uint32_t parse_multi_index(const std::string& s, int dim2n) {
    if (s.empty()) return 0;
    uint32_t mask = 0;
    int prev = 0;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size() || v <= prev || v > dim2n)
            throw parse_error("invalid multi-index (must be strictly increasing, within 1.." +
                              std::to_string(dim2n) + "): " + s);
        mask |= 1u << (v - 1);
        prev = v;
    }
    return mask;
}

Form Form::monomial(int dim2n, uint32_t mask, Scalar c) {
    Form f{dim2n, std::popcount(mask), {}};
    if (!c.is_zero()) f.coeffs.emplace(mask, std::move(c));
    return f;
}

bool Form::is_real() const {
    for (const auto& [m, c] : coeffs)
        if (c.im != 0) return false;
    return true;
}

void Form::set(uint32_t mask, Scalar c) {
    if (c.is_zero())
        coeffs.erase(mask);
    else
        coeffs[mask] = std::move(c);
}

Scalar Form::coeff(uint32_t mask) const {
    auto it = coeffs.find(mask);
    return it == coeffs.end() ? Scalar(0) : it->second;
}

Form Form::conj() const {
    Form f{dim2n, degree, {}};
    for (const auto& [m, c] : coeffs) f.coeffs.emplace(m, c.conj());
    return f;
}

Mat Form::to_column() const {
    const BasisTable& bt = BasisTable::get(dim2n);
    Mat col(bt.dim(degree), 1);
    for (const auto& [m, c] : coeffs) col.at(bt.index(m), 0) = c;
    return col;
}

Form Form::from_column(int dim2n, int degree, const Mat& col) {
    const BasisTable& bt = BasisTable::get(dim2n);
    Form f{dim2n, degree, {}};
    for (int i = 0; i < col.rows; ++i)
        if (!col.at(i, 0).is_zero()) f.coeffs.emplace(bt.mask(degree, i), col.at(i, 0));
    return f;
}

Form operator+(const Form& a, const Form& b) {
    if (a.dim2n != b.dim2n || a.degree != b.degree) throw std::invalid_argument("Form+: degree mismatch");
    Form r = a;
    for (const auto& [m, c] : b.coeffs) r.set(m, r.coeff(m) + c);
    return r;
}

Form operator-(const Form& a, const Form& b) { return a + Scalar(-1) * b; }

Form operator*(const Scalar& c, const Form& a) {
    Form r{a.dim2n, a.degree, {}};
    if (c.is_zero()) return r;
    for (const auto& [m, v] : a.coeffs) r.coeffs.emplace(m, c * v);
    return r;
}

bool operator==(const Form& a, const Form& b) {
    return a.dim2n == b.dim2n && a.degree == b.degree && a.coeffs == b.coeffs;
}

std::string Form::str() const {
    if (coeffs.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : coeffs) {
        if (!s.empty()) s += " + ";
        s += "(" + scalar_str(c) + ")";
        if (m) s += " e^{" + multi_index_str(m) + "}";
    }
    return s;
}

Form wedge(const Form& a, const Form& b) {
    if (a.dim2n != b.dim2n) throw model_error("wedge: model dimension mismatch");
    Form r = Form::zero(a.dim2n, a.degree + b.degree);
    if (r.degree > a.dim2n) return r;  // identically zero, formal degree kept
    for (const auto& [ma, ca] : a.coeffs)
        for (const auto& [mb, cb] : b.coeffs) {
            int s = wedge_sign(ma, mb);
            if (s == 0) continue;
            r.set(ma | mb, r.coeff(ma | mb) + Scalar(s) * ca * cb);
        }
    return r;
}

Form wedge_pow(const Form& a, int k) {
    Form r = Form::constant(a.dim2n, Scalar(1));
    for (int i = 0; i < k; ++i) r = wedge(r, a);
    return r;
}

Scalar integrate(const Form& top, const Form& vol) {
    int d = top.dim2n;
    if (top.degree != d || vol.degree != d || vol.is_zero())
        throw precondition_error("integrate: need a top-degree form and a nonzero volume form");
    uint32_t full = (d == 32) ? ~0u : ((1u << d) - 1);
    return top.coeff(full) / vol.coeff(full);
}

Form contraction(int v, const Form& a) {
    if (v < 1 || v > a.dim2n) throw precondition_error("contraction: index out of range");
    Form r = Form::zero(a.dim2n, a.degree - 1);
    if (a.degree == 0) return Form::zero(a.dim2n, 0);
    uint32_t bit = 1u << (v - 1);
    for (const auto& [m, c] : a.coeffs) {
        if (!(m & bit)) continue;
        int pos = std::popcount(m & (bit - 1));  // elements below v
        r.set(m & ~bit, ((pos & 1) ? Scalar(-1) : Scalar(1)) * c);
    }
    return r;
}

std::vector<Scalar> LieAlgebraModel::bracket(int i, int j) const {
    std::vector<Scalar> v(dim2n, Scalar(0));
    if (i == j) return v;
    Scalar sign(1);
    if (i > j) {
        std::swap(i, j);
        sign = Scalar(-1);
    }
    for (int k = 1; k <= dim2n; ++k) {
        auto it = c.find({i, j, k});
        if (it != c.end()) v[k - 1] = sign * it->second;
    }
    return v;
}

LieAlgebraModel LieAlgebraModel::make(int dim2n, std::string name,
                                      std::map<std::tuple<int, int, int>, Scalar> constants) {
    if (dim2n <= 0 || dim2n % 2 != 0) throw model_error("model dimension must be a positive even integer");
    for (const auto& [key, val] : constants) {
        auto [i, j, k] = key;
        if (!(1 <= i && i < j && j <= dim2n && 1 <= k && k <= dim2n))
            throw model_error("structure constant indices out of range");
        (void)val;
    }
    LieAlgebraModel m{dim2n, std::move(name), std::move(constants)};
    // Jacobi: [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej] = 0.
    for (int i = 1; i <= dim2n; ++i)
        for (int j = i + 1; j <= dim2n; ++j)
            for (int k = j + 1; k <= dim2n; ++k) {
                std::vector<Scalar> acc(dim2n, Scalar(0));
                auto add = [&](int a, int b, int c3) {
                    std::vector<Scalar> ab = m.bracket(a, b);
                    for (int l = 1; l <= dim2n; ++l) {
                        if (ab[l - 1].is_zero()) continue;
                        std::vector<Scalar> lc = m.bracket(l, c3);
                        for (int t = 0; t < dim2n; ++t) acc[t] += ab[l - 1] * lc[t];
                    }
                };
                add(i, j, k);
                add(j, k, i);
                add(k, i, j);
                for (int t = 0; t < dim2n; ++t)
                    if (!acc[t].is_zero())
                        throw model_error("Jacobi identity fails on triple (" + std::to_string(i) + "," +
                                          std::to_string(j) + "," + std::to_string(k) + ") in model " + m.name);
            }
    return m;
}

GradedOperator GradedOperator::zero(int dim2n, int shift, int eps) {
    const BasisTable& bt = BasisTable::get(dim2n);
    GradedOperator op{dim2n, shift, eps, {}};
    op.blocks.resize(dim2n + 1);
    for (int k = 0; k <= dim2n; ++k) op.blocks[k] = Mat(bt.dim(eps * k + shift), bt.dim(k));
    return op;
}

GradedOperator GradedOperator::identity(int dim2n) {
    GradedOperator op = zero(dim2n, 0);
    for (int k = 0; k <= dim2n; ++k) op.blocks[k] = Mat::identity(op.blocks[k].cols);
    return op;
}

Form GradedOperator::apply(const Form& f) const {
    int target = target_degree(f.degree);
    if (target < 0 || target > dim2n) return Form::zero(dim2n, 0);
    return Form::from_column(dim2n, target, blocks[f.degree] * f.to_column());
}

bool GradedOperator::is_zero() const {
    for (const auto& b : blocks)
        if (!b.is_zero()) return false;
    return true;
}

GradedOperator operator+(const GradedOperator& A, const GradedOperator& B) {
    if (A.shift != B.shift || A.eps != B.eps || A.dim2n != B.dim2n)
        throw std::invalid_argument("GradedOperator+: shift mismatch");
    GradedOperator r = A;
    for (size_t k = 0; k < r.blocks.size(); ++k) r.blocks[k] = r.blocks[k] + B.blocks[k];
    return r;
}

GradedOperator operator-(const GradedOperator& A, const GradedOperator& B) { return A + Scalar(-1) * B; }

GradedOperator operator*(const Scalar& c, const GradedOperator& A) {
    GradedOperator r = A;
    for (auto& b : r.blocks) b = c * b;
    return r;
}

GradedOperator operator*(const GradedOperator& A, const GradedOperator& B) {
    if (A.dim2n != B.dim2n) throw std::invalid_argument("GradedOperator*: dimension mismatch");
    GradedOperator r = GradedOperator::zero(A.dim2n, A.eps * B.shift + A.shift, A.eps * B.eps);
    for (int k = 0; k <= A.dim2n; ++k) {
        int mid = B.target_degree(k);
        if (mid < 0 || mid > A.dim2n) continue;  // B lands outside; block stays zero
        r.blocks[k] = A.blocks[mid] * B.blocks[k];
    }
    return r;
}

bool operator==(const GradedOperator& A, const GradedOperator& B) {
    return A.dim2n == B.dim2n && A.shift == B.shift && A.eps == B.eps && A.blocks == B.blocks;
}

GradedOperator graded_commutator(const GradedOperator& A, const GradedOperator& B) {
    GradedOperator AB = A * B;
    GradedOperator BA = B * A;
    bool odd = (A.shift % 2 != 0) && (B.shift % 2 != 0);
    return odd ? AB + BA : AB - BA;
}

TotalOperator to_total(const GradedOperator& A) {
    const BasisTable& bt = BasisTable::get(A.dim2n);
    std::vector<int> off(A.dim2n + 2, 0);
    for (int k = 0; k <= A.dim2n; ++k) off[k + 1] = off[k] + bt.dim(k);
    int N = off[A.dim2n + 1];
    TotalOperator t{A.dim2n, ((A.shift % 2) + 2) % 2, Mat(N, N)};
    for (int k = 0; k <= A.dim2n; ++k) {
        int tk = A.target_degree(k);
        if (tk < 0 || tk > A.dim2n) continue;
        const Mat& b = A.blocks[k];
        for (int i = 0; i < b.rows; ++i)
            for (int j = 0; j < b.cols; ++j) t.m.at(off[tk] + i, off[k] + j) = b.at(i, j);
    }
    return t;
}

TotalOperator graded_commutator(const TotalOperator& A, const TotalOperator& B) {
    bool odd = A.parity == 1 && B.parity == 1;
    Mat ab = A.m * B.m;
    Mat ba = B.m * A.m;
    return TotalOperator{A.dim2n, (A.parity + B.parity) % 2, odd ? ab + ba : ab - ba};
}

GradedOperator ce_differential(const LieAlgebraModel& model) {
    int d = model.dim2n;
    const BasisTable& bt = BasisTable::get(d);
    // d on generators.
    std::vector<Form> d_gen(d + 1, Form::zero(d, 2));
    for (const auto& [key, val] : model.c) {
        auto [i, j, k] = key;
        uint32_t m = (1u << (i - 1)) | (1u << (j - 1));
        d_gen[k].set(m, d_gen[k].coeff(m) - val);
    }
    GradedOperator op = GradedOperator::zero(d, 1);
    for (int k = 0; k <= d; ++k) {
        for (int idx = 0; idx < bt.dim(k); ++idx) {
            uint32_t S = bt.mask(k, idx);
            Form img = Form::zero(d, k + 1);
            int pos = 0;
            for (int g = 1; g <= d; ++g) {
                if (!(S & (1u << (g - 1)))) continue;
                // d(e^S) = sum_p (-1)^{p} de^{s_p} ∧ e^{S \ s_p}  (de^{s_p} even)
                Form rest = Form::monomial(d, S & ~(1u << (g - 1)));
                Form term = wedge(d_gen[g], rest);
                img = (pos % 2 == 0) ? img + term : img - term;
                ++pos;
            }
            if (k + 1 <= d) {
                Mat col = img.to_column();
                for (int r = 0; r < col.rows; ++r) op.blocks[k].at(r, idx) = col.at(r, 0);
            }
        }
    }
    return op;
}

GradedOperator wedge_operator(const Form& w) {
    int d = w.dim2n;
    const BasisTable& bt = BasisTable::get(d);
    GradedOperator op = GradedOperator::zero(d, w.degree);
    for (int k = 0; k + w.degree <= d; ++k)
        for (int idx = 0; idx < bt.dim(k); ++idx) {
            Mat col = wedge(w, Form::monomial(d, bt.mask(k, idx))).to_column();
            for (int r = 0; r < col.rows; ++r) op.blocks[k].at(r, idx) = col.at(r, 0);
        }
    return op;
}

GradedOperator pow(const GradedOperator& A, int k) {
    if (A.shift != 0) throw std::invalid_argument("pow: operator must be degree 0");
    GradedOperator r = GradedOperator::identity(A.dim2n);
    for (int i = 0; i < k; ++i) r = r * A;
    return r;
}

}  // namespace hsc
