#include "hsc/matrix.hpp"

#include <omp.h>

#include <cctype>
#include <stdexcept>

namespace hsc {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            throw parse_error("invalid rational (floats are not accepted): " + s);
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw parse_error("invalid rational: " + s);
    if (q.get_den() == 0) throw parse_error("zero denominator: " + s);
    q.canonicalize();
    return q;
}

Scalar parse_scalar(const std::string& raw) {
    std::string s;
    bool has_i = false;
    for (char c : raw) {
        if (c == ' ') continue;
        if (c == 'i') {
            if (has_i) throw parse_error("invalid scalar: " + raw);
            has_i = true;
            continue;
        }
        if (has_i) throw parse_error("invalid scalar (text after i): " + raw);
        s.push_back(c);
    }
    if (!has_i) return Scalar(parse_rat(s));
    // Split real and imaginary parts at the last top-level sign.
    size_t split = std::string::npos;
    for (size_t k = 1; k < s.size(); ++k)
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') split = k;
    if (split == std::string::npos) return Scalar(Rat(0), parse_rat(s));
    std::string im = s.substr(split);
    if (im == "+") im = "1";
    if (im == "-") im = "-1";
    if (!im.empty() && im[0] == '+') im = im.substr(1);
    return Scalar(parse_rat(s.substr(0, split)), parse_rat(im));
}

std::string scalar_str(const Scalar& s) {
    if (s.im == 0) return rat_str(s.re);
    std::string imp = rat_str(s.im) + " i";
    if (s.re == 0) return imp;
    return rat_str(s.re) + (s.im > 0 ? "+" : "") + imp;
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

Mat Mat::transpose() const {
    Mat t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::conjugate() const {
    Mat t(rows, cols);
    for (size_t k = 0; k < a.size(); ++k) t.a[k] = a[k].conj();
    return t;
}

Mat Mat::operator-() const {
    Mat t(rows, cols);
    for (size_t k = 0; k < a.size(); ++k) t.a[k] = -a[k];
    return t;
}

Mat operator+(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("Mat+: shape mismatch");
    Mat r(x.rows, x.cols);
    for (size_t k = 0; k < r.a.size(); ++k) r.a[k] = x.a[k] + y.a[k];
    return r;
}

Mat operator-(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("Mat-: shape mismatch");
    Mat r(x.rows, x.cols);
    for (size_t k = 0; k < r.a.size(); ++k) r.a[k] = x.a[k] - y.a[k];
    return r;
}

Mat operator*(const Scalar& c, const Mat& x) {
    Mat r(x.rows, x.cols);
    for (size_t k = 0; k < r.a.size(); ++k) r.a[k] = c * x.a[k];
    return r;
}

Mat mul_serial(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("Mat*: shape mismatch");
    Mat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Scalar& xv = x.at(i, k);
            if (xv.is_zero()) continue;
            for (int j = 0; j < y.cols; ++j) {
                const Scalar& yv = y.at(k, j);
                if (!yv.is_zero()) r.at(i, j) += xv * yv;
            }
        }
    return r;
}

Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("Mat*: shape mismatch");
    long work = static_cast<long>(x.rows) * x.cols * y.cols;
    if (work < 32768) return mul_serial(x, y);
    Mat r(x.rows, y.cols);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Scalar& xv = x.at(i, k);
            if (xv.is_zero()) continue;
            for (int j = 0; j < y.cols; ++j) {
                const Scalar& yv = y.at(k, j);
                if (!yv.is_zero()) r.at(i, j) += xv * yv;
            }
        }
    return r;
}

Mat Mat::col(int j) const {
    Mat c(rows, 1);
    for (int i = 0; i < rows; ++i) c.at(i, 0) = at(i, j);
    return c;
}

Mat Mat::hcat(const Mat& x, const Mat& y) {
    if (x.rows != y.rows) throw std::invalid_argument("hcat: row mismatch");
    Mat r(x.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
        for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
    }
    return r;
}

Mat rref(Mat m, std::vector<int>* pivots) {
    int lead = 0;
    for (int c = 0; c < m.cols && lead < m.rows; ++c) {
        int piv = -1;
        for (int i = lead; i < m.rows; ++i)
            if (!m.at(i, c).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != lead)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(lead, j));
        Scalar inv = Scalar(1) / m.at(lead, c);
        for (int j = c; j < m.cols; ++j) m.at(lead, j) = inv * m.at(lead, j);
        for (int i = 0; i < m.rows; ++i) {
            if (i == lead || m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c);
            for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(lead, j);
        }
        if (pivots) pivots->push_back(c);
        ++lead;
    }
    return m;
}

int rank(const Mat& m) {
    std::vector<int> piv;
    rref(m, &piv);
    return static_cast<int>(piv.size());
}

Mat kernel_basis(const Mat& m) {
    std::vector<int> piv;
    Mat r = rref(m, &piv);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat k(m.cols, static_cast<int>(free_cols.size()));
    for (size_t f = 0; f < free_cols.size(); ++f) {
        int fc = free_cols[f];
        k.at(fc, static_cast<int>(f)) = Scalar(1);
        for (size_t p = 0; p < piv.size(); ++p) k.at(piv[p], static_cast<int>(f)) = -r.at(static_cast<int>(p), fc);
    }
    return k;
}

Mat column_space_basis(const Mat& m) {
    // Rows of the row-reduced transpose give an RREF-normalized basis.
    std::vector<int> piv;
    Mat rt = rref(m.transpose(), &piv);
    int r = static_cast<int>(piv.size());
    Mat b(m.rows, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < m.rows; ++j) b.at(j, i) = rt.at(i, j);
    return b;
}

bool solve(const Mat& m, const Mat& b, Mat& x) {
    if (b.rows != m.rows || b.cols != 1) throw std::invalid_argument("solve: shape mismatch");
    std::vector<int> piv;
    Mat aug = rref(Mat::hcat(m, b), &piv);
    for (int c : piv)
        if (c == m.cols) return false;  // pivot in the augmented column
    x = Mat(m.cols, 1);
    for (size_t p = 0; p < piv.size(); ++p) x.at(piv[p], 0) = aug.at(static_cast<int>(p), m.cols);
    return true;
}

Mat inverse(const Mat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse: not square");
    Mat aug = rref(Mat::hcat(m, Mat::identity(m.rows)));
    for (int i = 0; i < m.rows; ++i)
        if (aug.at(i, i) != Scalar(1)) throw std::domain_error("inverse: singular matrix");
    Mat inv(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
    return inv;
}

Scalar determinant(Mat m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant: not square");
    Scalar det(1);
    for (int c = 0; c < m.cols; ++c) {
        int piv = -1;
        for (int i = c; i < m.rows; ++i)
            if (!m.at(i, c).is_zero()) { piv = i; break; }
        if (piv < 0) return Scalar(0);
        if (piv != c) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(c, j));
            det = -det;
        }
        det *= m.at(c, c);
        Scalar inv = Scalar(1) / m.at(c, c);
        for (int i = c + 1; i < m.rows; ++i) {
            if (m.at(i, c).is_zero()) continue;
            Scalar f = inv * m.at(i, c);
            for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return det;
}

Mat intersect_columns(const Mat& A, const Mat& B) {
    if (A.cols == 0 || B.cols == 0) return Mat(A.rows, 0);
    Mat k = kernel_basis(Mat::hcat(A, -B));
    // span intersection = A * (top block of each kernel vector)
    Mat top(A.cols, k.cols);
    for (int i = 0; i < A.cols; ++i)
        for (int j = 0; j < k.cols; ++j) top.at(i, j) = k.at(i, j);
    return column_space_basis(A * top);
}

bool contained_in(const Mat& sub, const Mat& space) {
    if (sub.cols == 0) return true;
    return rank(space) == rank(Mat::hcat(space, sub));
}

bool in_span(const Mat& space, const Mat& v) {
    Mat x;
    return solve(space, v, x);
}

}  // namespace hsc
