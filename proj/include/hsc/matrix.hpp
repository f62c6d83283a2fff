#pragma once

#include <vector>

#include "hsc/scalar.hpp"

namespace hsc {

// Dense matrix over the Gaussian rationals. Sizes here are tiny (at most
// binomial(6,3) = 20 per graded block), so everything is exact Gaussian
// elimination; the multiply kernel is OpenMP-parallel above a size cutoff
// with a serial reference kept for testing and benchmarking.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<Scalar> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    static Mat identity(int n);

    Scalar& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Scalar& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool is_zero() const;
    Mat transpose() const;
    Mat conjugate() const;
    Mat operator-() const;

    friend Mat operator+(const Mat& x, const Mat& y);
    friend Mat operator-(const Mat& x, const Mat& y);
    friend Mat operator*(const Mat& x, const Mat& y);
    friend Mat operator*(const Scalar& c, const Mat& x);
    friend bool operator==(const Mat& x, const Mat& y) { return x.rows == y.rows && x.cols == y.cols && x.a == y.a; }

    Mat col(int j) const;
    // Horizontal concatenation.
    static Mat hcat(const Mat& x, const Mat& y);
};

// Serial reference multiply; must agree with operator* exactly.
Mat mul_serial(const Mat& x, const Mat& y);

// Reduced row echelon form; pivot column indices appended to *pivots if given.
Mat rref(Mat m, std::vector<int>* pivots = nullptr);

int rank(const Mat& m);

// Columns form a basis of ker(m); canonical free-variable basis from the RREF.
Mat kernel_basis(const Mat& m);

// Columns form a basis of the column space (RREF-normalized, deterministic).
Mat column_space_basis(const Mat& m);

// Solve m*x = b for one x (b a column vector); returns false if inconsistent.
bool solve(const Mat& m, const Mat& b, Mat& x);

Mat inverse(const Mat& m);  // throws if singular

Scalar determinant(Mat m);

// --- column-span subspace operations (columns are spanning sets) ---

// Basis of span(A) ∩ span(B).
Mat intersect_columns(const Mat& A, const Mat& B);

// span(sub) ⊆ span(space)?
bool contained_in(const Mat& sub, const Mat& space);

// Is the column vector v in span(space)?
bool in_span(const Mat& space, const Mat& v);

}  // namespace hsc
