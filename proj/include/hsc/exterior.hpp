#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "hsc/matrix.hpp"

namespace hsc {

struct model_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Canonical multi-index bases of the exterior algebra on 2n generators.
// Degree-k basis monomials are strictly increasing index tuples, listed in
// lexicographic order of the tuple, encoded as bitmasks (bit j = index j+1).
struct BasisTable {
    int dim2n = 0;
    std::vector<std::vector<uint32_t>> masks;  // per degree
    std::vector<int> index_of_mask;            // mask -> position within its degree

    explicit BasisTable(int dim2n);
    static const BasisTable& get(int dim2n);  // cached per dimension

    int dim(int degree) const {
        return (degree < 0 || degree > dim2n) ? 0 : static_cast<int>(masks[degree].size());
    }
    uint32_t mask(int degree, int idx) const { return masks[degree][idx]; }
    int index(uint32_t m) const { return index_of_mask[m]; }
};

// Sign of e^A ∧ e^B -> e^{A∪B} for disjoint masks; 0 on overlap.
int wedge_sign(uint32_t A, uint32_t B);

std::string multi_index_str(uint32_t mask);
uint32_t parse_multi_index(const std::string& s, int dim2n);

// A degree-homogeneous form, sparse over the canonical monomial basis.
// Zero coefficients are never stored.
struct Form {
    int dim2n = 0;
    int degree = 0;
    std::map<uint32_t, Scalar> coeffs;

    static Form zero(int dim2n, int degree) { return Form{dim2n, degree, {}}; }
    static Form monomial(int dim2n, uint32_t mask, Scalar c = Scalar(1));
    static Form constant(int dim2n, Scalar c) { return monomial(dim2n, 0, std::move(c)); }

    bool is_zero() const { return coeffs.empty(); }
    bool is_real() const;
    void set(uint32_t mask, Scalar c);
    Scalar coeff(uint32_t mask) const;
    Form conj() const;

    Mat to_column() const;  // coordinates in the canonical degree basis
    static Form from_column(int dim2n, int degree, const Mat& col);

    friend Form operator+(const Form& a, const Form& b);
    friend Form operator-(const Form& a, const Form& b);
    friend Form operator*(const Scalar& c, const Form& a);
    Form operator-() const { return Scalar(-1) * *this; }
    friend bool operator==(const Form& a, const Form& b);

    std::string str() const;  // e.g. "1 e^{1,2} + 2 i e^{3,4}"
};

Form wedge(const Form& a, const Form& b);
Form wedge_pow(const Form& a, int k);

// top = c * vol; requires deg(top) = 2n and vol a nonzero top form.
Scalar integrate(const Form& top, const Form& vol);

// Interior product by the v-th basis vector (1-based).
Form contraction(int v, const Form& a);

// Lie algebra given by structure constants c^k_{ij} for i<j; the Jacobi
// identity is checked eagerly at construction.
struct LieAlgebraModel {
    int dim2n = 0;
    std::string name;
    std::map<std::tuple<int, int, int>, Scalar> c;  // (i,j,k), i<j

    static LieAlgebraModel make(int dim2n, std::string name,
                                std::map<std::tuple<int, int, int>, Scalar> constants);

    // Coefficient vector of [e_i, e_j] (any i, j; antisymmetry applied).
    std::vector<Scalar> bracket(int i, int j) const;
};

// Degree-homogeneous linear operator; one exact matrix per source degree.
// The degree map is k -> eps*k + shift; eps = +1 for everything except the
// Hodge star, which reverses degree (eps = -1, shift = 2n). The parity used
// in graded commutators is shift mod 2 (the degree change differs from shift
// by an even amount in both cases).
struct GradedOperator {
    int dim2n = 0;
    int shift = 0;
    int eps = 1;
    std::vector<Mat> blocks;  // indexed by source degree 0..2n

    static GradedOperator zero(int dim2n, int shift, int eps = 1);
    static GradedOperator identity(int dim2n);

    int target_degree(int k) const { return eps * k + shift; }

    const Mat& block(int source_degree) const { return blocks[source_degree]; }
    Mat& block(int source_degree) { return blocks[source_degree]; }

    Form apply(const Form& f) const;
    bool is_zero() const;

    friend GradedOperator operator+(const GradedOperator& A, const GradedOperator& B);
    friend GradedOperator operator-(const GradedOperator& A, const GradedOperator& B);
    friend GradedOperator operator*(const Scalar& c, const GradedOperator& A);
    // Composition A ∘ B.
    friend GradedOperator operator*(const GradedOperator& A, const GradedOperator& B);
    friend bool operator==(const GradedOperator& A, const GradedOperator& B);
};

// {A,B} = AB - (-1)^{|A||B|} BA.
GradedOperator graded_commutator(const GradedOperator& A, const GradedOperator& B);

// Chevalley-Eilenberg differential: de^k = -sum_{i<j} c^k_{ij} e^i ∧ e^j,
// extended as a degree +1 anti-derivation.
GradedOperator ce_differential(const LieAlgebraModel& model);

// Left wedge multiplication by a homogeneous form.
GradedOperator wedge_operator(const Form& w);

GradedOperator pow(const GradedOperator& A, int k);  // shift must be 0

// Operator on the full 2^{2n}-dimensional exterior algebra, with an assigned
// parity; used where mixed degree maps (e.g. the star) enter commutators.
struct TotalOperator {
    int dim2n = 0;
    int parity = 0;
    Mat m;
};

TotalOperator to_total(const GradedOperator& A);
TotalOperator graded_commutator(const TotalOperator& A, const TotalOperator& B);

}  // namespace hsc
