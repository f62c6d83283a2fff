#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hsc/matrix.hpp"

using namespace hsc;

TEST_CASE("rational parsing") {
    CHECK(parse_rat("3/4") == Rat(3, 4));
    CHECK(parse_rat("-6/8") == Rat(-3, 4));  // canonicalized
    CHECK(parse_rat("0") == 0);
    CHECK_THROWS_AS(parse_rat("0.5"), parse_error);
    CHECK_THROWS_AS(parse_rat("1e3"), parse_error);
    CHECK_THROWS_AS(parse_rat("1/0"), parse_error);
    CHECK_THROWS_AS(parse_rat(""), parse_error);
}

TEST_CASE("scalar parsing and printing round-trip") {
    CHECK(parse_scalar("1/2+3/4 i") == Scalar(Rat(1, 2), Rat(3, 4)));
    CHECK(parse_scalar("1/2-3/4 i") == Scalar(Rat(1, 2), Rat(-3, 4)));
    CHECK(parse_scalar("-2") == Scalar(-2));
    CHECK(parse_scalar("5/3 i") == Scalar(Rat(0), Rat(5, 3)));
    for (const char* s : {"0", "1", "-1", "1/2", "3/4+1/2 i", "-3/4-1/2 i", "1 i", "-1 i", "2+1 i"}) {
        Scalar v = parse_scalar(s);
        CHECK(parse_scalar(scalar_str(v)) == v);
    }
    CHECK(scalar_str(Scalar(0)) == "0");
    CHECK_THROWS_AS(parse_scalar("1.5+2 i"), parse_error);
}

TEST_CASE("scalar field arithmetic") {
    Scalar i = Scalar::i();
    CHECK(i * i == Scalar(-1));
    Scalar z(Rat(2), Rat(3));
    CHECK(z / z == Scalar(1));
    CHECK(z * z.conj() == Scalar(Rat(13)));
    CHECK_THROWS(z / Scalar(0));
    CHECK(i_pow(-1) == -i);
    CHECK(i_pow(6) == Scalar(-1));
}

static Mat from_ints(int r, int c, std::initializer_list<int> vals) {
    Mat m(r, c);
    auto it = vals.begin();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = Scalar(*it++);
    return m;
}

TEST_CASE("rref, rank, kernel, solve on hand-checked matrices") {
    Mat m = from_ints(3, 4, {1, 2, 3, 4, 2, 4, 6, 8, 1, 1, 1, 1});
    CHECK(rank(m) == 2);
    Mat k = kernel_basis(m);
    CHECK(k.cols == 2);
    CHECK((m * k).is_zero());

    Mat b(3, 1);
    b.at(0, 0) = Scalar(10);
    b.at(1, 0) = Scalar(20);
    b.at(2, 0) = Scalar(4);
    Mat x;
    REQUIRE(solve(m, b, x));
    CHECK(m * x == b);

    Mat inconsistent = b;
    inconsistent.at(1, 0) = Scalar(21);
    CHECK_FALSE(solve(m, inconsistent, x));
}

TEST_CASE("inverse and determinant") {
    Mat m = from_ints(3, 3, {2, 0, 1, 1, 1, 0, 0, 3, 1});
    // det by cofactor expansion: 2*(1*1-0*3) - 0 + 1*(1*3-1*0) = 5
    CHECK(determinant(m) == Scalar(5));
    CHECK(m * inverse(m) == Mat::identity(3));
    Mat singular = from_ints(2, 2, {1, 2, 2, 4});
    CHECK(determinant(singular) == Scalar(0));
    CHECK_THROWS(inverse(singular));
}

TEST_CASE("parallel multiply agrees exactly with the serial reference") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 6);
    for (int trial = 0; trial < 3; ++trial) {
        int n = 40 + 17 * trial;
        Mat a(n, n), b(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rat re(num(rng), den(rng)), im(num(rng), den(rng));
                re.canonicalize();
                im.canonicalize();
                a.at(i, j) = Scalar(re, im);
                Rat re2(num(rng), den(rng));
                re2.canonicalize();
                b.at(i, j) = Scalar(re2);
            }
        CHECK(a * b == mul_serial(a, b));
    }
}

TEST_CASE("subspace operations") {
    // span{(1,0,0),(0,1,0)} ∩ span{(0,1,0),(0,0,1)} = span{(0,1,0)}
    Mat A = from_ints(3, 2, {1, 0, 0, 1, 0, 0});
    Mat B = from_ints(3, 2, {0, 0, 1, 0, 0, 1});
    Mat I12 = intersect_columns(A, B);
    CHECK(I12.cols == 1);
    CHECK(in_span(A, I12.col(0)));
    CHECK(in_span(B, I12.col(0)));
    CHECK(contained_in(I12, A));
    CHECK_FALSE(contained_in(A, B));
    Mat e1 = from_ints(3, 1, {1, 0, 0});
    CHECK(in_span(A, e1));
    CHECK_FALSE(in_span(B, e1));
}

TEST_CASE("rank/kernel consistency on random rational matrices") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-4, 4), den(1, 5);
    for (int trial = 0; trial < 10; ++trial) {
        Mat m(5, 7);
        for (auto& v : m.a) {
            Rat r(num(rng), den(rng));
            r.canonicalize();
            v = Scalar(r);
        }
        int r = rank(m);
        Mat k = kernel_basis(m);
        CHECK(r + k.cols == 7);  // rank-nullity
        CHECK((m * k).is_zero());
        CHECK(rank(m.transpose()) == r);
        CHECK(column_space_basis(m).cols == r);
    }
}
