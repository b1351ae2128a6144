#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nfcoh/arith.hpp"
#include "nfcoh/matrix.hpp"

using namespace nfc;

static Z product_of(std::vector<std::pair<Z, int>> const & f)
{
    Z r = 1;
    for (auto const & [p, e] : f) r *= zpow(p, e);
    return r;
}

TEST_CASE("factorisation reproduces n with prime factors")
{
    for (Z n : {Z(1), Z(2), Z(360), Z(1000003), Z("600851475143"), Z("1000000016000000063"),
                Z("18446744073709551617")}) {
        auto f = factor(n);
        CHECK(product_of(f) == n);
        for (auto const & [p, e] : f) CHECK(is_prime(p));
    }
    CHECK(factor(Z(-12)).size() == 2);
}

static ZMatrix random_matrix(Rng & rng, size_t r, size_t c, long lo, long hi)
{
    ZMatrix m(r, c);
    for (size_t i = 0; i < r; i++)
        for (size_t j = 0; j < c; j++) m(i, j) = rand_range(rng, lo, hi);
    return m;
}

/* brute-force oracle: lattice membership via rational solve */
static bool in_rowspan(ZMatrix const & H, ZVec const & v)
{
    QVec x;
    if (!solve_left(to_q(H), QVec(v.begin(), v.end()), x)) return false;
    for (auto const & a : x)
        if (a.get_den() != 1) return false;
    return true;
}

TEST_CASE("hnf and hnf_mod agree and span the same lattice")
{
    Rng rng(7);
    for (int it = 0; it < 30; it++) {
        size_t n = 1 + it % 5;
        ZMatrix A = random_matrix(rng, n + 3, n, -20, 20);
        ZMatrix H = hnf(A);
        if (H.rows() < n) continue;
        Z D = 1;
        for (size_t i = 0; i < n; i++) D *= H(i, i);
        ZMatrix Hm = hnf_mod(A, D);
        CHECK(H == Hm);
        for (size_t i = 0; i < A.rows(); i++) CHECK(in_rowspan(H, A.row(i)));
        for (size_t i = 0; i < n; i++) {
            CHECK(H(i, i) > 0);
            for (size_t k = 0; k < i; k++) {
                CHECK(H(k, i) >= 0);
                CHECK(H(k, i) < H(i, i));
            }
        }
        /* multiple of the determinant also works */
        CHECK(hnf_mod(A, 3 * D) == H);
    }
}

TEST_CASE("left kernel")
{
    Rng rng(3);
    for (int it = 0; it < 20; it++) {
        ZMatrix A = random_matrix(rng, 6, 3, -9, 9);
        ZMatrix K = left_kernel(A);
        CHECK(K.rows() == 6 - rank(to_q(A)));
        ZMatrix P = K * A;
        for (size_t i = 0; i < P.rows(); i++)
            for (size_t j = 0; j < P.cols(); j++) CHECK(P(i, j) == 0);
    }
}

TEST_CASE("smith form maps the quotient isomorphically")
{
    Rng rng(11);
    for (int it = 0; it < 20; it++) {
        size_t n = 2 + it % 3;
        ZMatrix A = random_matrix(rng, n, n, -6, 6);
        Z d = det(A);
        if (d == 0) continue;
        Smith s = smith(A);
        Z prod = 1;
        for (size_t i = 0; i < n; i++) {
            prod *= s.diag[i];
            if (i + 1 < n) CHECK(s.diag[i + 1] % s.diag[i] == 0);
        }
        CHECK(prod == abs(d));
        /* rows of A map to zero */
        for (size_t i = 0; i < n; i++) {
            ZVec img = A.row(i) * s.V;
            for (size_t j = 0; j < n; j++) CHECK(mod(img[j], s.diag[j]) == 0);
        }
        /* Vinv rows map to unit vectors */
        for (size_t i = 0; i < n; i++) {
            ZVec img = s.Vinv.row(i) * s.V;
            for (size_t j = 0; j < n; j++)
                CHECK(mod(img[j], s.diag[j]) == mod(Z(i == j ? 1 : 0), s.diag[j]));
        }
    }
}

TEST_CASE("determinants and inverses")
{
    ZMatrix A(3, 3);
    long v[9] = {2, -1, 0, -1, 2, -1, 0, -1, 2};
    for (int i = 0; i < 9; i++) A(i / 3, i % 3) = v[i];
    CHECK(det(A) == 4);
    QMatrix I = inverse(to_q(A)) * to_q(A);
    CHECK(I == QMatrix::identity(3));
}

TEST_CASE("kernel mod p")
{
    UMat A = {{1, 2}, {2, 4}, {0, 1}};
    auto K = left_kernel_mod(A, 3, 2, 7);
    REQUIRE(K.size() == 1);
    CHECK(K[0][0] == 5);   // (5,1,0): 5 + 2 = 7, 10 + 4 = 14
    CHECK(K[0][1] == 1);
    CHECK(K[0][2] == 0);
}
