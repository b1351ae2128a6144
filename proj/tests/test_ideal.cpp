#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nfcoh/ideal.hpp"
#include "nfcoh/errors.hpp"

using namespace nfc;

static NumberField F(std::string const & s) { return make_field(parse_poly(s)); }
static FieldElement E(NumberField const & K, std::string const & s) { return parse_element(K, s); }

static long sum_ef(std::vector<PrimeIdeal> const & v)
{
    long s = 0;
    for (auto const & P : v) s += P.e() * P.f();
    return s;
}

TEST_CASE("primes of Q(sqrt(-5))")
{
    NumberField K = F("x^2+5");
    auto P2 = primes_above(K, Z(2));
    REQUIRE(P2.size() == 1);
    CHECK(P2[0].e() == 2);
    CHECK(P2[0].f() == 1);
    Ideal p2 = P2[0].ideal();
    CHECK(p2 == Ideal::generated(K, {K.from_int(2), E(K, "1+x")}));
    CHECK(p2 * p2 == Ideal::from_int(K, Z(2)));
    CHECK(!p2.contains(K.one()));
    CHECK(p2.norm() == Q(2));

    auto P3 = primes_above(K, Z(3));
    CHECK(P3.size() == 2);
    auto P11 = primes_above(K, Z(11));
    REQUIRE(P11.size() == 1);
    CHECK(P11[0].f() == 2);
    auto P5 = primes_above(K, Z(5));
    REQUIRE(P5.size() == 1);
    CHECK(P5[0].e() == 2);

    Ideal a = Ideal::principal(E(K, "1+x"));
    CHECK(a.norm() == Q(6));
    Ideal q3 = Ideal::generated(K, {K.from_int(3), E(K, "1+x")});
    CHECK(a == p2 * q3);
    auto fa = principal_divisor(E(K, "1+x"));
    CHECK(fa.size() == 2);
    for (auto const & [P, e] : fa) CHECK(e == 1);
}

TEST_CASE("Dedekind and lattice splitting agree")
{
    for (auto s : {"x^2+5", "x^3-2", "x^4-8x^2+36", "x^3-x-1", "x^4+52x^2+400"}) {
        NumberField K = F(s);
        for (long p : {2, 3, 5, 7, 11, 13, 23, 29, 31, 101}) {
            auto g = decompose_generic(K.data(), Z(p));
            long t = 0;
            for (auto const & d : g) t += d.e * d.f;
            CHECK(t == (long) K.degree());
            if (mpz_divisible_p(K.data().index.get_mpz_t(), Z(p).get_mpz_t())) continue;
            auto d = decompose_dedekind(K.data(), Z(p));
            REQUIRE(d.size() == g.size());
            for (size_t i = 0; i < d.size(); i++) {
                CHECK(d[i].hnf == g[i].hnf);
                CHECK(d[i].e == g[i].e);
                CHECK(d[i].f == g[i].f);
            }
        }
    }
}

TEST_CASE("prime ideals multiply back to p")
{
    for (auto s : {"x^2+5", "x^3-2", "x^4-8x^2+36", "x^4+52x^2+400", "x^2+3"}) {
        NumberField K = F(s);
        for (long p : {2, 3, 5, 19, 23}) {
            auto ps = primes_above(K, Z(p));
            CHECK(sum_ef(ps) == (long) K.degree());
            Ideal prod = Ideal::unit(K);
            for (auto const & P : ps) {
                prod = prod * P.ideal().pow(P.e());
                CHECK(P.ideal() == Ideal::generated(K, {K.from_int(p), P.alpha()}));
                CHECK(valuation(P.alpha(), P) >= 1);
                CHECK(valuation(K.from_int(p), P) == P.e());
                for (auto const & Q2 : ps)
                    if (Q2 != P) CHECK(valuation(P.ideal(), Q2) == 0);
            }
            CHECK(prod == Ideal::from_int(K, Z(p)));
        }
    }
}

TEST_CASE("inverse, sum and factorization round trip")
{
    Rng rng(5);
    for (auto s : {"x^2+5", "x^3-2", "x^4-8x^2+36", "x^2-x+6"}) {
        NumberField K = F(s);
        size_t m = K.degree();
        for (int it = 0; it < 12; it++) {
            QVec a(m), b(m);
            for (size_t i = 0; i < m; i++) {
                a[i] = rand_range(rng, -9, 9);
                b[i] = Q(rand_range(rng, -9, 9), rand_range(rng, 1, 4));
            }
            if (a[0] == 0) a[0] = 1;
            FieldElement x = K.from_coords(a), y = K.from_coords(b);
            if (y.is_zero()) y = K.one();
            Ideal I = Ideal::generated(K, {x, K.from_int(6)});
            Ideal J = Ideal::principal(y);
            CHECK((I * I.inverse()).is_unit());
            CHECK((J * J.inverse()).is_unit());
            CHECK(J.norm() == abs(y.norm()));
            CHECK(from_factorization(K, factor(I * J)) == I * J);
            CHECK(from_factorization(K, factor(J.inverse())) == J.inverse());
            Ideal S = I + J;
            CHECK(S.divides(I));
            CHECK(S.divides(J));
            CHECK(nth_root(I.pow(3) * J.pow(-3), 3) == I * J.inverse());
            for (auto const & [P, e] : factor(J)) CHECK(valuation(y, P) == e);
        }
    }
}

TEST_CASE("nth root failure and minimum")
{
    NumberField K = F("x^2+5");
    auto P2 = primes_above(K, Z(2))[0].ideal();
    CHECK_THROWS_AS(nth_root(P2, 2), error);
    CHECK(nth_root(P2, 1) == P2);
    CHECK(P2.minimum() == Z(2));
    CHECK(Ideal::principal(E(K, "1+x")).minimum() == Z(6));
}
