#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nfcoh/cyclic_extension.hpp"
#include "nfcoh/errors.hpp"

using namespace nfc;

static NumberField F(std::string const & s) { return make_field(parse_poly(s)); }
static FieldElement E(NumberField const & K, std::string const & s) { return parse_element(K, s); }

static Err code_of(std::function<void()> f)
{
    try {
        f();
    } catch (error const & e) {
        return e.code();
    }
    return Err::Internal;
}

static FieldElement random_elt(NumberField const & L, Rng & rng, long r = 3)
{
    ZVec c(L.degree());
    for (auto & x : c) x = rand_range(rng, -r, r);
    return L.from_coords(c);
}

static Ideal random_ideal(NumberField const & L, Rng & rng)
{
    static const long ps[] = {2, 3, 5, 7, 11, 13};
    Ideal I = Ideal::unit(L);
    for (int k = rand_range(rng, 1, 3); k > 0; k--) {
        auto P = primes_above(L, Z(ps[rand_range(rng, 0, 5)]));
        I = I * P[rand_range(rng, 0, P.size() - 1)].ideal();
    }
    return I;
}

TEST_CASE("Kummer extensions of Q(sqrt -5)")
{
    auto K = F("x^2+5");
    auto X = build_kummer(K, 2, E(K, "-1"));
    CHECK(X.d == 2);
    CHECK(X.L.degree() == 4);
    CHECK(X.unramified);
    /* product of the discriminants -4, -20, 5 of the quadratic subfields */
    CHECK(X.L.discriminant() == 400);
    CHECK(X.kummer_root.pow(2) == X.to_L(E(K, "-1")));
    CHECK(X.sigma(X.kummer_root) == -X.kummer_root);
    CHECK(X.sigma(X.to_L(K.gen())) == X.to_L(K.gen()));

    auto T = build_kummer(K, 2, E(K, "4"));
    CHECK(T.d == 1);
    CHECK(T.trivial());
    CHECK(T.kummer_root.pow(2) == E(K, "4"));

    CHECK(code_of([&] { build_kummer(K, 3, E(K, "2")); }) == Err::RootOfUnityMissing);
    CHECK(code_of([&] { build_kummer(K, 2, K.zero()); }) == Err::InvalidArgument);
}

TEST_CASE("cubic Kummer extension of Q(sqrt -3) is ramified")
{
    auto K = F("x^2+3");
    auto X = build_kummer(K, 3, E(K, "2"));
    CHECK(X.d == 3);
    CHECK(X.L.degree() == 6);
    CHECK(!X.unramified);
    CHECK(code_of([&] { artin_symbol(X, Ideal::from_int(K, 5)); }) == Err::RamifiedExtension);
    Rng rng(3);
    for (int i = 0; i < 5; i++) {
        auto c = random_elt(X.L, rng);
        if (c.is_zero()) continue;
        auto u = X.sigma(c) / c;
        auto b = hilbert90_element(X, u, rng);
        CHECK(X.sigma(b) == u * b);
    }
}

TEST_CASE("real places ramify in even degree")
{
    auto K = F("x^2-3");
    auto X = build_kummer(K, 2, E(K, "-1"));
    CHECK(X.d == 2);
    CHECK(!X.unramified);
    CHECK(!X.note.empty());
}

TEST_CASE("explicit model agrees with the Kummer model")
{
    auto L = F("x^4-8x^2+36");
    auto X = make_cyclic(L, E(L, "-x"));
    CHECK(X.d == 2);
    CHECK(X.K.degree() == 2);
    CHECK(X.K.discriminant() == -20);
    CHECK(X.unramified);
    auto K = F("x^2+5");
    auto Y = make_cyclic(L, E(L, "-x"), K);
    CHECK(Y.K == K);
    /* i = (t^2 - 6)/(2t) */
    auto i = E(L, "x^2-6") / E(L, "2x");
    CHECK(i.pow(2) == -L.one());
    CHECK(Y.norm(i) == K.one());
    CHECK(Y.norm(L.one() + i) == E(K, "2"));
    auto P2 = primes_above(K, Z(2))[0].ideal();
    CHECK(artin_symbol(Y, P2) == 1);
    CHECK(artin_symbol(Y, P2.pow(2)) == 0);
    CHECK(code_of([&] { make_cyclic(L, E(L, "-x"), F("x^2+1"), E(L, "x")); }) == Err::InvalidArgument);
}

TEST_CASE("relative norms and Artin symbols")
{
    auto K = F("x^2+5");
    auto X = build_kummer(K, 2, E(K, "-1"));
    auto i = X.kummer_root;
    CHECK(X.norm(i) == K.one());
    CHECK(X.norm(X.L.one() + i) == E(K, "2"));
    auto P2 = primes_above(K, Z(2))[0].ideal();
    CHECK(artin_symbol(X, P2) == 1);
    CHECK(artin_symbol(X, P2.pow(2)) == 0);
    CHECK(artin_symbol(X, Ideal::principal(E(K, "1+x"))) == 0);

    Rng rng(5);
    for (int t = 0; t < 10; t++) {
        auto e = random_elt(X.L, rng);
        if (e.is_zero()) continue;
        CHECK(X.norm(Ideal::principal(e)) == Ideal::principal(X.norm(e)));
    }
    /* Frobenius is trivial exactly when the prime splits */
    for (long p : {3, 7, 11, 13, 17, 19, 23, 29, 41}) {
        for (auto const & P : primes_above(K, Z(p))) {
            size_t above = 0;
            for (auto const & Q : primes_above(X.L, Z(p)))
                if (Q.ideal().contains(X.to_L(P.alpha()))) above++;
            CHECK(frobenius(X, P) == (above == 2 ? 0 : 1));
        }
    }
    /* Artin map kills norms from L and is additive */
    auto CK = class_group(K);
    for (int t = 0; t < 12; t++) {
        auto a = random_ideal(K, rng), b = random_ideal(K, rng);
        CHECK(artin_symbol(X, a * b) == (artin_symbol(X, a) + artin_symbol(X, b)) % 2);
        CHECK((artin_symbol(X, a) == 0) == CK->is_trivial_class(a));
        auto J = random_ideal(X.L, rng);
        CHECK(artin_symbol(X, X.norm(J)) == 0);
    }
    auto S = norm_image_subgroup(X);
    CHECK(S.order() == 1);
    auto ex = norm_image_exhaustive(X);
    CHECK(ex.size() == 1);
}

TEST_CASE("extension and descent of ideals")
{
    auto K = F("x^2+5");
    auto X = build_kummer(K, 2, E(K, "-1"));
    Rng rng(7);
    for (int t = 0; t < 10; t++) {
        auto a = random_ideal(K, rng);
        auto A = X.extend(a);
        CHECK(X.descend(A) == a);
        CHECK(X.sigma(A) == A);
        CHECK(X.norm(A) == a.pow(2));
    }
    auto Q3 = primes_above(X.L, Z(29));
    bool failed = false;
    for (auto const & Q : Q3)
        if (X.sigma(Q.ideal()) != Q.ideal()) failed |= code_of([&] { X.descend(Q.ideal()); }) == Err::DescentFailure;
    CHECK(failed);
}

TEST_CASE("Hilbert 90 for elements")
{
    auto K = F("x^2+5");
    auto X = build_kummer(K, 2, E(K, "-1"));
    Rng rng(11);
    CHECK(hilbert90_element(X, X.L.one(), rng) == X.L.one());
    auto b = hilbert90_element(X, -X.L.one(), rng);
    CHECK(X.sigma(b) == -b);
    CHECK(code_of([&] { hilbert90_element(X, X.to_L(E(K, "2")), rng); }) == Err::NormNotOne);
    int n = 0;
    while (n < 25) {
        auto c = random_elt(X.L, rng);
        if (c.is_zero()) continue;
        auto u = X.sigma(c) / c;
        auto w = hilbert90_element(X, u, rng);
        CHECK(X.sigma(w) == u * w);
        n++;
    }
}

TEST_CASE("Hilbert 90 for ideals")
{
    auto K = F("x^2+5");
    auto X = build_kummer(K, 2, E(K, "-1"));
    Rng rng(13);
    for (int t = 0; t < 25; t++) {
        auto A = random_ideal(X.L, rng);
        auto J = A * X.sigma(A).inverse();
        auto I = hilbert90_ideal(X, J);
        CHECK(I * X.sigma(I).inverse() == J);
    }
    auto Q2 = primes_above(X.L, Z(2))[0].ideal();
    CHECK(code_of([&] { hilbert90_ideal(X, Q2); }) == Err::NormNotTrivial);
}

TEST_CASE("Furtwangler splitting")
{
    auto K = F("x^2+5");
    auto X = build_kummer(K, 2, E(K, "-1"));
    auto CK = class_group(K);
    Rng rng(17);
    int n = 0;
    while (n < 25) {
        auto M = random_ideal(X.L, rng);
        if (!CK->is_trivial_class(X.norm(M))) {
            CHECK(code_of([&] { furtwangler_split(X, M, rng); }) == Err::ClassEquationUnsolvable);
            continue;
        }
        auto [b, a] = furtwangler_split(X, M, rng);
        CHECK(b * X.sigma(b).inverse() * Ideal::principal(a) == M);
        n++;
    }
}

TEST_CASE("norm equation for units")
{
    auto K = F("x^2+5");
    auto X = build_kummer(K, 2, E(K, "-1"));
    Rng rng(19);
    for (int t = 0; t < 25; t++) {
        auto u = t % 2 ? -K.one() : K.one();
        auto v = solve_norm_unit(X, u, rng);
        CHECK(X.norm(v) == u);
        CHECK(abs(v.norm()) == 1);
    }
    CHECK(code_of([&] { solve_norm_unit(X, E(K, "2"), rng); }) == Err::InvalidArgument);

    /* Q(zeta_8)/Q(i): zeta_8^3 has norm i */
    auto G = F("x^2+1");
    auto Y = build_kummer(G, 4, E(G, "-1"));
    CHECK(Y.d == 2);
    auto w = solve_norm_unit(Y, E(G, "x"), rng);
    CHECK(Y.norm(w) == E(G, "x"));
}

TEST_CASE("subgroups of finite abelian groups")
{
    auto S = subgroup_of({Z(2), Z(6)}, {ZVec{Z(1), Z(3)}});
    CHECK(S.order() == 2);
    CHECK(S.contains(ZVec{Z(1), Z(3)}));
    CHECK(S.contains(ZVec{Z(0), Z(0)}));
    CHECK(!S.contains(ZVec{Z(0), Z(3)}));
    CHECK(!S.contains(ZVec{Z(1), Z(0)}));
}

TEST_CASE("cubic unramified extension of a quartic field")
{
    auto K = F("x^4+52x^2+400");
    auto X = build_kummer(K, 3, E(K, "-1/20x^3-21/10x"));
    CHECK(X.d == 3);
    CHECK(X.unramified);
    CHECK(abs(X.L.discriminant()) == zpow(Z(4761), 3));
    auto CK = class_group(K);
    REQUIRE(CK->cyc == std::vector<Z>{Z(3)});
    long g = artin_symbol(X, CK->gens[0]);
    CHECK(g != 0);
    CHECK(artin_symbol(X, CK->gens[0].pow(2)) == (2 * g) % 3);
    CHECK(norm_image_subgroup(X).order() == 1);
    Rng rng(23);
    auto U = units_mod_nth_powers(K, 3);
    for (int t = 0; t < 6; t++) {
        auto u = U.gens[t % U.gens.size()].pow(t % 3 + 1);
        CHECK(X.norm(solve_norm_unit(X, u, rng)) == u);
    }
    auto z = X.to_L(X.zeta);
    auto b = hilbert90_element(X, z, rng);
    CHECK(X.sigma(b) == z * b);
    auto P = primes_above(X.L, Z(7));
    for (int t = 0; t < 4; t++) {
        auto M = X.extend(CK->gens[0]) * P[t % P.size()].ideal();
        auto [c, a] = furtwangler_split(X, M, rng);
        CHECK(c * X.sigma(c).inverse() * Ideal::principal(a) == M);
    }
}
