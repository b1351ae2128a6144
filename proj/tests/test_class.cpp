#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nfcoh/class_group.hpp"
#include "nfcoh/errors.hpp"

using namespace nfc;

static NumberField F(std::string const & s) { return make_field(parse_poly(s)); }
static FieldElement E(NumberField const & K, std::string const & s) { return parse_element(K, s); }

/* number of reduced positive definite forms of discriminant D < 0 */
static long form_count(long D)
{
    long h = 0;
    for (long a = 1; 3 * a * a <= -D; a++)
        for (long b = -a + 1; b <= a; b++) {
            long t = b * b - D;
            if (t % (4 * a)) continue;
            long c = t / (4 * a);
            if (c < a) continue;
            if (b < 0 && a == c) continue;
            if (std::gcd(std::gcd(a, std::labs(b)), c) != 1) continue;
            h++;
        }
    return h;
}

TEST_CASE("class groups of small quadratic fields")
{
    auto C5 = class_group(F("x^2+5"));
    CHECK(C5->cyc == std::vector<Z>{Z(2)});
    CHECK(class_group(F("x^2+1"))->cyc.empty());
    CHECK(class_group(F("x^2+23"))->cyc == std::vector<Z>{Z(3)});
    CHECK(class_group(F("x^2-x+6"))->cyc == std::vector<Z>{Z(3)});
}

TEST_CASE("class numbers agree with reduced forms")
{
    for (long m = 1; m <= 100; m++) {
        bool sf = true;
        for (long p = 2; p * p <= m; p++)
            if (m % (p * p) == 0) sf = false;
        if (!sf) continue;
        long D = (m % 4 == 3) ? -m : -4 * m;
        NumberField K = make_field(QPoly({Q(m), Q(0), Q(1)}));
        CHECK(K.discriminant() == Z(D));
        CHECK(class_group(K)->order() == Z(form_count(D)));
        if (m % 4 == 3) {
            NumberField L = make_field(QPoly({Q((1 + m) / 4), Q(-1), Q(1)}));
            CHECK(class_group(L)->order() == Z(form_count(D)));
        }
    }
}

TEST_CASE("principal ideals")
{
    NumberField K = F("x^2+5");
    auto C = class_group(K);
    auto p2 = primes_above(K, Z(2))[0].ideal();
    auto g2 = is_principal(Ideal::from_int(K, Z(2)));
    REQUIRE(g2);
    CHECK(Ideal::principal(*g2) == Ideal::from_int(K, Z(2)));
    CHECK(!is_principal(p2));
    CHECK(C->dlog(p2) == ZVec{Z(1)});
    CHECK(C->dlog(p2 * p2) == ZVec{Z(0)});
    Ideal q3 = Ideal::generated(K, {K.from_int(3), E(K, "1+x")});
    auto g6 = is_principal(p2 * q3);
    REQUIRE(g6);
    CHECK(abs(g6->norm()) == Q(6));
    CHECK(Ideal::principal(*g6) == p2 * q3);
    auto gf = is_principal(Ideal::principal(E(K, "2/3+x/7")));
    REQUIRE(gf);
    CHECK(Ideal::principal(*gf) == Ideal::principal(E(K, "2/3+x/7")));
}

TEST_CASE("discrete log is a homomorphism and detects principality")
{
    Rng rng(3);
    for (auto s : {"x^2+5", "x^2+23", "x^2+14", "x^2+65", "x^4+52x^2+400", "x^3-x^2+x+2"}) {
        NumberField K = F(s);
        auto C = class_group(K);
        std::vector<Ideal> pool;
        for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43})
            for (auto const & P : primes_above(K, Z(p))) pool.push_back(P.ideal());
        for (auto const & I : pool) CHECK((bool) C->principal_generator(I) == C->is_trivial_class(I));
        for (int it = 0; it < 20; it++) {
            Ideal a = pool[rand_range(rng, 0, pool.size() - 1)];
            Ideal b = pool[rand_range(rng, 0, pool.size() - 1)].pow(rand_range(rng, -2, 2));
            ZVec la = C->dlog(a), lb = C->dlog(b), lab = C->dlog(a * b);
            for (size_t i = 0; i < C->cyc.size(); i++) CHECK(lab[i] == mod(la[i] + lb[i], C->cyc[i]));
            Ideal ab = a * b;
            auto g = C->principal_generator(ab);
            CHECK((bool) g == C->is_trivial_class(ab));
            if (g) CHECK(Ideal::principal(*g) == ab);
        }
        for (size_t i = 0; i < C->gens.size(); i++) {
            ZVec u(C->cyc.size(), Z(0));
            u[i] = 1;
            CHECK(C->dlog(C->gens[i]) == u);
            CHECK(C->principal_generator(C->gens[i].pow(C->cyc[i].get_si())));
        }
    }
}

TEST_CASE("torsion units")
{
    auto m5 = torsion_units(F("x^2+5"));
    CHECK(m5.order == 2);
    NumberField Ki = F("x^2+1");
    auto m1 = torsion_units(Ki);
    CHECK(m1.order == 4);
    CHECK(m1.gen == E(Ki, "x"));
    auto mi = roots_of_unity(Ki, 4);
    CHECK(mi.order == 4);
    CHECK(mi.gen.pow(4).is_one());
    CHECK(!mi.gen.pow(2).is_one());
    CHECK(torsion_units(F("x^2+3")).order == 6);
    CHECK(roots_of_unity(F("x^2+5"), 3).order == 1);
    CHECK(roots_of_unity(F("x^2+5"), 2).order == 2);
    CHECK(torsion_units(F("x^4+1")).order == 8);
    CHECK(torsion_units(F("x^4-x^2+1")).order == 12);
    CHECK(torsion_units(F("x^3-2")).order == 2);
}

TEST_CASE("fundamental units")
{
    NumberField K2 = F("x^2-2");
    auto U2 = unit_group(K2);
    REQUIRE(U2->rank() == 1);
    /* 1+sqrt2 generates modulo torsion */
    auto c = U2->coordinates(E(K2, "1+x"));
    CHECK(abs(c.second[0]) == 1);
    NumberField K3 = F("x^3-2");
    auto U3 = unit_group(K3);
    REQUIRE(U3->rank() == 1);
    CHECK(abs(U3->coordinates(E(K3, "1+x+x^2")).second[0]) == 1);
    /* totally real cubic of discriminant 49: x and 1-x are independent units */
    NumberField K7 = F("x^3+x^2-2x-1");
    auto U7 = unit_group(K7);
    REQUIRE(U7->rank() == 2);
    auto a = U7->coordinates(E(K7, "x")).second, b = U7->coordinates(E(K7, "x+1")).second;
    CHECK(abs(a[0] * b[1] - a[1] * b[0]) == 1);
    CHECK_THROWS_AS(unit_group(F("x^4-10x^2+1")), error);
    NumberField Q4 = F("x^4+52x^2+400");
    auto U4 = unit_group(Q4);
    REQUIRE(U4->rank() == 1);
    for (auto const & u : U4->fundamental) CHECK(abs(u.norm()) == 1);
}

TEST_CASE("units modulo n-th powers")
{
    NumberField K5 = F("x^2+5");
    auto a = units_mod_nth_powers(K5, 2);
    CHECK(a.size() == 2);
    CHECK(a.gens[0] == K5.from_int(-1));
    NumberField Ki = F("x^2+1");
    auto b = units_mod_nth_powers(Ki, 2);
    CHECK(b.size() == 2);
    CHECK(b.gens[0] == E(Ki, "x"));
    CHECK(b.coordinates(Ki.from_int(-1)) == std::vector<Z>{Z(0)});
    CHECK(units_mod_nth_powers(F("x^2+5"), 3).size() == 1);
    CHECK(units_mod_nth_powers(F("x^2+3"), 3).size() == 3);
    CHECK(units_mod_nth_powers(F("x^4+52x^2+400"), 3).size() == 9);
}

TEST_CASE("n-th roots of elements")
{
    NumberField K = F("x^2+5");
    auto r = nth_root(K.from_int(4), 2);
    REQUIRE(r);
    CHECK(r->pow(2) == K.from_int(4));
    CHECK(!nth_root(K.from_int(-1), 2));
    CHECK(!nth_root(K.from_int(2), 2));
    FieldElement y = E(K, "3/2-x/5");
    auto r3 = nth_root(y.pow(3), 3);
    REQUIRE(r3);
    CHECK(*r3 == y);
    NumberField Ki = F("x^2+1");
    auto ri = nth_root(Ki.from_int(-1), 2);
    REQUIRE(ri);
    CHECK(ri->pow(2) == Ki.from_int(-1));
    CHECK(!nth_root(F("x^2+3").from_int(2), 3));
}
