/* one PASS/FAIL line per acceptance criterion; exit status 1 if any fails */
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "nfcoh/errors.hpp"
#include "nfcoh/json_io.hpp"
#include "nfcoh/kim.hpp"

using namespace nfc;

namespace {

NumberField F(std::string const & s) { return make_field(parse_poly(s)); }
FieldElement E(NumberField const & K, std::string const & s) { return parse_element(K, s); }

struct Check {
    std::ostringstream why;
    bool ok = true;
    void operator()(bool c, std::string const & what)
    {
        if (!c && ok) why << what;
        ok &= c;
    }
};

double since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/* reduced positive definite forms of discriminant D < 0 */
long form_count(long D)
{
    long h = 0;
    for (long a = 1; 3 * a * a <= -D; a++)
        for (long b = -a + 1; b <= a; b++) {
            long t = b * b - D;
            if (t % (4 * a)) continue;
            long c = t / (4 * a);
            if (c < a || (b < 0 && a == c)) continue;
            if (std::gcd(std::gcd(a, std::labs(b)), c) != 1) continue;
            h++;
        }
    return h;
}

bool squarefree(long m)
{
    for (long p = 2; p * p <= m; p++)
        if (m % (p * p) == 0) return false;
    return true;
}

/* every imaginary quadratic field with |disc| <= bound, in the minimal model
 * and, for m = 3 mod 4, also as x^2 + m (polynomial disc 4 disc) */
std::vector<std::pair<std::string, long>> quadratic_models(long bound)
{
    std::vector<std::pair<std::string, long>> out;
    for (long D = -3; D >= -bound; D--) {
        if (!is_fundamental_discriminant(D)) continue;
        out.push_back({quadratic_poly(D), D});
        if (D % 4 && squarefree(-D)) out.push_back({"x^2+" + std::to_string(-D), D});
    }
    return out;
}

/* |Cl[n]| by listing every class */
Z torsion_count(ClassGroup const & C, long n)
{
    Z t = 0;
    for (auto const & c : C.all_elements()) {
        bool ok = true;
        for (size_t i = 0; i < c.size(); i++) ok &= (c[i] * n) % C.cyc[i] == 0;
        t += ok;
    }
    return t;
}

FieldElement random_nonzero(NumberField const & K, Rng & rng, long r = 3)
{
    for (;;) {
        ZVec c(K.degree());
        for (auto & x : c) x = rand_range(rng, -r, r);
        auto x = K.from_coords(c);
        if (!x.is_zero()) return x;
    }
}

Ideal random_ideal(NumberField const & L, Rng & rng)
{
    static const long ps[] = {2, 3, 5, 7, 11, 13};
    Ideal I = Ideal::unit(L);
    for (int k = rand_range(rng, 1, 3); k > 0; k--) {
        auto P = primes_above(L, Z(ps[rand_range(rng, 0, 5)]));
        I = I * P[rand_range(rng, 0, P.size() - 1)].ideal();
    }
    return I;
}

/* a field with a modulus and a list of unramified Kummer classes */
struct Corpus {
    std::string name;
    NumberField K;
    long n;
    std::vector<CyclicExtension> exts;
    std::vector<H1Class> cls;
};

std::vector<Corpus> const & corpus()
{
    static std::vector<Corpus> out = [] {
        std::vector<Corpus> c;
        auto add = [&](std::string const & poly, long n, std::vector<std::string> const & vs) {
            Corpus k{poly, F(poly), n, {}, {}};
            for (auto const & v : vs) {
                k.exts.push_back(build_kummer(k.K, n, E(k.K, v)));
                k.cls.push_back(h1_from_extension(k.exts.back(), n));
            }
            c.push_back(k);
        };
        add("x^2+5", 2, {"-1"});
        add("x^2+21", 2, {"-1", "-3", "-7"});
        add("x^2+14", 2, {"-7"});
        add("x^4+52x^2+400", 3, {"-1/20x^3-21/10x"});
        Corpus & q = c.back();
        q.exts.push_back(with_generator(q.exts[0], 2));
        q.cls.push_back(h1_add(q.cls[0], q.cls[0], std::make_shared<const CyclicExtension>(q.exts[1])));
        return c;
    }();
    return out;
}

bool zero_vec(ZVec const & v)
{
    return std::all_of(v.begin(), v.end(), [](Z const & x) { return x == 0; });
}

/* ---- criteria ---- */

void class_numbers(Check & ck)
{
    auto t0 = std::chrono::steady_clock::now();
    size_t m = 0;
    for (auto const & [poly, D] : quadratic_models(200)) {
        NumberField K = F(poly);
        ck(K.discriminant() == D, poly + " has the wrong discriminant");
        ck(class_group(K)->order() == form_count(D), "class number of " + poly);
        m++;
    }
    double s = since(t0);
    ck(s < 60, "took " + std::to_string(s) + " s");
    ck.why << m << " polynomials, " << s << " s";
}

void ext_orders(Check & ck)
{
    size_t m = 0;
    for (auto const & [poly, D] : quadratic_models(200))
        for (long n : {2, 3}) {
            NumberField K = F(poly);
            /* |U/U^n| = n^rank * |mu_n| with mu_n by enumeration of torsion units */
            Z u = zpow(Z(n), K.unit_rank()) * Z(std::gcd(torsion_units(K).order, n));
            Z rhs = u * torsion_count(*class_group(K), n);
            ck(ext1_group(K, n)->order() == rhs, poly + " n=" + std::to_string(n));
            m++;
        }
    ck.why << m << " cases";
}

void duality(Check & ck)
{
    size_t m = 0;
    auto one = [&](std::string const & poly, long n) {
        NumberField K = F(poly);
        Z z1 = zpow(Z(n), K.unit_rank()) * Z(std::gcd(torsion_units(K).order, n)) * torsion_count(*class_group(K), n);
        std::string tag = poly + " n=" + std::to_string(n);
        ck(h_group(K, n, 0).order() == n, tag + " H0");
        /* Cl/n and Cl[n] have the same order */
        ck(h_group(K, n, 1).order() == torsion_count(*class_group(K), n), tag + " H1");
        ck(h_group(K, n, 2).order() == z1, tag + " H2");
        ck(h_group(K, n, 3).order() == std::gcd(torsion_units(K).order, n), tag + " H3");
        for (int i = 4; i < 8; i++) ck(h_group(K, n, i).invariants.empty(), tag + " H" + std::to_string(i));
        m++;
    };
    for (auto const & [poly, D] : quadratic_models(200))
        for (long n : {2, 3, 4, 6}) one(poly, n);
    one("x^4+52x^2+400", 3);
    one("x^2-2", 3);
    one("x^3-2", 3);
    ck.why << m << " cases";
}

void witness_independence(Check & ck)
{
    size_t m = 0;
    for (auto const & c : corpus()) {
        if (c.name != "x^2+5" && c.name != "x^4+52x^2+400") continue;
        auto const & x = c.cls[0];
        auto const & y = c.cls.back();
        Rng r0(1);
        auto t11 = cup_11(x, y, r0).values;
        auto beta = bockstein(x);
        auto t12 = cup_12(x, beta, r0).value;
        auto cx = cup_11(x, x, r0);
        auto t12b = cup_12(x, cx, r0).value;
        for (uint64_t s = 2; s <= 11; s++) {
            Rng r(s * 7919);
            ck(cup_11(x, y, r).values == t11, c.name + " cup_11 seed " + std::to_string(s));
            ck(cup_12(x, beta, r).value == t12, c.name + " cup_12 seed " + std::to_string(s));
            ck(cup_12(x, cx, r).value == t12b, c.name + " cup_12 on cup_11 seed " + std::to_string(s));
            m += 3;
        }
    }
    ck.why << m << " reseeded evaluations";
}

void well_defined(Check & ck)
{
    size_t m = 0;
    Rng rng(29);
    for (auto const & c : corpus()) {
        std::vector<H2Class> tabs;
        for (auto const & x : c.cls) {
            tabs.push_back(bockstein(x));
            for (auto const & y : c.cls) tabs.push_back(cup_11(x, y, rng));
        }
        for (auto const & t : tabs) ck(t.valid(), c.name + " table violates a relation");
        auto const & x = c.cls[0];
        for (int k = 0; k < 50; k++) {
            auto b = ext_d0(random_nonzero(c.K, rng), c.n);
            for (auto const & t : tabs) ck(t.eval(b) == 0, c.name + " table on B1");
            ck(bockstein_at(x, b) == 0, c.name + " Bockstein on B1");
            ck(cup_11_at(x, c.cls.back(), b, rng) == 0, c.name + " cup_11 on B1");
            m++;
        }
    }
    ck.why << m << " coboundaries";
}

void solvers(Check & ck)
{
    size_t m = 0;
    Rng rng(31);
    for (auto const & c : corpus()) {
        auto const & X = c.exts[0];
        auto CK = class_group(c.K);
        for (int t = 0; t < 25; t++) {
            FieldElement z = random_nonzero(X.L, rng);
            FieldElement u = X.sigma(z) / z;
            FieldElement w = hilbert90_element(X, u, rng);
            ck(X.sigma(w) == u * w, c.name + " hilbert90_element");

            Ideal A = random_ideal(X.L, rng);
            Ideal J = A * X.sigma(A).inverse();
            Ideal I = hilbert90_ideal(X, J);
            ck(I * X.sigma(I).inverse() == J, c.name + " hilbert90_ideal");

            Ideal M;
            do M = random_ideal(X.L, rng);
            while (!CK->is_trivial_class(X.norm(M)));
            auto [bp, s] = furtwangler_split(X, M, rng);
            ck(bp * X.sigma(bp).inverse() * Ideal::principal(s) == M, c.name + " furtwangler_split");
            m += 3;
        }
    }
    /* norm equation: units that are norms of units by construction */
    auto const & q = corpus()[0];
    auto const & X = q.exts[0];
    auto ti = torsion_units(X.L);
    for (int t = 0; t < 25; t++) {
        FieldElement w0 = ti.gen.pow(rand_range(rng, 0, ti.order - 1));
        FieldElement u = X.norm(w0);
        FieldElement v = solve_norm_unit(X, u, rng);
        ck(X.norm(v) == u && abs(v.norm()) == 1, "solve_norm_unit over x^2+5");
        m++;
    }
    auto G = F("x^2+1");
    auto Y = build_kummer(G, 4, E(G, "-1"));
    auto ty = torsion_units(Y.L);
    for (int t = 0; t < 25; t++) {
        FieldElement u = Y.norm(ty.gen.pow(rand_range(rng, 0, ty.order - 1)));
        FieldElement v = solve_norm_unit(Y, u, rng);
        ck(Y.norm(v) == u && abs(v.norm()) == 1, "solve_norm_unit over x^2+1");
        m++;
    }
    ck.why << m << " round trips";
}

void kim_scan(Check & ck)
{
    auto t0 = std::chrono::steady_clock::now();
    ScanConfig cfg;
    cfg.disc_lo = -500;
    cfg.disc_hi = -3;
    cfg.n = 2;
    cfg.exhaustive = true;
    size_t jobs = 0, nonvan = 0;
    scan(cfg, [&](std::string const & line) {
        json r = json::parse(line);
        jobs++;
        std::string tag = r["poly"].get<std::string>() + " v=" + r["v"].get<std::string>();
        if (r["status"] != "ok") {
            ck(false, tag + ": " + r.value("message", std::string("error")));
            return;
        }
        bool van = r["vanishes"];
        ck(r["exhaustive_member"] == van, tag + " exhaustive norm image disagrees");
        ck(r["norm_image_member"] == van, tag + " norm image subgroup disagrees");
        ck((r["cup_value"] == "0") == van, tag + " cup product disagrees");
        ck(r["consistent"] == true, tag + " inconsistent");
        nonvan += !van;
    });
    double s = since(t0);
    ck(nonvan > 0, "no non-vanishing job");
    ck(s < 600, "took " + std::to_string(s) + " s");
    ck.why << jobs << " jobs, " << nonvan << " non-vanishing, " << s << " s";
}

void bockstein_artin(Check & ck)
{
    size_t m = 0;
    Rng rng(37);
    for (auto const & c : corpus()) {
        auto G = ext1_group(c.K, c.n);
        for (size_t i = 0; i < c.cls.size(); i++) {
            auto const & x = c.cls[i];
            auto const & X = c.exts[i];
            auto beta = bockstein(x);
            for (size_t k = 0; k < G->ngens(); k++) {
                Ideal A = G->generator(k).ideal;
                /* Frobenius of a different ideal in the same class */
                Ideal A2 = A * Ideal::principal(random_nonzero(c.K, rng));
                Z art = Z(artin_symbol(X, A2));
                Z want = mod(Z(c.n / X.d) * art, Z(c.n));
                ck(beta.values[k] == want, c.name + " generator " + std::to_string(k));
                ck(x.value(A) == want, c.name + " character on generator " + std::to_string(k));
                m++;
            }
        }
    }
    ck.why << m << " generator evaluations";
}

void kummer_shortcut(Check & ck)
{
    size_t m = 0;
    Rng rng(41);
    for (auto const & c : corpus())
        for (size_t i = 0; i < c.cls.size(); i++) {
            auto const & x = c.cls[i];
            auto direct = kummer_cap_witness(c.exts[i]);
            ck(in_z1(direct, c.n), c.name + " direct witness not in Z1");
            std::vector<H2Class> ys{bockstein(x)};
            for (auto const & y : c.cls) ys.push_back(cup_11(x, y, rng));
            for (auto const & y : c.cls) ys.push_back(bockstein(y));
            for (auto const & y : ys)
                for (uint64_t s = 1; s <= 3; s++) {
                    Rng r(s);
                    ck(cup_12(x, y, r).value == y.eval(direct), c.name + " class " + std::to_string(i));
                    m++;
                }
        }
    ck.why << m << " comparisons";
}

void commutativity_bilinearity(Check & ck)
{
    size_t m = 0;
    Rng rng(43);
    for (auto const & c : corpus()) {
        size_t k = c.cls.size();
        std::vector<std::vector<std::vector<Z>>> tab(k, std::vector<std::vector<Z>>(k));
        for (size_t i = 0; i < k; i++)
            for (size_t j = 0; j < k; j++) tab[i][j] = cup_11(c.cls[i], c.cls[j], rng).values;
        size_t g = ext1_group(c.K, c.n)->ngens();
        for (size_t i = 0; i < k; i++)
            for (size_t j = 0; j < k; j++)
                for (size_t z = 0; z < g; z++) {
                    ck(mod(tab[i][j][z] + tab[j][i][z], Z(c.n)) == 0, c.name + " graded commutativity");
                    m++;
                }
        /* additive relations among the listed characters */
        for (size_t a = 0; a < k; a++)
            for (size_t b = 0; b < k; b++)
                for (size_t s = 0; s < k; s++) {
                    bool rel = true;
                    for (size_t t = 0; t < c.cls[a].chi.size(); t++)
                        rel &= mod(c.cls[a].chi[t] + c.cls[b].chi[t], Z(c.n)) == c.cls[s].chi[t];
                    if (!rel) continue;
                    for (size_t y = 0; y < k; y++)
                        for (size_t z = 0; z < g; z++) {
                            ck(tab[s][y][z] == mod(tab[a][y][z] + tab[b][y][z], Z(c.n)), c.name + " left linearity");
                            ck(tab[y][s][z] == mod(tab[y][a][z] + tab[y][b][z], Z(c.n)), c.name + " right linearity");
                            m += 2;
                        }
                }
        auto zero = h1_zero(c.K, c.n);
        for (auto const & x : c.cls) {
            ck(cup_11(x, zero, rng).is_zero() && cup_11(zero, x, rng).is_zero(), c.name + " zero class");
            m++;
        }
    }
    ck.why << m << " identities";
}

}

int main()
{
    struct Criterion {
        int id;
        const char * what;
        std::function<void(Check &)> run;
    };
    std::vector<Criterion> all{
        {1, "class numbers equal reduced form counts, |disc| <= 200", class_numbers},
        {2, "|Z1/B1| = |U/U^n| |Cl[n]| for n = 2, 3", ext_orders},
        {3, "duality table orders and vanishing above degree 3", duality},
        {4, "cup tables independent of witnesses over 10 seeds", witness_independence},
        {5, "cup and Bockstein tables vanish on 50 random coboundaries", well_defined},
        {6, "solver round trips with exact residuals", solvers},
        {7, "Kim criterion against norm images and cup products, |disc| <= 500", kim_scan},
        {8, "Bockstein equals (n/d) Art on Z1/B1 generators", bockstein_artin},
        {9, "general cap witness reproduces the Kummer witness", kummer_shortcut},
        {10, "graded commutativity and bilinearity of cup products", commutativity_bilinearity},
    };
    int failed = 0;
    for (auto const & c : all) {
        Check ck;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(ck);
        } catch (std::exception const & e) {
            ck.ok = false;
            ck.why << " exception: " << e.what();
        }
        std::printf("%s %2d  %s  [%s] %.1fs\n", ck.ok ? "PASS" : "FAIL", c.id, c.what, ck.why.str().c_str(), since(t0));
        std::fflush(stdout);
        failed += !ck.ok;
    }
    return failed ? 1 : 0;
}
