#include "nfcoh/poly.hpp"
#include "nfcoh/errors.hpp"
#include "nfcoh/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace nfc {

QPoly QPoly::monomial(Q const & a, size_t k)
{
    std::vector<Q> v(k + 1, Q(0));
    v[k] = a;
    return QPoly(v);
}

void QPoly::trim()
{
    while (!c.empty() && c.back() == 0) c.pop_back();
}

bool QPoly::is_integral() const
{
    for (auto const & a : c)
        if (a.get_den() != 1) return false;
    return true;
}

QPoly QPoly::derivative() const
{
    std::vector<Q> d;
    for (size_t i = 1; i < c.size(); i++) d.push_back(c[i] * (long) i);
    return QPoly(d);
}

QPoly QPoly::monic() const
{
    if (c.empty()) return *this;
    Q l = lead();
    std::vector<Q> d = c;
    for (auto & a : d) a /= l;
    return QPoly(d);
}

Q QPoly::eval(Q const & x) const
{
    Q r = 0;
    for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
}

QPoly operator+(QPoly const & a, QPoly const & b)
{
    std::vector<Q> r(std::max(a.c.size(), b.c.size()), Q(0));
    for (size_t i = 0; i < a.c.size(); i++) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); i++) r[i] += b.c[i];
    return QPoly(r);
}

QPoly operator-(QPoly const & a, QPoly const & b)
{
    std::vector<Q> r(std::max(a.c.size(), b.c.size()), Q(0));
    for (size_t i = 0; i < a.c.size(); i++) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); i++) r[i] -= b.c[i];
    return QPoly(r);
}

QPoly operator*(QPoly const & a, QPoly const & b)
{
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Q> r(a.c.size() + b.c.size() - 1, Q(0));
    for (size_t i = 0; i < a.c.size(); i++) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); j++) r[i + j] += a.c[i] * b.c[j];
    }
    return QPoly(r);
}

QPoly operator*(Q const & s, QPoly const & a)
{
    std::vector<Q> r = a.c;
    for (auto & x : r) x *= s;
    return QPoly(r);
}

void divmod(QPoly const & a, QPoly const & b, QPoly & q, QPoly & r)
{
    if (b.is_zero()) throw error(Err::DivisionByZero, "polynomial division by zero");
    std::vector<Q> rem = a.c;
    long db = b.degree();
    std::vector<Q> quo(std::max(0L, a.degree() - db + 1), Q(0));
    Q lb = b.lead();
    for (long k = a.degree() - db; k >= 0; k--) {
        Q t = rem[k + db] / lb;
        quo[k] = t;
        if (t == 0) continue;
        for (long j = 0; j <= db; j++) rem[k + j] -= t * b.c[j];
    }
    q = QPoly(quo);
    r = QPoly(rem);
}

QPoly operator%(QPoly const & a, QPoly const & b)
{
    QPoly q, r;
    divmod(a, b, q, r);
    return r;
}

QPoly gcd(QPoly a, QPoly b)
{
    while (!b.is_zero()) {
        QPoly r = a % b;
        a = b;
        b = r;
    }
    return a.monic();
}

QPoly xgcd(QPoly const & a, QPoly const & b, QPoly & s, QPoly & t)
{
    QPoly r0 = a, r1 = b, s0({Q(1)}), s1, t0, t1({Q(1)});
    while (!r1.is_zero()) {
        QPoly q, r;
        divmod(r0, r1, q, r);
        r0 = r1; r1 = r;
        QPoly ns = s0 - q * s1; s0 = s1; s1 = ns;
        QPoly nt = t0 - q * t1; t0 = t1; t1 = nt;
    }
    Q l = r0.lead();
    if (l == 0) throw error(Err::DivisionByZero, "xgcd of zero polynomials");
    Q il = 1 / l;
    s = il * s0;
    t = il * t0;
    return il * r0;
}

std::vector<Z> to_z(QPoly const & f)
{
    std::vector<Z> r;
    for (auto const & a : f.c) {
        if (a.get_den() != 1) throw error(Err::Internal, "non-integral polynomial");
        r.push_back(a.get_num());
    }
    return r;
}

QPoly from_z(std::vector<Z> const & f)
{
    std::vector<Q> r(f.begin(), f.end());
    return QPoly(r);
}

Z resultant(QPoly const & a, QPoly const & b)
{
    long m = a.degree(), n = b.degree();
    if (m < 0 || n < 0) return 0;
    if (m == 0) return Z(zpow(a.c[0].get_num(), n));
    if (n == 0) return Z(zpow(b.c[0].get_num(), m));
    size_t N = m + n;
    ZMatrix S(N, N);
    auto za = to_z(a), zb = to_z(b);
    for (long i = 0; i < n; i++)
        for (long j = 0; j <= m; j++) S(i, i + j) = za[m - j];
    for (long i = 0; i < m; i++)
        for (long j = 0; j <= n; j++) S(n + i, i + j) = zb[n - j];
    return det(S);
}

Z discriminant(QPoly const & f)
{
    long n = f.degree();
    Z r = resultant(f, f.derivative());
    if ((n * (n - 1) / 2) % 2) r = -r;
    Z l = f.lead().get_num();
    return r / l;
}

static int sgn(Q const & a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }

size_t sturm_real_roots(QPoly const & f)
{
    std::vector<QPoly> seq{f, f.derivative()};
    while (!seq.back().is_zero()) {
        QPoly r = seq[seq.size() - 2] % seq.back();
        if (r.is_zero()) break;
        seq.push_back(Q(-1) * r);
    }
    auto changes = [&](bool minus_inf) {
        int last = 0, ch = 0;
        for (auto const & p : seq) {
            int s = sgn(p.lead());
            if (minus_inf && p.degree() % 2) s = -s;
            if (s == 0) continue;
            if (last != 0 && s != last) ch++;
            last = s;
        }
        return ch;
    };
    return changes(true) - changes(false);
}

bool is_squarefree(QPoly const & f)
{
    return gcd(f, f.derivative()).degree() == 0;
}

/* ---- F_p polynomials ---- */

FpPoly FpPoly::monic() const
{
    if (c.empty()) return *this;
    uint64_t il = invmod(c.back(), p);
    std::vector<uint64_t> d = c;
    for (auto & a : d) a = mulmod(a, il, p);
    return FpPoly(p, d);
}

FpPoly operator+(FpPoly const & a, FpPoly const & b)
{
    std::vector<uint64_t> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.size(); i++) r[i] = (a[i] + b[i]) % a.p;
    return FpPoly(a.p, r);
}

FpPoly operator-(FpPoly const & a, FpPoly const & b)
{
    std::vector<uint64_t> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.size(); i++) r[i] = (a[i] + a.p - b[i]) % a.p;
    return FpPoly(a.p, r);
}

FpPoly operator*(FpPoly const & a, FpPoly const & b)
{
    if (a.is_zero() || b.is_zero()) return FpPoly(a.p, {});
    uint64_t p = a.p;
    std::vector<unsigned __int128> acc(a.c.size() + b.c.size() - 1, 0);
    std::vector<uint64_t> r(acc.size());
    for (size_t i = 0; i < a.c.size(); i++) {
        if (!a.c[i]) continue;
        for (size_t j = 0; j < b.c.size(); j++) {
            acc[i + j] += (unsigned __int128) a.c[i] * b.c[j];
            if (acc[i + j] >> 126) acc[i + j] %= p;
        }
    }
    for (size_t i = 0; i < acc.size(); i++) r[i] = (uint64_t) (acc[i] % p);
    return FpPoly(p, r);
}

void divmod(FpPoly const & a, FpPoly const & b, FpPoly & q, FpPoly & r)
{
    if (b.is_zero()) throw error(Err::DivisionByZero, "F_p polynomial division by zero");
    uint64_t p = a.p;
    std::vector<uint64_t> rem = a.c;
    long db = b.degree();
    std::vector<uint64_t> quo(std::max(0L, a.degree() - db + 1), 0);
    uint64_t il = invmod(b.c.back(), p);
    for (long k = a.degree() - db; k >= 0; k--) {
        uint64_t t = mulmod(rem[k + db], il, p);
        quo[k] = t;
        if (!t) continue;
        for (long j = 0; j <= db; j++)
            rem[k + j] = (rem[k + j] + p - mulmod(t, b.c[j], p)) % p;
    }
    q = FpPoly(p, quo);
    r = FpPoly(p, rem);
}

FpPoly operator%(FpPoly const & a, FpPoly const & b)
{
    FpPoly q, r;
    divmod(a, b, q, r);
    return r;
}

FpPoly gcd(FpPoly a, FpPoly b)
{
    while (!b.is_zero()) {
        FpPoly r = a % b;
        a = b;
        b = r;
    }
    return a.monic();
}

FpPoly xgcd(FpPoly const & a, FpPoly const & b, FpPoly & s, FpPoly & t)
{
    uint64_t p = a.p;
    FpPoly r0 = a, r1 = b, s0(p, {1}), s1(p, {}), t0(p, {}), t1(p, {1});
    while (!r1.is_zero()) {
        FpPoly q, r;
        divmod(r0, r1, q, r);
        r0 = r1; r1 = r;
        FpPoly ns = s0 - q * s1; s0 = s1; s1 = ns;
        FpPoly nt = t0 - q * t1; t0 = t1; t1 = nt;
    }
    uint64_t il = invmod(r0.c.back(), p);
    FpPoly ilp(p, {il});
    s = s0 * ilp;
    t = t0 * ilp;
    return r0 * ilp;
}

FpPoly powmod(FpPoly const & a, Z const & e, FpPoly const & m)
{
    FpPoly r(a.p, {1}), b = a % m;
    r = r % m;
    size_t nb = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = nb; i-- > 0;) {
        r = (r * r) % m;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b) % m;
    }
    return r;
}

FpPoly reduce_mod_p(QPoly const & f, uint64_t p)
{
    std::vector<uint64_t> r;
    for (auto const & a : f.c) {
        if (a.get_den() == 1) {
            r.push_back(zmod_u(a.get_num(), p));
        } else {
            uint64_t d = zmod_u(a.get_den(), p);
            r.push_back(mulmod(zmod_u(a.get_num(), p), invmod(d, p), p));
        }
    }
    return FpPoly(p, r);
}

static FpPoly derivative(FpPoly const & f)
{
    std::vector<uint64_t> d;
    for (size_t i = 1; i < f.c.size(); i++) d.push_back(mulmod(f.c[i], i % f.p, f.p));
    return FpPoly(f.p, d);
}

static FpPoly exact_div(FpPoly const & a, FpPoly const & b)
{
    FpPoly q, r;
    divmod(a, b, q, r);
    return q;
}

static void squarefree(FpPoly f, int mult, std::vector<std::pair<FpPoly, int>> & out)
{
    uint64_t p = f.p;
    FpPoly one(p, {1});
    f = f.monic();
    if (f.degree() <= 0) return;
    FpPoly c = gcd(f, derivative(f));
    FpPoly w = exact_div(f, c);
    int i = 1;
    while (w.degree() > 0) {
        FpPoly y = gcd(w, c);
        FpPoly fac = exact_div(w, y);
        if (fac.degree() > 0) out.push_back({fac, i * mult});
        w = y;
        c = exact_div(c, y);
        i++;
    }
    if (c.degree() > 0) {
        /* c is a p-th power */
        std::vector<uint64_t> r;
        for (size_t k = 0; k < c.c.size(); k += p) r.push_back(c.c[k]);
        squarefree(FpPoly(p, r), mult * (int) p, out);
    }
}

static FpPoly xpoly(uint64_t p) { return FpPoly(p, {0, 1}); }

static void equal_degree(FpPoly const & f, long d, Rng & rng, std::vector<FpPoly> & out)
{
    uint64_t p = f.p;
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    Z pd = zpow(Z(p), d);
    for (;;) {
        std::vector<uint64_t> a(f.degree());
        for (auto & x : a) x = std::uniform_int_distribution<uint64_t>(0, p - 1)(rng);
        FpPoly A(p, a);
        if (A.degree() <= 0) continue;
        FpPoly b;
        if (p == 2) {
            /* trace to F_2 */
            FpPoly t = A % f, s = t;
            for (long k = 1; k < d; k++) {
                t = (t * t) % f;
                s = s + t;
            }
            b = s;
        } else {
            b = powmod(A, Z((pd - 1) / 2), f) - FpPoly(p, {1});
        }
        FpPoly g = gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(exact_div(f, g), d, rng, out);
            return;
        }
    }
}

std::vector<std::pair<FpPoly, int>> factor_mod_p(FpPoly const & fin, Rng & rng)
{
    uint64_t p = fin.p;
    std::vector<std::pair<FpPoly, int>> sqf, out;
    squarefree(fin, 1, sqf);
    for (auto const & [g, e] : sqf) {
        FpPoly f = g;
        FpPoly h = xpoly(p);
        for (long i = 1; f.degree() >= 2 * i; i++) {
            h = powmod(h, Z(p), f);
            FpPoly gi = gcd(f, h - xpoly(p));
            if (gi.degree() > 0) {
                std::vector<FpPoly> parts;
                equal_degree(gi, i, rng, parts);
                for (auto const & q : parts) out.push_back({q, e});
                f = exact_div(f, gi);
                h = h % f;
            }
        }
        if (f.degree() > 0) out.push_back({f.monic(), e});
    }
    std::sort(out.begin(), out.end(), [](auto const & a, auto const & b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.c < b.first.c;
    });
    return out;
}

std::vector<uint64_t> roots_mod_p(FpPoly const & fin, Rng & rng)
{
    uint64_t p = fin.p;
    FpPoly f = fin.monic();
    std::vector<uint64_t> r;
    if (f.degree() <= 0) return r;
    if (p < 64) {
        for (uint64_t a = 0; a < p; a++) {
            uint64_t v = 0;
            for (size_t i = f.c.size(); i-- > 0;) v = (mulmod(v, a, p) + f.c[i]) % p;
            if (v == 0) r.push_back(a);
        }
        return r;
    }
    FpPoly g = gcd(f, powmod(xpoly(p), Z(p), f) - xpoly(p));
    if (g.degree() <= 0) return r;
    std::vector<FpPoly> lin;
    equal_degree(g, 1, rng, lin);
    for (auto const & l : lin) r.push_back((p - l.c[0]) % p);
    std::sort(r.begin(), r.end());
    return r;
}

/* ---- irreducibility over Q (Zassenhaus) ---- */

using ZP = std::vector<Z>;

static void trimz(ZP & a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

static ZP zmul(ZP const & a, ZP const & b, Z const & m)
{
    if (a.empty() || b.empty()) return {};
    ZP r(a.size() + b.size() - 1, Z(0));
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < b.size(); j++) r[i + j] += a[i] * b[j];
    for (auto & x : r) x = mod(x, m);
    trimz(r);
    return r;
}

static ZP lift_fp(FpPoly const & f)
{
    ZP r;
    for (auto a : f.c) r.push_back(Z(a));
    return r;
}

static FpPoly to_fp(ZP const & a, uint64_t p)
{
    std::vector<uint64_t> r;
    for (auto const & x : a) r.push_back(zmod_u(x, p));
    return FpPoly(p, r);
}

/* lift f = g*h mod p (g, h monic, coprime) to mod p^k */
static void hensel(ZP const & f, ZP & g, ZP & h, uint64_t p, unsigned k)
{
    FpPoly s, t;
    xgcd(to_fp(g, p), to_fp(h, p), s, t);
    Z pj = p;
    Z P(p);
    for (unsigned j = 1; j < k; j++) {
        Z pk = pj * P;
        ZP gh = zmul(g, h, pk);
        ZP e(std::max(f.size(), gh.size()), Z(0));
        for (size_t i = 0; i < f.size(); i++) e[i] += f[i];
        for (size_t i = 0; i < gh.size(); i++) e[i] -= gh[i];
        for (auto & x : e) {
            x = mod(x, pk);
            assert(mpz_divisible_p(x.get_mpz_t(), pj.get_mpz_t()));
            x /= pj;
        }
        FpPoly E = to_fp(e, p);
        FpPoly G = to_fp(g, p), H = to_fp(h, p);
        FpPoly dg = (E * t) % G;
        FpPoly dh_q, dh_r;
        divmod(E - H * dg, G, dh_q, dh_r);
        ZP DG = lift_fp(dg), DH = lift_fp(dh_q);
        g.resize(std::max(g.size(), DG.size()), Z(0));
        h.resize(std::max(h.size(), DH.size()), Z(0));
        for (size_t i = 0; i < DG.size(); i++) g[i] = mod(Z(g[i] + pj * DG[i]), pk);
        for (size_t i = 0; i < DH.size(); i++) h[i] = mod(Z(h[i] + pj * DH[i]), pk);
        trimz(g);
        trimz(h);
        pj = pk;
    }
}

static void multi_lift(ZP const & f, std::vector<FpPoly> const & facs, uint64_t p, unsigned k,
                       std::vector<ZP> & out)
{
    if (facs.size() == 1) {
        out.push_back(f);
        return;
    }
    size_t half = facs.size() / 2;
    FpPoly g(p, {1}), h(p, {1});
    for (size_t i = 0; i < half; i++) g = g * facs[i];
    for (size_t i = half; i < facs.size(); i++) h = h * facs[i];
    ZP G = lift_fp(g), H = lift_fp(h);
    hensel(f, G, H, p, k);
    multi_lift(G, {facs.begin(), facs.begin() + half}, p, k, out);
    multi_lift(H, {facs.begin() + half, facs.end()}, p, k, out);
}

bool is_irreducible(QPoly const & f)
{
    long n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    if (f.lead() != 1 || !f.is_integral())
        throw error(Err::Internal, "irreducibility test needs a monic integer polynomial");
    if (!is_squarefree(f)) return false;
    Rng rng(12345);
    Z disc = discriminant(f);
    /* subset-sum degree sets, intersected over several primes */
    std::vector<bool> possible(n + 1, true);
    uint64_t best_p = 0;
    std::vector<FpPoly> best;
    int good = 0;
    for (uint64_t p = 3; good < 12 && p < 2000; p += 2) {
        if (!is_prime(Z(p)) || mpz_divisible_ui_p(disc.get_mpz_t(), p)) continue;
        auto fac = factor_mod_p(reduce_mod_p(f, p), rng);
        good++;
        if (fac.size() == 1) return true;
        std::vector<bool> sums(n + 1, false);
        sums[0] = true;
        for (auto const & [g, e] : fac) {
            long d = g.degree();
            for (long s = n; s >= d; s--)
                if (sums[s - d]) sums[s] = true;
        }
        for (long s = 0; s <= n; s++) possible[s] = possible[s] && sums[s];
        if (best.empty() || fac.size() < best.size()) {
            best.clear();
            for (auto const & [g, e] : fac) best.push_back(g);
            best_p = p;
        }
    }
    bool any = false;
    for (long s = 1; s < n; s++) any = any || possible[s];
    if (!any) return true;
    /* Hensel lift and recombine */
    Z norm2 = 0;
    for (auto const & a : f.c) norm2 += a.get_num() * a.get_num();
    Z nrm;
    mpz_sqrt(nrm.get_mpz_t(), norm2.get_mpz_t());
    nrm += 1;
    Z bound = 2 * zpow(Z(2), n) * nrm + 1;
    unsigned k = 1;
    Z pk = best_p;
    while (pk <= bound) {
        pk *= best_p;
        k++;
    }
    ZP fz = to_z(f);
    std::vector<ZP> lifted;
    multi_lift(fz, best, best_p, k, lifted);
    size_t r = lifted.size();
    Z half = pk / 2;
    for (size_t s = 1; 2 * s <= r; s++) {
        std::vector<int> sel(r, 0);
        std::fill(sel.begin(), sel.begin() + s, 1);
        std::sort(sel.begin(), sel.end());
        do {
            ZP g{Z(1)};
            for (size_t i = 0; i < r; i++)
                if (sel[i]) g = zmul(g, lifted[i], pk);
            if (!possible[g.size() - 1]) continue;
            for (auto & x : g)
                if (x > half) x -= pk;
            QPoly G = from_z(g), qq, rr;
            divmod(f, G, qq, rr);
            if (rr.is_zero() && qq.is_integral()) return false;
        } while (std::next_permutation(sel.begin(), sel.end()));
    }
    return true;
}

/* ---- parsing / printing ---- */

QPoly parse_poly(std::string const & sin, char var)
{
    std::string s;
    for (char ch : sin)
        if (!std::isspace((unsigned char) ch)) s += ch;
    if (s.empty()) throw error(Err::ParseError, "empty polynomial");
    QPoly out;
    size_t i = 0;
    auto fail = [&](std::string const & why) {
        throw error(Err::ParseError, "cannot parse polynomial '" + sin + "': " + why);
    };
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            i++;
        } else if (!first) {
            fail("expected + or -");
        }
        first = false;
        Q coef = 1;
        bool have_num = false;
        size_t j = i;
        while (j < s.size() && (std::isdigit((unsigned char) s[j]) || s[j] == '/')) j++;
        if (j > i) {
            coef = parse_rational(s.substr(i, j - i));
            have_num = true;
            i = j;
        }
        size_t deg = 0;
        if (i < s.size() && s[i] == '*') {
            if (!have_num) fail("dangling *");
            i++;
            if (i >= s.size() || s[i] != var) fail("expected variable after *");
        }
        if (i < s.size() && s[i] == var) {
            i++;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                i++;
                size_t k = i;
                while (k < s.size() && std::isdigit((unsigned char) s[k])) k++;
                if (k == i) fail("missing exponent");
                deg = std::stoul(s.substr(i, k - i));
                if (deg > 4096) fail("exponent too large");
                i = k;
            }
            if (i < s.size() && s[i] == '/') {
                size_t k = i + 1;
                while (k < s.size() && std::isdigit((unsigned char) s[k])) k++;
                if (k == i + 1) fail("missing denominator");
                coef /= Q(Z(s.substr(i + 1, k - i - 1)));
                i = k;
            }
        } else if (!have_num) {
            fail("expected a term");
        }
        out = out + QPoly::monomial(Q(sign) * coef, deg);
    }
    return out;
}

std::string poly_str(QPoly const & f, char var)
{
    if (f.is_zero()) return "0";
    std::string s;
    for (long i = f.degree(); i >= 0; i--) {
        Q a = f.c[i];
        if (a == 0) continue;
        bool neg = a < 0;
        Q b = neg ? Q(-a) : a;
        if (!s.empty()) s += neg ? "-" : "+";
        else if (neg) s += "-";
        if (i == 0 || b != 1) s += to_str(b);
        if (i > 0) {
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

QPoly charpoly(QMatrix const & Min)
{
    /* Hessenberg reduction followed by the usual recurrence */
    size_t n = Min.rows();
    QMatrix H = Min;
    for (size_t m = 1; m + 1 < n; m++) {
        size_t i = m + 1;
        while (i < n && H(i, m - 1) == 0) i++;
        if (i < n && H(m, m - 1) == 0) {
            H.swap_rows(i, m);
            for (size_t r = 0; r < n; r++) std::swap(H(r, i), H(r, m));
        }
        if (H(m, m - 1) == 0) continue;
        for (size_t r = m + 1; r < n; r++) {
            if (H(r, m - 1) == 0) continue;
            Q u = H(r, m - 1) / H(m, m - 1);
            for (size_t j = 0; j < n; j++) H(r, j) -= u * H(m, j);
            for (size_t j = 0; j < n; j++) H(j, m) += u * H(j, r);
        }
    }
    std::vector<QPoly> P(n + 1);
    P[0] = QPoly({Q(1)});
    QPoly x({Q(0), Q(1)});
    for (size_t m = 1; m <= n; m++) {
        P[m] = (x - QPoly({H(m - 1, m - 1)})) * P[m - 1];
        Q t = 1;
        for (size_t i = 1; i < m; i++) {
            t *= H(m - i, m - i - 1);
            P[m] = P[m] - (t * H(m - i - 1, m - 1)) * P[m - i - 1];
        }
    }
    return P[n];
}

}
