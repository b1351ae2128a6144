#include "nfcoh/cyclic_extension.hpp"
#include "nfcoh/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace nfc {

static QVec qtimes(QVec const & v, ZMatrix const & M)
{
    QVec r(M.cols(), Q(0));
    for (size_t i = 0; i < v.size(); i++) {
        if (v[i] == 0) continue;
        for (size_t j = 0; j < M.cols(); j++)
            if (M(i, j) != 0) r[j] += v[i] * M(i, j);
    }
    return r;
}

static FieldElement eval_at(QPoly const & g, FieldElement const & x)
{
    FieldElement r = x.field().zero();
    for (size_t i = g.c.size(); i-- > 0;) r = r * x + x.field().one() * g.c[i];
    return r;
}

/* matrix of the map K -> L on integral bases, given the image of theta_K */
static ZMatrix embedding_matrix(NumberField const & K, FieldElement const & e)
{
    FieldData const & F = K.data();
    size_t mk = F.m, ml = e.field().degree();
    ZMatrix M(mk, ml);
    for (size_t j = 0; j < mk; j++) {
        QPoly w(F.basis.row(j));
        FieldElement x = eval_at(w, e);
        if (!x.is_integral()) throw error(Err::Internal, "embedding does not preserve integrality");
        M.set_row(j, x.int_coords());
    }
    return M;
}

static std::vector<ZMatrix> sigma_powers(NumberField const & L, FieldElement const & s, long & d)
{
    FieldData const & F = L.data();
    size_t m = F.m;
    if (!eval_at(F.f, s).is_zero()) throw error(Err::InvalidArgument, "sigma image is not a conjugate of the generator");
    ZMatrix S(m, m);
    for (size_t j = 0; j < m; j++) {
        FieldElement x = eval_at(QPoly(F.basis.row(j)), s);
        if (!x.is_integral()) throw error(Err::InvalidArgument, "sigma image is not integral");
        S.set_row(j, x.int_coords());
    }
    std::vector<ZMatrix> pw{ZMatrix::identity(m)};
    for (;;) {
        ZMatrix next = pw.back() * S;
        if (next == pw[0]) break;
        pw.push_back(next);
        if (pw.size() > m) throw error(Err::InvalidArgument, "sigma has no finite order");
    }
    d = (long) pw.size();
    return pw;
}

FieldElement CyclicExtension::to_L(FieldElement const & a) const
{
    return L.from_coords(qtimes(a.coords(), embed));
}

std::optional<FieldElement> CyclicExtension::to_K(FieldElement const & x) const
{
    QVec y;
    if (!solve_left(to_q(embed), x.coords(), y)) return std::nullopt;
    return K.from_coords(y);
}

FieldElement CyclicExtension::sigma(FieldElement const & x, long k) const
{
    long j = ((k % d) + d) % d;
    if (j == 0) return x;
    return L.from_coords(qtimes(x.coords(), sigma_pow[j]));
}

FieldElement CyclicExtension::sigma_image() const { return sigma(L.gen()); }
FieldElement CyclicExtension::embedding_image() const { return to_L(K.gen()); }

Ideal CyclicExtension::sigma(Ideal const & I, long k) const
{
    long j = ((k % d) + d) % d;
    if (j == 0) return I;
    ZMatrix rows = I.hnf() * sigma_pow[j];
    Z D = 1;
    for (size_t i = 0; i < rows.rows(); i++) D *= I.hnf()(i, i);
    return Ideal(L, hnf_mod(rows, D), I.den());
}

Ideal CyclicExtension::extend(Ideal const & I) const
{
    std::vector<FieldElement> g;
    for (auto const & b : I.basis()) g.push_back(to_L(b));
    return Ideal::generated(L, g);
}

Ideal CyclicExtension::descend(Ideal const & I) const
{
    size_t mk = K.degree(), ml = L.degree();
    ZMatrix A(0, ml);
    for (size_t i = 0; i < mk; i++) A.append_row(embed.row(i));
    for (size_t i = 0; i < ml; i++) A.append_row(I.hnf().row(i));
    ZMatrix ker = left_kernel(A);
    ZMatrix X(0, mk);
    for (size_t i = 0; i < ker.rows(); i++) {
        ZVec r = ker.row(i);
        r.resize(mk);
        X.append_row(r);
    }
    ZMatrix H = hnf(X);
    if (H.rows() != mk) throw error(Err::DescentFailure, "ideal meets K in a degenerate lattice");
    Ideal a(K, H, I.den());
    if (extend(a) != I) throw error(Err::DescentFailure, "ideal is not extended from the base field");
    return a;
}

FieldElement CyclicExtension::norm(FieldElement const & x) const
{
    FieldElement p = x;
    for (long k = 1; k < d; k++) p = p * sigma(x, k);
    auto r = to_K(p);
    if (!r) throw error(Err::Internal, "norm does not lie in the base field");
    return *r;
}

Ideal CyclicExtension::norm(Ideal const & I) const
{
    Ideal p = I;
    for (long k = 1; k < d; k++) p = p * sigma(I, k);
    return descend(p);
}

static void set_ramification(CyclicExtension & E)
{
    Z dk = abs(E.K.discriminant()), dl = abs(E.L.discriminant());
    E.unramified = dl == zpow(dk, E.d);
    if (!E.unramified) E.note = "relative discriminant is not trivial";
    auto sk = E.K.signature(), sl = E.L.signature();
    if (E.unramified && E.d % 2 == 0 && sk.first > 0 && sl.first != E.d * sk.first) {
        E.unramified = false;
        E.note = "real places ramify";
    }
}

CyclicExtension trivial_extension(NumberField const & K)
{
    CyclicExtension E;
    E.K = K;
    E.L = K;
    E.d = 1;
    E.embed = ZMatrix::identity(K.degree());
    E.sigma_pow = {ZMatrix::identity(K.degree())};
    E.unramified = true;
    return E;
}

CyclicExtension with_generator(CyclicExtension const & E, long k)
{
    long d = E.d;
    k = ((k % d) + d) % d;
    if (std::gcd(k, d) != 1) throw error(Err::InvalidArgument, "exponent is not prime to the degree");
    CyclicExtension R = E;
    for (long j = 0; j < d; j++) R.sigma_pow[j] = E.sigma_pow[(j * k) % d];
    R.sigma_cl.reset();
    if (E.n) {
        /* sigma^k(root) = zeta^(k n/d) root: keep zeta^(n/d) the eigenvalue */
        long kn = k;
        while (std::gcd(kn, E.n) != 1) kn += d;
        R.zeta = E.zeta.pow(kn);
    }
    return R;
}

/* ---- Kummer construction ---- */

namespace {

/* K[y]/(y^d - t) as vectors of K elements */
struct RelAlg {
    long d;
    FieldElement t;
    std::vector<FieldElement> mul(std::vector<FieldElement> const & a, std::vector<FieldElement> const & b) const
    {
        NumberField K = t.field();
        std::vector<FieldElement> r(2 * d, K.zero());
        for (long i = 0; i < d; i++) {
            if (a[i].is_zero()) continue;
            for (long j = 0; j < d; j++)
                if (!b[j].is_zero()) r[i + j] = r[i + j] + a[i] * b[j];
        }
        for (long k = 2 * d - 1; k >= d; k--)
            if (!r[k].is_zero()) r[k - d] = r[k - d] + r[k] * t;
        r.resize(d);
        return r;
    }
    QVec flat(std::vector<FieldElement> const & a) const
    {
        QVec r;
        for (auto const & x : a) {
            QVec c = x.power_coords();
            r.insert(r.end(), c.begin(), c.end());
        }
        return r;
    }
};

}

CyclicExtension build_kummer(NumberField const & K, long n, FieldElement const & v)
{
    if (n < 1) throw error(Err::InvalidArgument, "n must be positive");
    if (v.is_zero()) throw error(Err::InvalidArgument, "v must be nonzero");
    RootsOfUnity mu = roots_of_unity(K, n);
    if (mu.order != n)
        throw error(Err::RootOfUnityMissing, "the field does not contain the " + std::to_string(n) + "-th roots of unity");
    long d = n;
    for (long e = 1; e <= n; e++)
        if (n % e == 0 && nth_root(v.pow(e), n)) {
            d = e;
            break;
        }
    long k = n / d;
    auto t0 = nth_root(v, k);
    if (!t0) throw error(Err::Internal, "Kummer element is not a power of the expected order");
    FieldElement zeta_d = mu.gen.pow(k);
    if (d == 1) {
        CyclicExtension E = trivial_extension(K);
        E.n = n;
        E.kummer_v = v;
        E.kummer_root = *nth_root(v, n);
        E.zeta = mu.gen;
        return E;
    }
    /* scale t to an integral element: y' = c y */
    Z c = 1;
    for (auto const & a : t0->coords()) c = zlcm(c, a.get_den());
    FieldElement t = *t0 * Q(zpow(c, d));
    size_t mk = K.degree(), ml = mk * d;
    RelAlg A{d, t};
    std::vector<FieldElement> Y(d, K.zero()), TH(d, K.zero());
    Y[1] = K.one();
    TH[0] = K.gen();
    QMatrix P, Pinv;
    std::vector<FieldElement> gamma;
    long shift = 0;
    QPoly f;
    for (long tries = 0;; tries++) {
        shift = (tries % 2 ? -1 : 1) * ((tries + 1) / 2);
        gamma = Y;
        gamma[0] = gamma[0] + K.gen() * Q(shift);
        std::vector<FieldElement> pw(d, K.zero());
        pw[0] = K.one();
        P = QMatrix(0, ml);
        for (size_t i = 0; i < ml; i++) {
            P.append_row(A.flat(pw));
            pw = A.mul(pw, gamma);
        }
        if (rank(P) == ml) {
            Pinv = inverse(P);
            QVec top(A.flat(pw));
            QVec co = top * Pinv;
            std::vector<Q> fc(ml + 1);
            for (size_t i = 0; i < ml; i++) fc[i] = -co[i];
            fc[ml] = 1;
            f = QPoly(fc);
            break;
        }
        if (tries > 50) throw error(Err::Internal, "no primitive element found");
    }
    /* O_K[y'] in powers of gamma */
    QMatrix order(0, ml);
    for (long j = 0; j < d; j++)
        for (size_t i = 0; i < mk; i++) {
            std::vector<FieldElement> b(d, K.zero());
            b[j] = K.omega(i);
            order.append_row(A.flat(b) * Pinv);
        }
    std::vector<Z> bad;
    for (auto const & [p, e] : factor(K.discriminant())) bad.push_back(p);
    for (auto const & [p, e] : factor(Z(d))) bad.push_back(p);
    for (auto const & [p, e] : factor(t.norm().get_num())) bad.push_back(p);
    std::sort(bad.begin(), bad.end());
    bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
    NumberField L = make_field_from_order(f, order, bad, false);
    CyclicExtension E;
    E.K = K;
    E.L = L;
    FieldElement th = L.from_power(A.flat(TH) * Pinv);
    E.embed = embedding_matrix(K, th);
    FieldElement y = L.from_power(A.flat(Y) * Pinv);
    FieldElement sg = E.to_L(zeta_d) * y + th * Q(shift);
    long dd;
    E.sigma_pow = sigma_powers(L, sg, dd);
    E.d = dd;
    if (dd != d) throw error(Err::Internal, "sigma has the wrong order");
    E.n = n;
    E.kummer_v = v;
    E.kummer_root = y * Q(1, c);
    E.zeta = mu.gen;
    if (E.kummer_root.pow(n) != E.to_L(v)) throw error(Err::Internal, "Kummer root check failed");
    if (E.sigma(E.kummer_root) != E.to_L(zeta_d) * E.kummer_root) throw error(Err::Internal, "sigma check failed");
    set_ramification(E);
    return E;
}

/* ---- explicit extensions ---- */

std::vector<FieldElement> embeddings_into(NumberField const & K, NumberField const & L)
{
    FieldData const & FK = K.data();
    FieldData const & FL = L.data();
    size_t ml = FL.m;
    std::vector<cld> roots;
    for (size_t i = 0; i < FK.roots.size(); i++) {
        roots.push_back(FK.roots[i]);
        if ((int) i >= FK.r1) roots.push_back(std::conj(FK.roots[i]));
    }
    size_t places = FL.r1 + FL.r2;
    std::vector<std::vector<cld>> choice(places);
    for (size_t v = 0; v < places; v++)
        for (size_t i = 0; i < roots.size(); i++)
            if ((int) v >= FL.r1 || (int) i < FK.r1) choice[v].push_back(roots[i]);
    QMatrix E(ml, ml);
    for (size_t j = 0; j < ml; j++)
        for (size_t k = 0; k < ml; k++) E(j, k) = Q((double) FL.basis_emb[j][k]);
    /* inverse of the embedding matrix in long double */
    std::vector<std::vector<long double>> M(ml, std::vector<long double>(2 * ml, 0));
    for (size_t i = 0; i < ml; i++) {
        for (size_t j = 0; j < ml; j++) M[i][j] = FL.basis_emb[i][j];
        M[i][ml + i] = 1;
    }
    for (size_t c = 0; c < ml; c++) {
        size_t p = c;
        for (size_t i = c + 1; i < ml; i++)
            if (std::fabs(M[i][c]) > std::fabs(M[p][c])) p = i;
        std::swap(M[p], M[c]);
        long double pv = M[c][c];
        for (auto & a : M[c]) a /= pv;
        for (size_t i = 0; i < ml; i++) {
            if (i == c) continue;
            long double f = M[i][c];
            if (f == 0) continue;
            for (size_t j = 0; j < 2 * ml; j++) M[i][j] -= f * M[c][j];
        }
    }
    /* x * basis_emb = target, so x = target * inv */
    std::vector<FieldElement> out;
    size_t total = 1;
    for (auto const & c : choice) total *= c.size() ? c.size() : 1;
    if (total > 5'000'000) throw error(Err::BoundsExceeded, "too many embedding branches");
    for (size_t it = 0; it < total; it++) {
        size_t q = it;
        std::vector<long double> target;
        for (size_t v = 0; v < places; v++) {
            if (choice[v].empty()) return out;
            cld w = choice[v][q % choice[v].size()];
            q /= choice[v].size();
            if ((int) v < FL.r1) target.push_back(w.real());
            else {
                target.push_back(std::sqrt(2.0L) * w.real());
                target.push_back(std::sqrt(2.0L) * w.imag());
            }
        }
        ZVec co(ml);
        bool ok = true;
        for (size_t j = 0; j < ml && ok; j++) {
            long double s = 0;
            for (size_t k = 0; k < ml; k++) s += target[k] * M[k][ml + j];
            long double r = std::round(s);
            if (std::fabs(s - r) > 1e-4L || std::fabs(r) > 9e18L) ok = false;
            else co[j] = Z((long) r);
        }
        if (!ok) continue;
        FieldElement x = L.from_coords(co);
        if (eval_at(FK.f, x).is_zero() && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
    return out;
}

CyclicExtension make_cyclic(NumberField const & L, FieldElement const & s,
                            std::optional<NumberField> Kin, std::optional<FieldElement> emb)
{
    CyclicExtension E;
    E.L = L;
    long d;
    E.sigma_pow = sigma_powers(L, s, d);
    E.d = d;
    size_t ml = L.degree();
    if (ml % d) throw error(Err::Internal, "order of sigma does not divide the degree");
    if (d == 1 && !Kin) return trivial_extension(L);
    FieldElement e;
    if (Kin) {
        E.K = *Kin;
        if (E.K.degree() * d != ml) throw error(Err::InvalidArgument, "degrees do not match the order of sigma");
        if (emb) {
            e = *emb;
            if (!eval_at(E.K.poly(), e).is_zero()) throw error(Err::InvalidArgument, "embedding is not a root of the base polynomial");
        } else {
            bool found = false;
            for (auto const & x : embeddings_into(E.K, L))
                if (E.sigma_pow.size() == 1 || L.from_coords(qtimes(x.coords(), E.sigma_pow[1])) == x) {
                    e = x;
                    found = true;
                    break;
                }
            if (!found) throw error(Err::InvalidArgument, "base field does not embed into the fixed field");
        }
    } else {
        /* fixed field: integral kernel of sigma - 1 */
        ZMatrix S1 = E.sigma_pow[1];
        for (size_t i = 0; i < ml; i++) S1(i, i) -= 1;
        ZMatrix ker = left_kernel(S1);
        size_t mk = ml / d;
        std::optional<FieldElement> best;
        long double bt = 0;
        Rng rng(11);
        for (int it = 0; it < 400; it++) {
            ZVec c(ml, Z(0));
            if (it < (int) ker.rows()) c = ker.row(it);
            else
                for (size_t i = 0; i < ker.rows(); i++) {
                    long a = rand_range(rng, -2, 2);
                    for (size_t j = 0; j < ml; j++) c[j] += a * ker(i, j);
                }
            FieldElement x = L.from_coords(c);
            if (x.minpoly().degree() != (long) mk) continue;
            long double tt = x.t2();
            if (!best || tt < bt) {
                best = x;
                bt = tt;
            }
        }
        if (!best) throw error(Err::Internal, "fixed field has no primitive element");
        e = *best;
        E.K = make_field(e.minpoly());
    }
    if (E.sigma_pow.size() > 1 && L.from_coords(qtimes(e.coords(), E.sigma_pow[1])) != e)
        throw error(Err::InvalidArgument, "sigma does not fix the base field");
    E.embed = embedding_matrix(E.K, e);
    set_ramification(E);
    return E;
}

/* ---- Frobenius and Artin ---- */

long frobenius(CyclicExtension const & E, PrimeIdeal const & P)
{
    if (E.trivial()) return 0;
    NumberField const & L = E.L;
    Z p = P.p();
    PrimeIdeal Qp;
    bool found = false;
    FieldElement a = E.to_L(P.alpha());
    for (auto const & Q : primes_above(L, p))
        if (Q.ideal().contains(a)) {
            Qp = Q;
            found = true;
            break;
        }
    if (!found) throw error(Err::Internal, "no prime above " + P.str());
    if (Qp.e() != P.e()) throw error(Err::RamifiedExtension, "prime " + P.str() + " ramifies");
    uint64_t pu = p.get_ui();
    size_t m = L.degree();
    FpAlgebra A(L.data().mult, pu);
    std::vector<size_t> piv;
    UMat sub;
    for (size_t i = 0; i < m; i++) {
        std::vector<uint64_t> r(m);
        for (size_t j = 0; j < m; j++) r[j] = zmod_u(Qp.data().hnf(i, j), pu);
        sub.push_back(r);
    }
    sub = row_echelon_mod(sub, pu, &piv);
    auto in_q = [&](std::vector<uint64_t> v) {
        for (size_t r = 0; r < sub.size(); r++) {
            uint64_t c = v[piv[r]];
            if (!c) continue;
            for (size_t j = 0; j < m; j++)
                if (sub[r][j]) v[j] = (v[j] + pu - mulmod(c, sub[r][j], pu)) % pu;
        }
        return std::all_of(v.begin(), v.end(), [](uint64_t x) { return x == 0; });
    };
    Z Np = P.norm();
    std::vector<std::vector<uint64_t>> frob(m);
    for (size_t j = 0; j < m; j++) {
        std::vector<uint64_t> e(m, 0);
        e[j] = 1;
        frob[j] = A.pow(e, Np);
    }
    for (long k = 0; k < E.d; k++) {
        bool ok = true;
        for (size_t j = 0; j < m && ok; j++) {
            std::vector<uint64_t> diff(m);
            for (size_t t = 0; t < m; t++)
                diff[t] = (zmod_u(E.sigma_pow[k](j, t), pu) + pu - frob[j][t]) % pu;
            ok = in_q(diff);
        }
        if (ok) return k;
    }
    throw error(Err::Internal, "Frobenius not found at " + P.str());
}

long artin_symbol(CyclicExtension const & E, Ideal const & a)
{
    if (!E.unramified) throw error(Err::RamifiedExtension, "extension is not unramified: " + E.note);
    if (E.trivial()) return 0;
    long s = 0;
    for (auto const & [P, e] : factor(a)) s = (s + (e % E.d) * frobenius(E, P)) % E.d;
    return ((s % E.d) + E.d) % E.d;
}

/* ---- witness solvers ---- */

FieldElement hilbert90_element(CyclicExtension const & E, FieldElement const & u, Rng & rng)
{
    NumberField const & L = E.L;
    if (E.norm(u) != E.K.one()) throw error(Err::NormNotOne, "element does not have norm one");
    if (u.is_one()) return L.one();
    size_t m = L.degree();
    FieldElement ui = u.inverse();
    for (int it = 0; it < 200; it++) {
        ZVec c(m, Z(0));
        for (size_t i = 0; i < m; i++) c[i] = rand_range(rng, -3, 3);
        FieldElement r = L.from_coords(c);
        FieldElement b = r, coef = L.one();
        for (long i = 1; i < E.d; i++) {
            coef = coef * E.sigma(ui, i - 1);
            b = b + coef * E.sigma(r, i);
        }
        if (b.is_zero()) continue;
        if (E.sigma(b) != u * b) throw error(Err::Internal, "Hilbert 90 residual check failed");
        return b;
    }
    throw error(Err::ResolventExhausted, "all resolvents vanished");
}

Ideal hilbert90_ideal(CyclicExtension const & E, Ideal const & J)
{
    NumberField const & L = E.L;
    if (!E.norm(J).is_unit()) throw error(Err::NormNotTrivial, "ideal norm is not trivial");
    if (E.trivial()) return Ideal::unit(L);
    auto fac = factor(J);
    std::map<PrimeIdeal, long> ex;
    for (auto const & [P, e] : fac) ex[P] += e;
    std::set<PrimeIdeal> done;
    Ideal I = Ideal::unit(L);
    for (auto const & [P, e0] : fac) {
        if (done.count(P)) continue;
        auto above = primes_above(L, P.p());
        std::vector<PrimeIdeal> orbit{P};
        for (;;) {
            Ideal nx = E.sigma(orbit.back().ideal());
            PrimeIdeal Qn;
            for (auto const & Q : above)
                if (Q.ideal() == nx) Qn = Q;
            if (Qn == P) break;
            orbit.push_back(Qn);
        }
        long acc = 0;
        for (auto const & Q : orbit) {
            done.insert(Q);
            acc += ex.count(Q) ? ex[Q] : 0;
            if (acc) I = I * Q.ideal().pow(acc);
        }
        if (acc != 0) throw error(Err::NormNotTrivial, "orbit exponents do not cancel");
    }
    if (I * E.sigma(I).inverse() != J) throw error(Err::Internal, "ideal Hilbert 90 residual check failed");
    return I;
}

ZMatrix sigma_on_class_group(CyclicExtension const & E)
{
    if (E.sigma_cl) return *E.sigma_cl;
    auto C = class_group(E.L);
    size_t r = C->cyc.size();
    ZMatrix S(r, r);
    for (size_t i = 0; i < r; i++) S.set_row(i, C->dlog(E.sigma(C->gens[i])));
    E.sigma_cl = std::make_shared<const ZMatrix>(S);
    return S;
}

std::pair<Ideal, FieldElement> furtwangler_split(CyclicExtension const & E, Ideal const & M, Rng & rng)
{
    NumberField const & L = E.L;
    auto CK = class_group(E.K);
    if (!CK->is_trivial_class(E.norm(M)))
        throw error(Err::ClassEquationUnsolvable, "norm of the ideal is not principal");
    auto CL = class_group(L);
    size_t r = CL->cyc.size();
    Ideal b = Ideal::unit(L);
    if (r > 0 && !E.trivial()) {
        ZMatrix S = sigma_on_class_group(E);
        ZMatrix A(0, r);
        for (size_t i = 0; i < r; i++) {
            ZVec row(r, Z(0));
            for (size_t j = 0; j < r; j++) row[j] = (i == j ? 1 : 0) - S(i, j);
            A.append_row(row);
        }
        for (size_t i = 0; i < r; i++) {
            ZVec row(r, Z(0));
            row[i] = CL->cyc[i];
            A.append_row(row);
        }
        ZVec c = CL->dlog(M), sol;
        if (!solve_int_left(A, c, sol)) throw error(Err::ClassEquationUnsolvable, "(1 - sigma) x = [M] has no solution");
        ZVec x(sol.begin(), sol.begin() + r);
        b = CL->representative(x);
    } else if (r > 0) {
        if (!CL->is_trivial_class(M)) throw error(Err::ClassEquationUnsolvable, "class is not trivial");
    }
    /* a sigma-invariant twist changes the witness, not the identity */
    if (!E.trivial() && !CK->fb.empty()) {
        int k = rand_range(rng, 0, 2);
        for (int t = 0; t < k; t++) b = b * E.extend(CK->fb[rand_range(rng, 0, CK->fb.size() - 1)].ideal());
    }
    Ideal rest = E.trivial() ? M : M * b.inverse() * E.sigma(b);
    auto a = CL->principal_generator(rest);
    if (!a) throw error(Err::SearchExhausted, "generator of the residual ideal not found");
    Ideal check = E.trivial() ? Ideal::principal(*a) : b * E.sigma(b).inverse() * Ideal::principal(*a);
    if (check != M) throw error(Err::Internal, "Furtwangler residual check failed");
    return {b, *a};
}

FieldElement solve_norm_unit(CyclicExtension const & E, FieldElement const & u, Rng & rng)
{
    NumberField const & L = E.L;
    if (!u.is_integral() || abs(u.norm()) != 1) throw error(Err::InvalidArgument, "not a unit");
    if (u.is_one()) return L.one();
    if (E.trivial()) return E.to_L(u);
    auto U = units_mod_nth_powers(E.K, E.d);
    std::vector<Z> target = U.coordinates(u);
    size_t r = target.size();
    std::vector<std::pair<FieldElement, std::vector<Z>>> found;
    auto solvable = [&](ZVec & sol) {
        ZMatrix A(0, r);
        for (auto const & [v, c] : found) A.append_row(ZVec(c.begin(), c.end()));
        for (size_t i = 0; i < r; i++) {
            ZVec row(r, Z(0));
            row[i] = U.orders[i];
            A.append_row(row);
        }
        return solve_int_left(A, ZVec(target.begin(), target.end()), sol);
    };
    auto finish = [&](ZVec const & sol) {
        FieldElement v = L.one();
        for (size_t i = 0; i < found.size(); i++)
            if (sol[i] != 0) v = v * found[i].first.pow(sol[i].get_si());
        FieldElement rest = u / E.norm(v);
        auto w = nth_root(rest, E.d);
        if (!w) throw error(Err::Internal, "unit quotient is not a d-th power");
        v = v * E.to_L(*w);
        /* multiply by some sigma(c)/c */
        size_t m = L.degree();
        ZVec c(m, Z(0));
        for (size_t i = 0; i < m; i++) c[i] = rand_range(rng, -2, 2);
        FieldElement cc = L.from_coords(c);
        if (!cc.is_zero()) v = v * E.sigma(cc) / cc;
        if (E.norm(v) != u) throw error(Err::Internal, "norm equation residual check failed");
        return v;
    };
    ZVec sol;
    if (r == 0 || solvable(sol)) return finish(sol);
    std::map<std::string, FieldElement> seen;
    long double bound = 2.0L * L.degree();
    for (int round = 0; round < 14; round++) {
        bool done = false;
        short_elements(Ideal::unit(L), bound, [&](FieldElement const & x, long double) {
            FieldElement nx = E.norm(x);
            FieldElement unit;
            bool have = false;
            if (abs(nx.norm()) == 1) {
                unit = nx;
                have = true;
                found.emplace_back(x, U.coordinates(nx));
            } else {
                std::string key = Ideal::principal(nx).str();
                auto it = seen.find(key);
                if (it == seen.end()) seen.emplace(key, x);
                else {
                    FieldElement w = x / it->second;
                    unit = E.norm(w);
                    have = true;
                    found.emplace_back(w, U.coordinates(unit));
                }
            }
            if (have && solvable(sol)) {
                done = true;
                return false;
            }
            return true;
        }, 5'000'000);
        if (done) return finish(sol);
        bound *= 2;
    }
    throw error(Err::SearchExhausted, "no element of the required unit norm found");
}

/* ---- norm images ---- */

Subgroup subgroup_of(std::vector<Z> const & cyc, std::vector<ZVec> const & gens)
{
    size_t r = cyc.size();
    Subgroup S;
    S.cyc = cyc;
    ZMatrix A(0, r);
    for (auto const & g : gens) A.append_row(g);
    for (size_t i = 0; i < r; i++) {
        ZVec row(r, Z(0));
        row[i] = cyc[i];
        A.append_row(row);
    }
    S.gens = r ? hnf(A) : ZMatrix(0, 0);
    return S;
}

bool Subgroup::contains(ZVec const & x) const
{
    size_t r = cyc.size();
    ZVec v = x;
    for (size_t i = 0; i < r; i++) {
        if (!mpz_divisible_p(v[i].get_mpz_t(), gens(i, i).get_mpz_t())) return false;
        Z q = v[i] / gens(i, i);
        for (size_t j = i; j < r; j++) v[j] -= q * gens(i, j);
    }
    return true;
}

Z Subgroup::order() const
{
    Z n = 1;
    for (size_t i = 0; i < cyc.size(); i++) n *= cyc[i] / gens(i, i);
    return n;
}

Subgroup norm_image_subgroup(CyclicExtension const & E)
{
    auto CK = class_group(E.K);
    if (E.trivial()) {
        std::vector<ZVec> g;
        for (size_t i = 0; i < CK->cyc.size(); i++) {
            ZVec e(CK->cyc.size(), Z(0));
            e[i] = 1;
            g.push_back(e);
        }
        return subgroup_of(CK->cyc, g);
    }
    auto CL = class_group(E.L);
    std::vector<ZVec> g;
    for (auto const & I : CL->gens) g.push_back(CK->dlog(E.norm(I)));
    return subgroup_of(CK->cyc, g);
}

std::set<ZVec> norm_image_exhaustive(CyclicExtension const & E)
{
    auto CK = class_group(E.K);
    std::set<ZVec> out;
    if (E.trivial()) {
        for (auto const & c : CK->all_elements()) out.insert(ZVec(c.begin(), c.end()));
        return out;
    }
    auto CL = class_group(E.L);
    for (auto const & c : CL->all_elements()) {
        Ideal I = CL->representative(ZVec(c.begin(), c.end()));
        out.insert(CK->dlog(E.norm(I)));
    }
    return out;
}

}
