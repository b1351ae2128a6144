#include "nfcoh/class_group.hpp"
#include "nfcoh/errors.hpp"

#include <algorithm>
#include <cmath>

namespace nfc {

/* ---- short elements and torsion ---- */

void short_elements(Ideal const & I, long double bound,
                    std::function<bool(FieldElement const &, long double)> const & cb, size_t max_nodes)
{
    NumberField const & K = I.field();
    RealLattice L = I.reduced_lattice();
    Z den = I.den();
    bool complete = enumerate(L, bound, [&](std::vector<long> const & x, long double q) {
        ZVec c = combine(L, x);
        QVec qc(c.size());
        for (size_t i = 0; i < c.size(); i++) qc[i] = Q(c[i], den);
        return cb(K.from_coords(qc), q);
    }, max_nodes);
    (void) complete;
}

static long max_cyclotomic_order(size_t m)
{
    return (long) (2 * m * m + 2);
}

RootsOfUnity torsion_units(NumberField const & K)
{
    FieldData const & F = K.data();
    {
        std::lock_guard<std::mutex> g(F.cache_mu);
        if (F.torsion_cache) return *std::static_pointer_cast<const RootsOfUnity>(F.torsion_cache);
    }
    size_t m = K.degree();
    RootsOfUnity best{2, K.from_int(-1)};
    if (F.r1 == 0) {
        std::vector<FieldElement> found;
        short_elements(Ideal::unit(K), (long double) m * (1 + 1e-9L) + 1e-9L,
                       [&](FieldElement const & x, long double) {
            found.push_back(x);
            found.push_back(-x);
            return true;
        });
        long kmax = max_cyclotomic_order(m);
        for (auto const & x : found) {
            FieldElement p = x;
            for (long k = 1; k <= kmax; k++) {
                if (p.is_one()) {
                    bool better = k > best.order ||
                                  (k == best.order && best.gen.coords() < x.coords());
                    if (better) best = {k, x};
                    break;
                }
                p = p * x;
            }
        }
    }
    auto r = std::make_shared<const RootsOfUnity>(best);
    std::lock_guard<std::mutex> g(F.cache_mu);
    F.torsion_cache = r;
    return *r;
}

RootsOfUnity roots_of_unity(NumberField const & K, long n)
{
    if (n < 1) throw error(Err::InvalidArgument, "n must be positive");
    RootsOfUnity mu = torsion_units(K);
    long g = std::gcd(mu.order, n);
    return {g, mu.gen.pow(mu.order / g)};
}

long root_log(RootsOfUnity const & mu, FieldElement const & x)
{
    FieldElement p = x.field().one();
    for (long k = 0; k < mu.order; k++) {
        if (p == x) return k;
        p = p * mu.gen;
    }
    return -1;
}

/* ---- class group ---- */

Z ClassGroup::order() const
{
    Z h = 1;
    for (auto const & d : cyc) h *= d;
    return h;
}

bool ClassGroup::fb_smooth(FieldElement const & x, ZVec & v) const
{
    Q nq = abs(x.norm());
    if (nq.get_den() != 1 || nq == 0) return false;
    Z N = nq.get_num(), rem = N;
    std::vector<Z> ps;
    for (auto const & p : fb_rational) {
        if (rem == 1) break;
        if (!mpz_divisible_p(rem.get_mpz_t(), p.get_mpz_t())) continue;
        ps.push_back(p);
        while (mpz_divisible_p(rem.get_mpz_t(), p.get_mpz_t())) rem /= p;
    }
    if (rem != 1) return false;
    v.assign(fb.size(), Z(0));
    Z prod = 1;
    for (auto const & p : ps)
        for (size_t j = 0; j < fb.size(); j++) {
            if (fb[j].p() != p) continue;
            long e = valuation(x, fb[j]);
            v[j] = e;
            prod *= zpow(fb[j].norm(), e);
        }
    return prod == N;
}

ZVec ClassGroup::dlog_fb(ZVec const & e) const
{
    ZVec r;
    if (active.empty()) return r;
    ZVec w = e * snf.V;
    for (size_t i : active) r.push_back(mod(w[i], snf.diag[i]));
    return r;
}

/* x in P with div(x) = P + smooth part */
static std::pair<FieldElement, ZVec> smooth_prime(ClassGroup const & C, PrimeIdeal const & P)
{
    NumberField const & K = C.K;
    size_t m = K.degree();
    Rng rng(std::hash<std::string>()(P.str()));
    Ideal base = P.ideal();
    for (int round = 0; round < 400; round++) {
        Ideal J = base;
        if (round > 0 && !C.fb.empty()) {
            int k = 1 + round / 50;
            for (int t = 0; t < k; t++) J = J * C.fb[rand_range(rng, 0, C.fb.size() - 1)].ideal();
        }
        RealLattice L = J.reduced_lattice();
        for (int s = 0; s < 60; s++) {
            std::vector<long> c(m, 0);
            if (s < (int) m) c[s] = 1;
            else
                for (size_t i = 0; i < m; i++) c[i] = rand_range(rng, -2, 2);
            ZVec z = combine(L, c);
            bool zero = std::all_of(z.begin(), z.end(), [](Z const & a) { return a == 0; });
            if (zero) continue;
            FieldElement x = K.from_coords(z);
            if (valuation(x, P) != 1) continue;
            Q nq = abs(x.norm());
            Z rest = nq.get_num() / P.norm();
            ZVec v;
            Z r2 = rest;
            for (auto const & p : C.fb_rational)
                while (mpz_divisible_p(r2.get_mpz_t(), p.get_mpz_t())) r2 /= p;
            if (r2 != 1) continue;
            v.assign(C.fb.size(), Z(0));
            Z prod = 1;
            for (size_t j = 0; j < C.fb.size(); j++) {
                if (!mpz_divisible_p(rest.get_mpz_t(), C.fb[j].p().get_mpz_t())) continue;
                long e = valuation(x, C.fb[j]);
                v[j] = e;
                prod *= zpow(C.fb[j].norm(), e);
            }
            if (prod == rest) return {x, v};
        }
    }
    throw error(Err::SearchExhausted, "could not smooth prime " + P.str());
}

void ClassGroup::decompose(Ideal const & I, FieldElement & g, ZVec & e) const
{
    g = K.one();
    e.assign(fb.size(), Z(0));
    for (auto const & [P, k] : factor(I)) {
        auto it = fb_index.find(P);
        if (it != fb_index.end()) {
            e[it->second] += k;
            continue;
        }
        std::pair<FieldElement, ZVec> sp;
        bool have = false;
        {
            std::lock_guard<std::mutex> l(mu);
            auto c = smooth_cache.find(P);
            if (c != smooth_cache.end()) {
                sp = c->second;
                have = true;
            }
        }
        if (!have) {
            sp = smooth_prime(*this, P);
            std::lock_guard<std::mutex> l(mu);
            smooth_cache.emplace(P, sp);
        }
        g = g * sp.first.pow(k);
        for (size_t j = 0; j < fb.size(); j++) e[j] -= k * sp.second[j];
    }
}

ZVec ClassGroup::dlog(Ideal const & I) const
{
    if (active.empty()) return {};
    FieldElement g;
    ZVec e;
    decompose(I, g, e);
    return dlog_fb(e);
}

bool ClassGroup::is_trivial_class(Ideal const & I) const
{
    for (auto const & a : dlog(I))
        if (a != 0) return false;
    return true;
}

std::optional<FieldElement> ClassGroup::principal_generator(Ideal const & Iin) const
{
    Z den = Iin.den();
    Ideal I = den == 1 ? Iin : Iin * K.from_int(den);
    Q scale(1, den);
    if (I.is_unit()) return K.one() * scale;
    FieldElement g;
    ZVec e;
    decompose(I, g, e);
    for (auto const & a : dlog_fb(e))
        if (a != 0) return std::nullopt;
    size_t m = K.degree();
    Q N = I.norm();
    long double target = (long double) m * std::pow((long double) N.get_d(), 2.0L / m);
    std::optional<FieldElement> found;
    std::vector<long double> factors = {1.0L + 1e-9L};
    if (K.unit_rank() > 0) factors.insert(factors.end(), {2.0L, 4.0L, 16.0L});
    for (long double c : factors) {
        short_elements(I, target * c + 1e-9L, [&](FieldElement const & x, long double) {
            if (abs(x.norm()) == N) {
                found = x;
                return false;
            }
            return true;
        }, 400000);
        if (found) break;
    }
    if (!found) {
        /* combine relations */
        ZVec y(H.rows(), Z(0)), r = e;
        size_t col = 0;
        for (size_t i = 0; i < H.rows(); i++) {
            while (H(i, col) == 0) col++;
            if (!mpz_divisible_p(r[col].get_mpz_t(), H(i, col).get_mpz_t()))
                throw error(Err::Internal, "relation lattice inconsistent with class group");
            y[i] = r[col] / H(i, col);
            for (size_t j = col; j < H.cols(); j++) r[j] -= y[i] * H(i, j);
            col++;
        }
        ZVec x = y * HU;
        FieldElement a = g;
        for (size_t i = 0; i < x.size(); i++)
            if (x[i] != 0) a = a * rel_elt[i].pow(x[i].get_si());
        found = a;
    }
    if (Ideal::principal(*found) != I) throw error(Err::Internal, "generator check failed");
    return *found * scale;
}

Ideal reduce_ideal(Ideal const & I, FieldElement * mult)
{
    Ideal J = I.inverse();
    RealLattice L = J.reduced_lattice();
    size_t best = 0;
    long double bn = -1;
    for (size_t i = 0; i < L.emb.size(); i++) {
        long double s = 0;
        for (auto v : L.emb[i]) s += v * v;
        if (bn < 0 || s < bn) {
            bn = s;
            best = i;
        }
    }
    QVec c(L.coeffs[best].size());
    for (size_t i = 0; i < c.size(); i++) c[i] = Q(L.coeffs[best][i], J.den());
    FieldElement x = I.field().from_coords(c);
    if (mult) *mult = x;
    return I * x;
}

Ideal ClassGroup::representative(ZVec const & coords) const
{
    Ideal I = Ideal::unit(K);
    for (size_t i = 0; i < gens.size(); i++) {
        Z c = mod(coords[i], cyc[i]);
        /* reduce at every step, the float lattice reduction loses track of large norms */
        for (long k = 0; k < c.get_si(); k++) I = reduce_ideal(I * gens[i]);
    }
    return I;
}

std::vector<std::vector<Z>> ClassGroup::all_elements() const
{
    std::vector<std::vector<Z>> out(1, std::vector<Z>(cyc.size(), Z(0)));
    for (size_t i = 0; i < cyc.size(); i++) {
        std::vector<std::vector<Z>> next;
        for (auto const & v : out)
            for (Z k = 0; k < cyc[i]; k++) {
                auto w = v;
                w[i] = k;
                next.push_back(w);
            }
        out.swap(next);
    }
    return out;
}

static std::shared_ptr<ClassGroup> build_class_group(NumberField const & K, ClassGroupConfig const & cfg)
{
    auto C = std::make_shared<ClassGroup>();
    C->K = K;
    size_t m = K.degree();
    double B = std::max(1.0, K.minkowski_bound());
    if (B > cfg.max_bound)
        throw error(Err::BoundsExceeded, "Minkowski bound " + std::to_string((long) B) + " too large");
    for (long p = 2; p <= (long) B; p++) {
        if (!is_prime(Z(p))) continue;
        for (auto const & P : primes_above(K, Z(p)))
            if (P.norm() <= Z((long) B)) {
                C->fb_index.emplace(P, C->fb.size());
                C->fb.push_back(P);
                if (C->fb_rational.empty() || C->fb_rational.back() != Z(p)) C->fb_rational.push_back(Z(p));
            }
        if (C->fb.size() > cfg.max_fb) throw error(Err::BoundsExceeded, "factor base too large");
    }
    size_t nfb = C->fb.size();
    if (nfb == 0) {
        C->H = ZMatrix(0, 0);
        return C;
    }
    Rng rng(cfg.seed ^ (uint64_t) std::hash<std::string>()(poly_str(K.poly(), 'x')));
    ZMatrix cur(0, nfb);
    ZMatrix rel(0, nfb);
    std::vector<FieldElement> elts;
    Z curdet = 0;
    auto add = [&](ZVec const & v, FieldElement const & x) {
        ZMatrix t = cur;
        t.append_row(v);
        ZMatrix h = curdet == 0 ? hnf(t) : hnf_mod(t, curdet);
        bool changed = h.rows() != cur.rows() || !(h == cur);
        if (!changed) return false;
        cur = h;
        rel.append_row(v);
        elts.push_back(x);
        if (cur.rows() == nfb) {
            Z d = 1;
            for (size_t i = 0; i < nfb; i++) d *= cur(i, i);
            curdet = d;
        }
        return true;
    };
    /* p = prod of primes above p when they all lie in the base */
    for (auto const & p : C->fb_rational) {
        auto all = primes_above(K, p);
        bool inside = std::all_of(all.begin(), all.end(),
                                  [&](PrimeIdeal const & P) { return C->fb_index.count(P); });
        if (!inside) continue;
        ZVec v(nfb, Z(0));
        for (auto const & P : all) v[C->fb_index[P]] = P.e();
        add(v, K.from_int(p));
    }
    size_t streak_need = cfg.streak ? cfg.streak : std::max<size_t>(40, 3 * nfb);
    size_t streak = 0, tries = 0, max_tries = 3'000'000;
    size_t round = 0;
    while (cur.rows() < nfb || streak < streak_need) {
        if (tries > max_tries) throw error(Err::BoundsExceeded, "relation search did not converge");
        Ideal I = C->fb[round % nfb].ideal();
        int extra = rand_range(rng, 0, 2);
        for (int t = 0; t < extra; t++) I = I * C->fb[rand_range(rng, 0, nfb - 1)].ideal();
        round++;
        RealLattice L = I.reduced_lattice();
        for (int s = 0; s < 24; s++) {
            tries++;
            std::vector<long> c(m, 0);
            if (s < (int) m) c[s] = 1;
            else {
                size_t w = std::min<size_t>(m, 3 + s / 8);
                for (size_t i = 0; i < w; i++) c[i] = rand_range(rng, -2, 2);
            }
            ZVec z = combine(L, c);
            if (std::all_of(z.begin(), z.end(), [](Z const & a) { return a == 0; })) continue;
            FieldElement x = K.from_coords(z);
            ZVec v;
            if (!C->fb_smooth(x, v)) continue;
            bool full = cur.rows() == nfb;
            if (add(v, x)) streak = 0;
            else if (full) streak++;
        }
    }
    C->rel = rel;
    C->rel_elt = elts;
    C->H = hnf_transform(rel, C->HU);
    if (!(C->H == cur)) throw error(Err::Internal, "relation HNF mismatch");
    C->snf = smith(C->H);
    for (size_t i = 0; i < nfb; i++)
        if (C->snf.diag[i] != 1) {
            C->active.push_back(i);
            C->cyc.push_back(C->snf.diag[i]);
        }
    for (size_t a = 0; a < C->active.size(); a++) {
        ZVec unit(C->active.size(), Z(0));
        unit[a] = 1;
        std::optional<Ideal> pick;
        for (size_t j = 0; j < nfb && !pick; j++) {
            ZVec e(nfb, Z(0));
            e[j] = 1;
            if (C->dlog_fb(e) == unit) pick = C->fb[j].ideal();
        }
        if (!pick) {
            Ideal I = Ideal::unit(K);
            ZVec row = C->snf.Vinv.row(C->active[a]);
            for (size_t j = 0; j < nfb; j++)
                if (row[j] != 0) I = I * C->fb[j].ideal().pow(row[j].get_si());
            pick = reduce_ideal(I);
        }
        C->gens.push_back(*pick);
    }
    return C;
}

std::shared_ptr<const ClassGroup> class_group(NumberField const & K, ClassGroupConfig const & cfg)
{
    FieldData const & F = K.data();
    {
        std::lock_guard<std::mutex> g(F.cache_mu);
        if (F.class_cache) return std::static_pointer_cast<const ClassGroup>(F.class_cache);
    }
    std::shared_ptr<const ClassGroup> C = build_class_group(K, cfg);
    std::lock_guard<std::mutex> g(F.cache_mu);
    if (!F.class_cache) F.class_cache = C;
    return std::static_pointer_cast<const ClassGroup>(F.class_cache);
}

std::optional<FieldElement> is_principal(Ideal const & I)
{
    return class_group(I.field())->principal_generator(I);
}

/* ---- units ---- */

static std::vector<long double> unit_log(FieldElement const & u, size_t r)
{
    auto l = u.log_embeddings();
    l.resize(r);
    return l;
}

/* real coordinates of l in the basis rows (square, r x r) */
static std::vector<long double> real_solve(std::vector<std::vector<long double>> A, std::vector<long double> b)
{
    /* solve x*A = b: transpose then gaussian elimination */
    size_t r = b.size();
    std::vector<std::vector<long double>> M(r, std::vector<long double>(r + 1));
    for (size_t i = 0; i < r; i++) {
        for (size_t j = 0; j < r; j++) M[i][j] = A[j][i];
        M[i][r] = b[i];
    }
    for (size_t c = 0; c < r; c++) {
        size_t p = c;
        for (size_t i = c + 1; i < r; i++)
            if (std::fabs(M[i][c]) > std::fabs(M[p][c])) p = i;
        std::swap(M[p], M[c]);
        for (size_t i = 0; i < r; i++) {
            if (i == c || M[c][c] == 0) continue;
            long double f = M[i][c] / M[c][c];
            for (size_t j = c; j <= r; j++) M[i][j] -= f * M[c][j];
        }
    }
    std::vector<long double> x(r);
    for (size_t i = 0; i < r; i++) x[i] = M[i][r] / M[i][i];
    return x;
}

static long double det_real(std::vector<std::vector<long double>> A)
{
    size_t r = A.size();
    long double d = 1;
    for (size_t c = 0; c < r; c++) {
        size_t p = c;
        for (size_t i = c + 1; i < r; i++)
            if (std::fabs(A[i][c]) > std::fabs(A[p][c])) p = i;
        if (p != c) {
            std::swap(A[p], A[c]);
            d = -d;
        }
        if (A[c][c] == 0) return 0;
        d *= A[c][c];
        for (size_t i = c + 1; i < r; i++) {
            long double f = A[i][c] / A[c][c];
            for (size_t j = c; j < r; j++) A[i][j] -= f * A[c][j];
        }
    }
    return d;
}

namespace {

struct UnitBasis {
    size_t r;
    std::vector<FieldElement> u;
    std::vector<std::vector<long double>> l;

    long double tol() const { return 1e-7L; }

    /* returns true if the lattice grew */
    bool add(FieldElement const & x)
    {
        auto lx = unit_log(x, r);
        long double nrm = 0;
        for (auto v : lx) nrm += v * v;
        if (nrm < 1e-12L) return false;
        if (u.size() < r) {
            /* independent of the current ones? check via the Gram determinant */
            auto rows = l;
            rows.push_back(lx);
            size_t k = rows.size();
            std::vector<std::vector<long double>> G(k, std::vector<long double>(k));
            for (size_t i = 0; i < k; i++)
                for (size_t j = 0; j < k; j++) {
                    long double s = 0;
                    for (size_t t = 0; t < r; t++) s += rows[i][t] * rows[j][t];
                    G[i][j] = s;
                }
            long double gd = det_real(G);
            if (gd > 1e-8L * (1 + nrm)) {
                u.push_back(x);
                l.push_back(lx);
                return true;
            }
            if (u.empty()) return false;
            /* dependent: merge into the partial lattice of rank u.size() */
            return merge(x, lx, true);
        }
        return merge(x, lx, false);
    }

    bool merge(FieldElement const & x, std::vector<long double> const & lx, bool partial)
    {
        size_t k = u.size();
        std::vector<long double> c;
        if (partial) {
            /* least squares in the span of the partial basis */
            std::vector<std::vector<long double>> G(k, std::vector<long double>(k));
            std::vector<long double> b(k);
            for (size_t i = 0; i < k; i++) {
                for (size_t j = 0; j < k; j++) {
                    long double s = 0;
                    for (size_t t = 0; t < r; t++) s += l[i][t] * l[j][t];
                    G[i][j] = s;
                }
                long double s = 0;
                for (size_t t = 0; t < r; t++) s += l[i][t] * lx[t];
                b[i] = s;
            }
            c = real_solve(G, b);
        } else {
            c = real_solve(l, lx);
        }
        /* rational coordinates with a common denominator */
        long den = 0;
        for (long q = 1; q <= 100000 && !den; q++) {
            bool ok = true;
            for (auto v : c)
                if (std::fabs(v * q - std::round(v * q)) > 1e-6L * q) ok = false;
            if (ok) den = q;
        }
        if (!den) throw error(Err::Internal, "unit logarithms not commensurable");
        bool integral = den == 1;
        if (integral) return false;
        /* lattice spanned by den*e_i (old units) and den*c (x) */
        ZMatrix M(0, k);
        for (size_t i = 0; i < k; i++) {
            ZVec e(k, Z(0));
            e[i] = den;
            M.append_row(e);
        }
        ZVec cx(k);
        for (size_t i = 0; i < k; i++) cx[i] = Z((long) std::llround(c[i] * den));
        M.append_row(cx);
        ZMatrix U;
        ZMatrix Hm = hnf_transform(M, U);
        std::vector<FieldElement> nu;
        std::vector<std::vector<long double>> nl;
        for (size_t i = 0; i < Hm.rows(); i++) {
            FieldElement y = x.field().one();
            for (size_t j = 0; j < k; j++)
                if (U(i, j) != 0) y = y * u[j].pow(U(i, j).get_si());
            if (U(i, k) != 0) y = y * x.pow(U(i, k).get_si());
            nu.push_back(y);
            nl.push_back(unit_log(y, r));
        }
        u = nu;
        l = nl;
        return true;
    }

    /* T2 bound covering a coset representative in the centred parallelotope */
    long double cover_bound(NumberField const & K) const
    {
        FieldData const & F = K.data();
        size_t places = F.r1 + F.r2;
        long double best = 0;
        for (size_t mask = 0; mask < (1u << r); mask++) {
            long double t2 = 0;
            for (size_t v = 0; v < places; v++) {
                long double lv = 0;
                for (size_t i = 0; i < r; i++) {
                    auto full = u[i].log_embeddings();
                    lv += ((mask >> i) & 1 ? 0.5L : -0.5L) * full[v];
                }
                t2 += (v < (size_t) F.r1 ? 1 : 2) * std::exp(2 * lv);
            }
            best = std::max(best, t2);
        }
        return best;
    }
};

}

std::pair<long, std::vector<Z>> UnitGroup::coordinates(FieldElement const & uin) const
{
    size_t r = fundamental.size();
    std::vector<Z> e(r, Z(0));
    FieldElement w = uin;
    if (r) {
        auto c = real_solve(logs, unit_log(uin, r));
        for (size_t i = 0; i < r; i++) {
            e[i] = Z((long) std::llround(c[i]));
            if (e[i] != 0) w = w * fundamental[i].pow(-e[i].get_si());
        }
    }
    long k = root_log(torsion, w);
    if (k < 0) throw error(Err::InvalidArgument, "not a unit: " + uin.str());
    return {k, e};
}

std::shared_ptr<const UnitGroup> unit_group(NumberField const & K)
{
    FieldData const & F = K.data();
    {
        std::lock_guard<std::mutex> g(F.cache_mu);
        if (F.unit_cache) return std::static_pointer_cast<const UnitGroup>(F.unit_cache);
    }
    int r = K.unit_rank();
    if (r > 2) throw error(Err::RankTooLarge, "unit rank " + std::to_string(r) + " exceeds 2");
    auto U = std::make_shared<UnitGroup>();
    U->K = K;
    U->torsion = torsion_units(K);
    if (r > 0) {
        UnitBasis ub{(size_t) r, {}, {}};
        size_t m = K.degree();
        long double bound = 4.0L * m;
        Ideal O = Ideal::unit(K);
        long double searched = 0;
        for (int it = 0; it < 60; it++) {
            short_elements(O, bound, [&](FieldElement const & x, long double) {
                if (abs(x.norm()) == 1) ub.add(x);
                return true;
            }, 60'000'000);
            searched = bound;
            if (ub.u.size() < (size_t) r) {
                bound *= 4;
                if (bound > 1e9L) throw error(Err::SearchExhausted, "fundamental units not found");
                continue;
            }
            long double need = ub.cover_bound(K) * 1.01L + 1;
            if (need <= searched) break;
            bound = need;
        }
        U->fundamental = ub.u;
        U->logs = ub.l;
        for (auto const & x : ub.u)
            if (abs(x.norm()) != 1 || !x.is_integral()) throw error(Err::Internal, "bad unit");
    }
    std::lock_guard<std::mutex> g(F.cache_mu);
    if (!F.unit_cache) F.unit_cache = U;
    return std::static_pointer_cast<const UnitGroup>(F.unit_cache);
}

Z UnitsModN::size() const
{
    Z s = 1;
    for (auto const & o : orders) s *= o;
    return s;
}

std::vector<Z> UnitsModN::coordinates(FieldElement const & u) const
{
    auto [k, e] = U->coordinates(u);
    std::vector<Z> out;
    long g = std::gcd(U->torsion.order, n);
    if (g > 1) out.push_back(mod(Z(k), Z(g)));
    for (auto const & x : e) out.push_back(mod(x, Z(n)));
    return out;
}

UnitsModN units_mod_nth_powers(NumberField const & K, long n)
{
    UnitsModN R;
    R.n = n;
    R.U = unit_group(K);
    long g = std::gcd(R.U->torsion.order, n);
    if (g > 1) {
        R.orders.push_back(g);
        R.gens.push_back(R.U->torsion.gen);
    }
    for (auto const & e : R.U->fundamental) {
        R.orders.push_back(n);
        R.gens.push_back(e);
    }
    return R;
}

/* ---- n-th roots ---- */

static bool certify_non_power(FieldElement const & x, long n)
{
    NumberField K = x.field();
    FieldData const & F = K.data();
    QPoly num = x.as_poly();
    Rng rng(7);
    int tested = 0;
    for (long p = n + 1; tested < 40 && p < 200000; p += n) {
        if (!is_prime(Z(p))) continue;
        if (mpz_divisible_p(F.index.get_mpz_t(), Z(p).get_mpz_t())) continue;
        if (mpz_divisible_p(F.poly_disc.get_mpz_t(), Z(p).get_mpz_t())) continue;
        bool bad = false;
        for (auto const & c : num.c)
            if (mpz_divisible_p(c.get_den().get_mpz_t(), Z(p).get_mpz_t())) bad = true;
        if (bad) continue;
        auto roots = roots_mod_p(reduce_mod_p(F.f, p), rng);
        for (auto r : roots) {
            uint64_t val = 0, pw = 1, up = p;
            for (auto const & c : num.c) {
                uint64_t a = zmod_u(c.get_num(), up);
                uint64_t d = zmod_u(c.get_den(), up);
                val = (val + mulmod(mulmod(a, invmod(d, up), up), pw, up)) % up;
                pw = mulmod(pw, r, up);
            }
            if (val == 0) continue;
            tested++;
            if (powmod(val, (up - 1) / n, up) != 1) return true;
        }
    }
    return false;
}

std::optional<FieldElement> nth_root(FieldElement const & x, long n)
{
    if (x.is_zero()) return x;
    if (n == 1) return x;
    NumberField K = x.field();
    FieldData const & F = K.data();
    size_t m = F.m;
    QVec c = x.coords();
    Z d = 1;
    for (auto const & a : c) d = zlcm(d, a.get_den());
    /* z = d*y is integral with z^n = x * d^n */
    FieldElement t = x * Q(zpow(d, n));
    auto emb = t.embeddings();
    size_t places = emb.size();
    /* inverse of the real embedding matrix */
    std::vector<std::vector<long double>> E(m, std::vector<long double>(m));
    for (size_t j = 0; j < m; j++) E[j] = F.basis_emb[j];
    std::vector<std::vector<cld>> choices(places);
    for (size_t v = 0; v < places; v++) {
        cld z = emb[v];
        long double rad = std::pow(std::abs(z), 1.0L / n), arg = std::arg(z);
        if ((int) v < F.r1) {
            long double re = z.real();
            if (re > 0) {
                choices[v].push_back(cld(rad, 0));
                if (n % 2 == 0) choices[v].push_back(cld(-rad, 0));
            } else if (n % 2 == 1) {
                choices[v].push_back(cld(-rad, 0));
            }
        } else {
            for (long k = 0; k < n; k++)
                choices[v].push_back(std::polar(rad, (arg + 2 * M_PI * k) / n));
        }
    }
    bool possible = std::all_of(choices.begin(), choices.end(), [](auto const & v) { return !v.empty(); });
    if (possible) {
        std::vector<size_t> idx(places, 0);
        size_t total = 1;
        for (auto const & ch : choices) total *= ch.size();
        if (total > 2'000'000) throw error(Err::BoundsExceeded, "too many root branches");
        for (size_t it = 0; it < total; it++) {
            size_t q = it;
            std::vector<long double> target;
            for (size_t v = 0; v < places; v++) {
                idx[v] = q % choices[v].size();
                q /= choices[v].size();
                cld w = choices[v][idx[v]];
                if ((int) v < F.r1) target.push_back(w.real());
                else {
                    target.push_back(std::sqrt(2.0L) * w.real());
                    target.push_back(std::sqrt(2.0L) * w.imag());
                }
            }
            auto co = real_solve(E, target);
            ZVec zc(m);
            bool sane = true;
            for (size_t j = 0; j < m; j++) {
                if (!std::isfinite((double) co[j]) || std::fabs(co[j]) > 9e18L) sane = false;
                else zc[j] = Z((long) std::llround(co[j]));
            }
            if (!sane) continue;
            FieldElement z = K.from_coords(zc);
            if (z.pow(n) == t) return z * Q(1, d);
        }
    }
    if (!possible || certify_non_power(x, n)) return std::nullopt;
    throw error(Err::SearchExhausted, "could not decide whether element is an n-th power");
}

}
