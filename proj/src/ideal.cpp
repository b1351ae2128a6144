#include "nfcoh/ideal.hpp"
#include "nfcoh/errors.hpp"

#include <algorithm>
#include <set>

namespace nfc {

static ZMatrix scaled_rows(QMatrix const & rows, Z & den)
{
    den = 1;
    for (size_t i = 0; i < rows.rows(); i++)
        for (size_t j = 0; j < rows.cols(); j++) den = zlcm(den, rows(i, j).get_den());
    ZMatrix r(rows.rows(), rows.cols());
    for (size_t i = 0; i < rows.rows(); i++)
        for (size_t j = 0; j < rows.cols(); j++) r(i, j) = Z(rows(i, j) * den);
    return r;
}

static Z diag_prod(ZMatrix const & H)
{
    Z d = 1;
    for (size_t i = 0; i < H.rows(); i++) d *= H(i, i);
    return d;
}

/* HNF of a full-rank integer lattice; D must be a multiple of its
 * determinant, or 0 to find one */
static ZMatrix lattice_hnf(ZMatrix const & rows, Z D)
{
    size_t m = rows.cols();
    if (D == 0) {
        ZMatrix H = hnf(rows);
        if (H.rows() != m) throw error(Err::InvalidArgument, "zero ideal");
        return H;
    }
    return hnf_mod(rows, D);
}

Ideal::Ideal(NumberField K, ZMatrix H, Z den) : K_(std::move(K)), H_(std::move(H)), den_(std::move(den))
{
    normalize();
}

void Ideal::normalize()
{
    Z g = den_;
    for (size_t i = 0; i < H_.rows() && g != 1; i++)
        for (size_t j = i; j < H_.cols() && g != 1; j++)
            if (H_(i, j) != 0) g = zgcd(g, H_(i, j));
    g = abs(g);
    if (g != 1) {
        for (size_t i = 0; i < H_.rows(); i++)
            for (size_t j = 0; j < H_.cols(); j++) H_(i, j) /= g;
        den_ /= g;
    }
    if (den_ < 0) den_ = -den_;
}

Ideal Ideal::unit(NumberField const & K)
{
    return Ideal(K, ZMatrix::identity(K.degree()), 1);
}

Ideal Ideal::from_int(NumberField const & K, Z const & a)
{
    if (a == 0) throw error(Err::InvalidArgument, "zero ideal");
    ZMatrix H = ZMatrix::identity(K.degree());
    for (size_t i = 0; i < H.rows(); i++) H(i, i) = abs(a);
    return Ideal(K, H, 1);
}

Ideal Ideal::principal(FieldElement const & a)
{
    if (a.is_zero()) throw error(Err::InvalidArgument, "principal ideal of zero");
    NumberField K = a.field();
    size_t m = K.degree();
    QVec c = a.coords();
    Z d = 1;
    for (auto const & x : c) d = zlcm(d, x.get_den());
    ZVec y(m);
    for (size_t i = 0; i < m; i++) y[i] = Z(c[i] * d);
    ZMatrix rows(m, m);
    for (size_t j = 0; j < m; j++) {
        ZVec e(m, Z(0));
        e[j] = 1;
        rows.set_row(j, K.mul_coords(y, e));
    }
    Z N = abs(det(rows));
    return Ideal(K, hnf_mod(rows, N), d);
}

Ideal Ideal::generated(NumberField const & K, std::vector<FieldElement> const & gens)
{
    size_t m = K.degree();
    std::vector<QVec> cs;
    Z d = 1;
    for (auto const & g : gens) {
        if (g.is_zero()) continue;
        cs.push_back(g.coords());
        for (auto const & x : cs.back()) d = zlcm(d, x.get_den());
    }
    if (cs.empty()) throw error(Err::InvalidArgument, "zero ideal");
    ZMatrix rows(0, m);
    Z D = 0;
    for (auto const & c : cs) {
        ZVec y(m);
        for (size_t i = 0; i < m; i++) y[i] = Z(c[i] * d);
        ZMatrix P(m, m);
        for (size_t j = 0; j < m; j++) {
            ZVec e(m, Z(0));
            e[j] = 1;
            ZVec r = K.mul_coords(y, e);
            P.set_row(j, r);
            rows.append_row(r);
        }
        if (D == 0) D = abs(det(P));
    }
    return Ideal(K, hnf_mod(rows, D), d);
}

Ideal Ideal::from_rows(NumberField const & K, QMatrix const & rows)
{
    Z d;
    ZMatrix r = scaled_rows(rows, d);
    return Ideal(K, lattice_hnf(r, 0), d);
}

bool Ideal::is_unit() const
{
    if (den_ != 1) return false;
    for (size_t i = 0; i < H_.rows(); i++)
        if (H_(i, i) != 1) return false;
    return true;
}

Q Ideal::norm() const
{
    Q r(diag_prod(H_), zpow(den_, K_.degree()));
    r.canonicalize();
    return r;
}

Z Ideal::minimum() const
{
    /* smallest k with k*omega_0 in the lattice */
    size_t m = K_.degree();
    QVec e(m, Q(0)), y;
    e[0] = 1;
    solve_left(to_q(H_), e, y);
    Z l = 1;
    for (auto const & a : y) l = zlcm(l, a.get_den());
    return l;
}

std::vector<FieldElement> Ideal::basis() const
{
    std::vector<FieldElement> r;
    for (size_t i = 0; i < H_.rows(); i++) {
        QVec c(H_.cols());
        for (size_t j = 0; j < H_.cols(); j++) c[j] = Q(H_(i, j), den_);
        r.push_back(K_.from_coords(c));
    }
    return r;
}

/* is v in rowspan(H), H triangular */
static bool tri_member(ZMatrix const & H, ZVec v)
{
    size_t m = H.rows();
    for (size_t i = 0; i < m; i++) {
        if (v[i] == 0) continue;
        if (!mpz_divisible_p(v[i].get_mpz_t(), H(i, i).get_mpz_t())) return false;
        Z y = v[i] / H(i, i);
        for (size_t j = i; j < m; j++) v[j] -= y * H(i, j);
    }
    return true;
}

bool Ideal::contains(FieldElement const & x) const
{
    if (x.is_zero()) return true;
    QVec c = x.coords();
    ZVec v;
    for (auto const & a : c) {
        Q t = a * den_;
        if (t.get_den() != 1) return false;
        v.push_back(t.get_num());
    }
    return tri_member(H_, v);
}

bool Ideal::divides(Ideal const & o) const
{
    for (auto const & b : o.basis())
        if (!contains(b)) return false;
    return true;
}

Ideal Ideal::operator*(Ideal const & o) const
{
    size_t m = K_.degree();
    ZMatrix rows(0, m);
    for (size_t i = 0; i < m; i++)
        for (size_t j = 0; j < m; j++) rows.append_row(K_.mul_coords(H_.row(i), o.H_.row(j)));
    Z D = diag_prod(H_) * diag_prod(o.H_);
    return Ideal(K_, hnf_mod(rows, D), den_ * o.den_);
}

Ideal Ideal::operator*(FieldElement const & a) const
{
    return *this * principal(a);
}

Ideal Ideal::operator+(Ideal const & o) const
{
    size_t m = K_.degree();
    Z d = zlcm(den_, o.den_);
    Z s1 = d / den_, s2 = d / o.den_;
    ZMatrix rows(0, m);
    for (size_t i = 0; i < m; i++) {
        ZVec r = H_.row(i);
        for (auto & a : r) a *= s1;
        rows.append_row(r);
    }
    for (size_t i = 0; i < m; i++) {
        ZVec r = o.H_.row(i);
        for (auto & a : r) a *= s2;
        rows.append_row(r);
    }
    Z D = diag_prod(H_) * zpow(s1, m);
    return Ideal(K_, hnf_mod(rows, D), d);
}

QMatrix trace_dual(FieldData const & F, QMatrix const & rows)
{
    QMatrix BT = rows * to_q(F.trace);
    return nfc::inverse(BT).transpose();
}

Ideal Ideal::inverse() const
{
    FieldData const & F = K_.data();
    /* I^-1 = (I * codifferent)^dual */
    QMatrix codiff = nfc::inverse(to_q(F.trace));
    Ideal C = from_rows(K_, codiff);
    Ideal IC = *this * C;
    QMatrix rows = to_q(IC.H_);
    for (size_t i = 0; i < rows.rows(); i++)
        for (size_t j = 0; j < rows.cols(); j++) rows(i, j) /= IC.den_;
    return from_rows(K_, trace_dual(F, rows));
}

Ideal Ideal::pow(long e) const
{
    if (e < 0) return inverse().pow(-e);
    Ideal r = unit(K_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

bool Ideal::operator==(Ideal const & o) const
{
    return K_ == o.K_ && den_ == o.den_ && H_ == o.H_;
}

bool Ideal::operator<(Ideal const & o) const
{
    if (den_ != o.den_) return den_ < o.den_;
    for (size_t i = 0; i < H_.rows(); i++)
        for (size_t j = 0; j < H_.cols(); j++)
            if (H_(i, j) != o.H_(i, j)) return H_(i, j) < o.H_(i, j);
    return false;
}

RealLattice Ideal::reduced_lattice() const
{
    FieldData const & F = K_.data();
    size_t m = F.m;
    RealLattice L;
    for (size_t i = 0; i < m; i++) {
        ZVec r = H_.row(i);
        std::vector<long double> e(m, 0);
        for (size_t j = 0; j < m; j++) {
            if (r[j] == 0) continue;
            long double c = (long double) r[j].get_d() / (long double) den_.get_d();
            for (size_t k = 0; k < m; k++) e[k] += c * F.basis_emb[j][k];
        }
        L.coeffs.push_back(r);
        L.emb.push_back(e);
    }
    lll(L);
    return L;
}

std::string Ideal::str() const
{
    std::string s = "[";
    for (size_t i = 0; i < H_.rows(); i++) {
        s += i ? ",[" : "[";
        for (size_t j = 0; j < H_.cols(); j++) s += (j ? "," : "") + to_str(H_(i, j));
        s += "]";
    }
    s += "]";
    if (den_ != 1) s += "/" + to_str(den_);
    return s;
}

/* ---- prime ideals ---- */

bool PrimeIdeal::operator<(PrimeIdeal const & o) const
{
    if (d_.p != o.d_.p) return d_.p < o.d_.p;
    if (d_.f != o.d_.f) return d_.f < o.d_.f;
    for (size_t i = 0; i < d_.hnf.rows(); i++)
        for (size_t j = 0; j < d_.hnf.cols(); j++)
            if (d_.hnf(i, j) != o.d_.hnf(i, j)) return d_.hnf(i, j) < o.d_.hnf(i, j);
    return false;
}

std::string PrimeIdeal::str() const
{
    return "(" + to_str(d_.p) + ", " + alpha().str() + ")";
}

static std::vector<uint64_t> to_u(ZVec const & v, uint64_t p)
{
    std::vector<uint64_t> r;
    for (auto const & a : v) r.push_back(zmod_u(a, p));
    return r;
}

static ZVec from_u(std::vector<uint64_t> const & v)
{
    ZVec r;
    for (auto a : v) r.push_back(Z(a));
    return r;
}

/* reduce v modulo the row-echelon subspace J (rows with pivots piv) */
static std::vector<uint64_t> reduce_sub(std::vector<uint64_t> v, UMat const & J,
                                        std::vector<size_t> const & piv, uint64_t p)
{
    for (size_t r = 0; r < J.size(); r++) {
        uint64_t c = v[piv[r]];
        if (!c) continue;
        for (size_t j = 0; j < v.size(); j++)
            if (J[r][j]) v[j] = (v[j] + p - mulmod(c, J[r][j], p)) % p;
    }
    return v;
}

static ZMatrix lattice_of(UMat const & sub, size_t m, uint64_t p)
{
    ZMatrix rows(0, m);
    for (size_t i = 0; i < m; i++) {
        ZVec e(m, Z(0));
        e[i] = p;
        rows.append_row(e);
    }
    for (auto const & v : sub) rows.append_row(from_u(v));
    return hnf_mod(rows, Z(p));
}

static ZVec elt_valuation_step(FieldData const & F, ZVec const & x, ZVec const & tau, Z const & p, bool & ok)
{
    NumberField K(std::shared_ptr<const FieldData>(&F, [](FieldData const *) {}));
    ZVec z = K.mul_coords(x, tau);
    ok = true;
    for (auto & a : z) {
        if (!mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) {
            ok = false;
            return z;
        }
    }
    for (auto & a : z) a /= p;
    return z;
}

static long int_valuation(FieldData const & F, ZVec x, ZVec const & tau, Z const & p)
{
    bool zero = true;
    for (auto const & a : x)
        if (a != 0) zero = false;
    if (zero) return 1L << 40;
    long v = 0;
    for (;;) {
        bool ok;
        ZVec z = elt_valuation_step(F, x, tau, p, ok);
        if (!ok) return v;
        x = z;
        v++;
    }
}

/* complete a maximal ideal (as subspace of O/pO) to PrimeData */
static PrimeData finish_prime(FieldData const & F, FpAlgebra const & A, UMat const & P, Z const & p,
                              Rng & rng, int e_known)
{
    size_t m = F.m;
    uint64_t pu = A.p;
    PrimeData d;
    d.p = p;
    d.hnf = lattice_of(P, m, pu);
    d.f = (int) (m - P.size());
    /* tau: x with x * P = 0 in O/pO, x != 0 */
    UMat M(m);
    for (size_t i = 0; i < m; i++) {
        std::vector<uint64_t> ei(m, 0);
        ei[i] = 1;
        for (auto const & b : P) {
            auto pr = A.mul(ei, b);
            M[i].insert(M[i].end(), pr.begin(), pr.end());
        }
        if (P.empty()) M[i].assign(1, 0);
    }
    UMat ker = left_kernel_mod(M, m, M[0].size(), pu);
    if (ker.empty()) throw error(Err::Internal, "no anti-uniformiser");
    d.tau = from_u(ker[0]);
    if (P.empty()) {
        /* inert: P = pO, tau = 1 */
        d.tau.assign(m, Z(0));
        d.tau[0] = 1;
    }
    ZVec pe(m, Z(0));
    pe[0] = p;
    d.e = e_known > 0 ? e_known : (int) int_valuation(F, pe, d.tau, p);
    /* two-element generator */
    NumberField K(std::shared_ptr<const FieldData>(&F, [](FieldData const *) {}));
    if (P.empty()) {
        d.alpha = pe;
        return d;
    }
    auto check = [&](ZVec const & a) {
        ZMatrix rows(0, m);
        for (size_t i = 0; i < m; i++) {
            ZVec e(m, Z(0));
            e[i] = p;
            rows.append_row(e);
            e[i] = 1;
            rows.append_row(K.mul_coords(a, e));
        }
        return hnf_mod(rows, p) == d.hnf;
    };
    std::vector<ZVec> cands;
    for (size_t i = 0; i < m; i++) {
        ZVec r = d.hnf.row(i);
        cands.push_back(r);
    }
    for (auto const & c : cands)
        if (check(c)) {
            d.alpha = c;
            return d;
        }
    for (int it = 0; it < 2000; it++) {
        ZVec a(m, Z(0));
        for (size_t i = 0; i < m; i++) {
            long c = rand_range(rng, -2, 2);
            if (!c) continue;
            for (size_t j = 0; j < m; j++) a[j] += c * d.hnf(i, j);
        }
        if (check(a)) {
            d.alpha = a;
            return d;
        }
    }
    throw error(Err::Internal, "no two-element representation found");
}

static void sort_primes(std::vector<PrimeData> & v)
{
    std::sort(v.begin(), v.end(), [](PrimeData const & a, PrimeData const & b) {
        if (a.f != b.f) return a.f < b.f;
        for (size_t i = 0; i < a.hnf.rows(); i++)
            for (size_t j = 0; j < a.hnf.cols(); j++)
                if (a.hnf(i, j) != b.hnf(i, j)) return a.hnf(i, j) < b.hnf(i, j);
        return false;
    });
}

static uint64_t small_prime(Z const & p)
{
    if (p > Z("4611686018427387903"))
        throw error(Err::BoundsExceeded, "prime " + to_str(p) + " too large to decompose");
    return p.get_ui();
}

std::vector<PrimeData> decompose_generic(FieldData const & F, Z const & p)
{
    size_t m = F.m;
    uint64_t pu = small_prime(p);
    FpAlgebra A(F.mult, pu);
    Rng rng(pu * 2654435761ULL + 17);
    Z q = p;
    while (q < (long) m) q *= p;
    UMat frob;
    for (size_t i = 0; i < m; i++) {
        std::vector<uint64_t> e(m, 0);
        e[i] = 1;
        frob.push_back(A.pow(e, q));
    }
    UMat rad = row_echelon_mod(left_kernel_mod(frob, m, m, pu), pu);
    std::vector<UMat> maximal;
    std::function<void(UMat const &)> split = [&](UMat const & Jin) {
        std::vector<size_t> piv;
        UMat J = row_echelon_mod(Jin, pu, &piv);
        /* Berlekamp subalgebra of O/J */
        UMat M;
        for (size_t i = 0; i < m; i++) {
            std::vector<uint64_t> e(m, 0);
            e[i] = 1;
            auto x = A.pow(e, p);
            x[i] = (x[i] + pu - 1) % pu;
            M.push_back(reduce_sub(x, J, piv, pu));
        }
        UMat S = left_kernel_mod(M, m, m, pu);
        /* S contains J and 1 */
        UMat SJ = S;
        SJ.insert(SJ.end(), J.begin(), J.end());
        SJ = row_echelon_mod(SJ, pu);
        if (SJ.size() - J.size() <= 1) {
            maximal.push_back(J);
            return;
        }
        /* find x in S outside J + F_p */
        UMat J1 = J;
        J1.push_back(A.one());
        std::vector<size_t> piv1;
        J1 = row_echelon_mod(J1, pu, &piv1);
        std::vector<uint64_t> x;
        for (int it = 0;; it++) {
            std::vector<uint64_t> c(m, 0);
            for (auto const & s : S) {
                uint64_t r = std::uniform_int_distribution<uint64_t>(0, pu - 1)(rng);
                for (size_t j = 0; j < m; j++) c[j] = (c[j] + mulmod(r, s[j], pu)) % pu;
            }
            auto red = reduce_sub(c, J1, piv1, pu);
            bool nz = false;
            for (auto a : red) nz = nz || a;
            if (nz) {
                x = c;
                break;
            }
            if (it > 1000) throw error(Err::Internal, "splitting element not found");
        }
        /* minimal polynomial of x modulo J */
        UMat powers;
        std::vector<uint64_t> cur = A.one();
        FpPoly mp;
        for (size_t k = 0; k <= m; k++) {
            auto red = reduce_sub(cur, J, piv, pu);
            powers.push_back(red);
            UMat K = left_kernel_mod(powers, powers.size(), m, pu);
            if (!K.empty()) {
                mp = FpPoly(pu, K[0]);
                break;
            }
            cur = A.mul(cur, x);
        }
        auto roots = roots_mod_p(mp, rng);
        for (auto c : roots) {
            UMat Jc = J;
            std::vector<uint64_t> xc = x;
            xc[0] = (xc[0] + pu - c) % pu;
            for (size_t i = 0; i < m; i++) {
                std::vector<uint64_t> e(m, 0);
                e[i] = 1;
                Jc.push_back(A.mul(xc, e));
            }
            split(Jc);
        }
    };
    split(rad);
    std::vector<PrimeData> out;
    for (auto const & P : maximal) out.push_back(finish_prime(F, A, row_echelon_mod(P, pu), p, rng, 0));
    sort_primes(out);
    int s = 0;
    for (auto const & d : out) s += d.e * d.f;
    if ((size_t) s != m) throw error(Err::Internal, "prime decomposition does not add up");
    return out;
}

std::vector<PrimeData> decompose_dedekind(FieldData const & F, Z const & p)
{
    size_t m = F.m;
    uint64_t pu = small_prime(p);
    if (mpz_divisible_p(F.index.get_mpz_t(), p.get_mpz_t()))
        throw error(Err::Internal, "Dedekind splitting needs p prime to the index");
    FpAlgebra A(F.mult, pu);
    Rng rng(pu + 99);
    auto fac = factor_mod_p(reduce_mod_p(F.f, pu), rng);
    NumberField K(std::shared_ptr<const FieldData>(&F, [](FieldData const *) {}));
    std::vector<PrimeData> out;
    for (auto const & [g, e] : fac) {
        QVec gc;
        for (auto a : g.c) gc.push_back(Q(Z(a)));
        ZVec alpha = K.from_poly(QPoly(gc)).int_coords();
        /* P/pO is spanned by alpha * omega_j */
        UMat sub;
        auto au = to_u(alpha, pu);
        for (size_t j = 0; j < m; j++) {
            std::vector<uint64_t> ej(m, 0);
            ej[j] = 1;
            sub.push_back(A.mul(au, ej));
        }
        sub = row_echelon_mod(sub, pu);
        PrimeData d = finish_prime(F, A, sub, p, rng, e);
        if (!sub.empty()) {
            ZVec a2 = alpha;
            d.alpha = a2;
        }
        out.push_back(d);
    }
    sort_primes(out);
    return out;
}

std::vector<PrimeIdeal> primes_above(NumberField const & K, Z const & pin)
{
    Z p = abs(pin);
    if (!is_prime(p)) throw error(Err::InvalidArgument, to_str(p) + " is not prime");
    FieldData const & F = K.data();
    {
        std::lock_guard<std::mutex> g(F.mu);
        auto it = F.primes.find(p);
        if (it != F.primes.end()) {
            std::vector<PrimeIdeal> r;
            for (auto const & d : it->second) r.emplace_back(K, d);
            return r;
        }
    }
    std::vector<PrimeData> d;
    if (mpz_divisible_p(F.index.get_mpz_t(), p.get_mpz_t()))
        d = decompose_generic(F, p);
    else
        d = decompose_dedekind(F, p);
    {
        std::lock_guard<std::mutex> g(F.mu);
        F.primes.emplace(p, d);
    }
    std::vector<PrimeIdeal> r;
    for (auto const & x : d) r.emplace_back(K, x);
    return r;
}

long valuation(FieldElement const & x, PrimeIdeal const & P)
{
    if (x.is_zero()) throw error(Err::InvalidArgument, "valuation of zero");
    QVec c = x.coords();
    Z d = 1;
    for (auto const & a : c) d = zlcm(d, a.get_den());
    ZVec y;
    for (auto const & a : c) y.push_back(Z(a * d));
    return int_valuation(P.field().data(), y, P.tau(), P.p()) - P.e() * valuation(d, P.p());
}

long valuation(Ideal const & I, PrimeIdeal const & P)
{
    ZMatrix const & H = I.hnf();
    Z N = diag_prod(H);
    long v;
    if (!mpz_divisible_p(N.get_mpz_t(), P.p().get_mpz_t())) {
        v = 0;
    } else {
        v = 1L << 40;
        for (size_t i = 0; i < H.rows(); i++)
            v = std::min(v, int_valuation(P.field().data(), H.row(i), P.tau(), P.p()));
    }
    return v - P.e() * valuation(I.den(), P.p());
}

Factorization factor(Ideal const & I)
{
    Z N = diag_prod(I.hnf());
    std::set<Z> ps;
    for (auto const & [p, e] : nfc::factor(N)) ps.insert(p);
    for (auto const & [p, e] : nfc::factor(I.den())) ps.insert(p);
    Factorization out;
    for (Z const & p : ps)
        for (auto const & P : primes_above(I.field(), p)) {
            long v = valuation(I, P);
            if (v) out.emplace_back(P, v);
        }
    return out;
}

Factorization principal_divisor(FieldElement const & a)
{
    return factor(Ideal::principal(a));
}

Ideal from_factorization(NumberField const & K, Factorization const & f)
{
    Ideal num = Ideal::unit(K), den = Ideal::unit(K);
    for (auto const & [P, e] : f) {
        if (e > 0) num = num * P.ideal().pow(e);
        else if (e < 0) den = den * P.ideal().pow(-e);
    }
    if (den.is_unit()) return num;
    return num * den.inverse();
}

Ideal nth_root(Ideal const & I, long n)
{
    if (n <= 0) throw error(Err::InvalidArgument, "root index must be positive");
    Factorization f = factor(I), r;
    for (auto const & [P, e] : f) {
        if (e % n) throw error(Err::NotAnNthPower, "ideal is not an n-th power");
        r.emplace_back(P, e / n);
    }
    return from_factorization(I.field(), r);
}

}
