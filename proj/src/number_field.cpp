#include "nfcoh/number_field.hpp"
#include "nfcoh/errors.hpp"

#include <algorithm>
#include <cmath>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace nfc {

namespace mp = boost::multiprecision;
using hreal = mp::cpp_bin_float_50;
using hcplx = mp::cpp_complex_50;

static hreal to_h(Q const & q)
{
    hreal n(q.get_num().get_str()), d(q.get_den().get_str());
    return n / d;
}

/* ---- elements ---- */

FieldElement::FieldElement(std::shared_ptr<const FieldData> F, ZVec num, Z den)
    : F_(std::move(F)), num_(std::move(num)), den_(std::move(den))
{
    num_.resize(F_->m, Z(0));
    normalize();
}

void FieldElement::normalize()
{
    if (den_ == 0) throw error(Err::DivisionByZero, "zero denominator");
    Z g = den_;
    for (auto const & a : num_) {
        if (g == 1) break;
        if (a != 0) g = zgcd(g, a);
    }
    if (den_ < 0) g = -abs(g);
    else g = abs(g);
    if (g != 1) {
        for (auto & a : num_) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
    if (is_zero()) den_ = 1;
}

bool FieldElement::is_zero() const
{
    for (auto const & a : num_)
        if (a != 0) return false;
    return true;
}

bool FieldElement::is_one() const
{
    if (num_[0] != den_) return false;
    for (size_t i = 1; i < num_.size(); i++)
        if (num_[i] != 0) return false;
    return true;
}

bool FieldElement::is_rational() const
{
    for (size_t i = 1; i < num_.size(); i++)
        if (num_[i] != 0) return false;
    return true;
}

QVec FieldElement::power_coords() const
{
    QVec r(num_.size());
    for (size_t i = 0; i < num_.size(); i++) {
        r[i] = Q(num_[i], den_);
        r[i].canonicalize();
    }
    return r;
}

QVec FieldElement::coords() const
{
    return power_coords() * F_->basis_inv;
}

bool FieldElement::is_integral() const
{
    if (den_ == 1) {
        /* Z[theta] is inside the maximal order */
        return true;
    }
    for (auto const & c : coords())
        if (c.get_den() != 1) return false;
    return true;
}

ZVec FieldElement::int_coords() const
{
    ZVec r;
    for (auto const & c : coords()) {
        if (c.get_den() != 1) throw error(Err::InvalidArgument, "element is not integral");
        r.push_back(c.get_num());
    }
    return r;
}

QPoly FieldElement::as_poly() const { return QPoly(power_coords()); }

FieldElement FieldElement::operator+(FieldElement const & o) const
{
    ZVec r(num_.size());
    for (size_t i = 0; i < r.size(); i++) r[i] = num_[i] * o.den_ + o.num_[i] * den_;
    return FieldElement(F_, r, den_ * o.den_);
}

FieldElement FieldElement::operator-(FieldElement const & o) const
{
    ZVec r(num_.size());
    for (size_t i = 0; i < r.size(); i++) r[i] = num_[i] * o.den_ - o.num_[i] * den_;
    return FieldElement(F_, r, den_ * o.den_);
}

FieldElement FieldElement::operator-() const
{
    ZVec r = num_;
    for (auto & a : r) a = -a;
    return FieldElement(F_, r, den_);
}

/* product of power-basis integer vectors mod the monic defining polynomial */
static ZVec mulmod_f(ZVec const & a, ZVec const & b, FieldData const & F)
{
    size_t m = F.m;
    ZVec r(2 * m - 1, Z(0));
    for (size_t i = 0; i < m; i++) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < m; j++)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    for (size_t k = 2 * m - 2; k >= m; k--) {
        if (r[k] == 0) continue;
        Z t = r[k];
        for (size_t j = 0; j < m; j++) {
            /* x^m = -sum f_j x^j */
            Z const & fj = F.f.c[j].get_num();
            if (fj != 0) r[k - m + j] -= t * fj;
        }
        r[k] = 0;
    }
    r.resize(m);
    return r;
}

FieldElement FieldElement::operator*(FieldElement const & o) const
{
    return FieldElement(F_, mulmod_f(num_, o.num_, *F_), den_ * o.den_);
}

FieldElement FieldElement::operator*(Q const & s) const
{
    ZVec r = num_;
    for (auto & a : r) a *= s.get_num();
    return FieldElement(F_, r, den_ * s.get_den());
}

FieldElement FieldElement::inverse() const
{
    if (is_zero()) throw error(Err::DivisionByZero, "inverse of zero");
    QPoly s, t;
    xgcd(as_poly(), F_->f, s, t);
    return field().from_poly(s);
}

FieldElement FieldElement::operator/(FieldElement const & o) const { return *this * o.inverse(); }

FieldElement FieldElement::pow(long e) const
{
    if (e < 0) return inverse().pow(-e);
    FieldElement r = field().one(), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

bool FieldElement::operator==(FieldElement const & o) const
{
    return F_ == o.F_ && den_ == o.den_ && num_ == o.num_;
}

QMatrix FieldElement::mult_matrix() const
{
    size_t m = F_->m;
    QMatrix M(m, m);
    ZVec cur = num_;
    ZVec th(m, Z(0));
    if (m > 1) th[1] = 1;
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; j < m; j++) M(i, j) = Q(cur[j], den_);
        if (i + 1 < m) {
            if (m > 1) cur = mulmod_f(cur, th, *F_);
        }
    }
    for (size_t i = 0; i < m; i++)
        for (size_t j = 0; j < m; j++) M(i, j).canonicalize();
    return M;
}

Q FieldElement::norm() const
{
    size_t m = F_->m;
    ZMatrix M(m, m);
    ZVec cur = num_;
    ZVec th(m, Z(0));
    if (m > 1) th[1] = 1;
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; j < m; j++) M(i, j) = cur[j];
        if (i + 1 < m) cur = mulmod_f(cur, th, *F_);
    }
    Q r(det(M), zpow(den_, m));
    r.canonicalize();
    return r;
}

Q FieldElement::trace() const
{
    QMatrix M = mult_matrix();
    Q t = 0;
    for (size_t i = 0; i < M.rows(); i++) t += M(i, i);
    return t;
}

QPoly FieldElement::charpoly() const { return nfc::charpoly(mult_matrix()); }

QPoly FieldElement::minpoly() const
{
    QPoly c = charpoly();
    QPoly g = gcd(c, c.derivative());
    QPoly q, r;
    divmod(c, g, q, r);
    return q.monic();
}

std::vector<cld> FieldElement::embeddings() const
{
    QVec c = coords();
    size_t m = F_->m, places = F_->roots.size();
    std::vector<cld> r(places, cld(0, 0));
    for (size_t j = 0; j < m; j++) {
        if (c[j] == 0) continue;
        long double cj = (long double) c[j].get_d();
        if (c[j].get_num().get_str().size() > 15 || c[j].get_den().get_str().size() > 15)
            cj = (long double) to_h(c[j]);
        for (size_t v = 0; v < places; v++) r[v] += cj * F_->basis_cemb[j][v];
    }
    return r;
}

long double FieldElement::t2() const
{
    auto e = embeddings();
    long double s = 0;
    for (size_t v = 0; v < e.size(); v++) s += (v < (size_t) F_->r1 ? 1 : 2) * std::norm(e[v]);
    return s;
}

std::vector<long double> FieldElement::log_embeddings() const
{
    auto e = embeddings();
    std::vector<long double> r;
    for (auto const & z : e) r.push_back(std::log(std::abs(z)));
    return r;
}

std::string FieldElement::str() const { return poly_str(as_poly(), 'x'); }

/* ---- field ---- */

FieldElement NumberField::one() const { return from_int(1); }
FieldElement NumberField::zero() const { return from_int(0); }

FieldElement NumberField::from_int(Z const & a) const
{
    ZVec v(d_->m, Z(0));
    v[0] = a;
    return FieldElement(d_, v, 1);
}

FieldElement NumberField::gen() const
{
    if (d_->m == 1) return FieldElement(d_, ZVec{-d_->f.c[0].get_num()}, 1);
    ZVec v(d_->m, Z(0));
    v[1] = 1;
    return FieldElement(d_, v, 1);
}

FieldElement NumberField::from_power(QVec const & c) const
{
    Z den = 1;
    for (auto const & a : c) den = zlcm(den, a.get_den());
    ZVec v(d_->m, Z(0));
    for (size_t i = 0; i < c.size() && i < d_->m; i++) v[i] = Z(c[i] * den);
    if (c.size() > d_->m) return from_poly(QPoly(c));
    return FieldElement(d_, v, den);
}

FieldElement NumberField::from_poly(QPoly const & g) const
{
    QPoly r = g % d_->f;
    QVec c = r.c;
    c.resize(d_->m, Q(0));
    return from_power(c);
}

FieldElement NumberField::from_coords(QVec const & c) const
{
    return from_power(c * d_->basis);
}

FieldElement NumberField::from_coords(ZVec const & c) const
{
    return from_coords(QVec(c.begin(), c.end()));
}

FieldElement NumberField::omega(size_t j) const
{
    QVec c(d_->m, Q(0));
    c[j] = 1;
    return from_coords(c);
}

std::vector<FieldElement> NumberField::integral_basis() const
{
    std::vector<FieldElement> r;
    for (size_t j = 0; j < d_->m; j++) r.push_back(omega(j));
    return r;
}

ZVec NumberField::mul_coords(ZVec const & a, ZVec const & b) const
{
    size_t m = d_->m;
    ZVec r(m, Z(0));
    for (size_t i = 0; i < m; i++) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < m; j++) {
            if (b[j] == 0) continue;
            Z ab = a[i] * b[j];
            ZMatrix const & T = d_->mult[i];
            for (size_t k = 0; k < m; k++)
                if (T(j, k) != 0) r[k] += ab * T(j, k);
        }
    }
    return r;
}

double NumberField::minkowski_bound() const
{
    double m = d_->m;
    double lf = std::lgamma(m + 1) - m * std::log(m);
    double b = d_->r2 * std::log(4.0 / M_PI) + lf + 0.5 * std::log(std::abs(d_->disc.get_d()));
    return std::exp(b);
}

/* ---- finite algebras ---- */

FpAlgebra::FpAlgebra(std::vector<ZMatrix> const & mult, uint64_t p_) : p(p_), m(mult.size())
{
    T.assign(m * m * m, 0);
    for (size_t i = 0; i < m; i++)
        for (size_t j = 0; j < m; j++)
            for (size_t k = 0; k < m; k++) T[(i * m + j) * m + k] = zmod_u(mult[i](j, k), p);
}

std::vector<uint64_t> FpAlgebra::mul(std::vector<uint64_t> const & a,
                                     std::vector<uint64_t> const & b) const
{
    std::vector<unsigned __int128> acc(m, 0);
    for (size_t i = 0; i < m; i++) {
        if (!a[i]) continue;
        for (size_t j = 0; j < m; j++) {
            if (!b[j]) continue;
            uint64_t ab = mulmod(a[i], b[j], p);
            uint64_t const * t = &T[(i * m + j) * m];
            for (size_t k = 0; k < m; k++)
                if (t[k]) {
                    acc[k] += (unsigned __int128) ab * t[k];
                    if (acc[k] >> 125) acc[k] %= p;
                }
        }
    }
    std::vector<uint64_t> r(m);
    for (size_t k = 0; k < m; k++) r[k] = (uint64_t) (acc[k] % p);
    return r;
}

std::vector<uint64_t> FpAlgebra::one() const
{
    std::vector<uint64_t> r(m, 0);
    r[0] = 1;
    return r;
}

std::vector<uint64_t> FpAlgebra::pow(std::vector<uint64_t> const & a, Z const & e) const
{
    std::vector<uint64_t> r = one();
    size_t nb = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (size_t i = nb; i-- > 0;) {
        r = mul(r, r);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, a);
    }
    return r;
}

/* ---- construction ---- */

static QVec qmulmod(QVec const & a, QVec const & b, QPoly const & f)
{
    QPoly r = (QPoly(a) * QPoly(b)) % f;
    QVec c = r.c;
    c.resize(f.degree(), Q(0));
    return c;
}

static std::vector<ZMatrix> mult_table(QPoly const & f, QMatrix const & B, QMatrix const & Binv)
{
    size_t m = f.degree();
    std::vector<ZMatrix> T(m, ZMatrix(m, m));
    for (size_t i = 0; i < m; i++)
        for (size_t j = i; j < m; j++) {
            QVec c = qmulmod(B.row(i), B.row(j), f) * Binv;
            for (size_t k = 0; k < m; k++) {
                if (c[k].get_den() != 1) throw error(Err::InvalidArgument, "basis does not span an order");
                T[i](j, k) = c[k].get_num();
                T[j](i, k) = c[k].get_num();
            }
        }
    return T;
}

/* canonical basis of a full lattice given by rational rows in power
 * coordinates: row j has degree j, lower coefficients reduced */
static QMatrix canonical_basis(QMatrix const & rows)
{
    size_t m = rows.cols();
    Z den = 1;
    for (size_t i = 0; i < rows.rows(); i++)
        for (size_t j = 0; j < m; j++) den = zlcm(den, rows(i, j).get_den());
    ZMatrix Z0(rows.rows(), m);
    for (size_t i = 0; i < rows.rows(); i++)
        for (size_t j = 0; j < m; j++) Z0(i, m - 1 - j) = Z(rows(i, j) * den);
    ZMatrix H = hnf(Z0);
    if (H.rows() != m) throw error(Err::InvalidArgument, "basis does not have full rank");
    QMatrix out(m, m);
    for (size_t i = 0; i < m; i++)
        for (size_t j = 0; j < m; j++) {
            Q q(H(m - 1 - i, m - 1 - j), den);
            q.canonicalize();
            out(i, j) = q;
        }
    return out;
}

static std::vector<uint64_t> row_u(ZVec const & v, uint64_t p)
{
    std::vector<uint64_t> r;
    for (auto const & a : v) r.push_back(zmod_u(a, p));
    return r;
}

/* solve y * H = v for upper triangular integer H, y integral (asserted) */
static ZVec tri_solve(ZMatrix const & H, ZVec v)
{
    size_t m = H.rows();
    ZVec y(m, Z(0));
    for (size_t i = 0; i < m; i++) {
        if (v[i] == 0) continue;
        if (!mpz_divisible_p(v[i].get_mpz_t(), H(i, i).get_mpz_t()))
            throw error(Err::Internal, "vector not in lattice");
        y[i] = v[i] / H(i, i);
        for (size_t j = i; j < m; j++) v[j] -= y[i] * H(i, j);
    }
    return y;
}

/* one enlargement step of the order at p; returns false when p-maximal */
static bool enlarge_at(QPoly const & f, QMatrix & B, uint64_t p)
{
    size_t m = f.degree();
    QMatrix Binv = inverse(B);
    auto T = mult_table(f, B, Binv);
    FpAlgebra A(T, p);
    Z q = p;
    while (q < (long) m) q *= p;
    UMat frob;
    for (size_t i = 0; i < m; i++) {
        std::vector<uint64_t> e(m, 0);
        e[i] = 1;
        frob.push_back(A.pow(e, q));
    }
    UMat ker = left_kernel_mod(frob, m, m, p);
    ZMatrix gens(0, m);
    for (size_t i = 0; i < m; i++) {
        ZVec e(m, Z(0));
        e[i] = p;
        gens.append_row(e);
    }
    for (auto const & k : ker) gens.append_row(ZVec(k.begin(), k.end()));
    ZMatrix HI = hnf_mod(gens, Z(p));
    /* multipliers of the radical, modulo p */
    UMat M(m, std::vector<uint64_t>());
    for (size_t i = 0; i < m; i++) {
        ZVec ei(m, Z(0));
        ei[i] = 1;
        for (size_t k = 0; k < m; k++) {
            ZVec prod(m, Z(0));
            for (size_t j = 0; j < m; j++)
                if (HI(k, j) != 0)
                    for (size_t l = 0; l < m; l++) prod[l] += HI(k, j) * T[i](j, l);
            ZVec y = tri_solve(HI, prod);
            auto yu = row_u(y, p);
            M[i].insert(M[i].end(), yu.begin(), yu.end());
        }
    }
    UMat U = left_kernel_mod(M, m, m * m, p);
    ZMatrix ug(0, m);
    for (size_t i = 0; i < m; i++) {
        ZVec e(m, Z(0));
        e[i] = p;
        ug.append_row(e);
    }
    for (auto const & u : U) ug.append_row(ZVec(u.begin(), u.end()));
    ZMatrix HU = hnf_mod(ug, Z(p));
    Z d = 1;
    for (size_t i = 0; i < m; i++) d *= HU(i, i);
    if (d == zpow(Z(p), m)) return false;
    QMatrix newB = to_q(HU) * B;
    for (size_t i = 0; i < m; i++)
        for (size_t j = 0; j < m; j++) newB(i, j) /= p;
    B = canonical_basis(newB);
    return true;
}

static Q basis_disc(QPoly const & f, QMatrix const & B)
{
    Q d = det(B);
    return Q(discriminant(f)) * d * d;
}

static void compute_roots(FieldData & F)
{
    size_t m = F.m;
    std::vector<hreal> c(m + 1);
    for (size_t i = 0; i <= m; i++) c[i] = to_h(F.f.c[i]);
    /* Aberth-Ehrlich iteration */
    std::vector<hcplx> z(m);
    hreal rad = 1;
    for (size_t i = 0; i < m; i++) {
        hreal t = mp::pow(hreal(mp::abs(c[i])), hreal(1) / hreal(m - i));
        if (t > rad) rad = t;
    }
    rad *= 2;
    for (size_t i = 0; i < m; i++) {
        hreal ang = hreal(2) * boost::math::constants::pi<hreal>() * hreal(i) / hreal(m) + hreal(0.4);
        z[i] = hcplx(rad * mp::cos(ang), rad * mp::sin(ang));
    }
    auto evalp = [&](hcplx const & x, hcplx & fv, hcplx & dv) {
        fv = hcplx(c[m]);
        dv = hcplx(0);
        for (size_t i = m; i-- > 0;) {
            dv = dv * x + fv;
            fv = fv * x + hcplx(c[i]);
        }
    };
    hreal eps("1e-45");
    for (int it = 0; it < 2000; it++) {
        hreal maxstep = 0;
        for (size_t i = 0; i < m; i++) {
            hcplx fv, dv;
            evalp(z[i], fv, dv);
            if (fv == hcplx(0)) continue;
            hcplx ratio = fv / dv;
            hcplx s(0);
            for (size_t j = 0; j < m; j++)
                if (j != i) s += hcplx(1) / (z[i] - z[j]);
            hcplx w = ratio / (hcplx(1) - ratio * s);
            z[i] -= w;
            hreal st = hreal(mp::abs(w)) / hreal(1 + mp::abs(z[i]));
            if (st > maxstep) maxstep = st;
        }
        if (maxstep < eps) break;
    }
    /* r1 roots closest to the real axis are the real ones */
    std::vector<size_t> idx(m);
    for (size_t i = 0; i < m; i++) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        return mp::abs(z[a].imag()) < mp::abs(z[b].imag());
    });
    std::vector<hcplx> real, cplx;
    for (size_t k = 0; k < m; k++) {
        hcplx r = z[idx[k]];
        if ((int) k < F.r1) real.push_back(hcplx(r.real(), 0));
        else if (r.imag() > 0) cplx.push_back(r);
    }
    std::sort(real.begin(), real.end(), [](hcplx const & a, hcplx const & b) { return a.real() < b.real(); });
    std::sort(cplx.begin(), cplx.end(), [](hcplx const & a, hcplx const & b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    if ((int) real.size() != F.r1 || (int) cplx.size() != F.r2)
        throw error(Err::Internal, "root isolation failed");
    std::vector<hcplx> all = real;
    all.insert(all.end(), cplx.begin(), cplx.end());
    F.roots.clear();
    for (auto const & r : all) F.roots.push_back(cld((long double) r.real(), (long double) r.imag()));
    F.basis_cemb.assign(m, std::vector<cld>(all.size()));
    F.basis_emb.assign(m, std::vector<long double>(m));
    long double s2 = std::sqrt((long double) 2);
    for (size_t j = 0; j < m; j++) {
        for (size_t v = 0; v < all.size(); v++) {
            hcplx acc(0);
            for (size_t i = m; i-- > 0;) acc = acc * all[v] + hcplx(to_h(F.basis(j, i)));
            F.basis_cemb[j][v] = cld((long double) acc.real(), (long double) acc.imag());
        }
        size_t k = 0;
        for (int v = 0; v < F.r1; v++) F.basis_emb[j][k++] = F.basis_cemb[j][v].real();
        for (int v = 0; v < F.r2; v++) {
            F.basis_emb[j][k++] = s2 * F.basis_cemb[j][F.r1 + v].real();
            F.basis_emb[j][k++] = s2 * F.basis_cemb[j][F.r1 + v].imag();
        }
    }
}

static NumberField finish(QPoly const & f, QMatrix const & B)
{
    auto F = std::make_shared<FieldData>();
    F->f = f;
    F->m = f.degree();
    F->basis = B;
    F->basis_inv = inverse(B);
    F->mult = mult_table(f, B, F->basis_inv);
    F->poly_disc = discriminant(f);
    Q d = basis_disc(f, B);
    if (d.get_den() != 1) throw error(Err::Internal, "non-integral discriminant");
    F->disc = d.get_num();
    Q idx = 1 / det(B);
    F->index = abs(idx.get_num());
    F->r1 = sturm_real_roots(f);
    F->r2 = (F->m - F->r1) / 2;
    size_t m = F->m;
    F->trace = ZMatrix(m, m);
    /* Tr(omega_i omega_j) via traces of the basis elements */
    std::vector<Z> tr(m);
    {
        NumberField tmp(F);
        for (size_t k = 0; k < m; k++) {
            Q t = tmp.omega(k).trace();
            tr[k] = t.get_num();
        }
    }
    for (size_t i = 0; i < m; i++)
        for (size_t j = 0; j < m; j++) {
            Z s = 0;
            for (size_t k = 0; k < m; k++) s += F->mult[i](j, k) * tr[k];
            F->trace(i, j) = s;
        }
    compute_roots(*F);
    return NumberField(F);
}

static void check_poly(QPoly const & f)
{
    if (f.degree() < 1) throw error(Err::InvalidArgument, "polynomial must have positive degree");
    if (f.lead() != 1) throw error(Err::NonMonic, "defining polynomial must be monic");
    if (!f.is_integral()) throw error(Err::InvalidArgument, "defining polynomial must have integer coefficients");
}

NumberField make_field_from_order(QPoly const & f, QMatrix const & order_basis,
                                  std::vector<Z> const & bad_primes, bool check_irreducible)
{
    check_poly(f);
    if (check_irreducible && !is_irreducible(f))
        throw error(Err::ReduciblePolynomial, poly_str(f) + " is reducible over Q");
    QMatrix B = canonical_basis(order_basis);
    mult_table(f, B, inverse(B));   // validates closure
    Q disc = basis_disc(f, B);
    for (Z const & p : bad_primes) {
        if (p > Z("4611686018427387903"))
            throw error(Err::BoundsExceeded, "prime too large for p-maximal order");
        uint64_t pu = p.get_ui();
        while (valuation(disc.get_num(), p) >= 2 && enlarge_at(f, B, pu)) disc = basis_disc(f, B);
    }
    return finish(f, B);
}

NumberField make_field(QPoly const & f)
{
    check_poly(f);
    if (!is_irreducible(f)) throw error(Err::ReduciblePolynomial, poly_str(f) + " is reducible over Q");
    size_t m = f.degree();
    std::vector<Z> ps;
    for (auto const & [p, e] : factor(discriminant(f)))
        if (e >= 2) ps.push_back(p);
    return make_field_from_order(f, QMatrix::identity(m), ps, false);
}

NumberField make_field(QPoly const & f, QMatrix const & user_basis)
{
    check_poly(f);
    if (!is_irreducible(f)) throw error(Err::ReduciblePolynomial, poly_str(f) + " is reducible over Q");
    Q d = basis_disc(f, canonical_basis(user_basis));
    std::vector<Z> ps;
    for (auto const & [p, e] : factor(d.get_num()))
        if (e >= 2) ps.push_back(p);
    return make_field_from_order(f, user_basis, ps, false);
}

FieldElement parse_element(NumberField const & K, std::string const & sin)
{
    std::string s;
    for (char ch : sin)
        if (!std::isspace((unsigned char) ch)) s += ch;
    if (!s.empty() && s[0] == '[') {
        if (s.back() != ']') throw error(Err::ParseError, "unterminated coordinate list");
        std::string body = s.substr(1, s.size() - 2);
        QVec c;
        size_t i = 0;
        while (i <= body.size() && !body.empty()) {
            size_t j = body.find(',', i);
            if (j == std::string::npos) j = body.size();
            std::string t = body.substr(i, j - i);
            if (!t.empty() && t.front() == '"') t = t.substr(1);
            if (!t.empty() && t.back() == '"') t.pop_back();
            c.push_back(parse_rational(t));
            i = j + 1;
        }
        if (c.size() != K.degree())
            throw error(Err::ParseError, "coordinate list has wrong length");
        return K.from_coords(c);
    }
    return K.from_poly(parse_poly(s, 'x'));
}

}
