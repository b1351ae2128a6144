#include "nfcoh/matrix.hpp"
#include "nfcoh/errors.hpp"

#include <algorithm>

namespace nfc {

QMatrix to_q(ZMatrix const & m)
{
    QMatrix r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); i++)
        for (size_t j = 0; j < m.cols(); j++) r(i, j) = m(i, j);
    return r;
}

Z det(ZMatrix m)
{
    size_t n = m.rows();
    assert(n == m.cols());
    if (n == 0) return 1;
    Z prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; k++) {
        if (m(k, k) == 0) {
            size_t i = k + 1;
            while (i < n && m(i, k) == 0) i++;
            if (i == n) return 0;
            m.swap_rows(i, k);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; i++) {
            for (size_t j = k + 1; j < n; j++) {
                Z t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = t;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

Q det(QMatrix const & m)
{
    size_t n = m.rows();
    Z den = 1;
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++) den = zlcm(den, m(i, j).get_den());
    ZMatrix z(n, n);
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++) z(i, j) = Z(m(i, j) * den);
    Q r(det(z), zpow(den, n));
    r.canonicalize();
    return r;
}

QMatrix inverse(QMatrix const & m)
{
    size_t n = m.rows();
    QMatrix a = m, inv = QMatrix::identity(n);
    for (size_t c = 0; c < n; c++) {
        size_t p = c;
        while (p < n && a(p, c) == 0) p++;
        if (p == n) throw error(Err::DivisionByZero, "singular matrix");
        a.swap_rows(p, c);
        inv.swap_rows(p, c);
        Q piv = a(c, c);
        for (size_t j = 0; j < n; j++) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (size_t i = 0; i < n; i++) {
            if (i == c || a(i, c) == 0) continue;
            Q f = a(i, c);
            for (size_t j = 0; j < n; j++) {
                if (a(c, j) != 0) a(i, j) -= f * a(c, j);
                if (inv(c, j) != 0) inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

size_t rank(QMatrix a)
{
    size_t r = 0;
    for (size_t c = 0; c < a.cols() && r < a.rows(); c++) {
        size_t p = r;
        while (p < a.rows() && a(p, c) == 0) p++;
        if (p == a.rows()) continue;
        a.swap_rows(p, r);
        for (size_t i = r + 1; i < a.rows(); i++) {
            if (a(i, c) == 0) continue;
            Q f = a(i, c) / a(r, c);
            for (size_t j = c; j < a.cols(); j++) a(i, j) -= f * a(r, j);
        }
        r++;
    }
    return r;
}

bool solve_left(QMatrix const & A, QVec const & b, QVec & x)
{
    /* A^T x^T = b^T */
    size_t n = A.rows(), m = A.cols();
    QMatrix aug(m, n + 1);
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; j < n; j++) aug(i, j) = A(j, i);
        aug(i, n) = b[i];
    }
    std::vector<size_t> piv;
    size_t r = 0;
    for (size_t c = 0; c < n && r < m; c++) {
        size_t p = r;
        while (p < m && aug(p, c) == 0) p++;
        if (p == m) continue;
        aug.swap_rows(p, r);
        Q f0 = aug(r, c);
        for (size_t j = c; j <= n; j++) aug(r, j) /= f0;
        for (size_t i = 0; i < m; i++) {
            if (i == r || aug(i, c) == 0) continue;
            Q f = aug(i, c);
            for (size_t j = c; j <= n; j++) aug(i, j) -= f * aug(r, j);
        }
        piv.push_back(c);
        r++;
    }
    for (size_t i = r; i < m; i++)
        if (aug(i, n) != 0) return false;
    x.assign(n, Q(0));
    for (size_t i = 0; i < r; i++) x[piv[i]] = aug(i, n);
    return true;
}

/* ---- Hermite forms ---- */

static void axpy(ZVec & y, Z const & q, ZVec const & x)
{
    if (q == 0) return;
    for (size_t k = 0; k < y.size(); k++)
        if (x[k] != 0) y[k] -= q * x[k];
}

static bool is_zero(ZVec const & v)
{
    for (auto const & a : v)
        if (a != 0) return false;
    return true;
}

/* echelonise rows (and the parallel transform rows if given) */
static std::vector<ZVec> echelon(std::vector<ZVec> R, size_t ncols,
                                 std::vector<ZVec> * T, std::vector<ZVec> * kernel,
                                 std::vector<ZVec> * HTout = nullptr)
{
    std::vector<ZVec> H, HT;
    for (size_t col = 0; col < ncols; col++) {
        for (;;) {
            long best = -1;
            for (size_t i = 0; i < R.size(); i++) {
                if (R[i][col] == 0) continue;
                if (best < 0 || abs(R[i][col]) < abs(R[best][col])) best = i;
            }
            if (best < 0) break;
            bool more = false;
            for (size_t i = 0; i < R.size(); i++) {
                if ((long) i == best || R[i][col] == 0) continue;
                Z q = fdiv(R[i][col], R[best][col]);
                axpy(R[i], q, R[best]);
                if (T) axpy((*T)[i], q, (*T)[best]);
                if (R[i][col] != 0) more = true;
            }
            if (more) continue;
            ZVec piv = R[best];
            ZVec tpiv;
            if (T) tpiv = (*T)[best];
            if (piv[col] < 0) {
                for (auto & a : piv) a = -a;
                for (auto & a : tpiv) a = -a;
            }
            R.erase(R.begin() + best);
            if (T) T->erase(T->begin() + best);
            H.push_back(piv);
            HT.push_back(tpiv);
            break;
        }
    }
    if (kernel && T) *kernel = *T;
    /* reduce above pivots */
    size_t at = 0;
    std::vector<size_t> pc;
    for (auto const & h : H) {
        while (h[at] == 0) at++;
        pc.push_back(at);
    }
    for (size_t i = 0; i < H.size(); i++)
        for (size_t k = 0; k < i; k++) {
            Z q = fdiv(H[k][pc[i]], H[i][pc[i]]);
            axpy(H[k], q, H[i]);
            if (T) axpy(HT[k], q, HT[i]);
        }
    if (HTout) *HTout = HT;
    return H;
}

ZMatrix hnf(ZMatrix const & rows)
{
    std::vector<ZVec> R;
    for (size_t i = 0; i < rows.rows(); i++) {
        auto r = rows.row(i);
        if (!is_zero(r)) R.push_back(r);
    }
    auto H = echelon(R, rows.cols(), nullptr, nullptr);
    ZMatrix out(0, rows.cols());
    for (auto const & h : H) out.append_row(h);
    return out;
}

ZMatrix hnf_transform(ZMatrix const & rows, ZMatrix & U)
{
    std::vector<ZVec> R, T, K, HT;
    for (size_t i = 0; i < rows.rows(); i++) {
        R.push_back(rows.row(i));
        ZVec t(rows.rows(), Z(0));
        t[i] = 1;
        T.push_back(t);
    }
    auto H = echelon(R, rows.cols(), &T, &K, &HT);
    ZMatrix out(0, rows.cols());
    U = ZMatrix(0, rows.rows());
    for (size_t i = 0; i < H.size(); i++) {
        out.append_row(H[i]);
        U.append_row(HT[i]);
    }
    return out;
}

bool solve_int_left(ZMatrix const & A, ZVec const & b, ZVec & x)
{
    ZMatrix U;
    ZMatrix H = hnf_transform(A, U);
    ZVec r = b;
    ZVec y(H.rows(), Z(0));
    size_t col = 0;
    for (size_t i = 0; i < H.rows(); i++) {
        while (H(i, col) == 0) {
            if (r[col] != 0) return false;
            col++;
        }
        if (!mpz_divisible_p(r[col].get_mpz_t(), H(i, col).get_mpz_t())) return false;
        y[i] = r[col] / H(i, col);
        for (size_t j = col; j < H.cols(); j++) r[j] -= y[i] * H(i, j);
        col++;
    }
    for (auto const & a : r)
        if (a != 0) return false;
    x = y * U;
    return true;
}

ZMatrix hnf_mod(ZMatrix const & rows, Z const & Din)
{
    size_t n = rows.cols();
    Z D = abs(Din);
    if (D == 0) throw error(Err::Internal, "hnf_mod with zero modulus");
    std::vector<ZVec> R;
    for (size_t i = 0; i < rows.rows(); i++) {
        ZVec r = rows.row(i);
        for (auto & a : r) a = mod(a, D);
        if (!is_zero(r)) R.push_back(r);
    }
    ZMatrix H(n, n);
    for (size_t col = 0; col < n; col++) {
        ZVec P(n, Z(0));
        P[col] = D;
        std::vector<ZVec> next;
        for (auto & r : R) {
            if (r[col] == 0) {
                next.push_back(r);
                continue;
            }
            Z u, v;
            Z g = xgcd(u, v, P[col], r[col]);
            Z a = r[col] / g, b = P[col] / g;
            ZVec np(n), nr(n);
            for (size_t k = col; k < n; k++) {
                np[k] = mod(Z(u * P[k] + v * r[k]), D);
                nr[k] = mod(Z(a * P[k] - b * r[k]), D);
            }
            np[col] = g;
            nr[col] = 0;
            P = np;
            if (!is_zero(nr)) next.push_back(nr);
        }
        /* (D/g)*P - D*e_col is in the lattice and vanishes at col */
        {
            Z f = D / P[col];
            ZVec w(n, Z(0));
            for (size_t k = col + 1; k < n; k++) w[k] = mod(Z(f * P[k]), D);
            if (!is_zero(w)) next.push_back(w);
        }
        for (size_t k = 0; k < n; k++) H(col, k) = P[k];
        R.swap(next);
    }
    for (size_t i = 0; i < n; i++)
        for (size_t k = 0; k < i; k++) {
            Z q = fdiv(H(k, i), H(i, i));
            if (q == 0) continue;
            for (size_t j = i; j < n; j++) H(k, j) -= q * H(i, j);
        }
    return H;
}

ZMatrix left_kernel(ZMatrix const & A)
{
    size_t n = A.rows();
    std::vector<ZVec> R, T;
    for (size_t i = 0; i < n; i++) {
        R.push_back(A.row(i));
        ZVec e(n, Z(0));
        e[i] = 1;
        T.push_back(e);
    }
    std::vector<ZVec> K;
    echelon(R, A.cols(), &T, &K);
    ZMatrix km(0, n);
    for (auto const & k : K) km.append_row(k);
    if (km.rows() == 0) return ZMatrix(0, n);
    return hnf(km);
}

Smith smith(ZMatrix const & A)
{
    size_t n = A.rows();
    assert(n == A.cols());
    Z D = abs(det(A));
    if (D == 0) throw error(Err::Internal, "smith form of a singular matrix");
    ZMatrix M = A, V = ZMatrix::identity(n), Vi = ZMatrix::identity(n);
    auto colop = [&](size_t j, size_t t, Z const & q) {
        /* col_j -= q col_t */
        if (q == 0) return;
        for (size_t i = 0; i < n; i++) {
            if (M(i, t) != 0) M(i, j) -= q * M(i, t);
            if (V(i, t) != 0) V(i, j) = mod(Z(V(i, j) - q * V(i, t)), D);
        }
        for (size_t k = 0; k < n; k++)
            if (Vi(j, k) != 0) Vi(t, k) = mod(Z(Vi(t, k) + q * Vi(j, k)), D);
    };
    auto colswap = [&](size_t a, size_t b) {
        if (a == b) return;
        for (size_t i = 0; i < n; i++) {
            std::swap(M(i, a), M(i, b));
            std::swap(V(i, a), V(i, b));
        }
        Vi.swap_rows(a, b);
    };
    for (size_t t = 0; t < n; t++) {
        for (;;) {
            size_t bi = n, bj = n;
            for (size_t i = t; i < n; i++)
                for (size_t j = t; j < n; j++)
                    if (M(i, j) != 0 && (bi == n || abs(M(i, j)) < abs(M(bi, bj)))) {
                        bi = i;
                        bj = j;
                    }
            assert(bi < n);
            M.swap_rows(bi, t);
            colswap(bj, t);
            bool dirty = false;
            for (size_t i = t + 1; i < n; i++) {
                if (M(i, t) == 0) continue;
                Z q = fdiv(M(i, t), M(t, t));
                for (size_t j = t; j < n; j++) M(i, j) -= q * M(t, j);
                if (M(i, t) != 0) dirty = true;
            }
            for (size_t j = t + 1; j < n; j++) {
                if (M(t, j) == 0) continue;
                colop(j, t, fdiv(M(t, j), M(t, t)));
                if (M(t, j) != 0) dirty = true;
            }
            if (dirty) continue;
            bool ok = true;
            for (size_t i = t + 1; i < n && ok; i++)
                for (size_t j = t + 1; j < n; j++)
                    if (M(i, j) % M(t, t) != 0) {
                        for (size_t k = t; k < n; k++) M(t, k) += M(i, k);
                        ok = false;
                        break;
                    }
            if (ok) break;
        }
        if (M(t, t) < 0)
            for (size_t k = t; k < n; k++) M(t, k) = -M(t, k);
    }
    Smith s;
    for (size_t i = 0; i < n; i++) s.diag.push_back(M(i, i));
    s.V = V;
    s.Vinv = Vi;
    return s;
}

/* ---- F_p ---- */

UMat row_echelon_mod(UMat A, uint64_t p, std::vector<size_t> * pivots)
{
    size_t r = 0;
    size_t ncols = A.empty() ? 0 : A[0].size();
    std::vector<size_t> pv;
    for (size_t c = 0; c < ncols && r < A.size(); c++) {
        size_t q = r;
        while (q < A.size() && A[q][c] == 0) q++;
        if (q == A.size()) continue;
        std::swap(A[q], A[r]);
        uint64_t inv = invmod(A[r][c], p);
        for (size_t j = c; j < ncols; j++) A[r][j] = mulmod(A[r][j], inv, p);
        for (size_t i = 0; i < A.size(); i++) {
            if (i == r || A[i][c] == 0) continue;
            uint64_t f = A[i][c];
            for (size_t j = c; j < ncols; j++)
                if (A[r][j]) A[i][j] = (A[i][j] + p - mulmod(f, A[r][j], p)) % p;
        }
        pv.push_back(c);
        r++;
    }
    A.resize(r);
    if (pivots) *pivots = pv;
    return A;
}

UMat left_kernel_mod(UMat A, size_t nrows, size_t ncols, uint64_t p)
{
    for (size_t i = 0; i < nrows; i++) {
        A[i].resize(ncols + nrows, 0);
        A[i][ncols + i] = 1;
    }
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < nrows; c++) {
        size_t q = r;
        while (q < nrows && A[q][c] == 0) q++;
        if (q == nrows) continue;
        std::swap(A[q], A[r]);
        uint64_t inv = invmod(A[r][c], p);
        for (size_t j = 0; j < ncols + nrows; j++) A[r][j] = mulmod(A[r][j], inv, p);
        for (size_t i = 0; i < nrows; i++) {
            if (i == r || A[i][c] == 0) continue;
            uint64_t f = A[i][c];
            for (size_t j = 0; j < ncols + nrows; j++)
                if (A[r][j]) A[i][j] = (A[i][j] + p - mulmod(f, A[r][j], p)) % p;
        }
        r++;
    }
    UMat K;
    for (size_t i = r; i < nrows; i++) K.emplace_back(A[i].begin() + ncols, A[i].end());
    return K;
}

}
