#include "nfcoh/lattice.hpp"

#include <cmath>

namespace nfc {

static long double dot(std::vector<long double> const & a, std::vector<long double> const & b)
{
    long double s = 0;
    for (size_t i = 0; i < a.size(); i++) s += a[i] * b[i];
    return s;
}

void lll(RealLattice & L, long double delta)
{
    size_t n = L.emb.size();
    if (n < 2) return;
    std::vector<std::vector<long double>> mu(n, std::vector<long double>(n, 0)), bs(n);
    std::vector<long double> B(n);
    auto gso = [&](size_t upto) {
        for (size_t i = 0; i <= upto; i++) {
            bs[i] = L.emb[i];
            for (size_t j = 0; j < i; j++) {
                mu[i][j] = B[j] > 0 ? dot(L.emb[i], bs[j]) / B[j] : 0;
                for (size_t k = 0; k < bs[i].size(); k++) bs[i][k] -= mu[i][j] * bs[j][k];
            }
            B[i] = dot(bs[i], bs[i]);
        }
    };
    size_t k = 1;
    gso(n - 1);
    size_t guard = 0;
    while (k < n && guard++ < 100000) {
        for (size_t j = k; j-- > 0;) {
            long double q = std::round(mu[k][j]);
            if (q == 0) continue;
            Z qz((double) q);
            if (std::fabs(q) > 1e15L) qz = Z(std::to_string((long long) q));
            for (size_t t = 0; t < L.emb[k].size(); t++) L.emb[k][t] -= q * L.emb[j][t];
            for (size_t t = 0; t < L.coeffs[k].size(); t++) L.coeffs[k][t] -= qz * L.coeffs[j][t];
            for (size_t t = 0; t <= j; t++) mu[k][t] -= q * (t == j ? 1 : mu[j][t]);
        }
        if (B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
            k++;
        } else {
            std::swap(L.emb[k], L.emb[k - 1]);
            std::swap(L.coeffs[k], L.coeffs[k - 1]);
            gso(n - 1);
            k = k > 1 ? k - 1 : 1;
        }
    }
    /* recompute embeddings drift-free is the caller's business; vectors
     * were updated with the same integer operations */
}

ZVec combine(RealLattice const & L, std::vector<long> const & x)
{
    ZVec r(L.coeffs.empty() ? 0 : L.coeffs[0].size(), Z(0));
    for (size_t i = 0; i < x.size(); i++) {
        if (!x[i]) continue;
        for (size_t t = 0; t < r.size(); t++) r[t] += x[i] * L.coeffs[i][t];
    }
    return r;
}

bool enumerate(RealLattice const & L, long double bound,
               std::function<bool(std::vector<long> const &, long double)> const & cb,
               size_t max_nodes)
{
    size_t n = L.emb.size();
    if (n == 0) return true;
    /* Cholesky-type decomposition q_ii, q_ij of the Gram matrix */
    std::vector<std::vector<long double>> q(n, std::vector<long double>(n, 0));
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++) q[i][j] = dot(L.emb[i], L.emb[j]);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            q[j][i] = q[i][j];
            q[i][j] = q[i][j] / q[i][i];
        }
        for (size_t k = i + 1; k < n; k++)
            for (size_t l = k; l < n; l++) q[k][l] -= q[k][i] * q[i][l];
    }
    std::vector<long> x(n, 0);
    std::vector<long double> T(n + 1, 0), U(n, 0), UB(n, 0);
    size_t nodes = 0;
    bool stopped = false;
    long double eps = 1e-9L * (1 + bound);
    /* recursive descent from the last coordinate */
    std::function<void(long, long double, bool)> rec = [&](long i, long double rem, bool zero_above) {
        if (stopped) return;
        long double c = 0;
        for (size_t j = i + 1; j < n; j++) c += q[i][j] * x[j];
        long double r = std::sqrt(std::max(0.0L, (rem + eps) / q[i][i]));
        long lo = (long) std::ceil(-c - r), hi = (long) std::floor(-c + r);
        if (zero_above) lo = std::max(lo, 0L);
        for (long v = lo; v <= hi && !stopped; v++) {
            if (++nodes > max_nodes) {
                stopped = true;
                return;
            }
            long double t = v + c;
            long double nrem = rem - q[i][i] * t * t;
            if (nrem < -eps) continue;
            x[i] = v;
            if (i == 0) {
                bool allz = zero_above && v == 0;
                if (!allz && !cb(x, bound - nrem)) stopped = true;
            } else {
                rec(i - 1, nrem, zero_above && v == 0);
            }
        }
        x[i] = 0;
    };
    rec((long) n - 1, bound, true);
    return !stopped;
}

}
