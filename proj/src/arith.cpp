#include "nfcoh/arith.hpp"
#include "nfcoh/errors.hpp"

#include <algorithm>
#include <map>

namespace nfc {

const char * err_name(Err e)
{
    switch (e) {
    case Err::ParseError: return "ParseError";
    case Err::NonMonic: return "NonMonic";
    case Err::ReduciblePolynomial: return "ReduciblePolynomial";
    case Err::InvalidArgument: return "InvalidArgument";
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::NotAnNthPower: return "NotAnNthPower";
    case Err::BoundsExceeded: return "BoundsExceeded";
    case Err::SearchExhausted: return "SearchExhausted";
    case Err::RankTooLarge: return "RankTooLarge";
    case Err::RootOfUnityMissing: return "RootOfUnityMissing";
    case Err::RamifiedExtension: return "RamifiedExtension";
    case Err::NormNotOne: return "NormNotOne";
    case Err::ResolventExhausted: return "ResolventExhausted";
    case Err::NormNotTrivial: return "NormNotTrivial";
    case Err::ClassEquationUnsolvable: return "ClassEquationUnsolvable";
    case Err::NotInZ1: return "NotInZ1";
    case Err::DescentFailure: return "DescentFailure";
    case Err::NotDivisibleByN: return "NotDivisibleByN";
    case Err::ScopeViolation: return "ScopeViolation";
    case Err::Internal: return "Internal";
    }
    return "?";
}

std::string to_str(Z const & a) { return a.get_str(); }
std::string to_str(Q const & a)
{
    Q b = a;
    b.canonicalize();
    return b.get_str();
}

Q parse_rational(std::string const & s)
{
    Q q;
    std::string t;
    for (char ch : s)
        if (ch != ' ') t += ch;
    if (t.empty() || t.find_first_not_of("+-0123456789/") != std::string::npos)
        throw error(Err::ParseError, "bad rational '" + s + "'");
    if (t[0] == '+') t = t.substr(1);
    if (q.set_str(t, 10) != 0 || q.get_den() == 0)
        throw error(Err::ParseError, "bad rational '" + s + "'");
    q.canonicalize();
    return q;
}

Z zgcd(Z const & a, Z const & b)
{
    Z g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Z zlcm(Z const & a, Z const & b)
{
    Z g;
    mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Z xgcd(Z & u, Z & v, Z const & a, Z const & b)
{
    Z g;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Z fdiv(Z const & a, Z const & b)
{
    Z q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Z mod(Z const & a, Z const & m)
{
    Z r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Z zpow(Z const & a, unsigned long e)
{
    Z r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

Z zround(Q const & q)
{
    Z num = 2 * q.get_num() + q.get_den();
    return fdiv(num, 2 * q.get_den());
}

long valuation(Z a, Z const & p)
{
    if (a == 0) return 1L << 40;
    long v = 0;
    while (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) {
        a /= p;
        v++;
    }
    return v;
}

bool is_prime(Z const & n)
{
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

static Z rho(Z const & n, unsigned long c)
{
    /* Brent's variant */
    Z y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1, m = 64;
    auto f = [&](Z const & t) { Z s = t * t + c; return Z(s % n); };
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; i++) y = f(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (unsigned long i = 0; i < std::min(m, r - k); i++) {
                y = f(y);
                Z d = x - y;
                q = (q * abs(d)) % n;
            }
            g = zgcd(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = zgcd(abs(Z(x - ys)), n);
        } while (g == 1);
    }
    return g;
}

static void split_into(Z const & n, std::map<Z, int> & out)
{
    if (n == 1) return;
    if (is_prime(n)) {
        out[n]++;
        return;
    }
    Z sq;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_sqrt(sq.get_mpz_t(), n.get_mpz_t());
        split_into(sq, out);
        split_into(sq, out);
        return;
    }
    for (unsigned long c = 1;; c++) {
        Z d = rho(n, c);
        if (d != n && d != 1) {
            split_into(d, out);
            split_into(n / d, out);
            return;
        }
    }
}

std::vector<std::pair<Z, int>> factor(Z n)
{
    n = abs(n);
    std::map<Z, int> out;
    if (n == 0) return {};
    for (unsigned long p = 2; p < 5000; p += (p == 2 ? 1 : 2)) {
        if (Z(p) * p > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[Z(p)]++;
            n /= p;
        }
    }
    split_into(n, out);
    return {out.begin(), out.end()};
}

long rand_range(Rng & rng, long lo, long hi)
{
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p)
{
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t p)
{
    a %= p;
    if (a == 0) throw error(Err::DivisionByZero, "inverse of 0 mod p");
    __int128 t = 0, nt = 1, r = p, nr = a;
    while (nr) {
        __int128 q = r / nr, tmp;
        tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += p;
    return (uint64_t) t;
}

uint64_t zmod_u(Z const & a, uint64_t p)
{
    static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long expected");
    return mpz_fdiv_ui(a.get_mpz_t(), p);
}

}
