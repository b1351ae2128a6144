#ifndef NFCOH_ARITH_HPP
#define NFCOH_ARITH_HPP

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>
#include <random>

namespace nfc {

using Z = mpz_class;
using Q = mpq_class;
using Rng = std::mt19937_64;

std::string to_str(Z const & a);
std::string to_str(Q const & a);
Q parse_rational(std::string const & s);

Z zgcd(Z const & a, Z const & b);
Z zlcm(Z const & a, Z const & b);
/* g = u*a + v*b, g >= 0 */
Z xgcd(Z & u, Z & v, Z const & a, Z const & b);
Z fdiv(Z const & a, Z const & b);   // floor
Z mod(Z const & a, Z const & m);    // in [0, |m|)
Z zpow(Z const & a, unsigned long e);
Z zround(Q const & q);
long valuation(Z a, Z const & p);
bool is_prime(Z const & n);

/* prime factorisation of |n|, sorted, with multiplicities */
std::vector<std::pair<Z, int>> factor(Z n);

/* uniform integer in [lo, hi] */
long rand_range(Rng & rng, long lo, long hi);

/* arithmetic mod a word-size prime */
inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p)
{
    return (unsigned __int128) a * b % p;
}
uint64_t powmod(uint64_t a, uint64_t e, uint64_t p);
uint64_t invmod(uint64_t a, uint64_t p);
uint64_t zmod_u(Z const & a, uint64_t p);

}

#endif
