#ifndef NFCOH_POLY_HPP
#define NFCOH_POLY_HPP

#include <string>
#include <utility>
#include <vector>
#include "nfcoh/arith.hpp"
#include "nfcoh/matrix.hpp"

namespace nfc {

/* dense polynomial over Q, coefficient i is that of x^i; no trailing zeros */
struct QPoly {
    std::vector<Q> c;
    QPoly() = default;
    explicit QPoly(std::vector<Q> v) : c(std::move(v)) { trim(); }
    static QPoly monomial(Q const & a, size_t k);
    void trim();
    long degree() const { return (long) c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    Q lead() const { return c.empty() ? Q(0) : c.back(); }
    Q operator[](size_t i) const { return i < c.size() ? c[i] : Q(0); }
    bool is_integral() const;
    QPoly derivative() const;
    QPoly monic() const;
    Q eval(Q const & x) const;
    bool operator==(QPoly const & o) const { return c == o.c; }
};

QPoly operator+(QPoly const & a, QPoly const & b);
QPoly operator-(QPoly const & a, QPoly const & b);
QPoly operator*(QPoly const & a, QPoly const & b);
QPoly operator*(Q const & s, QPoly const & a);
void divmod(QPoly const & a, QPoly const & b, QPoly & q, QPoly & r);
QPoly operator%(QPoly const & a, QPoly const & b);
QPoly gcd(QPoly a, QPoly b);   // monic
/* g = s*a + t*b, g monic */
QPoly xgcd(QPoly const & a, QPoly const & b, QPoly & s, QPoly & t);

/* integer coefficient helpers */
std::vector<Z> to_z(QPoly const & f);
QPoly from_z(std::vector<Z> const & f);

Z resultant(QPoly const & a, QPoly const & b);   // integer polys
Z discriminant(QPoly const & f);                // monic integer f
size_t sturm_real_roots(QPoly const & f);       // squarefree f
bool is_squarefree(QPoly const & f);
/* f monic in Z[x], squarefree */
bool is_irreducible(QPoly const & f);

/* x^2+5, -x^3 + 2*x - 1/2, (x+1)^2 is not supported */
QPoly parse_poly(std::string const & s, char var = 'x');
std::string poly_str(QPoly const & f, char var = 'x');

/* characteristic polynomial det(x - M) */
QPoly charpoly(QMatrix const & M);

/* ---- polynomials over F_p ---- */
struct FpPoly {
    uint64_t p = 2;
    std::vector<uint64_t> c;
    FpPoly() = default;
    FpPoly(uint64_t p_, std::vector<uint64_t> v) : p(p_), c(std::move(v)) { trim(); }
    void trim() { while (!c.empty() && c.back() == 0) c.pop_back(); }
    long degree() const { return (long) c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    uint64_t operator[](size_t i) const { return i < c.size() ? c[i] : 0; }
    FpPoly monic() const;
    bool operator==(FpPoly const & o) const { return p == o.p && c == o.c; }
};

FpPoly operator+(FpPoly const & a, FpPoly const & b);
FpPoly operator-(FpPoly const & a, FpPoly const & b);
FpPoly operator*(FpPoly const & a, FpPoly const & b);
void divmod(FpPoly const & a, FpPoly const & b, FpPoly & q, FpPoly & r);
FpPoly operator%(FpPoly const & a, FpPoly const & b);
FpPoly gcd(FpPoly a, FpPoly b);
FpPoly xgcd(FpPoly const & a, FpPoly const & b, FpPoly & s, FpPoly & t);
FpPoly powmod(FpPoly const & a, Z const & e, FpPoly const & m);
FpPoly reduce_mod_p(QPoly const & f, uint64_t p);   // integral f
/* factorisation of a nonzero polynomial into monic irreducibles */
std::vector<std::pair<FpPoly, int>> factor_mod_p(FpPoly const & f, Rng & rng);
/* roots in F_p of any nonzero polynomial */
std::vector<uint64_t> roots_mod_p(FpPoly const & f, Rng & rng);

}

#endif
