#ifndef NFCOH_IDEAL_HPP
#define NFCOH_IDEAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "nfcoh/lattice.hpp"
#include "nfcoh/number_field.hpp"

namespace nfc {

/* fractional ideal (1/den) * rowspan(H), H in Hermite form with respect to
 * the integral basis */
class Ideal {
    NumberField K_;
    ZMatrix H_;
    Z den_ = 1;
    void normalize();
  public:
    Ideal() = default;
    Ideal(NumberField K, ZMatrix H, Z den);
    static Ideal unit(NumberField const & K);
    static Ideal principal(FieldElement const & a);
    static Ideal from_int(NumberField const & K, Z const & a);
    /* O-module generated by the elements */
    static Ideal generated(NumberField const & K, std::vector<FieldElement> const & gens);
    /* Z-module spanned by rational rows in integral-basis coordinates (must
     * be an ideal) */
    static Ideal from_rows(NumberField const & K, QMatrix const & rows);

    NumberField const & field() const { return K_; }
    ZMatrix const & hnf() const { return H_; }
    Z const & den() const { return den_; }
    bool valid() const { return K_.valid(); }

    bool is_integral() const { return den_ == 1; }
    bool is_unit() const;
    Q norm() const;
    /* smallest positive integer in an integral ideal */
    Z minimum() const;
    std::vector<FieldElement> basis() const;
    bool contains(FieldElement const & x) const;
    bool divides(Ideal const & o) const;   // o subset of this

    Ideal operator*(Ideal const & o) const;
    Ideal operator+(Ideal const & o) const;
    Ideal operator*(FieldElement const & a) const;
    Ideal inverse() const;
    Ideal pow(long e) const;
    bool operator==(Ideal const & o) const;
    bool operator!=(Ideal const & o) const { return !(*this == o); }
    bool operator<(Ideal const & o) const;    // arbitrary total order

    /* LLL-reduced basis w.r.t. T2, coefficients are integral-basis
     * coordinates of den*element */
    RealLattice reduced_lattice() const;
    std::string str() const;
};

class PrimeIdeal {
    NumberField K_;
    PrimeData d_;
  public:
    PrimeIdeal() = default;
    PrimeIdeal(NumberField K, PrimeData d) : K_(std::move(K)), d_(std::move(d)) {}
    NumberField const & field() const { return K_; }
    Z const & p() const { return d_.p; }
    int e() const { return d_.e; }
    int f() const { return d_.f; }
    Z norm() const { return zpow(d_.p, d_.f); }
    FieldElement alpha() const { return K_.from_coords(d_.alpha); }
    ZVec const & tau() const { return d_.tau; }
    Ideal ideal() const { return Ideal(K_, d_.hnf, 1); }
    PrimeData const & data() const { return d_; }
    bool operator==(PrimeIdeal const & o) const { return d_.p == o.d_.p && d_.hnf == o.d_.hnf; }
    bool operator!=(PrimeIdeal const & o) const { return !(*this == o); }
    bool operator<(PrimeIdeal const & o) const;
    std::string str() const;
};

using Factorization = std::vector<std::pair<PrimeIdeal, long>>;

/* primes above p with their ramification indices, cached per field */
std::vector<PrimeIdeal> primes_above(NumberField const & K, Z const & p);
/* same computation forcing the lattice splitting route (for cross-checks) */
std::vector<PrimeData> decompose_generic(FieldData const & F, Z const & p);
std::vector<PrimeData> decompose_dedekind(FieldData const & F, Z const & p);

long valuation(FieldElement const & x, PrimeIdeal const & P);
long valuation(Ideal const & I, PrimeIdeal const & P);
Factorization factor(Ideal const & I);
Factorization principal_divisor(FieldElement const & a);
Ideal from_factorization(NumberField const & K, Factorization const & f);
/* the ideal J with J^n = I */
Ideal nth_root(Ideal const & I, long n);

/* trace dual of a lattice given by rational rows */
QMatrix trace_dual(FieldData const & F, QMatrix const & rows);

}

#endif
