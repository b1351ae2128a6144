#ifndef NFCOH_NUMBER_FIELD_HPP
#define NFCOH_NUMBER_FIELD_HPP

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "nfcoh/arith.hpp"
#include "nfcoh/matrix.hpp"
#include "nfcoh/poly.hpp"

namespace nfc {

using cld = std::complex<long double>;

/* what the prime ideal cache keeps; no back pointer to the field */
struct PrimeData {
    Z p;
    int e = 0, f = 0;
    ZMatrix hnf;     // Z-basis rows in integral-basis coordinates
    ZVec alpha;      // p and alpha generate
    ZVec tau;        // tau * P subset of pO, tau not in pO
};

struct FieldData {
    QPoly f;          // monic, integral, irreducible
    size_t m = 0;
    QMatrix basis;    // row j: omega_j in powers of theta
    QMatrix basis_inv;
    std::vector<ZMatrix> mult;   // mult[i](j, k): coefficient of omega_k in omega_i*omega_j
    ZMatrix trace;               // Tr(omega_i omega_j)
    Z disc, poly_disc, index;
    int r1 = 0, r2 = 0;
    std::vector<cld> roots;      // r1 real ones, then one of each complex pair
    /* embedding of omega_j: real coordinates, sqrt2*Re and sqrt2*Im for
     * complex places, so that the squared norm is T2 */
    std::vector<std::vector<long double>> basis_emb;
    std::vector<std::vector<cld>> basis_cemb;   // omega_j at each root

    mutable std::mutex mu;
    mutable std::map<Z, std::vector<PrimeData>> primes;
    /* class group, units and torsion, filled in by class_group.cpp */
    mutable std::mutex cache_mu;
    mutable std::shared_ptr<const void> class_cache, unit_cache, torsion_cache;
};

class FieldElement;

class NumberField {
    std::shared_ptr<const FieldData> d_;
  public:
    NumberField() = default;
    explicit NumberField(std::shared_ptr<const FieldData> d) : d_(std::move(d)) {}
    FieldData const & data() const { return *d_; }
    std::shared_ptr<const FieldData> const & ptr() const { return d_; }
    bool valid() const { return (bool) d_; }
    bool operator==(NumberField const & o) const { return d_ == o.d_; }
    bool operator!=(NumberField const & o) const { return d_ != o.d_; }

    size_t degree() const { return d_->m; }
    QPoly const & poly() const { return d_->f; }
    Z const & discriminant() const { return d_->disc; }
    std::pair<int, int> signature() const { return {d_->r1, d_->r2}; }
    int unit_rank() const { return d_->r1 + d_->r2 - 1; }

    FieldElement gen() const;
    FieldElement one() const;
    FieldElement zero() const;
    FieldElement from_int(Z const & a) const;
    FieldElement omega(size_t j) const;
    std::vector<FieldElement> integral_basis() const;
    /* element with the given integral-basis coordinates */
    FieldElement from_coords(QVec const & c) const;
    FieldElement from_coords(ZVec const & c) const;
    FieldElement from_power(QVec const & c) const;
    FieldElement from_poly(QPoly const & g) const;

    /* product of integral-basis coordinate vectors */
    ZVec mul_coords(ZVec const & a, ZVec const & b) const;
    double minkowski_bound() const;
};

/* reads an element given as a polynomial in x (power basis) or a list of
 * integral-basis coordinates */
class FieldElement {
    std::shared_ptr<const FieldData> F_;
    ZVec num_;   // power basis numerators
    Z den_ = 1;
    void normalize();
  public:
    FieldElement() = default;
    FieldElement(std::shared_ptr<const FieldData> F, ZVec num, Z den);
    NumberField field() const { return NumberField(F_); }
    FieldData const & fd() const { return *F_; }
    ZVec const & num() const { return num_; }
    Z const & den() const { return den_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    bool is_integral() const;
    QVec power_coords() const;
    QVec coords() const;         // integral basis
    ZVec int_coords() const;     // throws unless integral
    QPoly as_poly() const;

    FieldElement operator+(FieldElement const & o) const;
    FieldElement operator-(FieldElement const & o) const;
    FieldElement operator-() const;
    FieldElement operator*(FieldElement const & o) const;
    FieldElement operator*(Q const & s) const;
    FieldElement operator/(FieldElement const & o) const;
    FieldElement inverse() const;
    FieldElement pow(long e) const;
    bool operator==(FieldElement const & o) const;
    bool operator!=(FieldElement const & o) const { return !(*this == o); }

    Q norm() const;
    Q trace() const;
    QMatrix mult_matrix() const;   // on the power basis, row convention
    QPoly charpoly() const;
    QPoly minpoly() const;

    std::vector<cld> embeddings() const;
    long double t2() const;
    std::vector<long double> log_embeddings() const;
    std::string str() const;
};

NumberField make_field(QPoly const & f);
/* start the maximal order computation from the order spanned by the rows
 * of order_basis (power coordinates); caller asserts f is irreducible */
NumberField make_field_from_order(QPoly const & f, QMatrix const & order_basis,
                                  std::vector<Z> const & bad_primes, bool check_irreducible);
NumberField make_field(QPoly const & f, QMatrix const & user_basis);

/* integral basis coordinates of a product table, mod p */
struct FpAlgebra {
    uint64_t p;
    size_t m;
    std::vector<uint64_t> T;   // T[(i*m + j)*m + k]
    FpAlgebra(std::vector<ZMatrix> const & mult, uint64_t p);
    std::vector<uint64_t> mul(std::vector<uint64_t> const & a, std::vector<uint64_t> const & b) const;
    std::vector<uint64_t> pow(std::vector<uint64_t> const & a, Z const & e) const;
    std::vector<uint64_t> one() const;
};

/* element parsing shared by the CLI and JSON readers */
FieldElement parse_element(NumberField const & K, std::string const & s);

}

#endif
