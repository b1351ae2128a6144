#ifndef NFCOH_CYCLIC_EXTENSION_HPP
#define NFCOH_CYCLIC_EXTENSION_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nfcoh/class_group.hpp"

namespace nfc {

/* L/K cyclic of degree d with a fixed generator sigma; L is an absolute
 * field and K sits inside it through embed */
struct CyclicExtension {
    NumberField K, L;
    long d = 1;
    ZMatrix embed;                  // row j: omega^K_j in O_L coordinates
    std::vector<ZMatrix> sigma_pow; // sigma_pow[k] row j: sigma^k(omega^L_j)
    bool unramified = true;
    std::string note;               // why unramified is false, if it is

    /* Kummer data, n = 0 for explicitly given extensions */
    long n = 0;
    FieldElement kummer_v;          // in K
    FieldElement kummer_root;       // in L, root^n = v, sigma(root) = zeta^(n/d) root
    FieldElement zeta;              // generator of mu_n(K)

    mutable std::shared_ptr<const ZMatrix> sigma_cl;   // sigma on Cl L, lazily

    bool trivial() const { return d == 1; }
    FieldElement to_L(FieldElement const & a) const;
    std::optional<FieldElement> to_K(FieldElement const & x) const;
    FieldElement sigma(FieldElement const & x, long k = 1) const;
    FieldElement sigma_image() const;     // sigma of the generator of L
    FieldElement embedding_image() const; // image of the generator of K
    Ideal sigma(Ideal const & I, long k = 1) const;
    Ideal extend(Ideal const & I) const;
    /* the ideal a of K with a O_L = I */
    Ideal descend(Ideal const & I) const;
    FieldElement norm(FieldElement const & x) const;
    Ideal norm(Ideal const & I) const;
};

/* L = K(v^(1/n)); needs mu_n in K */
CyclicExtension build_kummer(NumberField const & K, long n, FieldElement const & v);
/* L with sigma(theta_L) = sigma_image; K and its embedding may be left
 * out, K is then the fixed field of sigma */
CyclicExtension make_cyclic(NumberField const & L, FieldElement const & sigma_image,
                            std::optional<NumberField> K = std::nullopt,
                            std::optional<FieldElement> embedding = std::nullopt);

/* K over itself */
CyclicExtension trivial_extension(NumberField const & K);
/* the same extension with generator sigma^k, k prime to d */
CyclicExtension with_generator(CyclicExtension const & E, long k);

/* images of the generator of K under all embeddings K -> L */
std::vector<FieldElement> embeddings_into(NumberField const & K, NumberField const & L);

long frobenius(CyclicExtension const & E, PrimeIdeal const & P);
/* Art(a) in Z/d */
long artin_symbol(CyclicExtension const & E, Ideal const & a);

FieldElement hilbert90_element(CyclicExtension const & E, FieldElement const & u, Rng & rng);
Ideal hilbert90_ideal(CyclicExtension const & E, Ideal const & J);
/* M = b - sigma(b) + div(a), returned as (b, a) */
std::pair<Ideal, FieldElement> furtwangler_split(CyclicExtension const & E, Ideal const & M, Rng & rng);
FieldElement solve_norm_unit(CyclicExtension const & E, FieldElement const & u, Rng & rng);

/* subgroup of a finite abelian group given by its invariants */
struct Subgroup {
    std::vector<Z> cyc;
    ZMatrix gens;   // HNF rows, together with diag(cyc)
    bool contains(ZVec const & x) const;
    Z order() const;
};
Subgroup subgroup_of(std::vector<Z> const & cyc, std::vector<ZVec> const & gens);

/* N(Cl L) inside Cl K, from the generators of Cl L */
Subgroup norm_image_subgroup(CyclicExtension const & E);
/* the same set by pushing every class of L down */
std::set<ZVec> norm_image_exhaustive(CyclicExtension const & E);

/* sigma acting on Cl L in SNF coordinates (row convention) */
ZMatrix sigma_on_class_group(CyclicExtension const & E);

}

#endif
