#ifndef NFCOH_COHOMOLOGY_HPP
#define NFCOH_COHOMOLOGY_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nfcoh/cyclic_extension.hpp"

namespace nfc {

/* the complex K* -> K* + Div K -> Div K with
 * d0(a) = (a^-n, div a), d1(a, A) = div a + n A */
struct Ext1Class {
    FieldElement a;
    Ideal ideal;
};
Ext1Class ext_d0(FieldElement const & b, long n);
Ideal ext_d1(Ext1Class const & c, long n);
bool in_z1(Ext1Class const & c, long n);

/* finite abelian group by invariants (each > 1, dividing the next) */
struct AbGroup {
    std::vector<Z> invariants;
    Z order() const;
};

/* Z1/B1 presented by unit generators (u_j, (1)) of order o_j and class
 * generators (a_i, A_i) with g_i (a_i, A_i) = (u_i, (1)) mod B1 */
struct Ext1Group {
    NumberField K;
    long n = 1;
    UnitsModN units;
    std::vector<Z> cl_orders;          // g_i
    std::vector<size_t> cl_comp;       // A_i has class (c/g_i) e_comp in Cl K
    std::vector<Ext1Class> cl_gens;    // (a_i, A_i)
    std::vector<ZVec> cl_rel;          // unit coordinates of u_i
    AbGroup structure;

    size_t nunits() const { return units.orders.size(); }
    size_t ngens() const { return nunits() + cl_gens.size(); }
    Z order() const;
    Ext1Class generator(size_t k) const;
    /* canonical coordinates: unit part mod o_j, class part in [0, g_i) */
    ZVec reduce(ZVec v) const;
    ZVec coordinates(Ext1Class const & c) const;
    ZMatrix relations() const;
    /* element with the given coordinates */
    Ext1Class element(ZVec const & v) const;
};

std::shared_ptr<const Ext1Group> ext1_group(NumberField const & K, long n);
ZVec ext1_reduce(Ext1Class const & c, long n);

/* Ext^i(Z/n, G_m) for i = 0..3 and H^i(X, Z/n) as its dual */
AbGroup ext_group(NumberField const & K, long n, int i);
void check_scope(NumberField const & K, long n);
AbGroup h_group(NumberField const & K, long n, int i);

/* character of Cl K with values in Z/n, realized by an unramified cyclic
 * extension of degree d | n through chi = (n/d) Art */
struct H1Class {
    NumberField K;
    long n = 1;
    std::vector<Z> chi;   // values on the class group generators
    std::shared_ptr<const CyclicExtension> ext;

    Z value(Ideal const & I) const;
    bool is_zero() const;
};
H1Class h1_from_extension(CyclicExtension const & E, long n);
H1Class h1_zero(NumberField const & K, long n);
/* x + y; the extension realizing the sum must be supplied if it is needed
 * later, it is checked against the character */
H1Class h1_add(H1Class const & x, H1Class const & y,
               std::shared_ptr<const CyclicExtension> ext = nullptr);

/* functional on Z1/B1, a value table on the Ext1Group generators */
struct H2Class {
    std::shared_ptr<const Ext1Group> G;
    std::vector<Z> values;
    /* audit trail: for each generator, the witnesses used */
    std::vector<std::map<std::string, std::string>> witnesses;

    Z eval(Ext1Class const & c) const;
    bool valid() const;
    bool is_zero() const;
};
H2Class h2_from_values(std::shared_ptr<const Ext1Group> G, std::vector<Z> values);

/* functional on mu_n(K), its value on the chosen generator */
struct H3Class {
    long n = 1, m = 1;   // m = |mu_n(K)|
    Z value;
    std::map<std::string, std::string> witnesses;
};

/* <x u y, c> by the splitting pipeline; c must lie in Z1 */
Z cup_11_at(H1Class const & x, H1Class const & y, Ext1Class const & c, Rng & rng,
            std::map<std::string, std::string> * audit = nullptr);
H2Class cup_11(H1Class const & x, H1Class const & y, Rng & rng);
/* (a, A) with a = b^-n, A O_L = div b and sigma(b)/b = zeta^(n/d) */
Ext1Class cap_witness(H1Class const & x, Rng & rng, std::map<std::string, std::string> * audit = nullptr);
H3Class cup_12(H1Class const & x, H2Class const & y, Rng & rng);
/* (v^-1, A), n A = div v, for Kummer extensions */
Ext1Class kummer_cap_witness(CyclicExtension const & E);

Z bockstein_at(H1Class const & x, Ext1Class const & c);
H2Class bockstein(H1Class const & x);

/* kappa = n(d+1)/2 * n/d mod n */
Z cup_coefficient(long n, long d);

}

#endif
