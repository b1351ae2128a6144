#ifndef NFCOH_CLASS_GROUP_HPP
#define NFCOH_CLASS_GROUP_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "nfcoh/ideal.hpp"

namespace nfc {

struct RootsOfUnity {
    long order = 1;
    FieldElement gen;
};

/* the full torsion subgroup of K* */
RootsOfUnity torsion_units(NumberField const & K);
/* mu_n(K) */
RootsOfUnity roots_of_unity(NumberField const & K, long n);
/* k in [0, order) with gen^k = x, or -1 */
long root_log(RootsOfUnity const & mu, FieldElement const & x);

/* nonzero elements of an ideal with T2 <= bound (one of each +-) */
void short_elements(Ideal const & I, long double bound,
                    std::function<bool(FieldElement const &, long double)> const & cb,
                    size_t max_nodes = 20'000'000);

struct ClassGroupConfig {
    double max_bound = 2.0e5;    // Minkowski bound beyond which we refuse
    size_t max_fb = 4000;
    size_t streak = 0;           // 0: automatic
    uint64_t seed = 0x5eed;
};

class ClassGroup {
  public:
    NumberField K;
    std::vector<Z> cyc;                 // invariants > 1, each dividing the next
    std::vector<Ideal> gens;            // class of gens[i] is the i-th unit vector
    std::vector<PrimeIdeal> fb;
    ZMatrix rel;                        // relation rows over fb
    std::vector<FieldElement> rel_elt;  // div(rel_elt[i]) = rel row i

    Z order() const;
    /* I = div(g) + sum e_j fb_j */
    void decompose(Ideal const & I, FieldElement & g, ZVec & e) const;
    ZVec dlog_fb(ZVec const & e) const;
    ZVec dlog(Ideal const & I) const;
    bool is_trivial_class(Ideal const & I) const;
    /* generator of I, or nothing if the class is not trivial */
    std::optional<FieldElement> principal_generator(Ideal const & I) const;
    /* an integral ideal with small norm in the given class */
    Ideal representative(ZVec const & coords) const;
    std::vector<std::vector<Z>> all_elements() const;

    /* internals used by the builder */
    ZMatrix H, HU;      // HNF of rel and the transform H = HU*rel
    Smith snf;
    std::vector<size_t> active;
    std::map<PrimeIdeal, size_t> fb_index;
    mutable std::mutex mu;
    mutable std::map<PrimeIdeal, std::pair<FieldElement, ZVec>> smooth_cache;
    bool fb_smooth(FieldElement const & x, ZVec & v) const;
    std::vector<Z> fb_rational;
};

std::shared_ptr<const ClassGroup> class_group(NumberField const & K, ClassGroupConfig const & cfg = {});
/* generator g with div(g) = I, nothing if I is not principal */
std::optional<FieldElement> is_principal(Ideal const & I);
/* small integral ideal x*I in the class of I; x returned through mult */
Ideal reduce_ideal(Ideal const & I, FieldElement * mult = nullptr);

struct UnitGroup {
    NumberField K;
    RootsOfUnity torsion;
    std::vector<FieldElement> fundamental;
    std::vector<std::vector<long double>> logs;   // r coordinates each
    int rank() const { return (int) fundamental.size(); }
    /* u = torsion.gen^k * prod fundamental_i^{e_i}; returns (k, e) */
    std::pair<long, std::vector<Z>> coordinates(FieldElement const & u) const;
};

std::shared_ptr<const UnitGroup> unit_group(NumberField const & K);

/* U/U^n: orders and generating units, with coordinates */
struct UnitsModN {
    long n = 1;
    std::vector<Z> orders;
    std::vector<FieldElement> gens;
    std::shared_ptr<const UnitGroup> U;
    Z size() const;
    std::vector<Z> coordinates(FieldElement const & u) const;
};
UnitsModN units_mod_nth_powers(NumberField const & K, long n);

/* y with y^n = x, if any */
std::optional<FieldElement> nth_root(FieldElement const & x, long n);

}

#endif
