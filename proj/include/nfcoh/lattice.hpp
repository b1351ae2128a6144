#ifndef NFCOH_LATTICE_HPP
#define NFCOH_LATTICE_HPP

#include <functional>
#include <vector>
#include "nfcoh/matrix.hpp"

namespace nfc {

/* a lattice in R^k given by real embedding vectors, together with the
 * exact integer coordinates each vector stands for */
struct RealLattice {
    std::vector<ZVec> coeffs;
    std::vector<std::vector<long double>> emb;
};

/* in-place LLL with respect to the euclidean norm of emb */
void lll(RealLattice & L, long double delta = 0.99L);

/* calls cb(x, q) for every nonzero integer x (up to sign) with
 * |sum x_i emb_i|^2 <= bound; stops when cb returns false or max_nodes
 * enumeration nodes were visited.  Returns false if cut short. */
bool enumerate(RealLattice const & L, long double bound,
               std::function<bool(std::vector<long> const &, long double)> const & cb,
               size_t max_nodes = 50'000'000);

ZVec combine(RealLattice const & L, std::vector<long> const & x);

}

#endif
