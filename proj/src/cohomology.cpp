#include "nfcoh/cohomology.hpp"
#include "nfcoh/errors.hpp"

#include <mutex>
#include <numeric>

namespace nfc {

Ext1Class ext_d0(FieldElement const & b, long n)
{
    return {b.pow(-n), Ideal::principal(b)};
}

Ideal ext_d1(Ext1Class const & c, long n)
{
    return Ideal::principal(c.a) * c.ideal.pow(n);
}

bool in_z1(Ext1Class const & c, long n)
{
    return !c.a.is_zero() && ext_d1(c, n).is_unit();
}

Z AbGroup::order() const
{
    Z r = 1;
    for (auto const & c : invariants) r *= c;
    return r;
}

static bool is_unit_elt(FieldElement const & u)
{
    return u.is_integral() && abs(u.norm()) == 1;
}

Z Ext1Group::order() const { return structure.order(); }

Ext1Class Ext1Group::generator(size_t k) const
{
    if (k < nunits()) return {units.gens[k], Ideal::unit(K)};
    return cl_gens.at(k - nunits());
}

ZVec Ext1Group::reduce(ZVec v) const
{
    size_t nu = nunits();
    for (size_t i = 0; i < cl_gens.size(); i++) {
        Z q = fdiv(v[nu + i], cl_orders[i]);
        if (q == 0) continue;
        v[nu + i] -= q * cl_orders[i];
        for (size_t j = 0; j < nu; j++) v[j] += q * cl_rel[i][j];
    }
    for (size_t j = 0; j < nu; j++) v[j] = mod(v[j], units.orders[j]);
    return v;
}

ZMatrix Ext1Group::relations() const
{
    size_t nu = nunits(), r = ngens();
    ZMatrix R(0, r);
    for (size_t j = 0; j < nu; j++) {
        ZVec row(r, Z(0));
        row[j] = units.orders[j];
        R.append_row(row);
    }
    for (size_t i = 0; i < cl_gens.size(); i++) {
        ZVec row(r, Z(0));
        for (size_t j = 0; j < nu; j++) row[j] = -cl_rel[i][j];
        row[nu + i] = cl_orders[i];
        R.append_row(row);
    }
    return R;
}

ZVec Ext1Group::coordinates(Ext1Class const & c) const
{
    if (!in_z1(c, n)) throw error(Err::NotInZ1, "-div(a) is not n times the ideal");
    auto CK = class_group(K);
    ZVec dl = CK->dlog(c.ideal);
    size_t nu = nunits();
    ZVec v(ngens(), Z(0));
    FieldElement u = c.a;
    Ideal rest = c.ideal;
    for (size_t i = 0; i < cl_gens.size(); i++) {
        size_t comp = cl_comp[i];
        Z step = CK->cyc[comp] / cl_orders[i];
        if (!mpz_divisible_p(dl[comp].get_mpz_t(), step.get_mpz_t()))
            throw error(Err::Internal, "ideal class is not n-torsion");
        Z k = mod(dl[comp] / step, cl_orders[i]);
        v[nu + i] = k;
        long kk = k.get_si();
        if (kk) {
            u = u * cl_gens[i].a.pow(-kk);
            rest = rest * cl_gens[i].ideal.pow(-kk);
        }
    }
    auto g = CK->principal_generator(rest);
    if (!g) throw error(Err::Internal, "residual ideal is not principal");
    u = u * g->pow(n);
    if (!is_unit_elt(u)) throw error(Err::Internal, "unit part is not a unit");
    auto uc = units.coordinates(u);
    for (size_t j = 0; j < nu; j++) v[j] = uc[j];
    return reduce(v);
}

Ext1Class Ext1Group::element(ZVec const & v) const
{
    Ext1Class c{K.one(), Ideal::unit(K)};
    for (size_t k = 0; k < ngens(); k++) {
        long e = v[k].get_si();
        if (!e) continue;
        Ext1Class g = generator(k);
        c.a = c.a * g.a.pow(e);
        c.ideal = c.ideal * g.ideal.pow(e);
    }
    return c;
}

static std::shared_ptr<const Ext1Group> build_ext1(NumberField const & K, long n)
{
    auto G = std::make_shared<Ext1Group>();
    G->K = K;
    G->n = n;
    G->units = units_mod_nth_powers(K, n);
    auto CK = class_group(K);
    for (size_t c = 0; c < CK->cyc.size(); c++) {
        Z g = zgcd(CK->cyc[c], Z(n));
        if (g == 1) continue;
        ZVec e(CK->cyc.size(), Z(0));
        e[c] = CK->cyc[c] / g;
        Ideal A = CK->representative(e);
        auto alpha = CK->principal_generator(A.pow(n));
        auto gamma = CK->principal_generator(A.pow(g.get_si()));
        if (!alpha || !gamma) throw error(Err::Internal, "n-torsion class does not have principal n-th power");
        FieldElement a = alpha->inverse();
        FieldElement u = a.pow(g.get_si()) * gamma->pow(n);
        if (!is_unit_elt(u)) throw error(Err::Internal, "class relation is not a unit");
        G->cl_orders.push_back(g);
        G->cl_comp.push_back(c);
        G->cl_gens.push_back({a, A});
        G->cl_rel.push_back(G->units.coordinates(u));
    }
    ZMatrix R = G->relations();
    if (R.rows()) {
        Smith S = smith(R);
        for (auto const & x : S.diag)
            if (abs(x) > 1) G->structure.invariants.push_back(abs(x));
    }
    return G;
}

std::shared_ptr<const Ext1Group> ext1_group(NumberField const & K, long n)
{
    if (n < 1) throw error(Err::InvalidArgument, "n must be positive");
    static std::mutex mu;
    static std::map<std::pair<std::shared_ptr<const FieldData>, long>, std::shared_ptr<const Ext1Group>> cache;
    std::lock_guard<std::mutex> l(mu);
    auto key = std::make_pair(K.ptr(), n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto G = build_ext1(K, n);
    cache.emplace(key, G);
    return G;
}

ZVec ext1_reduce(Ext1Class const & c, long n)
{
    return ext1_group(c.a.field(), n)->coordinates(c);
}

AbGroup ext_group(NumberField const & K, long n, int i)
{
    if (i < 0) throw error(Err::InvalidArgument, "negative degree");
    AbGroup A;
    switch (i) {
    case 0: {
        long m = roots_of_unity(K, n).order;
        if (m > 1) A.invariants.push_back(Z(m));
        break;
    }
    case 1:
        A = ext1_group(K, n)->structure;
        break;
    case 2:
        for (auto const & c : class_group(K)->cyc) {
            Z g = zgcd(c, Z(n));
            if (g > 1) A.invariants.push_back(g);
        }
        break;
    case 3:
        if (n > 1) A.invariants.push_back(Z(n));
        break;
    default:
        break;
    }
    return A;
}

void check_scope(NumberField const & K, long n)
{
    if (n % 2 == 0 && K.signature().first > 0)
        throw error(Err::ScopeViolation, "n is even and the field has real places");
}

AbGroup h_group(NumberField const & K, long n, int i)
{
    check_scope(K, n);
    if (i < 0) throw error(Err::InvalidArgument, "negative degree");
    if (i > 3) return {};
    return ext_group(K, n, 3 - i);
}

/* ---- H^1 ---- */

Z H1Class::value(Ideal const & I) const
{
    ZVec dl = class_group(K)->dlog(I);
    Z s = 0;
    for (size_t i = 0; i < chi.size(); i++) s += dl[i] * chi[i];
    return mod(s, Z(n));
}

bool H1Class::is_zero() const
{
    return std::all_of(chi.begin(), chi.end(), [](Z const & c) { return c == 0; });
}

static std::vector<Z> character_of(CyclicExtension const & E, long n)
{
    if (!E.unramified) throw error(Err::RamifiedExtension, "extension is not unramified: " + E.note);
    if (n % E.d) throw error(Err::InvalidArgument, "degree of the extension does not divide n");
    auto CK = class_group(E.K);
    std::vector<Z> chi;
    for (auto const & g : CK->gens) chi.push_back(mod(Z(n / E.d) * artin_symbol(E, g), Z(n)));
    return chi;
}

H1Class h1_from_extension(CyclicExtension const & E, long n)
{
    check_scope(E.K, n);
    H1Class x;
    x.K = E.K;
    x.n = n;
    x.chi = character_of(E, n);
    x.ext = std::make_shared<const CyclicExtension>(E);
    return x;
}

H1Class h1_zero(NumberField const & K, long n)
{
    check_scope(K, n);
    H1Class x;
    x.K = K;
    x.n = n;
    x.chi.assign(class_group(K)->cyc.size(), Z(0));
    x.ext = std::make_shared<const CyclicExtension>(trivial_extension(K));
    return x;
}

H1Class h1_add(H1Class const & x, H1Class const & y, std::shared_ptr<const CyclicExtension> ext)
{
    if (x.K != y.K || x.n != y.n) throw error(Err::InvalidArgument, "classes live over different data");
    H1Class r;
    r.K = x.K;
    r.n = x.n;
    for (size_t i = 0; i < x.chi.size(); i++) r.chi.push_back(mod(x.chi[i] + y.chi[i], Z(x.n)));
    if (ext) {
        if (character_of(*ext, x.n) != r.chi) throw error(Err::InvalidArgument, "extension does not realize the sum");
        r.ext = ext;
    } else if (r.is_zero()) {
        r.ext = std::make_shared<const CyclicExtension>(trivial_extension(x.K));
    } else if (y.is_zero()) {
        r.ext = x.ext;
    } else if (x.is_zero()) {
        r.ext = y.ext;
    }
    return r;
}

/* ---- H^2 ---- */

Z H2Class::eval(Ext1Class const & c) const
{
    ZVec v = G->coordinates(c);
    Z s = 0;
    for (size_t k = 0; k < v.size(); k++) s += v[k] * values[k];
    return mod(s, Z(G->n));
}

bool H2Class::valid() const
{
    if (values.size() != G->ngens()) return false;
    ZMatrix R = G->relations();
    for (size_t i = 0; i < R.rows(); i++) {
        Z s = 0;
        for (size_t k = 0; k < values.size(); k++) s += R(i, k) * values[k];
        if (mod(s, Z(G->n)) != 0) return false;
    }
    return true;
}

bool H2Class::is_zero() const
{
    return std::all_of(values.begin(), values.end(), [](Z const & c) { return c == 0; });
}

H2Class h2_from_values(std::shared_ptr<const Ext1Group> G, std::vector<Z> values)
{
    H2Class y;
    y.G = std::move(G);
    for (auto & v : values) v = mod(v, Z(y.G->n));
    y.values = std::move(values);
    y.witnesses.resize(y.values.size());
    if (!y.valid()) throw error(Err::InvalidArgument, "value table does not respect the relations");
    return y;
}

/* ---- cup products ---- */

Z cup_coefficient(long n, long d)
{
    Z k = Z(n) * Z(d + 1) / 2 * Z(n / d);
    return mod(k, Z(n));
}

static CyclicExtension const & ext_of(H1Class const & x)
{
    if (!x.ext) throw error(Err::InvalidArgument, "class has no realizing extension");
    return *x.ext;
}

Z cup_11_at(H1Class const & x, H1Class const & y, Ext1Class const & c, Rng & rng,
            std::map<std::string, std::string> * audit)
{
    long n = x.n;
    if (y.n != n || x.K != y.K) throw error(Err::InvalidArgument, "classes live over different data");
    if (!in_z1(c, n)) throw error(Err::NotInZ1, "-div(a) is not n times the ideal");
    CyclicExtension const & E = ext_of(x);
    long d = E.d, k = n / d;
    Ideal M0 = E.extend(c.ideal).pow(k);
    auto [bp, s] = furtwangler_split(E, M0, rng);
    FieldElement u = E.norm(s) * c.a;
    if (!is_unit_elt(u)) throw error(Err::Internal, "norm of the splitting element is off by a non-unit");
    FieldElement v = solve_norm_unit(E, u.inverse(), rng);
    FieldElement t = s * v;
    if (E.norm(t) != c.a.inverse()) throw error(Err::Internal, "N(t) != a^-1");
    Ideal J = M0 * Ideal::principal(t).inverse();
    Ideal I = hilbert90_ideal(E, J);
    if (M0 != I * E.sigma(I).inverse() * Ideal::principal(t)) throw error(Err::Internal, "splitting identity fails");
    Z val = mod(cup_coefficient(n, d) * y.value(c.ideal) + Z(k) * y.value(E.norm(I)), Z(n));
    if (audit) {
        (*audit)["b_prime"] = bp.str();
        (*audit)["s"] = s.str();
        (*audit)["v"] = v.str();
        (*audit)["t"] = t.str();
        (*audit)["I"] = I.str();
    }
    return val;
}

H2Class cup_11(H1Class const & x, H1Class const & y, Rng & rng)
{
    auto G = ext1_group(x.K, x.n);
    H2Class r;
    r.G = G;
    r.witnesses.resize(G->ngens());
    for (size_t k = 0; k < G->ngens(); k++) r.values.push_back(cup_11_at(x, y, G->generator(k), rng, &r.witnesses[k]));
    if (!r.valid()) throw error(Err::Internal, "cup product table does not respect the relations");
    return r;
}

Ext1Class cap_witness(H1Class const & x, Rng & rng, std::map<std::string, std::string> * audit)
{
    CyclicExtension const & E = ext_of(x);
    long n = x.n, d = E.d;
    RootsOfUnity mu = roots_of_unity(x.K, n);
    FieldElement xi = E.to_L(mu.gen).pow(n / d);
    FieldElement b = hilbert90_element(E, xi, rng);
    auto a = E.to_K(b.pow(-n));
    if (!a) throw error(Err::DescentFailure, "b^-n does not lie in K");
    if (E.sigma(Ideal::principal(b)) != Ideal::principal(b)) throw error(Err::DescentFailure, "div(b) is not sigma-invariant");
    Ideal A = E.descend(Ideal::principal(b));
    /* move to a small ideal so that the witness stays cheap to factor */
    FieldElement w;
    Ideal As = reduce_ideal(A, &w);
    if (As != A * w) throw error(Err::Internal, "ideal reduction is inconsistent");
    b = b * E.to_L(w);
    A = As;
    a = *a * w.pow(-n);
    Ext1Class c{*a, A};
    if (!in_z1(c, n)) throw error(Err::Internal, "witness is not in Z1");
    if (audit) {
        (*audit)["b"] = b.str();
        (*audit)["a"] = a->str();
        (*audit)["ideal"] = A.str();
    }
    return c;
}

Ext1Class kummer_cap_witness(CyclicExtension const & E)
{
    if (!E.n) throw error(Err::InvalidArgument, "not a Kummer extension");
    Ideal A = nth_root(Ideal::principal(E.kummer_v), E.n);
    return {E.kummer_v.inverse(), A};
}

H3Class cup_12(H1Class const & x, H2Class const & y, Rng & rng)
{
    if (y.G->K != x.K || y.G->n != x.n) throw error(Err::InvalidArgument, "classes live over different data");
    H3Class r;
    r.n = x.n;
    r.m = roots_of_unity(x.K, x.n).order;
    Ext1Class c = cap_witness(x, rng, &r.witnesses);
    r.value = y.eval(c);
    return r;
}

Z bockstein_at(H1Class const & x, Ext1Class const & c)
{
    if (!in_z1(c, x.n)) throw error(Err::NotInZ1, "-div(a) is not n times the ideal");
    CyclicExtension const & E = ext_of(x);
    return mod(Z(x.n / E.d) * artin_symbol(E, c.ideal), Z(x.n));
}

H2Class bockstein(H1Class const & x)
{
    auto G = ext1_group(x.K, x.n);
    H2Class r;
    r.G = G;
    r.witnesses.resize(G->ngens());
    for (size_t k = 0; k < G->ngens(); k++) r.values.push_back(bockstein_at(x, G->generator(k)));
    if (!r.valid()) throw error(Err::Internal, "Bockstein table does not respect the relations");
    return r;
}

}
