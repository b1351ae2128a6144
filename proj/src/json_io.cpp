#include "nfcoh/json_io.hpp"
#include "nfcoh/errors.hpp"

namespace nfc {

json to_json(Z const & a) { return to_str(a); }
json to_json(Q const & a) { return to_str(a); }

json to_json(FieldElement const & x)
{
    json j = json::array();
    for (auto const & c : x.coords()) j.push_back(to_str(c));
    return j;
}

json to_json(Ideal const & I)
{
    json rows = json::array();
    for (size_t i = 0; i < I.hnf().rows(); i++) {
        json r = json::array();
        for (size_t k = 0; k < I.hnf().cols(); k++) r.push_back(to_str(I.hnf()(i, k)));
        rows.push_back(r);
    }
    return {{"hnf", rows}, {"den", to_str(I.den())}, {"norm", to_str(I.norm())}};
}

json to_json(ClassGroup const & C)
{
    json snf = json::array(), gens = json::array();
    for (auto const & c : C.cyc) snf.push_back(to_str(c));
    for (auto const & g : C.gens) gens.push_back(to_json(g));
    return {{"snf", snf}, {"generators", gens}, {"order", to_str(C.order())}};
}

json to_json(AbGroup const & A)
{
    json inv = json::array();
    for (auto const & c : A.invariants) inv.push_back(to_str(c));
    return {{"invariants", inv}, {"order", to_str(A.order())}};
}

json to_json(CyclicExtension const & E)
{
    json j;
    j["base_poly"] = poly_str(E.K.poly(), 'x');
    j["top_poly"] = poly_str(E.L.poly(), 'x');
    j["degree"] = E.d;
    j["sigma_image"] = to_json(E.sigma_image());
    j["embedding"] = to_json(E.embedding_image());
    j["top_discriminant"] = to_str(E.L.discriminant());
    j["unramified"] = E.unramified;
    if (!E.unramified) j["reason"] = E.note;
    if (E.n) {
        j["n"] = E.n;
        j["v"] = to_json(E.kummer_v);
        j["root"] = to_json(E.kummer_root);
    }
    return j;
}

json to_json(Ext1Class const & c)
{
    return {{"a", to_json(c.a)}, {"ideal", to_json(c.ideal)}};
}

json to_json(H2Class const & y)
{
    json gens = json::array(), vals = json::array(), wit = json::array();
    for (size_t k = 0; k < y.G->ngens(); k++) gens.push_back(to_json(y.G->generator(k)));
    for (auto const & v : y.values) vals.push_back(to_str(v));
    for (auto const & w : y.witnesses) wit.push_back(json(w));
    return {{"degree", 2}, {"n", y.G->n}, {"generators", gens}, {"values", vals}, {"witnesses", wit}};
}

json to_json(H3Class const & y)
{
    return {{"degree", 3}, {"n", y.n}, {"roots_of_unity_order", y.m}, {"value", to_str(y.value)},
            {"witnesses", json(y.witnesses)}};
}

json to_json(KimResult const & r)
{
    json j;
    j["vanishes"] = r.vanishes;
    j["artin_value"] = std::to_string(r.artin_value);
    j["artin_value_note"] = "up to normalization";
    j["degree"] = r.d;
    j["ideal"] = to_json(r.ideal);
    j["norm_image_member"] = r.norm_image_member;
    if (r.exhaustive_member) j["exhaustive_member"] = *r.exhaustive_member;
    j["cup_value"] = to_str(r.cup_value);
    j["consistent"] = r.consistent;
    j["witnesses"] = json(r.witnesses);
    return j;
}

json field_info(NumberField const & K)
{
    json j;
    j["poly"] = poly_str(K.poly(), 'x');
    j["degree"] = K.degree();
    j["discriminant"] = to_str(K.discriminant());
    j["signature"] = {K.signature().first, K.signature().second};
    j["index"] = to_str(K.data().index);
    json basis = json::array();
    for (size_t i = 0; i < K.degree(); i++) {
        json r = json::array();
        for (auto const & c : K.data().basis.row(i)) r.push_back(to_str(c));
        basis.push_back(r);
    }
    j["integral_basis"] = basis;
    auto mu = torsion_units(K);
    j["roots_of_unity"] = {{"order", mu.order}, {"generator", to_json(mu.gen)}};
    return j;
}

Z z_from_json(json const & j)
{
    if (j.is_number_integer()) return Z(j.get<long>());
    if (j.is_string()) {
        Q q = parse_rational(j.get<std::string>());
        if (q.get_den() != 1) throw error(Err::ParseError, "expected an integer");
        return q.get_num();
    }
    throw error(Err::ParseError, "expected an integer");
}

FieldElement element_from_json(NumberField const & K, json const & j)
{
    if (j.is_string()) return parse_element(K, j.get<std::string>());
    if (j.is_number_integer()) return K.from_int(j.get<long>());
    if (j.is_array()) {
        QVec c;
        for (auto const & x : j) {
            if (x.is_number_integer()) c.push_back(Q(x.get<long>()));
            else if (x.is_string()) c.push_back(parse_rational(x.get<std::string>()));
            else throw error(Err::ParseError, "bad coordinate");
        }
        if (c.size() != K.degree()) throw error(Err::ParseError, "coordinate list has wrong length");
        return K.from_coords(c);
    }
    throw error(Err::ParseError, "cannot read a field element");
}

Ideal ideal_from_json(NumberField const & K, json const & j)
{
    if (!j.is_object()) throw error(Err::ParseError, "ideal must be an object");
    if (j.contains("two_gens")) {
        auto const & g = j["two_gens"];
        if (!g.is_array() || g.size() != 2) throw error(Err::ParseError, "two_gens needs two entries");
        return Ideal::generated(K, {K.from_int(z_from_json(g[0])), element_from_json(K, g[1])});
    }
    if (j.contains("hnf")) {
        QMatrix M(0, K.degree());
        Z den = j.contains("den") ? z_from_json(j["den"]) : Z(1);
        for (auto const & r : j["hnf"]) {
            QVec row;
            for (auto const & x : r) row.push_back(Q(z_from_json(x), den));
            if (row.size() != K.degree()) throw error(Err::ParseError, "hnf row has wrong length");
            M.append_row(row);
        }
        return Ideal::from_rows(K, M);
    }
    throw error(Err::ParseError, "ideal needs two_gens or hnf");
}

static CyclicExtension read_extension(json const & j, std::optional<NumberField> base)
{
    if (!j.is_object()) throw error(Err::ParseError, "extension description must be an object");
    if (j.contains("top_poly")) {
        NumberField L = make_field(parse_poly(j["top_poly"].get<std::string>()));
        if (!j.contains("sigma_image")) throw error(Err::ParseError, "sigma_image missing");
        FieldElement s = element_from_json(L, j["sigma_image"]);
        std::optional<NumberField> K;
        std::optional<FieldElement> e;
        if (base) K = base;
        else if (j.contains("base_poly")) K = make_field(parse_poly(j["base_poly"].get<std::string>()));
        if (j.contains("embedding")) {
            if (!K) throw error(Err::ParseError, "embedding needs base_poly");
            e = element_from_json(L, j["embedding"]);
        }
        return make_cyclic(L, s, K, e);
    }
    if (j.contains("base_poly") && j.contains("n") && j.contains("v")) {
        NumberField K = base ? *base : make_field(parse_poly(j["base_poly"].get<std::string>()));
        long n = j["n"].is_string() ? std::stol(j["n"].get<std::string>()) : j["n"].get<long>();
        return build_kummer(K, n, element_from_json(K, j["v"]));
    }
    throw error(Err::ParseError, "extension description needs base_poly/n/v or top_poly/sigma_image");
}

CyclicExtension extension_from_json(json const & j) { return read_extension(j, std::nullopt); }

CyclicExtension extension_from_json(json const & j, NumberField const & base)
{
    if (j.contains("base_poly") && !(parse_poly(j["base_poly"].get<std::string>()) == base.poly()))
        throw error(Err::InvalidArgument, "extension has a different base field");
    return read_extension(j, base);
}

}
