#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "nfcoh/errors.hpp"
#include "nfcoh/json_io.hpp"

using namespace nfc;

namespace {

struct Opts {
    std::string poly, v = "1", x, y, range = "-500..-3", cache;
    long n = 0;
    uint64_t seed = 1;
    unsigned jobs = 0;
    bool compact = false, exhaustive = false, no_exhaustive = false;
};

bool to_terminal() { return isatty(STDERR_FILENO); }

void print(json const & j, Opts const & o)
{
    std::cout << (o.compact ? j.dump() : j.dump(2)) << "\n";
}

json read_json_arg(std::string const & s)
{
    std::string text = s;
    if (!s.empty() && s[0] == '@') {
        std::ifstream in(s.substr(1));
        if (!in) throw error(Err::ParseError, "cannot open " + s.substr(1));
        std::stringstream b;
        b << in.rdbuf();
        text = b.str();
    }
    try {
        return json::parse(text);
    } catch (json::exception const & e) {
        throw error(Err::ParseError, std::string("bad JSON: ") + e.what());
    }
}

NumberField field_of(Opts const & o)
{
    if (o.poly.empty()) throw error(Err::ParseError, "--poly is required");
    return make_field(parse_poly(o.poly));
}

long modulus(Opts const & o)
{
    if (o.n < 1) throw error(Err::ParseError, "--n must be a positive integer");
    return o.n;
}

void parse_range(std::string const & s, long & lo, long & hi)
{
    auto p = s.find("..");
    if (p == std::string::npos) throw error(Err::ParseError, "--disc-range must look like a..b");
    try {
        lo = std::stol(s.substr(0, p));
        hi = std::stol(s.substr(p + 2));
    } catch (...) {
        throw error(Err::ParseError, "--disc-range must look like a..b");
    }
}

int field_info_cmd(Opts const & o)
{
    NumberField K = field_of(o);
    json j = field_info(K);
    print(j, o);
    if (to_terminal())
        std::cerr << "degree " << K.degree() << ", discriminant " << to_str(K.discriminant()) << ", signature ("
                  << K.signature().first << "," << K.signature().second << ")\n";
    return 0;
}

int class_group_cmd(Opts const & o)
{
    NumberField K = field_of(o);
    auto C = class_group(K);
    json j = to_json(*C);
    print(j, o);
    if (to_terminal()) std::cerr << "class number " << to_str(C->order()) << "\n";
    return 0;
}

int cohomology_cmd(Opts const & o)
{
    NumberField K = field_of(o);
    long n = modulus(o);
    check_scope(K, n);
    json ext, h;
    for (int i = 0; i <= 3; i++) {
        ext[std::to_string(i)] = to_json(ext_group(K, n, i));
        h[std::to_string(i)] = to_json(h_group(K, n, i));
    }
    json j{{"poly", poly_str(K.poly(), 'x')}, {"n", n}, {"ext", ext}, {"h", h}};
    print(j, o);
    if (to_terminal()) {
        std::cerr << "H^0..H^3 orders:";
        for (int i = 0; i <= 3; i++) std::cerr << " " << to_str(h_group(K, n, i).order());
        std::cerr << "\n";
    }
    return 0;
}

int cup_cmd(Opts const & o)
{
    if (o.x.empty() || o.y.empty()) throw error(Err::ParseError, "cup needs --x and --y");
    json xs = read_json_arg(o.x), ys = read_json_arg(o.y);
    CyclicExtension Ex = extension_from_json(xs);
    long n = o.n > 0 ? o.n : (Ex.n ? Ex.n : Ex.d);
    H1Class x = h1_from_extension(Ex, n);
    Rng rng(o.seed);
    json j;
    j["x"] = to_json(Ex);
    if (ys.contains("values")) {
        std::vector<Z> vals;
        for (auto const & v : ys["values"]) vals.push_back(z_from_json(v));
        H2Class y = h2_from_values(ext1_group(Ex.K, n), vals);
        j["cup"] = to_json(cup_12(x, y, rng));
    } else {
        CyclicExtension Ey = extension_from_json(ys, Ex.K);
        H1Class y = h1_from_extension(Ey, n);
        j["y"] = to_json(Ey);
        j["cup"] = to_json(cup_11(x, y, rng));
    }
    print(j, o);
    return 0;
}

int kim_cmd(Opts const & o)
{
    KimJob job;
    job.K = field_of(o);
    job.n = modulus(o);
    job.v = parse_element(job.K, o.v);
    job.seed = o.seed;
    job.exhaustive = o.exhaustive;
    KimResult r = kim_invariant(job);
    json j{{"poly", poly_str(job.K.poly(), 'x')}, {"n", job.n}, {"v", to_json(job.v)}};
    json rj = to_json(r);
    for (auto const & [k, val] : rj.items()) j[k] = val;
    j["seconds"] = r.seconds;
    print(j, o);
    if (to_terminal())
        std::cerr << (r.vanishes ? "invariant vanishes" : "invariant does not vanish") << " (Art = " << r.artin_value
                  << " mod " << r.d << ")\n";
    return 0;
}

int scan_cmd(Opts const & o)
{
    ScanConfig cfg;
    parse_range(o.range, cfg.disc_lo, cfg.disc_hi);
    cfg.n = o.n > 0 ? o.n : 2;
    cfg.seed = o.seed;
    cfg.workers = o.jobs;
    cfg.cache_path = o.cache;
    cfg.exhaustive = !o.no_exhaustive;
    size_t count = 0, nonvan = 0;
    scan(cfg, [&](std::string const & line) {
        std::cout << line << "\n";
        count++;
        if (line.find("\"vanishes\":false") != std::string::npos) nonvan++;
    });
    std::cout.flush();
    if (to_terminal()) std::cerr << count << " jobs, " << nonvan << " non-vanishing\n";
    return 0;
}

int exit_code(Err e)
{
    switch (e) {
    case Err::ParseError:
    case Err::NonMonic:
    case Err::ReduciblePolynomial:
        return 2;
    default:
        return 1;
    }
}

}

int main(int argc, char ** argv)
{
    CLI::App app{"cohomology of rings of integers with Z/n coefficients"};
    app.require_subcommand(1);
    Opts o;
    auto common = [&](CLI::App * s, bool need_poly) {
        auto p = s->add_option("--poly", o.poly, "defining polynomial, e.g. x^2+5");
        if (need_poly) p->required();
        s->add_flag("--json", o.compact, "compact single-line JSON");
    };
    auto fi = app.add_subcommand("field-info", "degree, discriminant, signature, integral basis");
    common(fi, true);
    auto cg = app.add_subcommand("class-group", "class group in Smith normal form");
    common(cg, true);
    auto co = app.add_subcommand("cohomology", "Ext and H groups for i = 0..3");
    common(co, true);
    co->add_option("--n", o.n, "modulus")->required();
    auto cu = app.add_subcommand("cup", "cup product of two classes");
    common(cu, false);
    cu->add_option("--x", o.x, "extension as JSON (or @file)")->required();
    cu->add_option("--y", o.y, "extension JSON or {\"values\": [...]} (or @file)")->required();
    cu->add_option("--n", o.n, "modulus");
    cu->add_option("--seed", o.seed, "witness seed");
    auto ki = app.add_subcommand("kim", "vanishing of the arithmetic Chern-Simons invariant");
    common(ki, true);
    ki->add_option("--n", o.n, "modulus")->required();
    ki->add_option("--v", o.v, "Kummer element")->required();
    ki->add_option("--seed", o.seed, "witness seed");
    ki->add_flag("--exhaustive", o.exhaustive, "also enumerate the norm image class by class");
    auto sc = app.add_subcommand("scan", "Kim jobs over imaginary quadratic fields, JSON lines");
    sc->add_option("--disc-range", o.range, "discriminant range a..b");
    sc->add_option("--n", o.n, "modulus (default 2)");
    sc->add_option("--seed", o.seed, "witness seed");
    sc->add_option("--cache", o.cache, "JSON-lines cache file");
    sc->add_option("--jobs", o.jobs, "worker threads (default: all cores)");
    sc->add_flag("--no-exhaustive", o.no_exhaustive, "skip the class-by-class norm image check");
    sc->add_flag("--json", o.compact, "accepted for uniformity; output is always JSON lines");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const & e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        if (fi->parsed()) return field_info_cmd(o);
        if (cg->parsed()) return class_group_cmd(o);
        if (co->parsed()) return cohomology_cmd(o);
        if (cu->parsed()) return cup_cmd(o);
        if (ki->parsed()) return kim_cmd(o);
        if (sc->parsed()) return scan_cmd(o);
    } catch (error const & e) {
        json j{{"error", err_name(e.code())}, {"message", e.what()}};
        std::cout << j.dump() << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.code());
    } catch (std::exception const & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
