#include "nfcoh/kim.hpp"
#include "nfcoh/errors.hpp"
#include "nfcoh/json_io.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <fstream>
#include <thread>

namespace nfc {

const char * const nfcoh_version = "0.1.0";

KimResult kim_invariant(KimJob const & job)
{
    auto t0 = std::chrono::steady_clock::now();
    NumberField const & K = job.K;
    long n = job.n;
    check_scope(K, n);
    if (roots_of_unity(K, n).order != n)
        throw error(Err::RootOfUnityMissing, "the field does not contain the " + std::to_string(n) + "-th roots of unity");
    if (job.v.is_zero()) throw error(Err::InvalidArgument, "v must be nonzero");
    KimResult r;
    try {
        r.ideal = nth_root(Ideal::principal(job.v).inverse(), n);
    } catch (error const & e) {
        if (e.code() == Err::NotAnNthPower) throw error(Err::NotDivisibleByN, "div(v) is not divisible by n");
        throw;
    }
    if (ext_d1({job.v, r.ideal}, n) != Ideal::unit(K)) throw error(Err::Internal, "n A != -div v");
    CyclicExtension E = build_kummer(K, n, job.v);
    if (!E.unramified) throw error(Err::RamifiedExtension, "K(v^(1/n)) is ramified: " + E.note);
    r.d = E.d;
    r.artin_value = artin_symbol(E, r.ideal);
    r.vanishes = r.artin_value == 0;

    auto CK = class_group(K);
    ZVec cls = CK->dlog(r.ideal);
    r.norm_image_member = norm_image_subgroup(E).contains(cls);
    if (job.exhaustive) r.exhaustive_member = norm_image_exhaustive(E).count(cls) > 0;

    Rng rng(job.seed);
    H1Class x = h1_from_extension(E, n);
    H3Class c = cup_12(x, bockstein(x), rng);
    r.cup_value = c.value;
    r.witnesses = c.witnesses;
    r.witnesses["kummer_root"] = E.kummer_root.str();
    r.witnesses["ideal"] = r.ideal.str();

    r.consistent = r.norm_image_member == r.vanishes && (c.value == 0) == r.vanishes &&
                   (!r.exhaustive_member || *r.exhaustive_member == r.vanishes);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

static bool squarefree(long m)
{
    for (long p = 2; p * p <= m; p++)
        if (m % (p * p) == 0) return false;
    return true;
}

bool is_fundamental_discriminant(long D)
{
    if (D == 0 || D == 1) return false;
    long r = ((D % 4) + 4) % 4;
    if (r == 1) return squarefree(std::labs(D));
    if (r != 0) return false;
    long m = D / 4, s = ((m % 4) + 4) % 4;
    return (s == 2 || s == 3) && squarefree(std::labs(m));
}

std::string quadratic_poly(long D)
{
    std::vector<Q> c;
    if (((D % 4) + 4) % 4 == 1) c = {Q((1 - D) / 4), Q(-1), Q(1)};
    else c = {Q(-D / 4), Q(0), Q(1)};
    return poly_str(QPoly(c), 'x');
}

std::vector<ScanJob> scan_jobs(ScanConfig const & cfg)
{
    long lo = cfg.disc_lo, hi = cfg.disc_hi;
    if (lo > hi) std::swap(lo, hi);
    /* a nonnegative range is read as |disc| */
    if (lo >= 0) {
        long a = -hi, b = -lo;
        lo = a;
        hi = b;
    }
    std::vector<ScanJob> jobs;
    for (long D = std::min(hi, -1L); D >= lo; D--) {
        if (!is_fundamental_discriminant(D)) continue;
        std::string poly = quadratic_poly(D);
        NumberField K = make_field(parse_poly(poly));
        if (roots_of_unity(K, cfg.n).order != cfg.n) continue;
        /* representatives of U/U^n */
        std::vector<FieldElement> units{K.one()};
        auto U = units_mod_nth_powers(K, cfg.n);
        for (size_t g = 0; g < U.gens.size(); g++) {
            std::vector<FieldElement> next;
            for (auto const & u : units)
                for (long e = 0; e < U.orders[g].get_si(); e++) next.push_back(u * U.gens[g].pow(e));
            units = next;
        }
        for (long m = 1; m <= -D; m++) {
            if ((-D) % m) continue;
            for (auto const & u : units) {
                FieldElement v = u * Q(m);
                if (v.is_one()) continue;
                jobs.push_back({poly, D, cfg.n, v.as_poly().is_zero() ? "0" : poly_str(v.as_poly(), 'x')});
            }
        }
    }
    return jobs;
}

std::string job_key(ScanJob const & j, uint64_t seed)
{
    std::string s = j.poly + "|" + std::to_string(j.n) + "|" + j.v + "|" + std::to_string(seed) + "|" + nfcoh_version;
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long) h);
    return buf;
}

static uint64_t job_seed(std::string const & key, uint64_t seed)
{
    return std::stoull(key, nullptr, 16) ^ (seed * 0x9e3779b97f4a7c15ULL);
}

/* the record, or null when the job is not admissible */
static json run_job(ScanJob const & j, std::string const & key, ScanConfig const & cfg)
{
    json rec;
    rec["key"] = key;
    rec["disc"] = std::to_string(j.disc);
    rec["poly"] = j.poly;
    rec["n"] = j.n;
    rec["v"] = j.v;
    try {
        KimJob job;
        job.K = make_field(parse_poly(j.poly));
        job.n = j.n;
        job.v = parse_element(job.K, j.v);
        job.seed = job_seed(key, cfg.seed);
        job.exhaustive = cfg.exhaustive;
        KimResult r = kim_invariant(job);
        rec["status"] = "ok";
        json cg = json::array();
        for (auto const & c : class_group(job.K)->cyc) cg.push_back(to_str(c));
        rec["class_group"] = cg;
        json rj = to_json(r);
        for (auto const & [k, v] : rj.items()) rec[k] = v;
    } catch (error const & e) {
        if (e.code() == Err::RamifiedExtension || e.code() == Err::NotDivisibleByN) return nullptr;
        rec["status"] = "error";
        rec["error"] = err_name(e.code());
        rec["message"] = e.what();
    } catch (std::exception const & e) {
        rec["status"] = "error";
        rec["error"] = "Internal";
        rec["message"] = e.what();
    }
    return rec;
}

void scan(ScanConfig const & cfg, std::function<void(std::string const &)> const & emit)
{
    std::vector<ScanJob> jobs = scan_jobs(cfg);
    std::vector<std::string> keys;
    for (auto const & j : jobs) keys.push_back(job_key(j, cfg.seed));

    std::map<std::string, json> cache;
    if (!cfg.cache_path.empty()) {
        std::ifstream in(cfg.cache_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            try {
                json c = json::parse(line);
                cache[c.at("key").get<std::string>()] = c.at("record");
            } catch (...) {
                /* a truncated last line from an interrupted run */
            }
        }
    }
    std::ofstream out;
    if (!cfg.cache_path.empty()) out.open(cfg.cache_path, std::ios::app);

    size_t N = jobs.size();
    std::vector<std::optional<json>> results(N);
    for (size_t i = 0; i < N; i++) {
        auto it = cache.find(keys[i]);
        if (it != cache.end()) results[i] = it->second;
    }
    std::vector<bool> fresh(N, false);
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<size_t> next{0};
    unsigned nw = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
    auto worker = [&] {
        for (;;) {
            size_t i = next++;
            if (i >= N) return;
            {
                std::lock_guard<std::mutex> l(mu);
                if (results[i]) continue;
            }
            json r = run_job(jobs[i], keys[i], cfg);
            std::lock_guard<std::mutex> l(mu);
            results[i] = r;
            fresh[i] = true;
            cv.notify_all();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<size_t>(nw, N); t++) pool.emplace_back(worker);
    for (size_t i = 0; i < N; i++) {
        json r;
        bool is_new;
        {
            std::unique_lock<std::mutex> l(mu);
            cv.wait(l, [&] { return results[i].has_value(); });
            r = *results[i];
            is_new = fresh[i];
        }
        if (is_new && out) {
            json c{{"key", keys[i]}, {"record", r}};
            out << c.dump() << "\n";
            out.flush();
        }
        if (!r.is_null()) emit(r.dump());
    }
    for (auto & t : pool) t.join();
}

}
