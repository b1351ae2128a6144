#ifndef NFCOH_KIM_HPP
#define NFCOH_KIM_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nfcoh/cohomology.hpp"

namespace nfc {

struct KimJob {
    NumberField K;
    long n = 2;
    FieldElement v;
    uint64_t seed = 1;
    bool exhaustive = false;   // also enumerate N(Cl L) class by class
};

struct KimResult {
    bool vanishes = false;
    long artin_value = 0;      // Art(A) in Z/d, A the ideal with n A = -div v
    long d = 1;
    Ideal ideal;
    bool norm_image_member = false;
    std::optional<bool> exhaustive_member;
    Z cup_value;               // <x u beta(x), zeta>
    bool consistent = false;   // all vanishing tests agree
    std::map<std::string, std::string> witnesses;
    double seconds = 0;
};

KimResult kim_invariant(KimJob const & job);

/* the imaginary quadratic order of discriminant D, as x^2 + b x + c */
std::string quadratic_poly(long D);
bool is_fundamental_discriminant(long D);

struct ScanConfig {
    long disc_lo = -500, disc_hi = -3;   // negative fundamental discriminants in range
    long n = 2;
    uint64_t seed = 1;
    unsigned workers = 0;                // 0: hardware concurrency
    std::string cache_path;
    bool exhaustive = true;
};

struct ScanJob {
    std::string poly;
    long disc = 0;
    long n = 2;
    std::string v;   // element string
};

/* jobs in output order: for each discriminant, the candidates v = u m with
 * u running over U/U^n and m | disc, v != 1; scan drops the jobs with
 * K(v^(1/n)) ramified or n not dividing div v */
std::vector<ScanJob> scan_jobs(ScanConfig const & cfg);
std::string job_key(ScanJob const & j, uint64_t seed);
/* one JSON line per job, written in job order */
void scan(ScanConfig const & cfg, std::function<void(std::string const &)> const & emit);

extern const char * const nfcoh_version;

}

#endif
