#ifndef HECKE_CONFIG_HPP
#define HECKE_CONFIG_HPP

#include <cstdint>
#include <string>

namespace hecke {

// All tolerance and truncation knobs live here so that every module pulls the
// same constants.  Values are overridable from the CLI; tests use the defaults.
struct RunConfig {
    std::int64_t trunc_C = 0;      // Petersson c-sum cutoff; 0 means per-call automatic choice
    int precision = 2000;          // default q-expansion length
    double tolerance = 1e-9;       // base tolerance for root-of-unity identity checks
    int jobs = 1;                  // worker threads; reductions are block-ordered either way
    std::uint64_t seed = 1;        // seed for sampled verification grids
    std::string format = "json";   // CLI output format: json | csv
    bool certified_divisor_bound = true;  // false switches tail bounds to the
                                          // d(n) <= n^{1.066/ln ln n} variant (not certified)
    std::int64_t character_modulus_cap = 100000;  // discrete-log tables are built eagerly
    std::int64_t census_q_cap = 2000;
};

RunConfig& config();

} // namespace hecke

#endif
