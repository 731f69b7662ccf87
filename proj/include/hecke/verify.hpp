#ifndef HECKE_VERIFY_HPP
#define HECKE_VERIFY_HPP

#include <string>
#include <vector>

namespace hecke::verify {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;  // deterministic metrics (fixed formatting, no timing)
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_pass() const;
    std::string render_text() const;  // byte-stable for a fixed seed
    std::string render_json() const;
};

// name: characters | expsums | analytic | petersson | modforms | traces | census | all
SuiteReport run_suite(const std::string& name);
std::vector<std::string> suite_names();

// individual checks reused by the acceptance binary
CheckResult check_psi_identity_exact();        // N <= 300, all characters
CheckResult check_r_composition_exact();       // p in {2,3,5,7}, exponents <= 4
CheckResult check_inversion_helper_exact();    // N <= 200, all factorizations
CheckResult check_weight_identity_exact();
CheckResult check_tw_closed_vs_brute();        // N <= 24 grid + bounds
CheckResult check_dimension_zero();
CheckResult check_eigenvalue_recovery();
CheckResult check_norm_loop_closure();
CheckResult check_xi_v_machinery();
CheckResult check_x0_bridge();
CheckResult check_census_statistics();
CheckResult check_report_determinism();

} // namespace hecke::verify

#endif
