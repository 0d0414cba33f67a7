#ifndef SYMPROD_VERIFY_HPP
#define SYMPROD_VERIFY_HPP

#include <random>
#include <string>
#include <vector>

#include "symprod/pipelines.hpp"
#include "symprod/spaces.hpp"

namespace symprod {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // first discrepancy, empty when passing
};

struct SuiteReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

using Rng = std::mt19937_64;

/// Random model with valid Pontrjagin structure: the basis is a set of
/// monomials in a few weighted generators surviving a random upward-closed
/// ideal, the product is monomial multiplication twisted by a random basis
/// rescaling (so commutativity and associativity hold by construction), and
/// the diagonals are random degree-preserving maps with d^1 the identity.
/// Ranks stay <= 3 per degree and half degrees <= 3.
SpaceModel random_model(Rng& rng, unsigned truncation);

/// Random class on module(level) with small polynomial coefficients in y.
GradedClass random_class(Rng& rng, const SpaceModel& model, unsigned level);

/// Random y-free class on module(level).
GradedClass random_y_free_class(Rng& rng, const SpaceModel& model, unsigned level);

// The machine-checkable acceptance criteria. Each returns the first
// discrepancy found, or a passing result.
CheckResult check_p1_hirzebruch_series(unsigned truncation);
CheckResult check_p2_partition_oracle(unsigned truncation, unsigned seed, unsigned model_count);
CheckResult check_p3_todd_series(unsigned truncation);
CheckResult check_p4_chern_series(unsigned truncation);
CheckResult check_p5_l_series(unsigned truncation);
CheckResult check_p6_macdonald(unsigned truncation);
CheckResult check_p7_zagier(unsigned truncation, unsigned range);
CheckResult check_p8_chi_y_symmetric_p1(unsigned truncation);
CheckResult check_p9_operator_laws(unsigned seed, unsigned cases_per_law);
CheckResult check_p10_sensitivity(unsigned truncation);
CheckResult check_specialization_pipelines(unsigned truncation);

enum class Suite { p1, oracle, genera, specializations, all };

SuiteReport run_suite(Suite suite, unsigned truncation, unsigned seed);

}  // namespace symprod

#endif
