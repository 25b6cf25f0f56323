#pragma once

// Seeded randomized verification of the scalar identities: the variation
// chain for transfer factors, the calibration and sgn'' signs, spinor-norm
// route agreement, the delta_c laws, component-group counts, and the finite
// Fourier round trip. Everything is exact sign algebra; a single failing
// case fails the suite.

#include <cstdint>
#include <string>
#include <vector>

#include "mpsign/conjclass.hpp"
#include "mpsign/endoscopy.hpp"
#include "mpsign/spinor.hpp"

namespace mpsign::harness {

// splitmix64 streams; self-contained so that reports do not depend on any
// library's distribution internals
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64();
    long uniform(long lo, long hi); // inclusive bounds
    // nonzero rational with numerator and denominator of height <= h
    Rat rational(long h);
    Rng split(std::uint64_t stream) const;

private:
    std::uint64_t state_;
};

struct SuiteConfig {
    std::vector<std::string> fields = {"R", "C", "Qp:2", "Qp:3", "Qp:5", "Qp:7"};
    int n_min = 1;
    int n_max = 4;
    int max_tier = 2;
    int cases = 100;
    std::uint64_t seed = 1;

    void validate() const;
    std::vector<LocalField> parsed_fields() const;
};

struct CaseReport {
    std::uint64_t seed = 0;
    std::string field;
    int tier = 1;
    std::string datum_digest;
    std::string partition;
    std::string c_rep;
    std::vector<std::pair<std::string, int>> signs;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    int cases = 0;
    std::vector<CaseReport> failures;
    bool all_pass() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();

// Regular class datum by rejection sampling; coordinates of bounded height.
SpClassDatum gen_random_datum(const LocalField& F, int n, int max_tier, Rng& rng);

// Higher-tier factor statistics of a datum (1 or 2).
int datum_tier(const SpClassDatum& d);

// The skew tuple a'' used by the variation chain: sqrt(D) on field factors,
// (1, -1) on split ones.
std::vector<FactorElement> make_a_element(const std::vector<StableFactor>& factors);

CaseReport check_delta_var_1(const LocalField& F, const std::vector<StableFactor>& k_double_prime,
                             const SquareClass& c);

CaseReport check_delta_var_0(const CorrespondencePair& pair, const SquareClass& c,
                             bool reflection_oracle);

CaseReport check_variation_master(const SpClassDatum& delta, const std::vector<Side>& partition,
                                  const SquareClass& c, bool reflection_oracle);

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);
std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, const SuiteConfig& cfg);

// Random catalog parameter over F with |I+| bounded; used by the delta-law,
// component-group and fourier suites.
MpParameter gen_random_parameter(const LocalField& F, int max_symplectic, bool allow_opaque,
                                 Rng& rng);

} // namespace mpsign::harness
