#pragma once

// Elliptic endoscopic data for Mp(2n) and the correspondence of stable
// classes between SO(2n'+1) x SO(2n''+1) and Sp(2n). The second factor
// carries x with a flipped sign.

#include <string>
#include <vector>

#include "mpsign/etale.hpp"

namespace mpsign {

struct EndoscopicDatum {
    int n_prime;
    int n_double_prime;
    int n() const { return n_prime + n_double_prime; }
    bool operator==(const EndoscopicDatum& o) const {
        return n_prime == o.n_prime && n_double_prime == o.n_double_prime;
    }
    bool operator!=(const EndoscopicDatum& o) const { return !(*this == o); }
};

// All (n', n'') with n' + n'' = n, in lexicographic order.
std::vector<EndoscopicDatum> enumerate_elliptic_data(int n);

enum class Side { Prime, DoublePrime };

struct CorrespondencePair {
    SpClassDatum delta;
    std::vector<Side> partition;
    EndoscopicDatum datum;
    StableClassDatum gamma_prime;
    StableClassDatum gamma_double_prime;
};

// Splits a regular class datum along a partition of its factors; the second
// side receives -x factorwise.
CorrespondencePair split_correspondence(const SpClassDatum& delta,
                                        const std::vector<Side>& partition);

// Same, but checked against a declared endoscopic datum.
CorrespondencePair split_correspondence(const SpClassDatum& delta,
                                        const std::vector<Side>& partition,
                                        const EndoscopicDatum& declared);

// Undo the sign twist and merge both sides back into one stable datum,
// factors ordered as (gamma' factors, gamma'' factors).
StableClassDatum reassemble(const StableClassDatum& gamma_prime,
                            const StableClassDatum& gamma_double_prime);

// Whether the pair corresponds to some regular class of Sp(2n).
bool is_g_regular(const StableClassDatum& gamma_prime,
                  const StableClassDatum& gamma_double_prime, int n);

// Torus labels of the centralizer, one per factor.
std::vector<std::string> centralizer_descriptor(const StableClassDatum& d);

} // namespace mpsign
