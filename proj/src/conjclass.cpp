#include "mpsign/conjclass.hpp"

namespace mpsign {

std::vector<EndoscopicDatum> enumerate_elliptic_data(int n) {
    if (n < 0) throw InvariantViolation("enumerate_elliptic_data: n < 0");
    std::vector<EndoscopicDatum> out;
    for (int k = 0; k <= n; ++k) out.push_back({k, n - k});
    return out;
}

namespace {

StableFactor negate_x(const StableFactor& f) {
    return {f.algebra, f.algebra.neg(f.x)};
}

} // namespace

CorrespondencePair split_correspondence(const SpClassDatum& delta,
                                        const std::vector<Side>& partition) {
    if (partition.size() != delta.factors().size())
        throw InvariantViolation("split_correspondence: partition length mismatch");
    if (!check_regular(delta.stable()))
        throw InvariantViolation("split_correspondence: non-regular input");
    std::vector<StableFactor> prime, dprime;
    for (std::size_t i = 0; i < partition.size(); ++i) {
        const auto& f = delta.factors()[i];
        StableFactor sf{f.algebra, f.x};
        if (partition[i] == Side::Prime)
            prime.push_back(sf);
        else
            dprime.push_back(negate_x(sf));
    }
    StableClassDatum gp(delta.field(), std::move(prime));
    StableClassDatum gdp(delta.field(), std::move(dprime));
    // -x is still a unit-involution generator (minimal polynomials transform
    // by t -> -t), so regularity carries over; re-check anyway.
    if (!check_regular(gdp))
        throw InvariantViolation("split_correspondence: sign twist broke regularity");
    EndoscopicDatum datum{gp.dim() / 2, gdp.dim() / 2};
    return CorrespondencePair{delta, partition, datum, std::move(gp), std::move(gdp)};
}

CorrespondencePair split_correspondence(const SpClassDatum& delta,
                                        const std::vector<Side>& partition,
                                        const EndoscopicDatum& declared) {
    CorrespondencePair pair = split_correspondence(delta, partition);
    if (pair.datum != declared)
        throw InvariantViolation("split_correspondence: partition dimensions do not match the "
                                 "declared endoscopic datum");
    return pair;
}

StableClassDatum reassemble(const StableClassDatum& gamma_prime,
                            const StableClassDatum& gamma_double_prime) {
    if (gamma_prime.field() != gamma_double_prime.field())
        throw InvariantViolation("reassemble: field mismatch");
    std::vector<StableFactor> fs = gamma_prime.factors();
    for (const auto& f : gamma_double_prime.factors()) fs.push_back(negate_x(f));
    return StableClassDatum(gamma_prime.field(), std::move(fs));
}

bool is_g_regular(const StableClassDatum& gamma_prime,
                  const StableClassDatum& gamma_double_prime, int n) {
    if (gamma_prime.dim() + gamma_double_prime.dim() != 2 * n) return false;
    return check_regular(reassemble(gamma_prime, gamma_double_prime));
}

std::vector<std::string> centralizer_descriptor(const StableClassDatum& d) {
    std::vector<std::string> out;
    for (const auto& f : d.factors()) {
        const BaseField& b = f.algebra.base();
        std::string base_desc = b.is_ext() ? b.ext().descriptor() : b.ground_field().descriptor();
        if (f.algebra.is_split())
            out.push_back("GL(1) over " + base_desc);
        else
            out.push_back("ker N over " + base_desc + ", disc " +
                          rat_to_string(f.algebra.disc().a) + "+" +
                          rat_to_string(f.algebra.disc().b) + "*s");
    }
    return out;
}

} // namespace mpsign
