#include "mpsign/harness.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mpsign::harness {

// ---- rng ---------------------------------------------------------------------

std::uint64_t Rng::next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
    if (lo > hi) throw InvariantViolation("Rng::uniform: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = span * (UINT64_MAX / span);
    std::uint64_t r;
    do {
        r = next_u64();
    } while (r >= limit);
    return lo + static_cast<long>(r % span);
}

Rat Rng::rational(long h) {
    long num = 0;
    while (num == 0) num = uniform(-h, h);
    return make_rat(num, uniform(1, h));
}

Rng Rng::split(std::uint64_t stream) const {
    Rng child(state_ ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
    child.next_u64();
    return child;
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

std::string base_elem_str(const BaseElem& e) {
    return rat_to_string(e.a) + "|" + rat_to_string(e.b);
}

std::string factor_str(const ClassFactor& f) {
    std::string s = f.algebra.is_split() ? "s" : ("f[" + base_elem_str(f.algebra.disc()) + "]");
    s += f.algebra.base().is_ext() ? ("@" + f.algebra.base().ext().descriptor()) : "";
    s += ":x=" + base_elem_str(f.x.u) + "," + base_elem_str(f.x.v);
    s += ":c=" + base_elem_str(f.c.u) + "," + base_elem_str(f.c.v);
    return s;
}

std::string datum_digest_of(const SpClassDatum& d) {
    std::string all = d.field().descriptor();
    for (const auto& f : d.factors()) all += ";" + factor_str(f);
    return hex64(fnv1a(all));
}

int pow_sign(int s, long e) { return (s == -1 && (e % 2 != 0)) ? -1 : 1; }

// sgn'' at c: quadratic characters of the extensions K_i | K-natural_i,
// trivial on split factors.
int sgn_double_prime(const LocalField& F, const std::vector<StableFactor>& factors,
                     const SquareClass& c) {
    int out = 1;
    for (const auto& f : factors) {
        if (f.algebra.is_split()) continue;
        const BaseField& B = f.algebra.base();
        out *= B.hilbert(B.from_rat(c.rep()), f.algebra.disc());
    }
    return out;
}

SquareClass reflection_spinor_norm(const StableClassDatum& stable) {
    SOClassDatum so = enumerate_so_c_classes(stable).front();
    return spinor_norm_reflections(stable.field(), realize_quadratic_space(so));
}

} // namespace

// ---- config ---------------------------------------------------------------------

void SuiteConfig::validate() const {
    if (cases < 1) throw ContractViolation("config: case count must be at least 1");
    if (n_min < 1 || n_max < n_min) throw ContractViolation("config: bad n range");
    if (max_tier != 1 && max_tier != 2) throw ContractViolation("config: tier must be 1 or 2");
    if (fields.empty()) throw ContractViolation("config: empty field list");
    bool tier2_possible = false;
    for (const auto& desc : fields) {
        LocalField F = LocalField::from_descriptor(desc); // throws ParseError on bad input
        if (F.is_padic_odd()) tier2_possible = true;
    }
    if (max_tier == 2 && !tier2_possible)
        throw ContractViolation(
            "config: tier 2 requested but no listed field supports quadratic extension towers");
}

std::vector<LocalField> SuiteConfig::parsed_fields() const {
    std::vector<LocalField> out;
    for (const auto& desc : fields) out.push_back(LocalField::from_descriptor(desc));
    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"symbols",    "spinor",
                                                   "variation",  "delta-laws",
                                                   "component-group", "fourier"};
    return names;
}

// ---- random data -----------------------------------------------------------------

int datum_tier(const SpClassDatum& d) {
    int tier = 1;
    for (const auto& f : d.factors()) tier = std::max(tier, f.algebra.base().degree_over_F());
    return tier;
}

namespace {

constexpr long kHeight = 50;

BaseElem random_base_elem(const BaseField& B, Rng& rng, bool nonzero) {
    for (;;) {
        BaseElem e{rng.rational(kHeight), Rat(0)};
        if (B.is_ext() && rng.uniform(0, 1)) e.b = rng.rational(kHeight);
        if (!nonzero || !B.is_zero(e)) return e;
    }
}

ClassFactor random_split_factor(const BaseField& B, Rng& rng) {
    InvolutiveFactor K = InvolutiveFactor::make_split(B);
    BaseElem t = random_base_elem(B, rng, true);
    while (t == B.one() || t == B.neg(B.one())) t = random_base_elem(B, rng, true);
    FactorElement x = K.make(t, B.inv(t));
    BaseElem e = random_base_elem(B, rng, true);
    FactorElement c = K.make(e, B.neg(e));
    return {std::move(K), std::move(x), std::move(c)};
}

ClassFactor random_field_factor(const BaseField& B, Rng& rng) {
    BaseElem D;
    for (;;) {
        D = random_base_elem(B, rng, true);
        if (!B.is_square(D)) break;
    }
    InvolutiveFactor K = InvolutiveFactor::make_field(B, D);
    // x from a Hilbert-90 quotient; both coordinates nonzero keeps x away
    // from +-1
    FactorElement omega;
    do {
        omega = K.make(random_base_elem(B, rng, true), random_base_elem(B, rng, true));
    } while (!K.is_unit(omega));
    FactorElement x = K.mul(omega, K.inv(K.tau(omega)));
    FactorElement c = K.make(B.zero(), random_base_elem(B, rng, true)); // beta sqrt(D)
    return {std::move(K), std::move(x), std::move(c)};
}

} // namespace

SpClassDatum gen_random_datum(const LocalField& F, int n, int max_tier, Rng& rng) {
    if (n < 1) throw InvariantViolation("gen_random_datum: n must be positive");
    bool allow_tier2 = F.is_padic_odd() && max_tier >= 2;
    bool allow_field_top = !F.is_complex();
    for (int attempt = 0; attempt < 500; ++attempt) {
        std::vector<ClassFactor> factors;
        int units_left = n; // one unit = dimension 2 over F
        while (units_left > 0) {
            int max_choice = allow_field_top ? 1 : 0;
            if (allow_tier2 && units_left >= 2) max_choice = 3;
            int choice = static_cast<int>(rng.uniform(0, max_choice));
            BaseField B = BaseField::ground(F);
            if (choice >= 2) {
                const Int& p = F.prime();
                Rat reps[3] = {Rat(F.least_nonresidue()), Rat(p), Rat(F.least_nonresidue()) * Rat(p)};
                SquareClass disc = square_class(F, reps[rng.uniform(0, 2)]);
                B = BaseField::extension(ExtField(F, disc));
            }
            ClassFactor f = (choice % 2 == 0) ? random_split_factor(B, rng)
                                              : random_field_factor(B, rng);
            units_left -= f.algebra.dim_over_F() / 2;
            factors.push_back(std::move(f));
        }
        SpClassDatum d(F, std::move(factors));
        if (check_regular(d.stable())) return d;
    }
    throw Error("gen_random_datum: sampling exhausted after 500 attempts");
}

std::vector<FactorElement> make_a_element(const std::vector<StableFactor>& factors) {
    std::vector<FactorElement> out;
    for (const auto& f : factors) {
        const InvolutiveFactor& K = f.algebra;
        FactorElement a = K.is_split() ? K.make(K.base().one(), K.base().neg(K.base().one()))
                                       : K.make(K.base().zero(), K.base().one());
        if (K.tau(a) != K.neg(a))
            throw InvariantViolation("make_a_element: tau(a) != -a");
        out.push_back(std::move(a));
    }
    return out;
}

// ---- single checks -----------------------------------------------------------------

CaseReport check_delta_var_1(const LocalField& F, const std::vector<StableFactor>& k_double_prime,
                             const SquareClass& c) {
    CaseReport rep;
    rep.field = F.descriptor();
    rep.c_rep = rat_to_string(c.rep());
    std::vector<FactorElement> a = make_a_element(k_double_prime);
    Rat norm_a = norm_to_F(k_double_prime, a);
    int left = hilbert_symbol(F, c, square_class(F, norm_a));
    int sgn = sgn_double_prime(F, k_double_prime, c);
    int n_dp = 0;
    for (const auto& f : k_double_prime) n_dp += f.algebra.dim_over_F() / 2;
    int target = pow_sign(zeta_at_minus_one(F, c), n_dp);
    rep.signs = {{"(c,N(a''))", left}, {"sgn''(c)", sgn}, {"(c,-1)^n''", target}};
    rep.pass = (left * sgn == target);
    return rep;
}

CaseReport check_delta_var_0(const CorrespondencePair& pair, const SquareClass& c,
                             bool reflection_oracle) {
    const LocalField& F = pair.delta.field();
    CaseReport rep;
    rep.field = F.descriptor();
    rep.c_rep = rat_to_string(c.rep());
    rep.datum_digest = datum_digest_of(pair.delta);

    std::vector<StableFactor> prime_orig, dprime_orig; // delta-side data, x unnegated
    for (std::size_t i = 0; i < pair.partition.size(); ++i) {
        const auto& f = pair.delta.factors()[i];
        (pair.partition[i] == Side::Prime ? prime_orig : dprime_orig).push_back({f.algebra, f.x});
    }

    std::vector<FactorElement> omega_prime, a_omega;
    for (const auto& f : prime_orig) omega_prime.push_back(hilbert90_witness(f.algebra, f.x));
    std::vector<FactorElement> a = make_a_element(dprime_orig);
    for (std::size_t i = 0; i < dprime_orig.size(); ++i) {
        FactorElement w = hilbert90_witness(dprime_orig[i].algebra, dprime_orig[i].x);
        a_omega.push_back(dprime_orig[i].algebra.mul(a[i], w));
    }
    int rhs = hilbert_symbol(F, c, square_class(F, norm_to_F(prime_orig, omega_prime))) *
              hilbert_symbol(F, c, square_class(F, norm_to_F(dprime_orig, a_omega)));

    int s_formula = s_shriek_c(c, pair.gamma_prime, pair.gamma_double_prime);
    rep.signs = {{"s_c^!(formula)", s_formula}, {"(c,N'(w'))(c,N''(a''w''))", rhs}};
    rep.pass = (s_formula == rhs);
    if (reflection_oracle) {
        int s_oracle =
            hilbert_symbol(F, c, reflection_spinor_norm(pair.gamma_prime)) *
            hilbert_symbol(F, c, reflection_spinor_norm(pair.gamma_double_prime));
        rep.signs.push_back({"s_c^!(reflections)", s_oracle});
        rep.pass = rep.pass && (s_oracle == s_formula);
    }
    return rep;
}

CaseReport check_variation_master(const SpClassDatum& delta, const std::vector<Side>& partition,
                                  const SquareClass& c, bool reflection_oracle) {
    const LocalField& F = delta.field();
    CorrespondencePair pair = split_correspondence(delta, partition);
    CaseReport rep;
    rep.field = F.descriptor();
    rep.tier = datum_tier(delta);
    rep.datum_digest = datum_digest_of(delta);
    rep.c_rep = rat_to_string(c.rep());
    for (Side s : partition) rep.partition += (s == Side::Prime ? "'" : "\"");

    int s_val = s_shriek_c(c, pair.gamma_prime, pair.gamma_double_prime);
    bool routes_agree = true;
    if (reflection_oracle) {
        int s_oracle =
            hilbert_symbol(F, c, reflection_spinor_norm(pair.gamma_prime)) *
            hilbert_symbol(F, c, reflection_spinor_norm(pair.gamma_double_prime));
        routes_agree = (s_oracle == s_val);
        rep.signs.push_back({"s_c^!(reflections)", s_oracle});
    }

    Rat norm_omega(1);
    for (const auto& f : delta.factors())
        norm_omega *= f.algebra.norm_to_F(hilbert90_witness(f.algebra, f.x));
    int calibration = hilbert_symbol(F, c, square_class(F, norm_omega));

    std::vector<StableFactor> dprime_stable = pair.gamma_double_prime.factors();
    int sgn = sgn_double_prime(F, dprime_stable, c);
    int target = pow_sign(zeta_at_minus_one(F, c), pair.datum.n_double_prime);

    rep.signs.push_back({"s_c^!", s_val});
    rep.signs.push_back({"calibration", calibration});
    rep.signs.push_back({"sgn''(c)", sgn});
    rep.signs.push_back({"(c,-1)^n''", target});
    rep.pass = routes_agree && (s_val * calibration * sgn == target);
    return rep;
}

// ---- random parameters ---------------------------------------------------------------

MpParameter gen_random_parameter(const LocalField& F, int max_symplectic, bool allow_opaque,
                                 Rng& rng) {
    std::vector<WeightedSummand> summands;
    auto already_used = [&](const SimpleSummand& s) {
        for (const auto& ws : summands)
            if (ws.summand == s) return true;
        return false;
    };
    int want_symplectic = static_cast<int>(rng.uniform(0, max_symplectic));
    if (F.is_padic()) {
        auto reps = F.square_class_reps();
        for (int i = 0; i < want_symplectic; ++i) {
            for (int tries = 0; tries < 20; ++tries) {
                SquareClass d = square_class(F, reps[rng.uniform(0, static_cast<long>(reps.size()) - 1)]);
                int a = 2 * static_cast<int>(rng.uniform(1, 2)); // dimension 2 or 4
                SimpleSummand s = SimpleSummand::char_sa(d, a);
                if (already_used(s)) continue;
                summands.push_back({s, static_cast<int>(rng.uniform(1, 2))});
                break;
            }
        }
        int extra = static_cast<int>(rng.uniform(0, 2));
        for (int i = 0; i < extra; ++i) {
            SquareClass d = square_class(F, reps[rng.uniform(0, static_cast<long>(reps.size()) - 1)]);
            SimpleSummand s = SimpleSummand::char_sa(d, 1 + 2 * static_cast<int>(rng.uniform(0, 1)));
            if (already_used(s)) continue;
            summands.push_back({s, 2}); // orthogonal catalog summands need even multiplicity
        }
    } else if (F.is_real()) {
        for (int i = 0; i < want_symplectic; ++i) {
            for (int tries = 0; tries < 20; ++tries) {
                SimpleSummand s =
                    SimpleSummand::discrete_series_r(F, 1 + 2 * static_cast<int>(rng.uniform(0, 3)));
                if (already_used(s)) continue;
                summands.push_back({s, static_cast<int>(rng.uniform(1, 2))});
                break;
            }
        }
        if (rng.uniform(0, 1)) {
            SimpleSummand s = SimpleSummand::unit_char_r(F, static_cast<int>(rng.uniform(0, 1)));
            if (!already_used(s)) summands.push_back({s, 2});
        }
    }
    if (allow_opaque && rng.uniform(0, 1)) {
        SimpleSummand s = SimpleSummand::opaque_pair(
            F, "xi" + std::to_string(rng.uniform(0, 999)), static_cast<int>(rng.uniform(1, 2)),
            rng.uniform(0, 1) ? 1 : -1);
        if (!already_used(s)) summands.push_back({s, static_cast<int>(rng.uniform(1, 2))});
    }
    if (allow_opaque && rng.uniform(0, 1)) {
        SimpleSummand s = SimpleSummand::opaque_orthogonal(
            F, "rho" + std::to_string(rng.uniform(0, 999)), static_cast<int>(rng.uniform(1, 3)),
            rng.uniform(0, 1) ? 1 : -1);
        if (!already_used(s)) summands.push_back({s, 2});
    }
    return MpParameter(F, std::move(summands));
}

// ---- suites ------------------------------------------------------------------------------

namespace {

CaseReport simple_fail(const std::string& field, const std::string& what) {
    CaseReport rep;
    rep.field = field;
    rep.datum_digest = what;
    rep.pass = false;
    return rep;
}

SuiteReport run_symbols(const SuiteConfig& cfg) {
    SuiteReport out{"symbols", cfg.seed, 0, {}};
    Rng rng = Rng(cfg.seed).split(fnv1a("symbols"));
    for (const LocalField& F : cfg.parsed_fields()) {
        auto reps = F.square_class_reps();
        std::vector<SquareClass> classes;
        for (const auto& r : reps) classes.emplace_back(F, r);
        std::string desc = F.descriptor();
        // bimultiplicativity, symmetry, (a,-a) = 1, oracle agreement: exhaustive
        for (const auto& a : classes) {
            for (const auto& b : classes) {
                ++out.cases;
                int ab = hilbert_symbol(F, a, b);
                if (hilbert_symbol(F, b, a) != ab)
                    out.failures.push_back(simple_fail(desc, "symmetry"));
                long depth = default_oracle_depth(F, a.rep(), b.rep());
                if (hilbert_symbol_oracle(F, a.rep(), b.rep(), depth) != ab)
                    out.failures.push_back(simple_fail(desc, "oracle disagrees"));
                for (const auto& c : classes)
                    if (hilbert_symbol(F, a, b * c) != ab * hilbert_symbol(F, a, c))
                        out.failures.push_back(simple_fail(desc, "bimultiplicativity"));
            }
            if (hilbert_symbol(F, a, square_class(F, -a.rep())) != 1)
                out.failures.push_back(simple_fail(desc, "(a,-a) != 1"));
            if (!a.is_trivial() && !F.is_complex()) {
                bool hit = false;
                for (const auto& b : classes) hit = hit || hilbert_symbol(F, a, b) == -1;
                if (!hit) out.failures.push_back(simple_fail(desc, "degenerate pairing"));
            }
        }
        // square-class soundness on random rationals
        for (int i = 0; i < cfg.cases; ++i) {
            ++out.cases;
            Rat x = rng.rational(kHeight), t = rng.rational(kHeight);
            if (square_class(F, x * t * t) != square_class(F, x))
                out.failures.push_back(simple_fail(desc, "square-class soundness"));
        }
    }
    return out;
}

SuiteReport run_spinor(const SuiteConfig& cfg) {
    SuiteReport out{"spinor", cfg.seed, 0, {}};
    auto fields = cfg.parsed_fields();
    for (int i = 0; i < cfg.cases; ++i) {
        Rng rng = Rng(cfg.seed).split(fnv1a("spinor") ^ static_cast<std::uint64_t>(i));
        const LocalField& F = fields[static_cast<std::size_t>(i) % fields.size()];
        int n = cfg.n_min + i % (cfg.n_max - cfg.n_min + 1);
        SpClassDatum delta = gen_random_datum(F, n, cfg.max_tier, rng);
        StableClassDatum stable = delta.stable();
        ++out.cases;
        CaseReport rep;
        rep.seed = cfg.seed;
        rep.field = F.descriptor();
        rep.tier = datum_tier(delta);
        rep.datum_digest = datum_digest_of(delta);
        SquareClass formula = spinor_norm_formula(stable);
        rep.pass = true;
        for (const SOClassDatum& so : enumerate_so_c_classes(stable)) {
            SquareClass oracle = spinor_norm_reflections(F, realize_quadratic_space(so));
            if (oracle != formula) rep.pass = false; // route agreement and c-independence
        }
        // dilation invariance of the reflection route
        QuadraticSpaceRealization r =
            realize_quadratic_space(enumerate_so_c_classes(stable).front());
        Rat t = rng.rational(kHeight);
        for (auto& row : r.gram)
            for (auto& entry : row) entry *= t;
        if (spinor_norm_reflections(F, r) != formula) rep.pass = false;
        if (!rep.pass) out.failures.push_back(rep);
    }
    return out;
}

SuiteReport run_variation(const SuiteConfig& cfg) {
    SuiteReport out{"variation", cfg.seed, 0, {}};
    auto fields = cfg.parsed_fields();
    for (int i = 0; i < cfg.cases; ++i) {
        Rng rng = Rng(cfg.seed).split(fnv1a("variation") ^ static_cast<std::uint64_t>(i));
        const LocalField& F = fields[static_cast<std::size_t>(i) % fields.size()];
        int n = cfg.n_min + i % (cfg.n_max - cfg.n_min + 1);
        SpClassDatum delta = gen_random_datum(F, n, cfg.max_tier, rng);
        std::vector<Side> partition;
        std::size_t k = delta.factors().size();
        std::uint64_t mask =
            static_cast<std::uint64_t>(i) % (std::uint64_t{1} << k);
        for (std::size_t b = 0; b < k; ++b)
            partition.push_back((mask >> b) & 1 ? Side::DoublePrime : Side::Prime);
        CorrespondencePair pair = split_correspondence(delta, partition);
        for (const Rat& c_rep : F.square_class_reps()) {
            SquareClass c(F, c_rep);
            ++out.cases;
            CaseReport master = check_variation_master(delta, partition, c, true);
            master.seed = cfg.seed;
            CaseReport var0 = check_delta_var_0(pair, c, true);
            CaseReport var1 =
                check_delta_var_1(F, pair.gamma_double_prime.factors(), c);
            // chain consistency: the three verdicts must cohere
            bool chain = master.pass && var0.pass && var1.pass;
            if (!chain) {
                master.datum_digest += var0.pass ? "" : "|var0";
                master.datum_digest += var1.pass ? "" : "|var1";
                master.pass = false;
                out.failures.push_back(master);
            }
        }
    }
    return out;
}

SuiteReport run_delta_laws(const SuiteConfig& cfg) {
    SuiteReport out{"delta-laws", cfg.seed, 0, {}};
    auto fields = cfg.parsed_fields();
    for (int i = 0; i < cfg.cases; ++i) {
        Rng rng = Rng(cfg.seed).split(fnv1a("delta-laws") ^ static_cast<std::uint64_t>(i));
        const LocalField& F = fields[static_cast<std::size_t>(i) % fields.size()];
        MpParameter phi = gen_random_parameter(F, 3, false, rng);
        AdditiveCharacter psi = AdditiveCharacter::standard(F);
        ++out.cases;
        CaseReport rep;
        rep.seed = cfg.seed;
        rep.field = F.descriptor();
        rep.pass = true;
        auto reps = F.square_class_reps();
        for (const Rat& c_rep : reps) {
            SquareClass c(F, c_rep);
            GroupCharacter base = delta_c(phi, c, psi); // components validated as signs
            // dependence on c only through its square class
            Rat t = rng.rational(kHeight);
            if (delta_c(phi, square_class(F, c_rep * t * t), psi) != base) rep.pass = false;
            // psi-scale independence
            for (const Rat& s_rep : reps) {
                AdditiveCharacter psi_s{F, SquareClass(F, s_rep)};
                if (delta_c(phi, c, psi_s) != base) rep.pass = false;
            }
            // cocycle law against every second class
            for (const Rat& c2_rep : reps) {
                SquareClass c2(F, c2_rep);
                GroupCharacter lhs = delta_c(phi, c * c2, psi);
                GroupCharacter rhs = character_product(
                    base, delta_c(twist_parameter(phi, c), c2, psi.rescaled(c)));
                if (lhs != rhs) rep.pass = false;
            }
        }
        if (!rep.pass) out.failures.push_back(rep);
    }
    return out;
}

SuiteReport run_component_group(const SuiteConfig& cfg) {
    SuiteReport out{"component-group", cfg.seed, 0, {}};
    auto fields = cfg.parsed_fields();
    for (int i = 0; i < cfg.cases; ++i) {
        Rng rng = Rng(cfg.seed).split(fnv1a("component-group") ^ static_cast<std::uint64_t>(i));
        const LocalField& F = fields[static_cast<std::size_t>(i) % fields.size()];
        MpParameter phi = gen_random_parameter(F, 3, true, rng);
        AdditiveCharacter psi = AdditiveCharacter::standard(F);
        CentralizerShape shape = centralizer_shape(phi);
        ComponentGroup group = ComponentGroup::of(phi);
        ++out.cases;
        CaseReport rep;
        rep.seed = cfg.seed;
        rep.field = F.descriptor();
        rep.pass = true;
        std::set<std::vector<int>> images;
        std::map<std::vector<int>, int> eps_by_class;
        for (const SElement& s : enumerate_s_elements(shape)) {
            ComponentGroupElement img = image_in_component_group(shape, s);
            images.insert(img.signs);
            EndoscopicDatum datum = endoscopic_datum_of(s, phi);
            if (datum.n() != phi.n()) rep.pass = false;
            int eps = epsilon_minus_eigenspace(phi, s, psi);
            for (const Rat& s_rep : F.square_class_reps()) {
                AdditiveCharacter psi_s{F, SquareClass(F, s_rep)};
                if (epsilon_minus_eigenspace(phi, s, psi_s) != eps) rep.pass = false;
            }
            // eps depends on the signature only through the pairing laws:
            // q mod 2 on symplectic-type blocks (the image), q mod 4 on
            // orthogonal-type blocks, q mod 2 on paired blocks
            std::vector<int> key;
            for (std::size_t b = 0; b < shape.blocks.size(); ++b) {
                int q = s.signature[b].second;
                key.push_back(shape.blocks[b].type == BlockType::Symplectic ? q % 4 : q % 2);
            }
            auto [it, inserted] = eps_by_class.insert({key, eps});
            if (!inserted && it->second != eps) rep.pass = false;
        }
        if (images.size() != group.order()) rep.pass = false; // surjectivity onto mu_2^{I+}
        if (!rep.pass) out.failures.push_back(rep);
    }
    return out;
}

SuiteReport run_fourier(const SuiteConfig& cfg) {
    SuiteReport out{"fourier", cfg.seed, 0, {}};
    auto fields = cfg.parsed_fields();
    for (int i = 0; i < cfg.cases; ++i) {
        Rng rng = Rng(cfg.seed).split(fnv1a("fourier") ^ static_cast<std::uint64_t>(i));
        ++out.cases;
        CaseReport rep;
        rep.seed = cfg.seed;
        rep.pass = true;
        // exact Fourier round trip on a random coefficient vector
        std::size_t rank = static_cast<std::size_t>(rng.uniform(0, 4));
        std::vector<std::size_t> basis(rank);
        for (std::size_t b = 0; b < rank; ++b) basis[b] = b;
        ComponentGroup group(std::move(basis));
        std::vector<Cyc8> coeffs;
        for (std::size_t k = 0; k < group.order(); ++k)
            coeffs.push_back(Cyc8(rng.rational(9), rng.rational(9), rng.rational(9),
                                  rng.rational(9)));
        FormalPacketDistribution dist =
            make_distribution(group, FourierSide::Characters, coeffs);
        auto forward = luo_fourier(dist, FourierDirection::CharactersToElements);
        auto back = luo_fourier(forward, FourierDirection::ElementsToCharacters);
        if (back.coeffs != dist.coeffs) rep.pass = false;
        // twist composition on a random enhanced parameter
        const LocalField& F = fields[static_cast<std::size_t>(i) % fields.size()];
        MpParameter phi = gen_random_parameter(F, 3, false, rng);
        rep.field = F.descriptor();
        AdditiveCharacter psi = AdditiveCharacter::standard(F);
        ComponentGroup cg = ComponentGroup::of(phi);
        GroupCharacter chi;
        for (std::size_t b = 0; b < cg.rank(); ++b)
            chi.signs.push_back(rng.uniform(0, 1) ? 1 : -1);
        auto reps = F.square_class_reps();
        SquareClass c1(F, reps[rng.uniform(0, static_cast<long>(reps.size()) - 1)]);
        SquareClass c2(F, reps[rng.uniform(0, static_cast<long>(reps.size()) - 1)]);
        EnhancedParameter once = twist_enhanced(phi, chi, c1, psi);
        EnhancedParameter twice = twist_enhanced(once.phi, once.chi, c2, once.psi);
        EnhancedParameter direct = twist_enhanced(phi, chi, c1 * c2, psi);
        if (!(twice.phi == direct.phi) || twice.chi != direct.chi ||
            twice.psi.scale != direct.psi.scale)
            rep.pass = false;
        if (!rep.pass) out.failures.push_back(rep);
    }
    return out;
}

} // namespace

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
    cfg.validate();
    if (name == "symbols") return run_symbols(cfg);
    if (name == "spinor") return run_spinor(cfg);
    if (name == "variation") return run_variation(cfg);
    if (name == "delta-laws") return run_delta_laws(cfg);
    if (name == "component-group") return run_component_group(cfg);
    if (name == "fourier") return run_fourier(cfg);
    throw ContractViolation("run_suite: unknown suite '" + name + "'");
}

std::vector<SuiteReport> run_suites(const std::vector<std::string>& names,
                                    const SuiteConfig& cfg) {
    std::vector<SuiteReport> out;
    for (const auto& n : names) out.push_back(run_suite(n, cfg));
    return out;
}

} // namespace mpsign::harness
