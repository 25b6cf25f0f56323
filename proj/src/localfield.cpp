#include "mpsign/localfield.hpp"

#include <cstdint>
#include <functional>

namespace mpsign {

namespace {

int parity(const Int& n) { return mpz_odd_p(n.get_mpz_t()) ? 1 : 0; }

// (x-1)/2 mod 2 for odd x (any sign).
int eps2(const Int& x) {
    Int t = (x - 1) / 2;
    return parity(t);
}

// (x^2-1)/8 mod 2 for odd x.
int omega2(const Int& x) {
    Int t = (x * x - 1) / 8;
    return parity(t);
}

Int least_nonresidue_of(const Int& p) {
    for (Int u = 2;; ++u)
        if (mpz_legendre(u.get_mpz_t(), p.get_mpz_t()) == -1) return u;
}

} // namespace

LocalField LocalField::padic(const Int& p) {
    if (!is_prime_trial_division(p))
        throw InvariantViolation("LocalField: p = " + p.get_str() + " is not prime");
    LocalField F(FieldKind::Padic, p);
    if (p != 2) F.u_ = least_nonresidue_of(p);
    return F;
}

const Int& LocalField::prime() const {
    if (!is_padic()) throw InvariantViolation("LocalField::prime: not a p-adic field");
    return p_;
}

const Int& LocalField::least_nonresidue() const {
    if (!is_padic_odd()) throw InvariantViolation("least_nonresidue: needs odd p");
    return u_;
}

std::vector<Rat> LocalField::square_class_reps() const {
    switch (kind_) {
    case FieldKind::Real: return {Rat(1), Rat(-1)};
    case FieldKind::Complex: return {Rat(1)};
    case FieldKind::Padic:
        if (p_ == 2)
            return {Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(5), Rat(-5), Rat(10), Rat(-10)};
        else {
            Rat u(u_), p(p_);
            return {Rat(1), u, p, u * p};
        }
    }
    throw InvariantViolation("square_class_reps: bad kind");
}

std::string LocalField::descriptor() const {
    switch (kind_) {
    case FieldKind::Real: return "R";
    case FieldKind::Complex: return "C";
    case FieldKind::Padic: return "Qp:" + p_.get_str();
    }
    throw InvariantViolation("descriptor: bad kind");
}

LocalField LocalField::from_descriptor(const std::string& s) {
    if (s == "R") return real();
    if (s == "C") return complex();
    if (s.rfind("Qp:", 0) == 0) {
        Int p;
        if (mpz_set_str(p.get_mpz_t(), s.substr(3).c_str(), 10) != 0)
            throw ParseError("bad field descriptor '" + s + "'");
        if (!is_prime_trial_division(p))
            throw ParseError("field descriptor '" + s + "': p is not prime");
        return padic(p);
    }
    throw ParseError("bad field descriptor '" + s + "'");
}

SquareClass square_class(const LocalField& F, const Rat& x) {
    if (x == 0) throw InvariantViolation("square_class: zero input");
    switch (F.kind()) {
    case FieldKind::Real: return SquareClass(F, Rat(x > 0 ? 1 : -1));
    case FieldKind::Complex: return SquareClass(F, Rat(1));
    case FieldKind::Padic: break;
    }
    const Int& p = F.prime();
    long v = padic_valuation(p, x);
    Rat w = unit_part(p, x);
    Rat rep(1);
    if (p == 2) {
        Int r = unit_residue_mod(w, Int(8));
        if (r == 1) rep = 1;
        else if (r == 3) rep = -5;
        else if (r == 5) rep = 5;
        else rep = -1; // r == 7
        if (v % 2 != 0) rep *= 2;
    } else {
        if (legendre(w, p) == -1) rep = Rat(F.least_nonresidue());
        if (v % 2 != 0) rep *= Rat(p);
    }
    return SquareClass(F, rep);
}

SquareClass operator*(const SquareClass& a, const SquareClass& b) {
    if (a.field() != b.field())
        throw InvariantViolation("SquareClass product: field mismatch");
    return square_class(a.field(), a.rep() * b.rep());
}

int hilbert_symbol(const LocalField& F, const SquareClass& a, const SquareClass& b) {
    switch (F.kind()) {
    case FieldKind::Real: return (a.rep() < 0 && b.rep() < 0) ? -1 : 1;
    case FieldKind::Complex: return 1;
    case FieldKind::Padic: break;
    }
    const Int& p = F.prime();
    long alpha = padic_valuation(p, a.rep());
    long beta = padic_valuation(p, b.rep());
    Rat a0 = unit_part(p, a.rep());
    Rat b0 = unit_part(p, b.rep());
    if (p == 2) {
        // canonical representatives have integral odd unit parts
        Int ia = a0.get_num(), ib = b0.get_num();
        int e = (eps2(ia) * eps2(ib) + static_cast<int>(alpha % 2) * omega2(ib) +
                 static_cast<int>(beta % 2) * omega2(ia)) % 2;
        return e ? -1 : 1;
    }
    int sign = 1;
    if ((alpha % 2) && (beta % 2) && parity((p - 1) / 2)) sign = -sign;
    if (beta % 2) sign *= legendre(a0, p);
    if (alpha % 2) sign *= legendre(b0, p);
    return sign;
}

int hilbert_symbol(const LocalField& F, const Rat& a, const Rat& b) {
    if (F.is_complex()) return 1;
    return hilbert_symbol(F, square_class(F, a), square_class(F, b));
}

long default_oracle_depth(const LocalField& F, const Rat& a, const Rat& b) {
    if (!F.is_padic()) return 0;
    return padic_valuation(F.prime(), 4 * a * b) + 3;
}

namespace {

struct ConicSearch {
    std::uint64_t m_final; // p^depth
    std::uint64_t p;
    std::uint64_t A, B; // coefficients mod m_final
    long depth;
    bool odd_p;
    long budget = 8'000'000;

    std::uint64_t f_mod(std::uint64_t z, std::uint64_t x, std::uint64_t y, std::uint64_t m) const {
        using u128 = unsigned __int128;
        u128 t = (u128)z * z % m;
        t += (u128)m - (u128)A % m * x % m * x % m;
        t += (u128)m - (u128)B % m * y % m * y % m;
        return static_cast<std::uint64_t>(t % m);
    }

    bool smooth(std::uint64_t z, std::uint64_t x, std::uint64_t y) const {
        // gradient (2z, -2Ax, -2By) nonzero mod p; valid stopping rule for odd p
        if ((2 * (z % p)) % p != 0) return true;
        using u128 = unsigned __int128;
        if ((u128)2 * (A % p) % p * (x % p) % p != 0) return true;
        if ((u128)2 * (B % p) % p * (y % p) % p != 0) return true;
        return false;
    }

    // Depth-first search over p-adic digits from a level-k node.
    bool extend(std::uint64_t z, std::uint64_t x, std::uint64_t y, long k, std::uint64_t pk) {
        if (--budget < 0)
            throw ContractViolation("hilbert_symbol_oracle: search budget exceeded");
        if (odd_p && smooth(z, x, y)) return true; // Hensel lifts to full depth
        if (k == depth) return true;
        std::uint64_t m_next = pk * p;
        for (std::uint64_t dz = 0; dz < p; ++dz)
            for (std::uint64_t dx = 0; dx < p; ++dx)
                for (std::uint64_t dy = 0; dy < p; ++dy) {
                    std::uint64_t z1 = z + dz * pk, x1 = x + dx * pk, y1 = y + dy * pk;
                    if (f_mod(z1, x1, y1, m_next) != 0) continue;
                    if (extend(z1, x1, y1, k + 1, m_next)) return true;
                }
        return false;
    }

    bool run() {
        for (std::uint64_t z = 0; z < p; ++z)
            for (std::uint64_t x = 0; x < p; ++x)
                for (std::uint64_t y = 0; y < p; ++y) {
                    if (z == 0 && x == 0 && y == 0) continue; // primitivity
                    if (f_mod(z, x, y, p) != 0) continue;
                    if (extend(z, x, y, 1, p)) return true;
                }
        return false;
    }
};

// Strips squares: integer with the same square class as q, with v_p <= 1.
Int squarefree_at_p(const Int& p, const Rat& q) {
    Int n = q.get_num() * q.get_den();
    Int reduced;
    long v = static_cast<long>(mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
    Int out = reduced;
    if (v % 2 != 0) out *= p;
    return out;
}

} // namespace

int hilbert_symbol_oracle(const LocalField& F, const Rat& a, const Rat& b, long depth) {
    if (a == 0 || b == 0) throw InvariantViolation("hilbert_symbol_oracle: zero input");
    switch (F.kind()) {
    case FieldKind::Real: return (a > 0 || b > 0) ? 1 : -1;
    case FieldKind::Complex: return 1;
    case FieldKind::Padic: break;
    }
    const Int& p = F.prime();
    Int ia = squarefree_at_p(p, a);
    Int ib = squarefree_at_p(p, b);
    long needed = padic_valuation(p, Rat(4 * ia * ib)) + 3;
    if (depth < needed)
        throw ContractViolation("hilbert_symbol_oracle: depth " + std::to_string(depth) +
                                " below required " + std::to_string(needed));
    Int modulus = 1;
    for (long i = 0; i < depth; ++i) modulus *= p;
    if (!modulus.fits_ulong_p() || !p.fits_ulong_p())
        throw ContractViolation("hilbert_symbol_oracle: modulus too large");
    ConicSearch s;
    s.m_final = modulus.get_ui();
    s.p = p.get_ui();
    Int ra = ia % modulus;
    if (ra < 0) ra += modulus;
    Int rb = ib % modulus;
    if (rb < 0) rb += modulus;
    s.A = ra.get_ui();
    s.B = rb.get_ui();
    s.depth = depth;
    s.odd_p = (p != 2);
    return s.run() ? 1 : -1;
}

QuadExt QuadExt::field(SquareClass d) {
    if (d.is_trivial())
        throw InvariantViolation("QuadExt: disc must be a nontrivial square class");
    return QuadExt{false, std::move(d)};
}

bool is_norm(const LocalField& F, const QuadExt& E, const SquareClass& x) {
    if (E.split) return true;
    return hilbert_symbol(F, x, E.disc) == 1;
}

int sgn_char(const LocalField& F, const QuadExt& E, const SquareClass& x) {
    if (E.split) return 1;
    return hilbert_symbol(F, x, E.disc);
}

// ---- quadratic extension fields -------------------------------------------

ExtField::ExtField(LocalField base, SquareClass disc)
    : base_(std::move(base)), disc_(std::move(disc)) {
    if (!base_.is_padic()) throw UnsupportedTier("ExtField: base must be p-adic");
    if (base_.prime() == 2) throw UnsupportedTier("ExtField: p = 2 base not supported");
    if (disc_.field() != base_) throw InvariantViolation("ExtField: disc over wrong field");
    if (disc_.is_trivial()) throw InvariantViolation("ExtField: disc must be nontrivial");
    ramified_ = (padic_valuation(base_.prime(), disc_.rep()) % 2) != 0;
    q_ = ramified_ ? base_.prime() : base_.prime() * base_.prime();
}

std::string ExtField::descriptor() const {
    const Int& p = base_.prime();
    const Int& u = base_.least_nonresidue();
    std::string d;
    if (disc_.rep() == Rat(u)) d = "u";
    else if (disc_.rep() == Rat(p)) d = "p";
    else if (disc_.rep() == Rat(u) * Rat(p)) d = "up";
    else d = rat_to_string(disc_.rep());
    return "Ext:" + base_.descriptor() + ":disc=" + d;
}

ExtField ExtField::from_descriptor(const std::string& s) {
    if (s.rfind("Ext:", 0) != 0) throw ParseError("bad extension descriptor '" + s + "'");
    auto pos = s.rfind(":disc=");
    if (pos == std::string::npos) throw ParseError("bad extension descriptor '" + s + "'");
    LocalField base = LocalField::from_descriptor(s.substr(4, pos - 4));
    std::string d = s.substr(pos + 6);
    if (!base.is_padic_odd()) throw UnsupportedTier("extension base must be Q_p with odd p");
    Rat rep;
    if (d == "u") rep = Rat(base.least_nonresidue());
    else if (d == "p") rep = Rat(base.prime());
    else if (d == "up") rep = Rat(base.least_nonresidue()) * Rat(base.prime());
    else rep = rat_from_string(d);
    return ExtField(base, square_class(base, rep));
}

ExtElement ExtField::mul(const ExtElement& x, const ExtElement& y) const {
    const Rat& d = disc_.rep();
    return {x.a * y.a + d * x.b * y.b, x.a * y.b + x.b * y.a};
}

ExtElement ExtField::inv(const ExtElement& x) const {
    Rat n = norm(x);
    if (n == 0) throw InvariantViolation("ExtField::inv: zero element");
    return {x.a / n, -x.b / n};
}

long ExtField::valuation(const ExtElement& x) const {
    if (is_zero(x)) throw InvariantViolation("ExtField::valuation: zero element");
    const Int& p = base_.prime();
    const long big = 1L << 30;
    long va = (x.a == 0) ? big : padic_valuation(p, x.a);
    long vb = (x.b == 0) ? big : padic_valuation(p, x.b);
    if (!ramified_) return std::min(va, vb);
    return std::min(2 * va, 2 * vb + 1);
}

ExtElement ExtField::uniformizer() const {
    if (ramified_) return {Rat(0), Rat(1)};
    return {Rat(base_.prime()), Rat(0)};
}

namespace {

// Arithmetic in F_{p^2} = F_p(s), s^2 = d.
struct Fp2 {
    Int x, y; // x + y s
};

Fp2 fp2_mul(const Fp2& a, const Fp2& b, const Int& p, const Int& d) {
    return {(a.x * b.x + d * a.y * b.y) % p, (a.x * b.y + a.y * b.x) % p};
}

bool fp2_is_one(const Fp2& a, const Int& p) {
    return ((a.x - 1) % p == 0) && (a.y % p == 0);
}

Fp2 fp2_pow(Fp2 base, Int e, const Int& p, const Int& d) {
    Fp2 acc{Int(1), Int(0)};
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = fp2_mul(acc, base, p, d);
        base = fp2_mul(base, base, p, d);
        e /= 2;
    }
    return acc;
}

} // namespace

bool ExtField::unit_residue_is_square(const ExtElement& x) const {
    if (is_zero(x)) throw InvariantViolation("unit_residue_is_square: zero element");
    const Int& p = base_.prime();
    long v = valuation(x);
    if (ramified_) {
        ExtElement y = x;
        long w = v;
        if ((((w % 2) + 2) % 2) == 1) {
            // divide once by the uniformizer s = sqrt(disc): (a + b s)/s = b + (a/d) s
            y = ExtElement{y.b, y.a / disc_.rep()};
            w -= 1;
        }
        // remove the even uniformizer power sqrt(disc)^w = disc^{w/2}; the b
        // part then has positive valuation, so the residue is the a part mod p.
        // Dividing by p^{w/2} instead would skew the unit part by the class of
        // disc/p and is not a uniformizer normalization.
        Rat pw = rat_pow_int(disc_.rep(), w / 2);
        ExtElement y0{y.a / pw, y.b / pw};
        Int r = unit_residue_mod(y0.a, p);
        return mpz_legendre(r.get_mpz_t(), p.get_mpz_t()) == 1;
    }
    // unramified: residue field F_{p^2} = F_p(s), s^2 = disc mod p
    Rat pw = rat_pow_int(Rat(p), v);
    Rat a0 = x.a / pw, b0 = x.b / pw;
    Int ra = (a0 == 0) ? Int(0) : unit_residue_mod(a0, p);
    Int rb = (b0 == 0) ? Int(0) : unit_residue_mod(b0, p);
    Int d = unit_residue_mod(disc_.rep(), p);
    Fp2 r{ra, rb};
    Int e = (q_ - 1) / 2;
    Fp2 pw2 = fp2_pow(r, e, p, d);
    return fp2_is_one(pw2, p);
}

ExtElement ExtField::nonsquare_unit() const {
    const Int& p = base_.prime();
    for (Int a = 0; a < p; ++a)
        for (Int b = 0; b < p; ++b) {
            if (a == 0 && b == 0) continue;
            ExtElement e{Rat(a), Rat(b)};
            if (valuation(e) != 0) continue;
            if (!unit_residue_is_square(e)) return e;
        }
    throw InvariantViolation("nonsquare_unit: search failed (unreachable)");
}

ExtSquareClass ext_square_class(const ExtField& E, const ExtElement& y) {
    if (E.is_zero(y)) throw InvariantViolation("ext_square_class: zero element");
    long v = E.valuation(y);
    bool odd = (((v % 2) + 2) % 2) == 1;
    return ExtSquareClass{odd, !E.unit_residue_is_square(y)};
}

int ext_hilbert_symbol(const ExtField& E, const ExtElement& y1, const ExtElement& y2) {
    if (E.is_zero(y1) || E.is_zero(y2))
        throw InvariantViolation("ext_hilbert_symbol: zero element");
    long v1 = E.valuation(y1), v2 = E.valuation(y2);
    int chi1 = E.unit_residue_is_square(y1) ? 1 : -1;
    int chi2 = E.unit_residue_is_square(y2) ? 1 : -1;
    Int half = (E.residue_size() - 1) / 2;
    int sign = 1;
    if ((v1 % 2) && (v2 % 2) && mpz_odd_p(half.get_mpz_t())) sign = -sign;
    if (v2 % 2) sign *= chi1;
    if (v1 % 2) sign *= chi2;
    return sign;
}

// ---- roots of unity ---------------------------------------------------------

RootOfUnity8 RootOfUnity8::from_sign(int s) {
    if (s == 1) return RootOfUnity8(0);
    if (s == -1) return RootOfUnity8(4);
    throw InvariantViolation("RootOfUnity8::from_sign: value not a sign");
}

int RootOfUnity8::as_sign() const {
    if (e_ == 0) return 1;
    if (e_ == 4) return -1;
    throw InvariantViolation("RootOfUnity8::as_sign: value " + to_string() + " is not real");
}

std::string RootOfUnity8::to_string() const {
    switch (e_) {
    case 0: return "1";
    case 1: return "zeta8";
    case 2: return "i";
    case 3: return "zeta8^3";
    case 4: return "-1";
    case 5: return "-zeta8";
    case 6: return "-i";
    case 7: return "-zeta8^3";
    }
    throw InvariantViolation("RootOfUnity8: bad exponent");
}

RootOfUnity8 RootOfUnity8::from_string(const std::string& s) {
    for (int e = 0; e < 8; ++e)
        if (RootOfUnity8(e).to_string() == s) return RootOfUnity8(e);
    throw ParseError("RootOfUnity8: bad value '" + s + "'");
}

} // namespace mpsign
