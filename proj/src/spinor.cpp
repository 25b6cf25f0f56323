#include "mpsign/spinor.hpp"

namespace mpsign {

SquareClass spinor_norm_formula(const StableClassDatum& d) {
    Rat prod(1);
    for (const auto& f : d.factors()) {
        FactorElement omega = hilbert90_witness(f.algebra, f.x);
        prod *= f.algebra.norm_to_F(omega);
    }
    return square_class(d.field(), prod);
}

SquareClass spinor_norm_formula(const SOClassDatum& d) { return spinor_norm_formula(d.stable()); }

Rat gram_bilinear(const Mat& gram, const Vec& v, const Vec& w) {
    Rat out(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < w.size(); ++j) out += v[i] * gram[i][j] * w[j];
    }
    return out;
}

Rat gram_q(const Mat& gram, const Vec& v) { return gram_bilinear(gram, v, v); }

QuadraticSpaceRealization realize_quadratic_space(const SOClassDatum& d) {
    int total = d.dim() + 1;
    Mat gram = mat_zero(total, total);
    Mat action = mat_zero(total, total);
    int offset = 0;
    for (const auto& f : d.factors()) {
        const InvolutiveFactor& K = f.algebra;
        auto basis = K.basis_over_F();
        int m = static_cast<int>(basis.size());
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                // B(v, w) = (1/2) Tr(c (v tau(w) + w tau(v)))
                FactorElement sym = K.add(K.mul(basis[i], K.tau(basis[j])),
                                          K.mul(basis[j], K.tau(basis[i])));
                gram[offset + i][offset + j] = K.trace_to_F(K.mul(f.c, sym)) / 2;
            }
            auto col = K.coords(K.mul(f.x, basis[i]));
            for (int r = 0; r < m; ++r) action[offset + r][offset + i] = col[r];
        }
        offset += m;
    }
    gram[offset][offset] = 1; // the anisotropic line, normalization immaterial
    action[offset][offset] = 1;
    QuadraticSpaceRealization out{std::move(gram), std::move(action)};
    if (mat_det(out.gram) == 0)
        throw InvariantViolation("realize_quadratic_space: degenerate form");
    Mat check = mat_mul(mat_transpose(out.action), mat_mul(out.gram, out.action));
    if (!mat_equal(check, out.gram))
        throw InvariantViolation("realize_quadratic_space: action is not an isometry");
    if (mat_det(out.action) != 1)
        throw InvariantViolation("realize_quadratic_space: action determinant is not 1");
    return out;
}

namespace {

// Orthogonal basis of a nondegenerate symmetric form over Q.
std::vector<Vec> orthogonal_basis(const Mat& gram) {
    std::size_t n = gram.size();
    std::vector<Vec> remaining;
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n, Rat(0));
        e[i] = 1;
        remaining.push_back(std::move(e));
    }
    std::vector<Vec> out;
    while (!remaining.empty()) {
        std::size_t pick = remaining.size();
        for (std::size_t i = 0; i < remaining.size(); ++i)
            if (gram_q(gram, remaining[i]) != 0) {
                pick = i;
                break;
            }
        Vec v;
        if (pick < remaining.size()) {
            v = remaining[pick];
            remaining.erase(remaining.begin() + static_cast<long>(pick));
        } else {
            // all remaining vectors isotropic: some pair must pair nontrivially
            bool found = false;
            for (std::size_t i = 0; i < remaining.size() && !found; ++i)
                for (std::size_t j = i + 1; j < remaining.size() && !found; ++j)
                    if (gram_bilinear(gram, remaining[i], remaining[j]) != 0) {
                        v = remaining[i];
                        for (std::size_t k = 0; k < v.size(); ++k) v[k] += remaining[j][k];
                        remaining.erase(remaining.begin() + static_cast<long>(i));
                        found = true;
                    }
            if (!found)
                throw InvariantViolation("orthogonal_basis: degenerate form");
        }
        Rat qv = gram_q(gram, v);
        for (auto& w : remaining) {
            Rat f = gram_bilinear(gram, w, v) / qv;
            for (std::size_t k = 0; k < w.size(); ++k) w[k] -= f * v[k];
        }
        out.push_back(std::move(v));
    }
    return out;
}

// M <- R_v M where R_v is the reflection in v.
void apply_reflection(const Mat& gram, const Vec& v, Mat& m) {
    std::size_t n = m.size();
    Rat qv = gram_q(gram, v);
    for (std::size_t j = 0; j < n; ++j) {
        Vec col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = m[i][j];
        Rat f = 2 * gram_bilinear(gram, col, v) / qv;
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i] - f * v[i];
    }
}

} // namespace

SquareClass spinor_norm_reflections(const LocalField& F, const QuadraticSpaceRealization& r) {
    const Mat& gram = r.gram;
    Mat m = r.action;
    std::size_t n = m.size();
    std::vector<Vec> basis = orthogonal_basis(gram);
    Rat sn(1);
    for (const Vec& w : basis) {
        Vec mw = mat_apply(m, w);
        if (mw == w) continue;
        Vec v1(n), v2(n);
        for (std::size_t i = 0; i < n; ++i) {
            v1[i] = w[i] - mw[i];
            v2[i] = w[i] + mw[i];
        }
        if (gram_q(gram, v1) != 0) {
            apply_reflection(gram, v1, m);
            sn *= gram_q(gram, v1);
        } else {
            // q(v1) + q(v2) = 4 q(w) != 0, so the companion vector works:
            // R_w R_{v2} maps m w back to w
            apply_reflection(gram, v2, m);
            apply_reflection(gram, w, m);
            sn *= gram_q(gram, v2) * gram_q(gram, w);
        }
    }
    if (!mat_equal(m, mat_identity(n)))
        throw InvariantViolation("spinor_norm_reflections: decomposition did not terminate");
    return square_class(F, sn);
}

int s_c_character(const SquareClass& c, const StableClassDatum& d) {
    return hilbert_symbol(d.field(), c, spinor_norm_formula(d));
}

int s_c_character(const SquareClass& c, const SOClassDatum& d) {
    return s_c_character(c, d.stable());
}

int s_shriek_c(const SquareClass& c, const StableClassDatum& gamma_prime,
               const StableClassDatum& gamma_double_prime) {
    return s_c_character(c, gamma_prime) * s_c_character(c, gamma_double_prime);
}

} // namespace mpsign
