#pragma once

// Small dense exact linear algebra over Q, sized for the desk-scale matrices
// of this project (dimension <= 9).

#include <cstddef>
#include <vector>

#include "mpsign/numeric.hpp"

namespace mpsign {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>; // row major, rectangular

inline Mat mat_zero(std::size_t rows, std::size_t cols) {
    return Mat(rows, Vec(cols, Rat(0)));
}

inline Mat mat_identity(std::size_t n) {
    Mat m = mat_zero(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    Mat c = mat_zero(n, p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < p; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

inline Vec mat_apply(const Mat& a, const Vec& v) {
    Vec out(a.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

inline Mat mat_transpose(const Mat& a) {
    if (a.empty()) return a;
    Mat t = mat_zero(a[0].size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

inline bool mat_equal(const Mat& a, const Mat& b) { return a == b; }

inline Rat mat_det(Mat a) {
    std::size_t n = a.size();
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rat f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

// ---- polynomials over Q, coefficients low degree first -------------------

using Poly = std::vector<Rat>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline std::size_t poly_deg(const Poly& p) {
    return p.empty() ? 0 : p.size() - 1; // deg(0) treated as 0 by callers
}

inline bool poly_is_zero(const Poly& p) { return p.empty(); }

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

inline Poly poly_monic(Poly p) {
    poly_trim(p);
    if (p.empty()) return p;
    Rat lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

// Remainder of a mod b, b != 0.
inline Poly poly_rem(Poly a, const Poly& b) {
    poly_trim(a);
    while (!a.empty() && a.size() >= b.size()) {
        Rat f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        poly_trim(a);
    }
    return a;
}

inline Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

inline bool poly_coprime(const Poly& a, const Poly& b) {
    Poly g = poly_gcd(a, b);
    return g.size() == 1;
}

// Monic minimal polynomial of a square matrix: the first power of M that is a
// linear combination of the smaller ones, found by exact row reduction on
// flattened powers.
inline Poly minimal_polynomial(const Mat& m) {
    std::size_t n = m.size();
    std::size_t dim = n * n;
    // rows[i]: reduced flattened M^i together with the combination that produced it
    std::vector<Vec> basis;        // reduced vectors, echelon by pivot position
    std::vector<std::size_t> piv;  // pivot column of each basis vector
    std::vector<Vec> combo;        // coordinates in terms of original powers
    Mat power = mat_identity(n);
    for (std::size_t k = 0; k <= n; ++k) {
        Vec flat(dim);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = power[i][j];
        Vec coord(n + 1, Rat(0));
        coord[k] = 1;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (flat[piv[b]] == 0) continue;
            Rat f = flat[piv[b]] / basis[b][piv[b]];
            for (std::size_t j = 0; j < dim; ++j) flat[j] -= f * basis[b][j];
            for (std::size_t j = 0; j <= n; ++j) coord[j] -= f * combo[b][j];
        }
        std::size_t pivot = dim;
        for (std::size_t j = 0; j < dim; ++j)
            if (flat[j] != 0) {
                pivot = j;
                break;
            }
        if (pivot == dim) {
            // coord now encodes the relation sum_i coord[i] M^i = 0, coord[k] = 1
            Poly p(coord.begin(), coord.begin() + k + 1);
            return poly_monic(p);
        }
        basis.push_back(std::move(flat));
        piv.push_back(pivot);
        combo.push_back(std::move(coord));
        power = mat_mul(power, m);
    }
    throw InvariantViolation("minimal_polynomial: no relation up to dimension (unreachable)");
}

} // namespace mpsign
