#pragma once

// Spinor norms of regular semisimple elements of odd special orthogonal
// groups. Two independent routes: the norm formula through a Hilbert-90
// witness, and a Cartan-Dieudonne reflection decomposition on an explicit
// rational quadratic-space realization. Both land in F^x / F^{x2}.

#include "mpsign/etale.hpp"
#include "mpsign/linalg.hpp"

namespace mpsign {

struct QuadraticSpaceRealization {
    Mat gram;   // symmetric block-diagonal form, one block per factor plus a line
    Mat action; // the regular element acting as an isometry of determinant 1
};

// square class of N_{K|F}(omega) for any witness omega with x = omega/tau(omega);
// never consults c.
SquareClass spinor_norm_formula(const StableClassDatum& d);
SquareClass spinor_norm_formula(const SOClassDatum& d);

// V = (direct sum of K_i with the forms Tr(c_i v tau(v))) + an anisotropic
// line; the datum acts by multiplication by x_i per block and trivially on
// the line.
QuadraticSpaceRealization realize_quadratic_space(const SOClassDatum& d);

// Classical spinor norm: decompose the action into reflections over Q and
// take the class of the product of the reflected norms in F.
SquareClass spinor_norm_reflections(const LocalField& F, const QuadraticSpaceRealization& r);

// Form evaluation helpers shared with the tests.
Rat gram_bilinear(const Mat& gram, const Vec& v, const Vec& w);
Rat gram_q(const Mat& gram, const Vec& v);

int s_c_character(const SquareClass& c, const StableClassDatum& d);
int s_c_character(const SquareClass& c, const SOClassDatum& d);

int s_shriek_c(const SquareClass& c, const StableClassDatum& gamma_prime,
               const StableClassDatum& gamma_double_prime);

} // namespace mpsign
