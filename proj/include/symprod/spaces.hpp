#ifndef SYMPROD_SPACES_HPP
#define SYMPROD_SPACES_HPP

#include "symprod/pontrjagin.hpp"
#include "symprod/power_series.hpp"

namespace symprod {

/// Exact truncated expansion of the Hirzebruch power series
/// Q_y(x) = x (1 + y e^{-x}) / (1 - e^{-x}) to the given order;
/// normalized = true returns Q_y(x (1+y)) / (1+y), whose constant term is 1.
TruncatedPowerSeries q_series(unsigned order, bool normalized);

/// Module spec for complex projective n-space: basis b_0..b_n, where b_a is
/// the class of a linearly embedded subspace of dimension a (half degree a).
ModuleSpecPtr pn_module(unsigned n);

/// T_y of projective n-space: Q_y(h)^{n+1} / (1+y) reduced mod h^{n+1} and
/// capped with the fundamental class (h^k picks up b_{n-k}).
GradedClass hirzebruch_class_pn(unsigned n);

enum class ClassicalGenus { todd, l, chern };

/// Todd, L, or total Chern class of projective n-space from the Chern roots
/// of the tangent bundle; Rational coefficients.
GradedClass genus_class_pn(unsigned n, ClassicalGenus genus);

/// Model of a point: every module is rank one in half degree 0, all tensors
/// and diagonals are the scalar 1.
SpaceModel point_model(unsigned truncation);

/// Model realizing the symmetric powers of the projective line: module n is
/// projective n-space, b_a (x) b_b -> C(a+b, a) b_{a+b}, and d^r sends b_0
/// to b_0 and b_1 to r b_1.
SpaceModel p1_model(unsigned truncation);

}  // namespace symprod

#endif
