#ifndef SYMPROD_PIPELINES_HPP
#define SYMPROD_PIPELINES_HPP

#include <string>

#include "symprod/genera.hpp"
#include "symprod/pontrjagin.hpp"

namespace symprod {

/// exp(sum_r Psi_r(d^r_* td) t^r / r) for a y-free Todd-type class td on
/// module 1; Psi_r acts by degree scaling only since no y is present.
PontSeries todd_series_direct(const SpaceModel& model, const GradedClass& td);

/// exp(sum_r d^r_* c t^r / r) for a y-free Chern-type class c; the exponent
/// carries no Adams operation.
PontSeries chern_series_direct(const SpaceModel& model, const GradedClass& c);

/// Builds the Hirzebruch series for a base in the -y convention, applies the
/// (1-y)-normalization to every term, and takes the exact limit y -> 1.
/// The result is y-free; a genuine pole raises PoleError.
PontSeries chern_limit_series(const SpaceModel& model, const GradedClass& base);

/// (1-t^2)^{-ichi/2} * exp(sum_{odd r} Psi_r(d^r_* l_class) t^r / r) for a
/// y-free L-type class on module 1. The scalar factor enters through the
/// basepoint embedding t^m -> d^m_*(pt), with pt the first half-degree-0
/// basis element of module 1 (the class of an added basepoint).
PontSeries l_series(const SpaceModel& model, const GradedClass& l_class, long ichi);

enum class SpecializationTarget { todd, chern, l };

struct SpecializationReport {
    bool pass = true;
    std::string detail;  // first differing (n, basis label) with both values
};

/// Compares the named specialization of the Hirzebruch series against the
/// corresponding direct pipeline. The base is in the -y convention, so the
/// Hirzebruch parameter values 0 / -1 / 1 are realized by the stored-variable
/// substitutions y := 0, the limit y -> 1, and y := -1 respectively.
SpecializationReport verify_specialization(const SpaceModel& model, const GradedClass& base,
                                           SpecializationTarget target);

}  // namespace symprod

#endif
