#include "symprod/pipelines.hpp"

#include <stdexcept>

#include "symprod/errors.hpp"

namespace symprod {

namespace {

void require_y_free(const GradedClass& c, const char* who) {
    if (!c.is_y_free())
        throw std::invalid_argument(std::string(who) + ": class must have Rational coefficients");
}

void require_base_module(const SpaceModel& model, const GradedClass& c, const char* who) {
    if (model.truncation() >= 1 && !same_module(c.module(), model.module(1)))
        throw std::invalid_argument(std::string(who) + ": class must live on module 1");
}

// The class of an added basepoint in module m: d^m of the first
// half-degree-0 basis element of module 1 (the unit for m = 0).
GradedClass basepoint_shift(const SpaceModel& model, unsigned m) {
    if (m == 0) return model.unit_class();
    const auto& module1 = *model.module(1);
    for (std::size_t i = 0; i < module1.rank(); ++i) {
        if (module1.half_degree(i) == 0) {
            return push_forward(model.diagonal(m),
                                GradedClass::basis_element(model.module(1), i));
        }
    }
    throw std::invalid_argument("l_series: module 1 has no half-degree-0 basis element");
}

}  // namespace

PontSeries todd_series_direct(const SpaceModel& model, const GradedClass& td) {
    require_y_free(td, "todd_series_direct");
    require_base_module(model, td, "todd_series_direct");
    PontSeries inner(model);
    for (unsigned r = 1; r <= model.truncation(); ++r) {
        const GradedClass pushed = push_forward(model.diagonal(r), td);
        inner.set_term(r, adams_degree_scale(r, pushed)
                              .scaled(YRationalFunction(Rational(1, static_cast<long>(r)))));
    }
    return pont_exp(inner);
}

PontSeries chern_series_direct(const SpaceModel& model, const GradedClass& c) {
    require_y_free(c, "chern_series_direct");
    require_base_module(model, c, "chern_series_direct");
    PontSeries inner(model);
    for (unsigned r = 1; r <= model.truncation(); ++r)
        inner.set_term(r, push_forward(model.diagonal(r), c)
                              .scaled(YRationalFunction(Rational(1, static_cast<long>(r)))));
    return pont_exp(inner);
}

PontSeries chern_limit_series(const SpaceModel& model, const GradedClass& base) {
    const PontSeries series = symmetric_class_series(model, base);
    PontSeries out(model);
    for (unsigned n = 0; n <= model.truncation(); ++n) {
        const GradedClass normalized = normalize(series.term(n), NormalizationSign::minus);
        out.set_term(n, specialize_y(normalized, Rational(1), SpecializeMode::limit));
    }
    return out;
}

PontSeries l_series(const SpaceModel& model, const GradedClass& l_class, long ichi) {
    require_y_free(l_class, "l_series");
    require_base_module(model, l_class, "l_series");
    PontSeries inner(model);
    for (unsigned r = 1; r <= model.truncation(); r += 2) {
        const GradedClass pushed = push_forward(model.diagonal(r), l_class);
        inner.set_term(r, adams_degree_scale(r, pushed)
                              .scaled(YRationalFunction(Rational(1, static_cast<long>(r)))));
    }
    const PontSeries odd_part = pont_exp(inner);
    if (ichi == 0) return odd_part;

    const ScalarSeries scalar =
        binomial_series(Rational(-ichi, 2), -1, 2, model.truncation());
    PontSeries even_part(model);
    for (unsigned m = 0; m <= model.truncation(); ++m) {
        if (scalar[m].is_zero()) continue;
        even_part.set_term(m, basepoint_shift(model, m).scaled(scalar[m]));
    }
    return pont_mul(even_part, odd_part);
}

namespace {

std::string first_difference(const PontSeries& a, const PontSeries& b) {
    for (unsigned n = 0; n <= a.truncation(); ++n) {
        if (a.term(n) == b.term(n)) continue;
        const auto& module = *a.model().module(n);
        for (std::size_t i = 0; i < module.rank(); ++i) {
            const YRationalFunction va = a.term(n).coefficient(i);
            const YRationalFunction vb = b.term(n).coefficient(i);
            if (va != vb)
                return "t^" + std::to_string(n) + ", basis '" + module.label(i) +
                       "': " + va.str() + " vs " + vb.str();
        }
    }
    return "";
}

}  // namespace

SpecializationReport verify_specialization(const SpaceModel& model, const GradedClass& base,
                                           SpecializationTarget target) {
    const PontSeries series = symmetric_class_series(model, base);
    PontSeries lhs(model);
    PontSeries rhs(model);

    switch (target) {
        case SpecializationTarget::todd: {
            for (unsigned n = 0; n <= model.truncation(); ++n)
                lhs.set_term(n, specialize_y(series.term(n), Rational(0), SpecializeMode::evaluate));
            rhs = todd_series_direct(model,
                                     specialize_y(base, Rational(0), SpecializeMode::evaluate));
            break;
        }
        case SpecializationTarget::chern: {
            lhs = chern_limit_series(model, base);
            const GradedClass chern_base = specialize_y(
                normalize(base, NormalizationSign::minus), Rational(1), SpecializeMode::limit);
            rhs = chern_series_direct(model, chern_base);
            break;
        }
        case SpecializationTarget::l: {
            // Stored y = -1 realizes the Hirzebruch parameter value 1, and
            // stored y = 1 realizes the parameter value -1, whose degree-zero
            // part is the Euler characteristic feeding the scalar factor.
            for (unsigned n = 0; n <= model.truncation(); ++n)
                lhs.set_term(n, adams_degree_scale(2, specialize_y(series.term(n), Rational(-1),
                                                                   SpecializeMode::evaluate)));
            const GradedClass l_base =
                adams_degree_scale(2, specialize_y(base, Rational(-1), SpecializeMode::evaluate));
            const GradedClass euler_part =
                specialize_y(base, Rational(1), SpecializeMode::evaluate);
            YRationalFunction euler_total;
            for (const auto& [i, v] : euler_part.coefficients())
                if (euler_part.module()->half_degree(i) == 0) euler_total += v;
            const Rational ichi =
                euler_total.is_zero() ? Rational(0) : euler_total.constant_value();
            if (!ichi.is_integer())
                return {false, "degree-zero Euler characteristic " + ichi.str() +
                                   " is not an integer"};
            rhs = l_series(model, l_base, ichi.numerator().get_si());
            break;
        }
    }

    const std::string diff = first_difference(lhs, rhs);
    if (diff.empty()) return {true, ""};
    return {false, diff};
}

}  // namespace symprod
