#ifndef SYMPROD_IO_HPP
#define SYMPROD_IO_HPP

#include <string>

#include "symprod/genera.hpp"
#include "symprod/pontrjagin.hpp"

namespace symprod {

// Structured-text (JSON) documents. Rational values travel as exact "p/q"
// strings; indices and degrees as plain integers; unknown keys are rejected.

std::string serialize_rational(const Rational& r);
std::string serialize_yratfunc(const YRationalFunction& f);
std::string serialize_class(const GradedClass& c, unsigned module_index);
std::string serialize_model(const SpaceModel& model);

/// Serializes terms 0..limit (clamped to the truncation).
std::string serialize_pont_series(const PontSeries& s, unsigned limit);
std::string serialize_pont_series(const PontSeries& s);
std::string serialize_scalar_series(const ScalarSeries& s);

YRationalFunction parse_yratfunc_document(const std::string& text);

/// Parses and validates a model document; throws ParseError for malformed
/// documents and ValidationError for invariant violations.
SpaceModel parse_model_document(const std::string& text);
SpaceModel load_model(const std::string& path);

/// Parses a class document against a model's module list.
GradedClass parse_class_document(const std::string& text, const SpaceModel& model);
GradedClass load_class(const std::string& path, const SpaceModel& model);

std::string read_file(const std::string& path);

}  // namespace symprod

#endif
