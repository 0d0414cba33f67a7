#include "symprod/graded.hpp"

#include <sstream>
#include <stdexcept>

#include "symprod/errors.hpp"

namespace symprod {

GradedModuleSpec::GradedModuleSpec(std::vector<BasisElement> basis) : basis_(std::move(basis)) {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = i + 1; j < basis_.size(); ++j)
            if (basis_[i].label == basis_[j].label)
                throw ValidationError("duplicate-label",
                                      "duplicate basis label '" + basis_[i].label + "'");
}

std::size_t GradedModuleSpec::find(const std::string& label) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].label == label) return i;
    return basis_.size();
}

bool same_module(const ModuleSpecPtr& a, const ModuleSpecPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

GradedClass GradedClass::basis_element(ModuleSpecPtr module, std::size_t index,
                                       const YRationalFunction& coeff) {
    GradedClass c(std::move(module));
    if (index >= c.module_->rank())
        throw std::out_of_range("GradedClass: basis index out of range");
    c.set_coefficient(index, coeff);
    return c;
}

YRationalFunction GradedClass::coefficient(std::size_t index) const {
    const auto it = coeffs_.find(index);
    return it == coeffs_.end() ? YRationalFunction() : it->second;
}

void GradedClass::set_coefficient(std::size_t index, const YRationalFunction& v) {
    if (index >= module_->rank())
        throw std::out_of_range("GradedClass: basis index out of range");
    if (v.is_zero())
        coeffs_.erase(index);
    else
        coeffs_[index] = v;
}

void GradedClass::add_to_coefficient(std::size_t index, const YRationalFunction& v) {
    set_coefficient(index, coefficient(index) + v);
}

bool GradedClass::is_y_free() const {
    for (const auto& [i, v] : coeffs_)
        if (!v.is_constant()) return false;
    return true;
}

GradedClass GradedClass::operator-() const {
    GradedClass r(module_);
    for (const auto& [i, v] : coeffs_) r.coeffs_.emplace(i, -v);
    return r;
}

GradedClass& GradedClass::operator+=(const GradedClass& o) {
    if (!same_module(module_, o.module_))
        throw std::invalid_argument("GradedClass: module mismatch in +");
    for (const auto& [i, v] : o.coeffs_) add_to_coefficient(i, v);
    return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& o) {
    if (!same_module(module_, o.module_))
        throw std::invalid_argument("GradedClass: module mismatch in -");
    for (const auto& [i, v] : o.coeffs_) add_to_coefficient(i, -v);
    return *this;
}

GradedClass GradedClass::scaled(const YRationalFunction& c) const {
    GradedClass r(module_);
    if (c.is_zero()) return r;
    for (const auto& [i, v] : coeffs_) r.coeffs_.emplace(i, v * c);
    return r;
}

bool operator==(const GradedClass& a, const GradedClass& b) {
    return same_module(a.module_, b.module_) && a.coeffs_ == b.coeffs_;
}

std::string GradedClass::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, v] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        const std::string cs = v.str();
        const bool needs_parens = cs.find(' ') != std::string::npos ||
                                  cs.find('/') != std::string::npos;
        if (needs_parens)
            os << "(" << cs << ")";
        else
            os << cs;
        os << "*" << module_->label(i);
    }
    return os.str();
}

DegreeMap::DegreeMap(ModuleSpecPtr source, ModuleSpecPtr target)
    : source_(std::move(source)), target_(std::move(target)), rows_(source_->rank()) {}

DegreeMap DegreeMap::identity(const ModuleSpecPtr& module) {
    DegreeMap m(module, module);
    for (std::size_t i = 0; i < module->rank(); ++i) m.add_entry(i, i, Rational(1));
    return m;
}

void DegreeMap::add_entry(std::size_t source_index, std::size_t target_index,
                          const Rational& value) {
    if (source_index >= source_->rank() || target_index >= target_->rank())
        throw std::out_of_range("DegreeMap: index out of range");
    if (source_->half_degree(source_index) != target_->half_degree(target_index))
        throw ValidationError("degree",
                              "DegreeMap entry connects half degrees " +
                                  std::to_string(source_->half_degree(source_index)) + " and " +
                                  std::to_string(target_->half_degree(target_index)));
    if (value.is_zero()) return;
    rows_[source_index].push_back({target_index, value});
}

GradedClass adams(unsigned r, const GradedClass& c) {
    if (r == 0) throw std::domain_error("adams: r must be >= 1");
    if (r == 1) return c;
    GradedClass out(c.module());
    for (const auto& [i, v] : c.coefficients()) {
        const unsigned k = c.module()->half_degree(i);
        const Rational scale(Integer(1), int_pow(Integer(r), k));
        out.set_coefficient(i, v.substitute_power(r) * YRationalFunction(scale));
    }
    return out;
}

GradedClass adams_degree_scale(unsigned r, const GradedClass& c) {
    if (r == 0) throw std::domain_error("adams_degree_scale: r must be >= 1");
    if (r == 1) return c;
    GradedClass out(c.module());
    for (const auto& [i, v] : c.coefficients()) {
        const unsigned k = c.module()->half_degree(i);
        out.set_coefficient(i, v * YRationalFunction(Rational(Integer(1), int_pow(Integer(r), k))));
    }
    return out;
}

namespace {

GradedClass scale_by_degree_power(const GradedClass& c, NormalizationSign sign, bool invert) {
    const YPolynomial base = sign == NormalizationSign::plus
                                 ? YPolynomial(Rational(1)) + YPolynomial::variable()
                                 : YPolynomial(Rational(1)) - YPolynomial::variable();
    GradedClass out(c.module());
    for (const auto& [i, v] : c.coefficients()) {
        const unsigned k = c.module()->half_degree(i);
        const YRationalFunction factor =
            invert ? YRationalFunction(YPolynomial(Rational(1)), base.pow(k))
                   : YRationalFunction(base.pow(k));
        out.set_coefficient(i, v * factor);
    }
    return out;
}

}  // namespace

GradedClass normalize(const GradedClass& c, NormalizationSign sign) {
    return scale_by_degree_power(c, sign, /*invert=*/true);
}

GradedClass denormalize(const GradedClass& c, NormalizationSign sign) {
    return scale_by_degree_power(c, sign, /*invert=*/false);
}

GradedClass push_forward(const DegreeMap& m, const GradedClass& c) {
    if (!same_module(m.source(), c.module()))
        throw std::invalid_argument("push_forward: class does not live on the map's source");
    GradedClass out(m.target());
    for (const auto& [i, v] : c.coefficients())
        for (const auto& entry : m.rows()[i])
            out.add_to_coefficient(entry.target_index, v * YRationalFunction(entry.value));
    return out;
}

GradedClass negate_y(const GradedClass& c) {
    GradedClass out(c.module());
    for (const auto& [i, v] : c.coefficients()) out.set_coefficient(i, v.negate_variable());
    return out;
}

GradedClass specialize_y(const GradedClass& c, const Rational& y0, SpecializeMode mode) {
    GradedClass out(c.module());
    for (const auto& [i, v] : c.coefficients()) {
        try {
            const Rational value =
                mode == SpecializeMode::evaluate ? v.evaluate(y0) : v.limit(y0);
            out.set_coefficient(i, YRationalFunction(value));
        } catch (const PoleError& e) {
            throw PoleError(std::string(e.what()) + " in coefficient of '" +
                            c.module()->label(i) + "'");
        }
    }
    return out;
}

}  // namespace symprod
