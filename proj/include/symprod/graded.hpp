#ifndef SYMPROD_GRADED_HPP
#define SYMPROD_GRADED_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "symprod/yratfunc.hpp"

namespace symprod {

/// Ordered basis of an even-graded homology module. Entry k sits in
/// homological degree 2 * half_degree.
class GradedModuleSpec {
public:
    struct BasisElement {
        std::string label;
        unsigned half_degree = 0;
        friend bool operator==(const BasisElement&, const BasisElement&) = default;
    };

    GradedModuleSpec() = default;
    explicit GradedModuleSpec(std::vector<BasisElement> basis);

    std::size_t rank() const { return basis_.size(); }
    const BasisElement& element(std::size_t i) const { return basis_.at(i); }
    const std::vector<BasisElement>& basis() const { return basis_; }
    unsigned half_degree(std::size_t i) const { return basis_.at(i).half_degree; }
    const std::string& label(std::size_t i) const { return basis_.at(i).label; }

    /// Index of a label, or rank() when absent.
    std::size_t find(const std::string& label) const;

    friend bool operator==(const GradedModuleSpec& a, const GradedModuleSpec& b) {
        return a.basis_ == b.basis_;
    }

private:
    std::vector<BasisElement> basis_;
};

using ModuleSpecPtr = std::shared_ptr<const GradedModuleSpec>;

bool same_module(const ModuleSpecPtr& a, const ModuleSpecPtr& b);

/// Homology class over a module's basis; sparse, no stored zeros.
class GradedClass {
public:
    GradedClass() = default;
    explicit GradedClass(ModuleSpecPtr module) : module_(std::move(module)) {}

    static GradedClass basis_element(ModuleSpecPtr module, std::size_t index,
                                     const YRationalFunction& coeff = YRationalFunction(Rational(1)));

    const ModuleSpecPtr& module() const { return module_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<std::size_t, YRationalFunction>& coefficients() const { return coeffs_; }
    YRationalFunction coefficient(std::size_t index) const;
    void set_coefficient(std::size_t index, const YRationalFunction& v);
    void add_to_coefficient(std::size_t index, const YRationalFunction& v);

    /// True when every coefficient is a constant of Q(y), i.e. a Rational.
    bool is_y_free() const;

    GradedClass operator-() const;
    GradedClass& operator+=(const GradedClass& o);
    GradedClass& operator-=(const GradedClass& o);
    friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
    friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
    GradedClass scaled(const YRationalFunction& c) const;

    friend bool operator==(const GradedClass& a, const GradedClass& b);
    friend bool operator!=(const GradedClass& a, const GradedClass& b) { return !(a == b); }

    std::string str() const;

private:
    ModuleSpecPtr module_;
    std::map<std::size_t, YRationalFunction> coeffs_;
};

/// Degree-preserving linear map between graded modules; every entry connects
/// basis elements of equal half degree.
class DegreeMap {
public:
    struct Entry {
        std::size_t target_index;
        Rational value;
    };

    DegreeMap(ModuleSpecPtr source, ModuleSpecPtr target);

    static DegreeMap identity(const ModuleSpecPtr& module);

    void add_entry(std::size_t source_index, std::size_t target_index, const Rational& value);

    const ModuleSpecPtr& source() const { return source_; }
    const ModuleSpecPtr& target() const { return target_; }
    const std::vector<std::vector<Entry>>& rows() const { return rows_; }

private:
    ModuleSpecPtr source_;
    ModuleSpecPtr target_;
    std::vector<std::vector<Entry>> rows_;  // indexed by source basis index
};

/// r-th homological Adams operation: the half-degree-k part is scaled by
/// 1/r^k and y is replaced by y^r.
GradedClass adams(unsigned r, const GradedClass& c);

/// Only the degree part of the Adams operation: scale half degree k by
/// 1/r^k, leave y alone. Coincides with adams() on y-free classes.
GradedClass adams_degree_scale(unsigned r, const GradedClass& c);

enum class NormalizationSign { plus, minus };

/// Multiplies the half-degree-k part by (1 + y)^{-k} (plus) or
/// (1 - y)^{-k} (minus).
GradedClass normalize(const GradedClass& c, NormalizationSign sign);

/// Inverse of normalize with the same sign.
GradedClass denormalize(const GradedClass& c, NormalizationSign sign);

GradedClass push_forward(const DegreeMap& m, const GradedClass& c);

enum class SpecializeMode { evaluate, limit };

/// Componentwise evaluation/limit at y0; the result has Rational
/// coefficients. A PoleError is rethrown with the offending basis label.
GradedClass specialize_y(const GradedClass& c, const Rational& y0, SpecializeMode mode);

/// Componentwise y -> -y; converts between the two sign conventions for the
/// Hirzebruch parameter.
GradedClass negate_y(const GradedClass& c);

}  // namespace symprod

#endif
