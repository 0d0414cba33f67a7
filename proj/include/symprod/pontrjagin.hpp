#ifndef SYMPROD_PONTRJAGIN_HPP
#define SYMPROD_PONTRJAGIN_HPP

#include <map>
#include <utility>
#include <vector>

#include "symprod/graded.hpp"

namespace symprod {

/// Sparse bilinear product component mu_{n,m}: basis_n x basis_m -> module_{n+m}.
class BilinearTensor {
public:
    struct Entry {
        std::size_t left;
        std::size_t right;
        std::size_t out;
        Rational value;
    };

    void add_entry(std::size_t left, std::size_t right, std::size_t out, const Rational& value);
    const std::vector<Entry>& entries() const { return entries_; }

    /// Terms c * b_out for a fixed (left, right) pair.
    const std::vector<std::pair<std::size_t, Rational>>* find(std::size_t left,
                                                              std::size_t right) const;

private:
    std::vector<Entry> entries_;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, Rational>>>
        by_pair_;
};

/// Family of graded modules for n = 0..N with the Pontrjagin product
/// tensors and the diagonal push-forwards d^r. Immutable once validated.
class SpaceModel {
public:
    SpaceModel(unsigned truncation, std::vector<ModuleSpecPtr> modules,
               std::map<std::pair<unsigned, unsigned>, BilinearTensor> tensors,
               std::vector<DegreeMap> diagonals);

    unsigned truncation() const { return N_; }
    const ModuleSpecPtr& module(unsigned n) const { return modules_.at(n); }
    const std::vector<ModuleSpecPtr>& modules() const { return modules_; }

    const BilinearTensor& tensor(unsigned n, unsigned m) const;

    /// d^r for r = 1..N.
    const DegreeMap& diagonal(unsigned r) const;

    /// mu_{n,m}(a (x) b) with a on module(n) and b on module(m).
    GradedClass multiply(unsigned n, unsigned m, const GradedClass& a, const GradedClass& b) const;

    /// The class 1 in module(0).
    GradedClass unit_class() const;
    std::size_t unit_index() const { return unit_index_; }

    /// Checks every structural invariant; throws ValidationError naming the
    /// violated invariant and the offending indices.
    void validate() const;

private:
    unsigned N_;
    std::vector<ModuleSpecPtr> modules_;
    std::map<std::pair<unsigned, unsigned>, BilinearTensor> tensors_;
    std::vector<DegreeMap> diagonals_;
    std::size_t unit_index_ = 0;
    BilinearTensor empty_tensor_;
};

/// Truncated element of the Pontrjagin ring: sum_{n<=N} a_n t^n with a_n a
/// class in model.module(n).
class PontSeries {
public:
    explicit PontSeries(const SpaceModel& model);

    const SpaceModel& model() const { return *model_; }
    unsigned truncation() const { return model_->truncation(); }
    const GradedClass& term(unsigned n) const { return terms_.at(n); }
    void set_term(unsigned n, GradedClass value);

    PontSeries& operator+=(const PontSeries& o);
    friend PontSeries operator+(PontSeries a, const PontSeries& b) { return a += b; }
    PontSeries scaled(const YRationalFunction& c) const;

    friend bool operator==(const PontSeries& a, const PontSeries& b);
    friend bool operator!=(const PontSeries& a, const PontSeries& b) { return !(a == b); }

private:
    const SpaceModel* model_;
    std::vector<GradedClass> terms_;
};

/// The constant series 1.
PontSeries unit_series(const SpaceModel& model);

/// Cauchy product in the Pontrjagin ring, truncated at N.
PontSeries pont_mul(const PontSeries& a, const PontSeries& b);

/// exp of a series with zero constant term, by Horner accumulation of
/// products with exact division by k!.
PontSeries pont_exp(const PontSeries& a);

/// log of a series with constant term 1; inverse of pont_exp.
PontSeries pont_log(const PontSeries& u);

/// exp(sum_{r=1..N} Psi_r(d^r_* base) t^r / r) for base on module(1),
/// in the T_{(-y)} convention.
PontSeries symmetric_class_series(const SpaceModel& model, const GradedClass& base);

/// Partition of n stored as cycle multiplicities: k[r-1] cycles of length r.
struct CycleType {
    unsigned n = 0;
    std::vector<unsigned> multiplicities;  // size n

    friend bool operator==(const CycleType&, const CycleType&) = default;
};

/// All cycle types of the symmetric group on n letters together with the
/// number of permutations of each type, in lexicographic order of
/// (k_1, ..., k_n). The counts sum to n!.
std::vector<std::pair<CycleType, Integer>> enumerate_cycle_types(unsigned n);

/// The same series as symmetric_class_series, computed as a direct sum over
/// cycle types with weights N_Pi / n! and no call to pont_exp. Serves as the
/// independent oracle for the exponential formula. Uses d^r_* after Psi_r;
/// the exponential route applies them in the opposite order.
PontSeries partition_sum_series(const SpaceModel& model, const GradedClass& base);

}  // namespace symprod

#endif
