#include "symprod/pontrjagin.hpp"

#include <algorithm>
#include <stdexcept>

#include "symprod/errors.hpp"

namespace symprod {

void BilinearTensor::add_entry(std::size_t left, std::size_t right, std::size_t out,
                               const Rational& value) {
    if (value.is_zero()) return;
    entries_.push_back({left, right, out, value});
    by_pair_[{left, right}].emplace_back(out, value);
}

const std::vector<std::pair<std::size_t, Rational>>* BilinearTensor::find(
    std::size_t left, std::size_t right) const {
    const auto it = by_pair_.find({left, right});
    return it == by_pair_.end() ? nullptr : &it->second;
}

SpaceModel::SpaceModel(unsigned truncation, std::vector<ModuleSpecPtr> modules,
                       std::map<std::pair<unsigned, unsigned>, BilinearTensor> tensors,
                       std::vector<DegreeMap> diagonals)
    : N_(truncation),
      modules_(std::move(modules)),
      tensors_(std::move(tensors)),
      diagonals_(std::move(diagonals)) {
    if (modules_.size() != N_ + 1)
        throw ValidationError("module-count", "expected " + std::to_string(N_ + 1) + " modules");
    for (const auto& m : modules_)
        if (!m) throw ValidationError("module-count", "null module spec");
    if (diagonals_.size() != (N_ == 0 ? 0 : N_))
        throw ValidationError("diagonal-count",
                              "expected " + std::to_string(N_ == 0 ? 0 : N_) + " diagonals");
    // The n = 0 slot must be rank one, concentrated in half degree 0.
    if (modules_[0]->rank() != 1 || modules_[0]->half_degree(0) != 0)
        throw ValidationError("unit-slot",
                              "module 0 must have exactly one basis element of half degree 0");
    unit_index_ = 0;
}

const BilinearTensor& SpaceModel::tensor(unsigned n, unsigned m) const {
    if (n + m > N_) throw std::out_of_range("SpaceModel: tensor beyond truncation");
    const auto it = tensors_.find({n, m});
    return it == tensors_.end() ? empty_tensor_ : it->second;
}

const DegreeMap& SpaceModel::diagonal(unsigned r) const {
    if (r < 1 || r > N_) throw std::out_of_range("SpaceModel: diagonal index out of range");
    return diagonals_[r - 1];
}

GradedClass SpaceModel::multiply(unsigned n, unsigned m, const GradedClass& a,
                                 const GradedClass& b) const {
    if (!same_module(a.module(), modules_.at(n)) || !same_module(b.module(), modules_.at(m)))
        throw std::invalid_argument("SpaceModel::multiply: classes on wrong modules");
    const BilinearTensor& mu = tensor(n, m);
    GradedClass out(modules_.at(n + m));
    for (const auto& [i, vi] : a.coefficients()) {
        for (const auto& [j, vj] : b.coefficients()) {
            const auto* terms = mu.find(i, j);
            if (!terms) continue;
            const YRationalFunction prod = vi * vj;
            for (const auto& [k, c] : *terms)
                out.add_to_coefficient(k, prod * YRationalFunction(c));
        }
    }
    return out;
}

GradedClass SpaceModel::unit_class() const {
    return GradedClass::basis_element(modules_[0], unit_index_);
}

void SpaceModel::validate() const {
    // Index ranges and additive degree preservation.
    for (const auto& [nm, mu] : tensors_) {
        const auto [n, m] = nm;
        if (n + m > N_)
            throw ValidationError("index-range", "tensor (" + std::to_string(n) + "," +
                                                     std::to_string(m) + ") beyond truncation");
        for (const auto& e : mu.entries()) {
            if (e.left >= modules_[n]->rank() || e.right >= modules_[m]->rank() ||
                e.out >= modules_[n + m]->rank())
                throw ValidationError("index-range",
                                      "tensor (" + std::to_string(n) + "," + std::to_string(m) +
                                          ") entry out of range");
            if (modules_[n]->half_degree(e.left) + modules_[m]->half_degree(e.right) !=
                modules_[n + m]->half_degree(e.out))
                throw ValidationError(
                    "degree", "tensor (" + std::to_string(n) + "," + std::to_string(m) +
                                  ") entry (" + std::to_string(e.left) + "," +
                                  std::to_string(e.right) + ") -> " + std::to_string(e.out) +
                                  " does not add half degrees");
        }
    }

    // Unit law: mu_{0,n}(1 (x) b) = b = mu_{n,0}(b (x) 1).
    for (unsigned n = 0; n <= N_; ++n) {
        for (std::size_t j = 0; j < modules_[n]->rank(); ++j) {
            const GradedClass b = GradedClass::basis_element(modules_[n], j);
            if (multiply(0, n, unit_class(), b) != b)
                throw ValidationError("unit", "left unit law fails on module " +
                                                  std::to_string(n) + ", basis " +
                                                  std::to_string(j));
            if (multiply(n, 0, b, unit_class()) != b)
                throw ValidationError("unit", "right unit law fails on module " +
                                                  std::to_string(n) + ", basis " +
                                                  std::to_string(j));
        }
    }

    // Commutativity on basis elements.
    for (unsigned n = 0; n <= N_; ++n) {
        for (unsigned m = 0; n + m <= N_; ++m) {
            for (std::size_t i = 0; i < modules_[n]->rank(); ++i) {
                for (std::size_t j = 0; j < modules_[m]->rank(); ++j) {
                    const GradedClass a = GradedClass::basis_element(modules_[n], i);
                    const GradedClass b = GradedClass::basis_element(modules_[m], j);
                    if (multiply(n, m, a, b) != multiply(m, n, b, a))
                        throw ValidationError(
                            "commutativity", "tensors (" + std::to_string(n) + "," +
                                                 std::to_string(m) + ") disagree on basis pair (" +
                                                 std::to_string(i) + "," + std::to_string(j) + ")");
                }
            }
        }
    }

    // Associativity on basis elements, up to truncation.
    for (unsigned n = 0; n <= N_; ++n) {
        for (unsigned m = 0; n + m <= N_; ++m) {
            for (unsigned p = 0; n + m + p <= N_; ++p) {
                for (std::size_t i = 0; i < modules_[n]->rank(); ++i) {
                    for (std::size_t j = 0; j < modules_[m]->rank(); ++j) {
                        for (std::size_t k = 0; k < modules_[p]->rank(); ++k) {
                            const GradedClass a = GradedClass::basis_element(modules_[n], i);
                            const GradedClass b = GradedClass::basis_element(modules_[m], j);
                            const GradedClass c = GradedClass::basis_element(modules_[p], k);
                            const GradedClass left =
                                multiply(n + m, p, multiply(n, m, a, b), c);
                            const GradedClass right =
                                multiply(n, m + p, a, multiply(m, p, b, c));
                            if (left != right)
                                throw ValidationError(
                                    "associativity",
                                    "(" + std::to_string(n) + "," + std::to_string(m) + "," +
                                        std::to_string(p) + ") fails on basis (" +
                                        std::to_string(i) + "," + std::to_string(j) + "," +
                                        std::to_string(k) + ")");
                        }
                    }
                }
            }
        }
    }

    // Diagonals: d^1 is the identity on module(1); entries preserve degree
    // (enforced by DegreeMap construction) and stay in range (idem).
    if (N_ >= 1) {
        const DegreeMap& d1 = diagonal(1);
        if (!same_module(d1.source(), modules_[1]) || !same_module(d1.target(), modules_[1]))
            throw ValidationError("d1-identity", "d^1 must map module 1 to itself");
        for (std::size_t i = 0; i < modules_[1]->rank(); ++i) {
            const GradedClass b = GradedClass::basis_element(modules_[1], i);
            if (push_forward(d1, b) != b)
                throw ValidationError("d1-identity",
                                      "d^1 is not the identity on basis " + std::to_string(i));
        }
        for (unsigned r = 1; r <= N_; ++r) {
            const DegreeMap& dr = diagonal(r);
            if (!same_module(dr.source(), modules_[1]) || !same_module(dr.target(), modules_[r]))
                throw ValidationError("diagonal-shape",
                                      "d^" + std::to_string(r) + " has wrong source or target");
        }
    }
}

PontSeries::PontSeries(const SpaceModel& model) : model_(&model) {
    terms_.reserve(model.truncation() + 1);
    for (unsigned n = 0; n <= model.truncation(); ++n)
        terms_.emplace_back(GradedClass(model.module(n)));
}

void PontSeries::set_term(unsigned n, GradedClass value) {
    if (!same_module(value.module(), model_->module(n)))
        throw std::invalid_argument("PontSeries: term on wrong module");
    terms_.at(n) = std::move(value);
}

PontSeries& PontSeries::operator+=(const PontSeries& o) {
    if (model_ != o.model_) throw std::invalid_argument("PontSeries: model mismatch");
    for (unsigned n = 0; n <= truncation(); ++n) terms_[n] += o.terms_[n];
    return *this;
}

PontSeries PontSeries::scaled(const YRationalFunction& c) const {
    PontSeries r(*model_);
    for (unsigned n = 0; n <= truncation(); ++n) r.terms_[n] = terms_[n].scaled(c);
    return r;
}

bool operator==(const PontSeries& a, const PontSeries& b) {
    if (a.truncation() != b.truncation()) return false;
    for (unsigned n = 0; n <= a.truncation(); ++n)
        if (a.terms_[n] != b.terms_[n]) return false;
    return true;
}

PontSeries unit_series(const SpaceModel& model) {
    PontSeries s(model);
    s.set_term(0, model.unit_class());
    return s;
}

PontSeries pont_mul(const PontSeries& a, const PontSeries& b) {
    if (&a.model() != &b.model()) throw std::invalid_argument("pont_mul: model mismatch");
    const SpaceModel& model = a.model();
    PontSeries c(model);
    for (unsigned i = 0; i <= model.truncation(); ++i) {
        if (a.term(i).is_zero()) continue;
        for (unsigned j = 0; i + j <= model.truncation(); ++j) {
            if (b.term(j).is_zero()) continue;
            GradedClass sum = c.term(i + j);
            sum += model.multiply(i, j, a.term(i), b.term(j));
            c.set_term(i + j, std::move(sum));
        }
    }
    return c;
}

PontSeries pont_exp(const PontSeries& a) {
    if (!a.term(0).is_zero())
        throw std::domain_error("pont_exp: nonzero constant term");
    const SpaceModel& model = a.model();
    const GradedClass one = model.unit_class();
    // Horner: exp(a) = 1 + a (1 + a/2 (1 + a/3 (...))).
    PontSeries res = unit_series(model);
    for (unsigned k = model.truncation(); k >= 1; --k) {
        res = pont_mul(a, res).scaled(YRationalFunction(Rational(1, static_cast<long>(k))));
        GradedClass c0 = res.term(0);
        c0 += one;
        res.set_term(0, std::move(c0));
    }
    return res;
}

PontSeries pont_log(const PontSeries& u) {
    const SpaceModel& model = u.model();
    if (u.term(0) != model.unit_class())
        throw std::domain_error("pont_log: constant term is not the unit");
    PontSeries x = u;
    x.set_term(0, GradedClass(model.module(0)));
    // log(1 + x) = sum_{k>=1} (-1)^{k+1} x^k / k.
    PontSeries res(model);
    PontSeries power = x;
    for (unsigned k = 1; k <= model.truncation(); ++k) {
        const Rational coeff = Rational(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
        res += power.scaled(YRationalFunction(coeff));
        if (k < model.truncation()) power = pont_mul(power, x);
    }
    return res;
}

PontSeries symmetric_class_series(const SpaceModel& model, const GradedClass& base) {
    const unsigned N = model.truncation();
    if (N >= 1 && !same_module(base.module(), model.module(1)))
        throw std::invalid_argument("symmetric_class_series: base must live on module 1");
    PontSeries inner(model);
    for (unsigned r = 1; r <= N; ++r) {
        const GradedClass pushed = push_forward(model.diagonal(r), base);
        inner.set_term(r, adams(r, pushed).scaled(
                              YRationalFunction(Rational(1, static_cast<long>(r)))));
    }
    return pont_exp(inner);
}

std::vector<std::pair<CycleType, Integer>> enumerate_cycle_types(unsigned n) {
    std::vector<std::pair<CycleType, Integer>> out;
    CycleType current;
    current.n = n;
    current.multiplicities.assign(n, 0u);

    // Fill multiplicities from the largest part downward.
    const auto count = [n](const CycleType& ct) {
        Integer den(1);
        for (unsigned r = 1; r <= ct.n; ++r) {
            const unsigned k = ct.multiplicities[r - 1];
            den *= factorial(k) * int_pow(Integer(r), k);
        }
        return factorial(n) / den;
    };
    const auto rec = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(current, count(current));
            return;
        }
        for (unsigned r = std::min(remaining, max_part); r >= 1; --r) {
            current.multiplicities[r - 1] += 1;
            self(self, remaining - r, r);
            current.multiplicities[r - 1] -= 1;
        }
    };
    rec(rec, n, n == 0 ? 1 : n);

    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.first.multiplicities < b.first.multiplicities;
    });
    return out;
}

PontSeries partition_sum_series(const SpaceModel& model, const GradedClass& base) {
    const unsigned N = model.truncation();
    if (N >= 1 && !same_module(base.module(), model.module(1)))
        throw std::invalid_argument("partition_sum_series: base must live on module 1");

    // Per-cycle-length factor d^r_*(Psi_r(base)); the localization order.
    std::vector<GradedClass> factor;  // index r-1
    for (unsigned r = 1; r <= N; ++r)
        factor.push_back(push_forward(model.diagonal(r), adams(r, base)));

    PontSeries out(model);
    out.set_term(0, model.unit_class());
    for (unsigned n = 1; n <= N; ++n) {
        GradedClass total(model.module(n));
        for (const auto& [cycle_type, n_pi] : enumerate_cycle_types(n)) {
            (void)n_pi;
            // Weight N_Pi / n! = 1 / prod_r (k_r! r^{k_r}), kept in factored
            // form to avoid n! in intermediates.
            Rational weight(1);
            GradedClass product = model.unit_class();
            unsigned placed = 0;
            for (unsigned r = 1; r <= n; ++r) {
                const unsigned k = cycle_type.multiplicities[r - 1];
                if (k == 0) continue;
                weight /= Rational(factorial(k) * int_pow(Integer(r), k), Integer(1));
                for (unsigned c = 0; c < k; ++c) {
                    product = model.multiply(placed, r, product, factor[r - 1]);
                    placed += r;
                }
            }
            total += product.scaled(YRationalFunction(weight));
        }
        out.set_term(n, std::move(total));
    }
    return out;
}

}  // namespace symprod
