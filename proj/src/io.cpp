#include "symprod/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "symprod/errors.hpp"

namespace symprod {

using nlohmann::json;

namespace {

json rational_to_json(const Rational& r) { return json(r.str()); }

json ypoly_to_json(const YPolynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(json::array({e, c.str()}));
    return terms;
}

json yratfunc_to_json(const YRationalFunction& f) {
    return json{{"num", ypoly_to_json(f.numerator())}, {"den", ypoly_to_json(f.denominator())}};
}

json class_to_json(const GradedClass& c, unsigned module_index) {
    json coeffs = json::array();
    for (const auto& [i, v] : c.coefficients())
        coeffs.push_back(json::array({c.module()->label(i), yratfunc_to_json(v)}));
    return json{{"module", module_index}, {"coeffs", coeffs}};
}

void require_keys(const json& obj, std::initializer_list<const char*> keys,
                  const std::string& where) {
    if (!obj.is_object()) throw ParseError(where + ": expected an object");
    for (const char* k : keys)
        if (!obj.contains(k)) throw ParseError(where + ": missing key '" + k + "'");
    for (const auto& [k, v] : obj.items()) {
        (void)v;
        bool known = false;
        for (const char* want : keys) known = known || k == want;
        if (!known) throw ParseError(where + ": unknown key '" + k + "'");
    }
}

unsigned to_unsigned(const json& v, const std::string& where) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw ParseError(where + ": expected a nonnegative integer");
    return static_cast<unsigned>(v.get<long long>());
}

Rational to_rational(const json& v, const std::string& where) {
    if (!v.is_string()) throw ParseError(where + ": expected a rational string");
    return Rational::parse(v.get<std::string>());
}

YPolynomial ypoly_from_json(const json& terms, const std::string& where) {
    if (!terms.is_array()) throw ParseError(where + ": expected an array of [exp, value] pairs");
    YPolynomial p;
    for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 2)
            throw ParseError(where + ": each term must be [exp, value]");
        const unsigned e = to_unsigned(t[0], where);
        const Rational c = to_rational(t[1], where);
        if (c.is_zero()) throw ParseError(where + ": stored zero coefficient");
        if (!(p.coefficient(e).is_zero()))
            throw ParseError(where + ": duplicate exponent " + std::to_string(e));
        p += YPolynomial::monomial(c, e);
    }
    return p;
}

YRationalFunction yratfunc_from_json(const json& v, const std::string& where) {
    require_keys(v, {"num", "den"}, where);
    const YPolynomial num = ypoly_from_json(v["num"], where + ".num");
    const YPolynomial den = ypoly_from_json(v["den"], where + ".den");
    if (den.is_zero()) throw ParseError(where + ": zero denominator");
    return YRationalFunction(num, den);
}

json parse_text(const std::string& text) {
    json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) throw ParseError("malformed document");
    return doc;
}

}  // namespace

std::string serialize_rational(const Rational& r) { return rational_to_json(r).dump(); }

std::string serialize_yratfunc(const YRationalFunction& f) { return yratfunc_to_json(f).dump(); }

std::string serialize_class(const GradedClass& c, unsigned module_index) {
    return class_to_json(c, module_index).dump();
}

std::string serialize_model(const SpaceModel& model) {
    json modules = json::array();
    for (const auto& m : model.modules()) {
        json basis = json::array();
        for (const auto& b : m->basis()) basis.push_back(json::array({b.label, b.half_degree}));
        modules.push_back(basis);
    }
    json tensors = json::array();
    for (unsigned n = 0; n <= model.truncation(); ++n) {
        for (unsigned m = 0; n + m <= model.truncation(); ++m) {
            json entries = json::array();
            for (const auto& e : model.tensor(n, m).entries())
                entries.push_back(json::array({e.left, e.right, e.out, e.value.str()}));
            tensors.push_back(json{{"n", n}, {"m", m}, {"entries", entries}});
        }
    }
    json diagonals = json::array();
    for (unsigned r = 1; r <= model.truncation(); ++r) {
        json entries = json::array();
        const DegreeMap& d = model.diagonal(r);
        for (std::size_t src = 0; src < d.rows().size(); ++src)
            for (const auto& e : d.rows()[src])
                entries.push_back(json::array({src, e.target_index, e.value.str()}));
        diagonals.push_back(json{{"r", r}, {"entries", entries}});
    }
    return json{{"N", model.truncation()},
                {"modules", modules},
                {"tensors", tensors},
                {"diagonals", diagonals}}
        .dump(2);
}

std::string serialize_pont_series(const PontSeries& s, unsigned limit) {
    const unsigned upto = std::min(limit, s.truncation());
    json terms = json::array();
    for (unsigned n = 0; n <= upto; ++n) terms.push_back(class_to_json(s.term(n), n));
    return json{{"N", upto}, {"terms", terms}}.dump(2);
}

std::string serialize_pont_series(const PontSeries& s) {
    return serialize_pont_series(s, s.truncation());
}

std::string serialize_scalar_series(const ScalarSeries& s) {
    json coeffs = json::array();
    for (unsigned n = 0; n <= s.order(); ++n) coeffs.push_back(yratfunc_to_json(s[n]));
    return json{{"N", s.order()}, {"coeffs", coeffs}}.dump(2);
}

YRationalFunction parse_yratfunc_document(const std::string& text) {
    return yratfunc_from_json(parse_text(text), "rational function");
}

SpaceModel parse_model_document(const std::string& text) {
    const json doc = parse_text(text);
    require_keys(doc, {"N", "modules", "tensors", "diagonals"}, "model");
    const unsigned N = to_unsigned(doc["N"], "model.N");

    if (!doc["modules"].is_array() || doc["modules"].size() != N + 1)
        throw ParseError("model.modules: expected " + std::to_string(N + 1) + " module specs");
    std::vector<ModuleSpecPtr> modules;
    for (unsigned n = 0; n <= N; ++n) {
        const json& basis = doc["modules"][n];
        if (!basis.is_array())
            throw ParseError("model.modules[" + std::to_string(n) + "]: expected an array");
        std::vector<GradedModuleSpec::BasisElement> elements;
        for (const auto& b : basis) {
            if (!b.is_array() || b.size() != 2 || !b[0].is_string())
                throw ParseError("model.modules[" + std::to_string(n) +
                                 "]: each element must be [label, half_degree]");
            elements.push_back(
                {b[0].get<std::string>(), to_unsigned(b[1], "model.modules half_degree")});
        }
        modules.push_back(std::make_shared<GradedModuleSpec>(std::move(elements)));
    }

    if (!doc["tensors"].is_array()) throw ParseError("model.tensors: expected an array");
    std::map<std::pair<unsigned, unsigned>, BilinearTensor> tensors;
    for (const auto& t : doc["tensors"]) {
        require_keys(t, {"n", "m", "entries"}, "model.tensors[]");
        const unsigned n = to_unsigned(t["n"], "tensor.n");
        const unsigned m = to_unsigned(t["m"], "tensor.m");
        if (n + m > N)
            throw ValidationError("index-range", "tensor (" + std::to_string(n) + "," +
                                                     std::to_string(m) + ") beyond truncation");
        if (tensors.count({n, m}))
            throw ParseError("duplicate tensor (" + std::to_string(n) + "," + std::to_string(m) +
                             ")");
        BilinearTensor mu;
        if (!t["entries"].is_array()) throw ParseError("tensor.entries: expected an array");
        for (const auto& e : t["entries"]) {
            if (!e.is_array() || e.size() != 4)
                throw ParseError("tensor entry must be [i, j, k, value]");
            const std::size_t i = to_unsigned(e[0], "tensor entry");
            const std::size_t j = to_unsigned(e[1], "tensor entry");
            const std::size_t k = to_unsigned(e[2], "tensor entry");
            if (i >= modules[n]->rank() || j >= modules[m]->rank() || k >= modules[n + m]->rank())
                throw ValidationError("index-range", "tensor (" + std::to_string(n) + "," +
                                                         std::to_string(m) +
                                                         ") entry out of range");
            mu.add_entry(i, j, k, to_rational(e[3], "tensor entry"));
        }
        tensors.emplace(std::make_pair(n, m), std::move(mu));
    }

    if (!doc["diagonals"].is_array() || doc["diagonals"].size() != (N == 0 ? 0 : N))
        throw ParseError("model.diagonals: expected " + std::to_string(N == 0 ? 0 : N) +
                         " diagonal maps");
    std::vector<DegreeMap> diagonals;
    for (unsigned r = 1; r <= N; ++r) {
        const json& d = doc["diagonals"][r - 1];
        require_keys(d, {"r", "entries"}, "model.diagonals[]");
        if (to_unsigned(d["r"], "diagonal.r") != r)
            throw ParseError("model.diagonals must list r = 1.." + std::to_string(N) +
                             " in order");
        DegreeMap map(modules[1], modules[r]);
        if (!d["entries"].is_array()) throw ParseError("diagonal.entries: expected an array");
        for (const auto& e : d["entries"]) {
            if (!e.is_array() || e.size() != 3)
                throw ParseError("diagonal entry must be [src, dst, value]");
            const std::size_t src = to_unsigned(e[0], "diagonal entry");
            const std::size_t dst = to_unsigned(e[1], "diagonal entry");
            if (src >= modules[1]->rank() || dst >= modules[r]->rank())
                throw ValidationError("index-range",
                                      "diagonal d^" + std::to_string(r) + " entry out of range");
            map.add_entry(src, dst, to_rational(e[2], "diagonal entry"));
        }
        diagonals.push_back(std::move(map));
    }

    SpaceModel model(N, std::move(modules), std::move(tensors), std::move(diagonals));
    model.validate();
    return model;
}

SpaceModel load_model(const std::string& path) { return parse_model_document(read_file(path)); }

GradedClass parse_class_document(const std::string& text, const SpaceModel& model) {
    const json doc = parse_text(text);
    require_keys(doc, {"module", "coeffs"}, "class");
    const unsigned n = to_unsigned(doc["module"], "class.module");
    if (n > model.truncation())
        throw ValidationError("index-range",
                              "class.module " + std::to_string(n) + " beyond truncation");
    GradedClass c(model.module(n));
    if (!doc["coeffs"].is_array()) throw ParseError("class.coeffs: expected an array");
    for (const auto& entry : doc["coeffs"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string())
            throw ParseError("class coefficient must be [label, rational function]");
        const std::string label = entry[0].get<std::string>();
        const std::size_t idx = model.module(n)->find(label);
        if (idx == model.module(n)->rank())
            throw ValidationError("unknown-label", "class references unknown basis label '" +
                                                       label + "' in module " + std::to_string(n));
        if (!c.coefficient(idx).is_zero())
            throw ParseError("class has a duplicate coefficient for '" + label + "'");
        c.set_coefficient(idx, yratfunc_from_json(entry[1], "class coefficient '" + label + "'"));
    }
    return c;
}

GradedClass load_class(const std::string& path, const SpaceModel& model) {
    return parse_class_document(read_file(path), model);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace symprod
