#include "pcoact/io.hpp"

#include <algorithm>
#include <fstream>

#include "pcoact/errors.hpp"

namespace pcoact {

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open file for writing: " + path);
    out << j.dump() << '\n';
}

namespace {

Rational json_rational(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected a rational as a string \"p/q\"");
}

std::size_t json_index(const Json& j, std::size_t dim, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw ParseError(std::string("expected a nonnegative ") + what + " index");
    auto v = static_cast<std::size_t>(j.get<long long>());
    if (v >= dim) throw IndexOutOfRange(std::string(what) + " index out of range");
    return v;
}

void load_table(const Json& arr,
                std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational>& table,
                std::size_t dim, const char* what) {
    if (!arr.is_array()) throw ParseError(std::string(what) + " table must be an array");
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 4)
            throw ParseError(std::string(what) + " entries must be [i, j, k, rational]");
        std::size_t i = json_index(e[0], dim, what);
        std::size_t j = json_index(e[1], dim, what);
        std::size_t k = json_index(e[2], dim, what);
        Rational c = json_rational(e[3]);
        if (c == 0) continue;
        auto key = std::make_tuple(i, j, k);
        auto it = table.find(key);
        if (it == table.end())
            table.emplace(key, c);
        else {
            it->second += c;
            if (it->second == 0) table.erase(it);
        }
    }
}

} // namespace

PoissonAlgebraData algebra_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
    for (const char* key : {"dim", "basis", "unit", "mul", "bracket"})
        if (!j.contains(key)) throw ParseError(std::string("algebra file missing key: ") + key);
    PoissonAlgebraData a;
    if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
        throw ParseError("dim must be a positive integer");
    a.dim = static_cast<std::size_t>(j["dim"].get<long long>());
    if (!j["basis"].is_array() || j["basis"].size() != a.dim)
        throw ParseError("basis must list exactly dim names");
    for (const auto& b : j["basis"]) a.basis_labels.push_back(b.get<std::string>());
    std::size_t unit = a.dim;
    for (std::size_t i = 0; i < a.dim; ++i)
        if (a.basis_labels[i] == j["unit"].get<std::string>()) unit = i;
    if (unit == a.dim) throw ParseError("unit does not name a basis element");
    load_table(j["mul"], a.mul, a.dim, "mul");
    load_table(j["bracket"], a.bracket, a.dim, "bracket");
    if (unit != 0) {
        // permute the named unit to index 0 (the construction assumes x_0 = 1)
        auto pi = [&](std::size_t x) { return x == 0 ? unit : (x == unit ? std::size_t(0) : x); };
        PoissonAlgebraData b;
        b.dim = a.dim;
        b.basis_labels = a.basis_labels;
        std::swap(b.basis_labels[0], b.basis_labels[unit]);
        for (const auto& [key, c] : a.mul)
            b.set_mul(pi(std::get<0>(key)), pi(std::get<1>(key)), pi(std::get<2>(key)), c);
        for (const auto& [key, c] : a.bracket)
            b.set_bracket(pi(std::get<0>(key)), pi(std::get<1>(key)), pi(std::get<2>(key)), c);
        a = std::move(b);
    }
    a.unit_index = 0;
    return a;
}

Json algebra_to_json(const PoissonAlgebraData& a) {
    Json j;
    j["dim"] = a.dim;
    j["basis"] = a.basis_labels;
    j["unit"] = a.basis_labels[a.unit_index];
    Json mul = Json::array();
    for (const auto& [key, c] : a.mul)
        mul.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), rational_str(c)});
    j["mul"] = std::move(mul);
    Json br = Json::array();
    for (const auto& [key, c] : a.bracket)
        br.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), rational_str(c)});
    j["bracket"] = std::move(br);
    return j;
}

PoissonAlgebraData load_algebra(const std::string& path) {
    return algebra_from_json(load_json_file(path));
}

LinearMap linear_map_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("source_dim") || !j.contains("target_dim") ||
        !j.contains("columns"))
        throw ParseError("linear map file must have source_dim, target_dim, columns");
    LinearMap f(static_cast<std::size_t>(j["source_dim"].get<long long>()),
                static_cast<std::size_t>(j["target_dim"].get<long long>()));
    if (!j["columns"].is_array() || j["columns"].size() != f.source_dim)
        throw ParseError("columns must list exactly source_dim columns");
    for (std::size_t s = 0; s < f.source_dim; ++s) {
        const auto& col = j["columns"][s];
        if (!col.is_array() || col.size() != f.target_dim)
            throw ParseError("each column must have target_dim entries");
        for (std::size_t t = 0; t < f.target_dim; ++t) f.at(t, s) = json_rational(col[t]);
    }
    return f;
}

Json linear_map_to_json(const LinearMap& f) {
    Json j;
    j["source_dim"] = f.source_dim;
    j["target_dim"] = f.target_dim;
    Json cols = Json::array();
    for (std::size_t s = 0; s < f.source_dim; ++s) {
        Json col = Json::array();
        for (std::size_t t = 0; t < f.target_dim; ++t) col.push_back(rational_str(f.at(t, s)));
        cols.push_back(std::move(col));
    }
    j["columns"] = std::move(cols);
    return j;
}

LinearMap load_linear_map(const std::string& path) {
    return linear_map_from_json(load_json_file(path));
}

CoactionMatrix coaction_from_json(const Json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_object() || !j.contains("qdim") || !j.contains("columns"))
        throw ParseError("coaction file must have qdim and columns");
    CoactionMatrix d;
    d.qdim = static_cast<std::size_t>(j["qdim"].get<long long>());
    if (!j["columns"].is_array() || j["columns"].size() != cols)
        throw ParseError("coaction columns must list one column per basis element of P");
    d.d.assign(rows * cols, std::vector<Rational>(d.qdim, Rational(0)));
    for (std::size_t i = 0; i < cols; ++i) {
        const auto& col = j["columns"][i];
        if (!col.is_array() || col.size() != rows * d.qdim)
            throw ParseError("each coaction column must have dim(U)*qdim entries");
        for (std::size_t s = 0; s < rows; ++s)
            for (std::size_t q = 0; q < d.qdim; ++q)
                d.d[s * cols + i][q] = json_rational(col[s * d.qdim + q]);
    }
    return d;
}

Json coaction_to_json(const CoactionMatrix& d, std::size_t rows, std::size_t cols) {
    Json j;
    j["qdim"] = d.qdim;
    Json colarr = Json::array();
    for (std::size_t i = 0; i < cols; ++i) {
        Json col = Json::array();
        for (std::size_t s = 0; s < rows; ++s)
            for (std::size_t q = 0; q < d.qdim; ++q)
                col.push_back(rational_str(d.d[s * cols + i][q]));
        colarr.push_back(std::move(col));
    }
    j["columns"] = std::move(colarr);
    return j;
}

Json fp_to_json(const FpElem& x) {
    Json terms = Json::array();
    for (const auto& [m, c] : x) {
        Json factors = Json::array();
        for (const auto& w : m.factors) {
            Json word = Json::array();
            for (auto l : w) word.push_back(l);
            factors.push_back(std::move(word));
        }
        terms.push_back({rational_str(c), std::move(factors)});
    }
    return terms;
}

FpElem fp_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("element must be a term list");
    FpElem x;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2)
            throw ParseError("each term must be [coefficient, factor list]");
        Rational c = json_rational(t[0]);
        CommMono m;
        for (const auto& wj : t[1]) {
            Word w;
            for (const auto& l : wj) w.push_back(static_cast<Letter>(l.get<unsigned>()));
            if (!is_lyndon(w)) throw ParseError("stored factor is not a Lyndon word");
            m.factors.push_back(std::move(w));
        }
        std::sort(m.factors.begin(), m.factors.end(),
                  [](const Word& a, const Word& b) { return word_cmp(a, b) > 0; });
        fp_add_term(x, m, c);
    }
    return x;
}

std::string generator_name(const Presentation& pres, Letter g) {
    return "h_{" + std::to_string(pres.row_of(g)) + "," + std::to_string(pres.col_of(g)) + "}";
}

namespace {

std::string word_str(const Presentation& pres, const Word& w) {
    if (w.size() == 1) return generator_name(pres, w[0]);
    auto [u, v] = standard_factorization(w);
    return "[" + word_str(pres, u) + "," + word_str(pres, v) + "]";
}

std::string mono_str(const Presentation& pres, const CommMono& m) {
    if (m.factors.empty()) return "1";
    std::string s;
    for (std::size_t k = 0; k < m.factors.size(); ++k) {
        if (k) s += "*";
        s += word_str(pres, m.factors[k]);
    }
    return s;
}

std::string tensor2_str(const Presentation& pres, const Tensor2& t) {
    if (t.empty()) return "0";
    std::string s;
    for (const auto& [key, c] : t) {
        if (!s.empty()) s += " + ";
        if (c != 1) s += rational_str(c) + "*";
        s += mono_str(pres, key.first) + " (x) " + mono_str(pres, key.second);
    }
    return s;
}

std::vector<FpElem> probe_inputs(const Presentation& pres) {
    std::vector<FpElem> probes;
    for (std::size_t g = 0; g < pres.alphabet(); ++g)
        probes.push_back(fp_gen(static_cast<Letter>(g)));
    FpElem h0 = fp_gen(0);
    probes.push_back(fp_mul(h0, h0));
    if (pres.alphabet() > 1) {
        FpElem hl = fp_gen(static_cast<Letter>(pres.alphabet() - 1));
        probes.push_back(fp_mul(h0, hl));
        probes.push_back(fp_bracket(h0, hl));
    }
    return probes;
}

} // namespace

Json presentation_to_json(const Presentation& pres) {
    Json j;
    Json gens = Json::array();
    for (std::size_t g = 0; g < pres.alphabet(); ++g)
        gens.push_back({{"row", pres.row_of(static_cast<Letter>(g))},
                        {"col", pres.col_of(static_cast<Letter>(g))},
                        {"name", generator_name(pres, static_cast<Letter>(g))}});
    j["generators"] = std::move(gens);
    Json rels = Json::array();
    for (const auto& r : pres.relations.relations) rels.push_back(fp_to_json(r));
    j["relations"] = std::move(rels);
    j["quotient_dims"] = pres.ctx.quotient_dims();
    Json psi = Json::array();
    for (std::size_t i = 0; i < pres.cols(); ++i) {
        Json comp = Json::array();
        for (std::size_t s = 0; s < pres.rows(); ++s)
            comp.push_back(generator_name(pres, pres.letter(s, i)));
        psi.push_back(std::move(comp));
    }
    j["psi"] = std::move(psi);
    if (pres.P == pres.U) {
        TensorGenMap dm = comultiplication(pres, LinearMap::identity(pres.U.dim));
        ScalarGenMap em = counit(pres, LinearMap::identity(pres.P.dim));
        Json delta = Json::object();
        Json eps = Json::object();
        for (std::size_t g = 0; g < pres.alphabet(); ++g) {
            std::string name = generator_name(pres, static_cast<Letter>(g));
            delta[name] = tensor2_str(pres, dm.images[g]);
            eps[name] = rational_str(em.images[g]);
        }
        j["coalgebra"] = {{"delta", std::move(delta)}, {"epsilon", std::move(eps)}};
    }
    j["meta"] = {{"degree", pres.ctx.D},
                 {"margin", pres.ctx.margin},
                 {"margin_stable", pres.ctx.margin_stable}};
    j["p_algebra"] = algebra_to_json(pres.P);
    j["u_algebra"] = algebra_to_json(pres.U);
    Json probes = Json::array();
    for (const auto& x : probe_inputs(pres))
        probes.push_back({{"input", fp_to_json(x)}, {"nf", fp_to_json(pres.ctx.normal_form(x))}});
    j["probes"] = std::move(probes);
    return j;
}

Presentation presentation_from_json(const Json& j, const SaturateOptions& opts) {
    for (const char* key : {"p_algebra", "u_algebra", "meta", "quotient_dims", "probes"})
        if (!j.contains(key))
            throw ParseError(std::string("presentation file missing key: ") + key);
    PoissonAlgebraData P = algebra_from_json(j["p_algebra"]);
    PoissonAlgebraData U = algebra_from_json(j["u_algebra"]);
    auto D = static_cast<std::size_t>(j["meta"]["degree"].get<long long>());
    auto m = static_cast<std::size_t>(j["meta"]["margin"].get<long long>());
    Presentation pres = build_universal(P, U, D, m, opts);
    std::vector<std::size_t> stored_dims = j["quotient_dims"].get<std::vector<std::size_t>>();
    if (pres.ctx.quotient_dims() != stored_dims)
        throw ParseError("presentation reload mismatch: quotient dimensions differ");
    for (const auto& probe : j["probes"]) {
        FpElem x = fp_from_json(probe["input"]);
        FpElem want = fp_from_json(probe["nf"]);
        if (pres.ctx.normal_form(x) != want)
            throw ParseError("presentation reload mismatch: probe normal form differs");
    }
    return pres;
}

Presentation load_presentation(const std::string& path, const SaturateOptions& opts) {
    return presentation_from_json(load_json_file(path), opts);
}

Json report_to_json(const Report& rep, std::size_t D, std::size_t m) {
    Json j;
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json cj = {{"name", c.name}, {"pass", c.pass}};
        if (!c.pass) cj["witness"] = c.witness;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["ok"] = rep.ok();
    j["meta"] = {{"degree", D}, {"margin", m}};
    return j;
}

Json validation_to_json(const ValidationReport& rep) {
    Json j;
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json cj = {{"name", c.name}, {"pass", c.pass}};
        if (c.has_witness) cj["witness"] = {c.witness[0], c.witness[1], c.witness[2]};
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["ok"] = rep.ok();
    return j;
}

} // namespace pcoact
