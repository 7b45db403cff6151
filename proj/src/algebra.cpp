#include "pcoact/algebra.hpp"

#include "pcoact/errors.hpp"

namespace pcoact {

void PoissonAlgebraData::set_mul(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
    if (c == 0)
        mul.erase({i, j, k});
    else
        mul[{i, j, k}] = c;
}

void PoissonAlgebraData::set_bracket(std::size_t i, std::size_t j, std::size_t k,
                                     const Rational& c) {
    if (c == 0)
        bracket.erase({i, j, k});
    else
        bracket[{i, j, k}] = c;
}

Rational PoissonAlgebraData::mul_c(std::size_t i, std::size_t j, std::size_t k) const {
    auto it = mul.find({i, j, k});
    return it == mul.end() ? Rational(0) : it->second;
}

Rational PoissonAlgebraData::bracket_c(std::size_t i, std::size_t j, std::size_t k) const {
    auto it = bracket.find({i, j, k});
    return it == bracket.end() ? Rational(0) : it->second;
}

std::vector<Rational> PoissonAlgebraData::mul_vec(std::size_t i, std::size_t j) const {
    std::vector<Rational> v(dim);
    for (std::size_t k = 0; k < dim; ++k) v[k] = mul_c(i, j, k);
    return v;
}

std::vector<Rational> PoissonAlgebraData::bracket_vec(std::size_t i, std::size_t j) const {
    std::vector<Rational> v(dim);
    for (std::size_t k = 0; k < dim; ++k) v[k] = bracket_c(i, j, k);
    return v;
}

std::vector<Rational> PoissonAlgebraData::mul_elems(const std::vector<Rational>& a,
                                                    const std::vector<Rational>& b) const {
    std::vector<Rational> v(dim);
    for (const auto& [key, c] : mul) {
        auto [i, j, k] = key;
        if (a[i] == 0 || b[j] == 0) continue;
        v[k] += c * a[i] * b[j];
    }
    return v;
}

std::vector<Rational> PoissonAlgebraData::bracket_elems(const std::vector<Rational>& a,
                                                        const std::vector<Rational>& b) const {
    std::vector<Rational> v(dim);
    for (const auto& [key, c] : bracket) {
        auto [i, j, k] = key;
        if (a[i] == 0 || b[j] == 0) continue;
        v[k] += c * a[i] * b[j];
    }
    return v;
}

std::vector<Rational> PoissonAlgebraData::unit_vec() const {
    std::vector<Rational> v(dim);
    v[unit_index] = 1;
    return v;
}

namespace {

bool vec_eq(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    return a == b;
}

std::vector<Rational> basis_vec(std::size_t dim, std::size_t i) {
    std::vector<Rational> v(dim);
    v[i] = 1;
    return v;
}

} // namespace

ValidationReport validate_poisson(const PoissonAlgebraData& a) {
    const std::size_t n = a.dim;
    if (n == 0) throw InvalidAlgebra("dimension must be >= 1");
    for (const auto* table : {&a.mul, &a.bracket})
        for (const auto& [key, c] : *table) {
            auto [i, j, k] = key;
            (void)c;
            if (i >= n || j >= n || k >= n)
                throw IndexOutOfRange("structure-constant index out of range");
        }
    if (a.unit_index >= n) throw IndexOutOfRange("unit index out of range");

    ValidationReport rep;
    auto check = [&](const std::string& name) -> AxiomCheck& {
        rep.checks.push_back({name});
        return rep.checks.back();
    };
    auto fail = [&](AxiomCheck& c, std::size_t i, std::size_t j, std::size_t k) {
        if (!c.pass) return;
        c.pass = false;
        c.has_witness = true;
        c.witness = {i, j, k};
    };

    const std::size_t u = a.unit_index;
    auto& unital = check("unitality");
    for (std::size_t j = 0; j < n; ++j) {
        if (!vec_eq(a.mul_vec(u, j), basis_vec(n, j))) fail(unital, u, j, j);
        if (!vec_eq(a.mul_vec(j, u), basis_vec(n, j))) fail(unital, j, u, j);
    }

    auto& comm = check("commutativity");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!vec_eq(a.mul_vec(i, j), a.mul_vec(j, i))) fail(comm, i, j, 0);

    auto& assoc = check("associativity");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                auto lhs = a.mul_elems(a.mul_vec(i, j), basis_vec(n, k));
                auto rhs = a.mul_elems(basis_vec(n, i), a.mul_vec(j, k));
                if (!vec_eq(lhs, rhs)) fail(assoc, i, j, k);
            }

    auto& anti = check("antisymmetry");
    for (std::size_t i = 0; i < n; ++i) {
        if (!vec_eq(a.bracket_vec(i, i), std::vector<Rational>(n))) fail(anti, i, i, 0);
        for (std::size_t j = i + 1; j < n; ++j) {
            auto lhs = a.bracket_vec(i, j);
            auto rhs = a.bracket_vec(j, i);
            for (auto& c : rhs) c = -c;
            if (!vec_eq(lhs, rhs)) fail(anti, i, j, 0);
        }
    }

    auto& jac = check("jacobi");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                auto s1 = a.bracket_elems(a.bracket_vec(i, j), basis_vec(n, k));
                auto s2 = a.bracket_elems(a.bracket_vec(j, k), basis_vec(n, i));
                auto s3 = a.bracket_elems(a.bracket_vec(k, i), basis_vec(n, j));
                bool zero = true;
                for (std::size_t t = 0; t < n; ++t)
                    if (s1[t] + s2[t] + s3[t] != 0) zero = false;
                if (!zero) fail(jac, i, j, k);
            }

    // [x_i x_j, x_k] = x_i [x_j, x_k] + [x_i, x_k] x_j
    auto& leib = check("leibniz");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                auto lhs = a.bracket_elems(a.mul_vec(i, j), basis_vec(n, k));
                auto r1 = a.mul_elems(basis_vec(n, i), a.bracket_vec(j, k));
                auto r2 = a.mul_elems(a.bracket_vec(i, k), basis_vec(n, j));
                bool eq = true;
                for (std::size_t t = 0; t < n; ++t)
                    if (lhs[t] != r1[t] + r2[t]) eq = false;
                if (!eq) fail(leib, i, j, k);
            }

    return rep;
}

PoissonAlgebraData tensor_poisson(const PoissonAlgebraData& a, const PoissonAlgebraData& b) {
    PoissonAlgebraData t;
    t.dim = a.dim * b.dim;
    t.unit_index = a.unit_index * b.dim + b.unit_index;
    t.basis_labels.reserve(t.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j)
            t.basis_labels.push_back(a.basis_labels.at(i) + "(x)" + b.basis_labels.at(j));

    auto idx = [&](std::size_t i, std::size_t j) { return i * b.dim + j; };

    for (const auto& [ka, ca] : a.mul)
        for (const auto& [kb, cb] : b.mul) {
            auto [i1, i2, i3] = ka;
            auto [j1, j2, j3] = kb;
            t.set_mul(idx(i1, j1), idx(i2, j2), idx(i3, j3),
                      t.mul_c(idx(i1, j1), idx(i2, j2), idx(i3, j3)) + ca * cb);
        }
    // pr ⊗ [q,s]
    for (const auto& [ka, ca] : a.mul)
        for (const auto& [kb, cb] : b.bracket) {
            auto [i1, i2, i3] = ka;
            auto [j1, j2, j3] = kb;
            t.set_bracket(idx(i1, j1), idx(i2, j2), idx(i3, j3),
                          t.bracket_c(idx(i1, j1), idx(i2, j2), idx(i3, j3)) + ca * cb);
        }
    // [p,r] ⊗ qs
    for (const auto& [ka, ca] : a.bracket)
        for (const auto& [kb, cb] : b.mul) {
            auto [i1, i2, i3] = ka;
            auto [j1, j2, j3] = kb;
            t.set_bracket(idx(i1, j1), idx(i2, j2), idx(i3, j3),
                          t.bracket_c(idx(i1, j1), idx(i2, j2), idx(i3, j3)) + ca * cb);
        }
    return t;
}

LinearMap LinearMap::identity(std::size_t n) {
    LinearMap f(n, n);
    for (std::size_t i = 0; i < n; ++i) f.at(i, i) = 1;
    return f;
}

std::vector<Rational> LinearMap::apply(const std::vector<Rational>& v) const {
    if (v.size() != source_dim) throw DimensionMismatch("linear map applied to wrong dimension");
    std::vector<Rational> out(target_dim);
    for (std::size_t s = 0; s < source_dim; ++s) {
        if (v[s] == 0) continue;
        for (std::size_t t = 0; t < target_dim; ++t) out[t] += at(t, s) * v[s];
    }
    return out;
}

std::vector<Rational> LinearMap::column(std::size_t s) const {
    std::vector<Rational> out(target_dim);
    for (std::size_t t = 0; t < target_dim; ++t) out[t] = at(t, s);
    return out;
}

bool check_poisson_hom(const LinearMap& f, const PoissonAlgebraData& src,
                       const PoissonAlgebraData& tgt) {
    if (f.source_dim != src.dim || f.target_dim != tgt.dim)
        throw DimensionMismatch("hom check: map dimensions do not match the algebras");
    if (f.apply(src.unit_vec()) != tgt.unit_vec()) return false;
    for (std::size_t i = 0; i < src.dim; ++i)
        for (std::size_t j = 0; j < src.dim; ++j) {
            auto fi = f.column(i);
            auto fj = f.column(j);
            if (f.apply(src.mul_vec(i, j)) != tgt.mul_elems(fi, fj)) return false;
            if (f.apply(src.bracket_vec(i, j)) != tgt.bracket_elems(fi, fj)) return false;
        }
    return true;
}

LinearMap compose_hom(const LinearMap& f, const LinearMap& g) {
    if (f.source_dim != g.target_dim) throw DimensionMismatch("compose_hom: inner dimensions");
    LinearMap h(g.source_dim, f.target_dim);
    for (std::size_t s = 0; s < g.source_dim; ++s) {
        auto col = f.apply(g.column(s));
        for (std::size_t t = 0; t < f.target_dim; ++t) h.at(t, s) = col[t];
    }
    return h;
}

} // namespace pcoact
