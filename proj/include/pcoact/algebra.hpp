#pragma once

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "pcoact/rational.hpp"

namespace pcoact {

/// A finite-dimensional Poisson algebra given by structure constants over an
/// ordered basis. Entry (i,j,k) of `mul` is the coefficient of basis k in
/// x_i * x_j; `bracket` holds the Lie bracket coefficients. Absent entries
/// are zero. After loading, the unit sits at index 0.
struct PoissonAlgebraData {
    std::size_t dim = 0;
    std::vector<std::string> basis_labels;
    std::size_t unit_index = 0;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> mul;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> bracket;

    void set_mul(std::size_t i, std::size_t j, std::size_t k, const Rational& c);
    void set_bracket(std::size_t i, std::size_t j, std::size_t k, const Rational& c);

    Rational mul_c(std::size_t i, std::size_t j, std::size_t k) const;
    Rational bracket_c(std::size_t i, std::size_t j, std::size_t k) const;

    /// x_i * x_j as a coefficient vector.
    std::vector<Rational> mul_vec(std::size_t i, std::size_t j) const;
    std::vector<Rational> bracket_vec(std::size_t i, std::size_t j) const;

    /// Bilinear extensions to arbitrary coefficient vectors.
    std::vector<Rational> mul_elems(const std::vector<Rational>& a,
                                    const std::vector<Rational>& b) const;
    std::vector<Rational> bracket_elems(const std::vector<Rational>& a,
                                        const std::vector<Rational>& b) const;

    std::vector<Rational> unit_vec() const;

    bool operator==(const PoissonAlgebraData& o) const {
        return dim == o.dim && unit_index == o.unit_index && mul == o.mul && bracket == o.bracket;
    }
};

struct AxiomCheck {
    std::string name;
    bool pass = true;
    bool has_witness = false;
    std::array<std::size_t, 3> witness{0, 0, 0};
};

struct ValidationReport {
    std::vector<AxiomCheck> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const AxiomCheck* failing() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }
};

/// Checks unitality, commutativity, associativity, antisymmetry, Jacobi and
/// Leibniz on all basis triples. Throws IndexOutOfRange for bad table entries.
ValidationReport validate_poisson(const PoissonAlgebraData& a);

/// Tensor product Poisson algebra: (p⊗q)(r⊗s) = pr⊗qs and
/// [p⊗q, r⊗s] = pr⊗[q,s] + [p,r]⊗qs. Basis index (i,j) -> i*dim(B)+j.
PoissonAlgebraData tensor_poisson(const PoissonAlgebraData& a, const PoissonAlgebraData& b);

/// Dense column-major linear map; column s is the image of source basis s.
struct LinearMap {
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    std::vector<Rational> mat; // mat[s*target_dim + t]

    LinearMap() = default;
    LinearMap(std::size_t src, std::size_t tgt)
        : source_dim(src), target_dim(tgt), mat(src * tgt) {}

    static LinearMap identity(std::size_t n);

    Rational& at(std::size_t t, std::size_t s) { return mat[s * target_dim + t]; }
    const Rational& at(std::size_t t, std::size_t s) const { return mat[s * target_dim + t]; }

    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    std::vector<Rational> column(std::size_t s) const;

    bool operator==(const LinearMap&) const = default;
};

/// True iff f preserves the unit, the product and the bracket on all basis pairs.
bool check_poisson_hom(const LinearMap& f, const PoissonAlgebraData& src,
                       const PoissonAlgebraData& tgt);

/// Matrix composition f ∘ g.
LinearMap compose_hom(const LinearMap& f, const LinearMap& g);

} // namespace pcoact
