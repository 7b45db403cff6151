#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "pcoact/free_poisson.hpp"

namespace pcoact {

struct RelationSet {
    std::size_t alphabet_size = 0;
    std::vector<FpElem> relations;
};

struct SaturateOptions {
    std::size_t budget = 200000; // cap on materialized monomials
    bool parallel = true;        // OpenMP reduction phase; serial lane is the reference
};

/// Degree-truncated normal forms modulo the Poisson ideal generated by a
/// relation set. Saturation closes the relations under S-polynomials of the
/// commutative structure and brackets with generators, up to filtration
/// degree D+margin, then keeps the reduced rewriting rows of leading degree
/// <= D. normal_form is the induced linear idempotent projector; it realizes
/// the residue map onto the quotient followed by the canonical section.
class QuotientContext {
  public:
    RelationSet rels;
    std::size_t D = 0;
    std::size_t margin = 0;
    bool margin_stable = false;

    /// Monic rewriting rows, leading monomials strictly decreasing. Tails are
    /// fully reduced: no non-leading monomial is divisible by any leading.
    std::vector<FpElem> rows;

    const CommMono& lead(std::size_t r) const { return rows[r].rbegin()->first; }

    /// Throws DegreeOverflow if fp_degree(x) > D.
    FpElem normal_form(const FpElem& x) const;
    bool is_zero_mod(const FpElem& x) const;

    /// Dimension of the degree-d component of the quotient, d = 0..D:
    /// monomial count at degree d minus reducible monomials at degree d.
    std::vector<std::size_t> quotient_dims() const;

    /// Rank, per degree, of the captured piece of the ideal (the kernel of
    /// normal_form): the number of reducible monomials of that degree.
    std::vector<std::size_t> ideal_ranks() const;

    bool operator==(const QuotientContext& o) const {
        return rels.alphabet_size == o.rels.alphabet_size && D == o.D && rows == o.rows;
    }
};

/// Saturates the relation set within filtration degree D+m and returns the
/// context restricted to degree <= D. Throws BudgetExceeded past the monomial
/// cap.
QuotientContext saturate(const RelationSet& rels, std::size_t D, std::size_t m,
                         const SaturateOptions& opts = {});

/// saturate, plus the stability probe: rebuilds at margin m+1 and flags the
/// context margin-stable when the quotient dimensions agree.
QuotientContext saturate_with_stability(const RelationSet& rels, std::size_t D, std::size_t m,
                                        const SaturateOptions& opts = {});

/// Element of a tensor square of free Poisson algebras.
struct PairMonoLess {
    bool operator()(const std::pair<CommMono, CommMono>& a,
                    const std::pair<CommMono, CommMono>& b) const {
        int c = mono_cmp(a.first, b.first);
        if (c != 0) return c < 0;
        return mono_cmp(a.second, b.second) < 0;
    }
};
using Tensor2 = std::map<std::pair<CommMono, CommMono>, Rational, PairMonoLess>;

Tensor2 t2_zero();
Tensor2 t2_one();
void t2_add_term(Tensor2& t, const CommMono& a, const CommMono& b, const Rational& c);
void t2_add_scaled(Tensor2& t, const Tensor2& u, const Rational& c);
Tensor2 t2_mul(const Tensor2& x, const Tensor2& y);
/// Tensor-product Poisson bracket: [p⊗q, r⊗s] = pr⊗[q,s] + [p,r]⊗qs.
Tensor2 t2_bracket(const Tensor2& x, const Tensor2& y);
Tensor2 t2_from(const FpElem& left, const FpElem& right);

/// Factor-wise normal form; zero iff t lies in ideal⊗all + all⊗ideal at
/// truncation.
Tensor2 tensor2_nf(const Tensor2& t, const QuotientContext& ctx_left,
                   const QuotientContext& ctx_right);

} // namespace pcoact
