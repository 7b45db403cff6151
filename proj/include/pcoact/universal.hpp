#pragma once

#include <string>
#include <vector>

#include "pcoact/algebra.hpp"
#include "pcoact/quotient.hpp"

namespace pcoact {

// The universal coacting Poisson algebra B(P,U): generators h_{s,i} indexed
// by a basis row s of U and a basis column i of P, modulo the relation
// families
//   I1: h_{s,0} - delta_{s,0} * 1
//       sum_k alpha_ij^k h_{s,k} - sum_{l,t} gamma_lt^s h_{l,i} h_{t,j}
//   I2: sum_k beta_ij^k h_{s,k}
//       - sum_{u,v} ( gamma_uv^s [h_{u,i}, h_{v,j}] + tau_uv^s h_{u,i} h_{v,j} )
// where alpha/beta are the structure constants of P and gamma/tau those of U.
// The coaction is psi(x_i) = sum_s y_s (x) h_{s,i}.

struct Presentation {
    PoissonAlgebraData P;
    PoissonAlgebraData U;
    RelationSet relations; // I1 followed by I2
    std::size_t n_I1 = 0;  // relations[0..n_I1) form I1
    QuotientContext ctx;
    std::vector<FpElem> psi; // psi[letter(s,i)] = normal form of h_{s,i}

    std::size_t rows() const { return U.dim; }
    std::size_t cols() const { return P.dim; }
    std::size_t alphabet() const { return U.dim * P.dim; }
    Letter letter(std::size_t s, std::size_t i) const {
        return static_cast<Letter>(s * P.dim + i);
    }
    std::size_t row_of(Letter g) const { return g / P.dim; }
    std::size_t col_of(Letter g) const { return g % P.dim; }
};

/// Builds the presentation of B(P,U) at truncation degree D with saturation
/// margin m (the margin-stability flag is always computed). Throws
/// InvalidAlgebra if either input fails validation.
Presentation build_universal(const PoissonAlgebraData& P, const PoissonAlgebraData& U,
                             std::size_t D, std::size_t m, const SaturateOptions& opts = {});

/// psi on an arbitrary element of P: component s of the result is the
/// B(P,U)-coefficient of y_s, already in normal form.
std::vector<FpElem> psi_apply(const Presentation& pres, const std::vector<Rational>& pvec);

// --- generator maps ------------------------------------------------------
// A generator map assigns an image to each letter h_{s,i} and extends to the
// free Poisson algebra multiplicatively and bracket-compatibly; descent to
// the quotient is a property to verify, never an assumption.

struct TensorGenMap {
    std::vector<Tensor2> images; // indexed by letter
};

struct ScalarGenMap {
    std::vector<Rational> images;
};

/// Images in the free Poisson algebra of another presentation.
struct FpGenMap {
    std::vector<FpElem> images;
};

/// Images in a finite-dimensional Poisson algebra Q, as coefficient vectors.
struct AlgGenMap {
    std::size_t qdim = 0;
    std::vector<std::vector<Rational>> images;
};

// Evaluation of free-Poisson elements under a generator map, through the
// standard bracketing of Lyndon words. Ops supplies the target arithmetic.
template <class Ops>
typename Ops::Value eval_word(const Word& w, const Ops& ops) {
    if (w.size() == 1) return ops.gen(w[0]);
    auto [u, v] = standard_factorization(w);
    return ops.bracket(eval_word(u, ops), eval_word(v, ops));
}

template <class Ops>
typename Ops::Value eval_fp(const FpElem& x, const Ops& ops) {
    auto acc = ops.zero();
    for (const auto& [m, c] : x) {
        auto term = ops.one();
        for (const auto& w : m.factors) term = ops.mul(term, eval_word(w, ops));
        ops.add_scaled(acc, term, c);
    }
    return acc;
}

struct ScalarOps {
    const std::vector<Rational>* images;
    using Value = Rational;
    Value zero() const { return 0; }
    Value one() const { return 1; }
    Value gen(Letter g) const { return (*images)[g]; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value bracket(const Value&, const Value&) const { return 0; }
    void add_scaled(Value& acc, const Value& v, const Rational& c) const { acc += v * c; }
};

struct Tensor2Ops {
    const std::vector<Tensor2>* images;
    using Value = Tensor2;
    Value zero() const { return t2_zero(); }
    Value one() const { return t2_one(); }
    Value gen(Letter g) const { return (*images)[g]; }
    Value mul(const Value& a, const Value& b) const { return t2_mul(a, b); }
    Value bracket(const Value& a, const Value& b) const { return t2_bracket(a, b); }
    void add_scaled(Value& acc, const Value& v, const Rational& c) const {
        t2_add_scaled(acc, v, c);
    }
};

struct FpOps {
    const std::vector<FpElem>* images;
    using Value = FpElem;
    Value zero() const { return fp_zero(); }
    Value one() const { return fp_one(); }
    Value gen(Letter g) const { return (*images)[g]; }
    Value mul(const Value& a, const Value& b) const { return fp_mul(a, b); }
    Value bracket(const Value& a, const Value& b) const { return fp_bracket(a, b); }
    void add_scaled(Value& acc, const Value& v, const Rational& c) const {
        fp_add_scaled(acc, v, c);
    }
};

struct AlgOps {
    const PoissonAlgebraData* Q;
    const std::vector<std::vector<Rational>>* images;
    using Value = std::vector<Rational>;
    Value zero() const { return Value(Q->dim, Rational(0)); }
    Value one() const { return Q->unit_vec(); }
    Value gen(Letter g) const { return (*images)[g]; }
    Value mul(const Value& a, const Value& b) const { return Q->mul_elems(a, b); }
    Value bracket(const Value& a, const Value& b) const { return Q->bracket_elems(a, b); }
    void add_scaled(Value& acc, const Value& v, const Rational& c) const {
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += v[k] * c;
    }
};

// --- reports -------------------------------------------------------------

struct NamedCheck {
    std::string name;
    bool pass = true;
    std::string witness; // empty when passing
};

struct Report {
    std::vector<NamedCheck> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// --- coalgebra structure -------------------------------------------------

/// Delta_f(h_{t,i}) = sum_{s,j} f_{js} h_{t,j} (x) h_{s,i} for a Poisson
/// homomorphism f: U -> P with f(y_s) = sum_j f_{js} x_j. Throws
/// NotAHomomorphism.
TensorGenMap comultiplication(const Presentation& pres, const LinearMap& f);

/// epsilon_g(h_{s,i}) = g_{si} for a Poisson homomorphism g: P -> U. Throws
/// NotAHomomorphism.
ScalarGenMap counit(const Presentation& pres, const LinearMap& g);

/// The compatibility pair of identities: psi o (f o g) = psi on every basis
/// element of P, and ((g o f) (x) 1) o psi = psi as congruences
/// sum_t (g o f)_{ts} h_{s,i} == h_{t,i}.
bool check_compat(const Presentation& pres, const LinearMap& f, const LinearMap& g);

/// Applies the extended map to every relation and checks the image is zero
/// in the target (tensor-square congruence for Delta, exact zero for
/// epsilon). One named check per relation.
Report verify_descent(const Presentation& pres, const TensorGenMap& dm);
Report verify_descent(const Presentation& pres, const ScalarGenMap& em);

/// Full bialgebra suite: compatibility, exact coassociativity on generators,
/// descent of Delta_f and epsilon_g, and both counit laws modulo the ideal.
Report verify_bialgebra(const Presentation& pres, const LinearMap& f, const LinearMap& g);

/// Comodule-algebra suite for P = U: psi is a Poisson homomorphism into the
/// tensor Poisson structure (unit, multiplicativity, bracket on all basis
/// pairs) plus the coaction laws (1 (x) Delta) psi == (psi (x) 1) psi and
/// (1 (x) epsilon) psi = id.
Report verify_comodule(const Presentation& pres);

// --- the universal property ----------------------------------------------

/// The matrix d_{s,i} of a coaction P -> U (x) Q, entries as coefficient
/// vectors over Q's basis; d[letter(s,i)] = d_{s,i}.
struct CoactionMatrix {
    std::size_t qdim = 0;
    std::vector<std::vector<Rational>> d;
};

struct SolveResult {
    AlgGenMap g;
    Report report;
};

/// Given Q and a coaction matrix, checks the structure-constant constraint
/// families (unit, multiplicativity, bracket) and that every relation of
/// I1 u I2 maps to zero in Q, and returns the generator map g(h_{s,i}) =
/// d_{s,i}. Throws ConstraintViolation on a failing family instance.
SolveResult solve_coaction(const Presentation& pres, const PoissonAlgebraData& Q,
                           const CoactionMatrix& dmat);

/// theta reads off d_{s,i} = g(h_{s,i}); theta_inv is solve_coaction. The two
/// are mutually inverse (the bijection between coactions and algebra maps).
CoactionMatrix theta(const Presentation& pres, const PoissonAlgebraData& Q, const AlgGenMap& g);
AlgGenMap theta_inv(const Presentation& pres, const PoissonAlgebraData& Q,
                    const CoactionMatrix& dmat);

/// Covariant functoriality in the first argument: for a Poisson homomorphism
/// f: X -> Y (both presentations sharing U), the induced map sends h_{s,i} to
/// sum_j f_{ji} h'_{s,j}. Descent against pres_Y's ideal is verified; throws
/// DescentFailure.
FpGenMap induced_map_L(const Presentation& pres_X, const Presentation& pres_Y,
                       const LinearMap& f);

/// Contravariant functoriality in the second argument: for f: B -> A (both
/// presentations sharing P), the induced map B(P,A) -> B(P,B) sends h_{u,i}
/// to sum_v f_{uv} k_{v,i}.
FpGenMap induced_map_R(const Presentation& pres_A, const Presentation& pres_B,
                       const LinearMap& f);

} // namespace pcoact
