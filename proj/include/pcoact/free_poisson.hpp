#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "pcoact/rational.hpp"

namespace pcoact {

// The free Poisson algebra on an ordered alphabet: the symmetric algebra on
// the free Lie algebra, with the free Lie part presented in the Lyndon basis.

using Letter = std::uint16_t;
using Word = std::vector<Letter>; // always a Lyndon word when used as a basis element

/// Variable order on Lie monomials: shorter words first, ties broken
/// lexicographically. Returns <0, 0, >0.
int word_cmp(const Word& a, const Word& b);

bool is_lyndon(const Word& w);

/// All Lyndon words of exactly the given length, in lexicographic order.
/// Their number is the Witt number (1/d) sum_{e|d} mu(e) m^{d/e}.
std::vector<Word> lyndon_words(std::size_t alphabet_size, std::size_t degree);

/// Right standard factorization w = uv of a Lyndon word, |w| >= 2: v is the
/// longest proper Lyndon suffix (equivalently the lexicographically smallest).
std::pair<Word, Word> standard_factorization(const Word& w);

/// Commutative monomial: a multiset of Lyndon words stored sorted descending
/// under word_cmp. The empty multiset is the unit.
struct CommMono {
    std::vector<Word> factors;
    std::size_t degree() const {
        std::size_t d = 0;
        for (const auto& w : factors) d += w.size();
        return d;
    }
    bool operator==(const CommMono&) const = default;
};

/// Graded-lex monomial order: total degree first, then compare exponents of
/// variables from the greatest variable down. Compatible with multiplication.
int mono_cmp(const CommMono& a, const CommMono& b);

struct MonoLess {
    bool operator()(const CommMono& a, const CommMono& b) const { return mono_cmp(a, b) < 0; }
};

CommMono mono_mul(const CommMono& a, const CommMono& b);
/// True iff a's multiset of factors is contained in m's.
bool mono_divides(const CommMono& a, const CommMono& m);
/// m / a; precondition mono_divides(a, m).
CommMono mono_quotient(const CommMono& m, const CommMono& a);
/// Factor-wise least common multiple (max multiplicity per Lyndon word).
CommMono mono_lcm(const CommMono& a, const CommMono& b);
/// True iff the factor multisets are disjoint.
bool mono_coprime(const CommMono& a, const CommMono& b);

/// Sparse element of the free Poisson algebra; no zero coefficients stored.
using FpElem = std::map<CommMono, Rational, MonoLess>;

FpElem fp_zero();
FpElem fp_one();
FpElem fp_gen(Letter g);
FpElem fp_mono(CommMono m);

void fp_add_term(FpElem& x, const CommMono& m, const Rational& c);
void fp_add_scaled(FpElem& x, const FpElem& y, const Rational& c);
FpElem fp_add(const FpElem& x, const FpElem& y);
FpElem fp_sub(const FpElem& x, const FpElem& y);
FpElem fp_scale(const FpElem& x, const Rational& c);
FpElem fp_mul(const FpElem& x, const FpElem& y);

/// The unique biderivation extending the free Lie bracket.
FpElem fp_bracket(const FpElem& x, const FpElem& y);

/// Max monomial degree; -1 for the zero element.
long fp_degree(const FpElem& x);

/// Free Lie bracket of two Lyndon-word basis elements, re-expanded in the
/// Lyndon basis (a combination of singleton Lie monomials of degree |a|+|b|).
/// Memoized per word pair.
FpElem lie_bracket(const Word& a, const Word& b);

/// All commutative monomials of exactly the given degree, ascending in the
/// monomial order.
std::vector<CommMono> enumerate_monomials(std::size_t alphabet_size, std::size_t degree);

} // namespace pcoact
