#include "doctest.h"

#include <numeric>

#include "pcoact/free_poisson.hpp"

using namespace pcoact;

namespace {

FpElem gen(Letter g) { return fp_gen(g); }

// Witt number (1/d) sum_{e|d} mu(e) m^{d/e}
std::size_t witt(std::size_t m, std::size_t d) {
    auto mobius = [](std::size_t n) {
        int mu = 1;
        for (std::size_t p = 2; p * p <= n; ++p)
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) return 0;
                mu = -mu;
            }
        if (n > 1) mu = -mu;
        return mu;
    };
    long long total = 0;
    for (std::size_t e = 1; e <= d; ++e)
        if (d % e == 0) {
            long long pw = 1;
            for (std::size_t k = 0; k < d / e; ++k) pw *= static_cast<long long>(m);
            total += mobius(e) * pw;
        }
    return static_cast<std::size_t>(total / static_cast<long long>(d));
}

} // namespace

TEST_CASE("lyndon_words match the Witt formula and lexicographic order") {
    for (std::size_t m = 1; m <= 4; ++m)
        for (std::size_t d = 1; d <= 5; ++d) {
            auto words = lyndon_words(m, d);
            CHECK(words.size() == witt(m, d));
            for (const auto& w : words) CHECK(is_lyndon(w));
            for (std::size_t k = 1; k < words.size(); ++k) CHECK(words[k - 1] < words[k]);
        }
}

TEST_CASE("small Lyndon word lists") {
    CHECK(lyndon_words(2, 1) == std::vector<Word>{{0}, {1}});
    CHECK(lyndon_words(2, 2) == std::vector<Word>{{0, 1}});
    CHECK(lyndon_words(2, 3) == std::vector<Word>{{0, 0, 1}, {0, 1, 1}});
}

TEST_CASE("lie_bracket on letters") {
    CHECK(lie_bracket({0}, {0}).empty());
    FpElem ab = lie_bracket({0}, {1});
    REQUIRE(ab.size() == 1);
    CHECK(ab.begin()->first == CommMono{{Word{0, 1}}});
    CHECK(ab.begin()->second == 1);
    FpElem ba = lie_bracket({1}, {0});
    CHECK(fp_add(ab, ba).empty());
}

TEST_CASE("lie_bracket is antisymmetric on Lyndon pairs up to degree 4") {
    for (std::size_t m = 2; m <= 3; ++m) {
        std::vector<Word> words;
        for (std::size_t d = 1; d <= 3; ++d)
            for (const auto& w : lyndon_words(m, d)) words.push_back(w);
        for (const auto& a : words)
            for (const auto& b : words) {
                if (a.size() + b.size() > 4) continue;
                CHECK(fp_add(lie_bracket(a, b), lie_bracket(b, a)).empty());
            }
    }
}

TEST_CASE("lie_bracket satisfies Jacobi up to degree 4") {
    for (std::size_t m = 2; m <= 4; ++m) {
        std::vector<Word> words;
        for (std::size_t d = 1; d <= 2; ++d)
            for (const auto& w : lyndon_words(m, d)) words.push_back(w);
        for (const auto& a : words)
            for (const auto& b : words)
                for (const auto& c : words) {
                    if (a.size() + b.size() + c.size() > 4) continue;
                    FpElem jac = fp_bracket(lie_bracket(a, b), fp_mono(CommMono{{c}}));
                    fp_add_scaled(jac, fp_bracket(lie_bracket(b, c), fp_mono(CommMono{{a}})),
                                  Rational(1));
                    fp_add_scaled(jac, fp_bracket(lie_bracket(c, a), fp_mono(CommMono{{b}})),
                                  Rational(1));
                    CHECK(jac.empty());
                }
    }
}

TEST_CASE("fp_mul is commutative, associative and unital") {
    FpElem a = gen(0), b = gen(1), c = gen(2);
    CHECK(fp_mul(fp_one(), a) == a);
    CHECK(fp_mul(a, b) == fp_mul(b, a));
    CHECK(fp_mul(fp_mul(a, b), c) == fp_mul(a, fp_mul(b, c)));
    FpElem sum = fp_add(a, b);
    FpElem diff = fp_sub(a, b);
    FpElem want = fp_sub(fp_mul(a, a), fp_mul(b, b));
    CHECK(fp_mul(sum, diff) == want);
}

TEST_CASE("fp_bracket basics") {
    FpElem a = gen(0), b = gen(1), c = gen(2);
    CHECK(fp_bracket(a, fp_one()).empty());
    // [a, bc] = [a,b] c + b [a,c]
    FpElem lhs = fp_bracket(a, fp_mul(b, c));
    FpElem rhs = fp_add(fp_mul(fp_bracket(a, b), c), fp_mul(b, fp_bracket(a, c)));
    CHECK(lhs == rhs);
    // [a a, b] = 2 a [a,b]
    FpElem lhs2 = fp_bracket(fp_mul(a, a), b);
    FpElem rhs2 = fp_scale(fp_mul(a, fp_bracket(a, b)), 2);
    CHECK(lhs2 == rhs2);
}

TEST_CASE("fp_bracket satisfies Leibniz on monomial triples up to degree 5") {
    std::vector<FpElem> elems;
    for (Letter g = 0; g < 3; ++g) elems.push_back(gen(g));
    elems.push_back(fp_mul(gen(0), gen(1)));
    elems.push_back(fp_mono(CommMono{{Word{0, 1}}}));
    elems.push_back(fp_mono(CommMono{{Word{0, 1, 2}}}));
    for (const auto& x : elems)
        for (const auto& y : elems)
            for (const auto& z : elems) {
                if (fp_degree(x) + fp_degree(y) + fp_degree(z) > 5) continue;
                FpElem lhs = fp_bracket(x, fp_mul(y, z));
                FpElem rhs =
                    fp_add(fp_mul(fp_bracket(x, y), z), fp_mul(y, fp_bracket(x, z)));
                CHECK(lhs == rhs);
                // antisymmetry
                CHECK(fp_add(fp_bracket(x, y), fp_bracket(y, x)).empty());
            }
}

TEST_CASE("fp_degree conventions") {
    CHECK(fp_degree(fp_zero()) == -1);
    CHECK(fp_degree(fp_one()) == 0);
    FpElem x = fp_mul(gen(0), fp_mono(CommMono{{Word{1, 2}}}));
    CHECK(fp_degree(x) == 3);
}

TEST_CASE("no zero coefficients survive arithmetic") {
    FpElem a = gen(0), b = gen(1);
    FpElem d = fp_sub(fp_mul(a, b), fp_mul(b, a));
    CHECK(d.empty());
    FpElem e = fp_add(a, fp_scale(a, -1));
    CHECK(e.empty());
}

TEST_CASE("monomial count per degree is m^d") {
    for (std::size_t m = 1; m <= 3; ++m) {
        for (std::size_t d = 0; d <= 5; ++d) {
            auto monos = enumerate_monomials(m, d);
            std::size_t want = 1;
            for (std::size_t k = 0; k < d; ++k) want *= m;
            CHECK(monos.size() == want);
            for (std::size_t k = 1; k < monos.size(); ++k)
                CHECK(mono_cmp(monos[k - 1], monos[k]) < 0);
        }
    }
}

TEST_CASE("monomial count matches the symmetric-algebra generating function") {
    // product over Lyndon degrees e of (1-t^e)^(-witt(m,e)), coefficient of t^d
    for (std::size_t m = 2; m <= 3; ++m) {
        const std::size_t N = 5;
        std::vector<long long> coeff(N + 1, 0);
        coeff[0] = 1;
        for (std::size_t e = 1; e <= N; ++e) {
            std::size_t w = witt(m, e);
            for (std::size_t rep = 0; rep < w; ++rep) {
                // multiply by 1/(1-t^e): prefix-sum with stride e
                for (std::size_t d = e; d <= N; ++d) coeff[d] += coeff[d - e];
            }
        }
        for (std::size_t d = 0; d <= N; ++d)
            CHECK(enumerate_monomials(m, d).size() == static_cast<std::size_t>(coeff[d]));
    }
}

TEST_CASE("monomial order is multiplicative and graded") {
    auto monos2 = enumerate_monomials(2, 2);
    auto monos3 = enumerate_monomials(2, 3);
    CHECK(mono_cmp(monos2.back(), monos3.front()) < 0); // graded
    const CommMono g{{Word{0}}};
    for (std::size_t a = 0; a < monos2.size(); ++a)
        for (std::size_t b = a + 1; b < monos2.size(); ++b)
            CHECK(mono_cmp(mono_mul(monos2[a], g), mono_mul(monos2[b], g)) < 0);
}

TEST_CASE("divisibility, quotient, lcm, coprimality") {
    CommMono ab = mono_mul(CommMono{{Word{0}}}, CommMono{{Word{1}}});
    CommMono a{{Word{0}}};
    CommMono b{{Word{1}}};
    CHECK(mono_divides(a, ab));
    CHECK(mono_quotient(ab, a) == b);
    CHECK(mono_lcm(a, b) == ab);
    CHECK(mono_coprime(a, b));
    CHECK_FALSE(mono_coprime(ab, a));
    CHECK(mono_divides(CommMono{}, ab));
}

TEST_CASE("standard factorization peels the longest Lyndon suffix") {
    auto [u, v] = standard_factorization(Word{0, 0, 1});
    CHECK(u == Word{0});
    CHECK(v == Word{0, 1});
    auto [u2, v2] = standard_factorization(Word{0, 1, 1});
    CHECK(u2 == Word{0, 1});
    CHECK(v2 == Word{1});
}
