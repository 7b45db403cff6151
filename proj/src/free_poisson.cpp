#include "pcoact/free_poisson.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>

#include "pcoact/errors.hpp"

namespace pcoact {

int word_cmp(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    // Lyndon iff strictly smaller than every proper suffix.
    for (std::size_t s = 1; s < w.size(); ++s) {
        Word suf(w.begin() + s, w.end());
        if (!(w < suf)) return false;
    }
    return true;
}

std::vector<Word> lyndon_words(std::size_t alphabet_size, std::size_t degree) {
    // Duval's algorithm, filtered to the requested length.
    std::vector<Word> out;
    if (alphabet_size == 0 || degree == 0) return out;
    Word w{0};
    while (true) {
        if (w.size() == degree) out.push_back(w);
        // extend periodically to the window size, then increment
        Word ext = w;
        while (ext.size() < degree) ext.push_back(ext[ext.size() % w.size()]);
        w = ext;
        while (!w.empty() && w.back() == alphabet_size - 1) w.pop_back();
        if (w.empty()) break;
        w.back()++;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
    assert(w.size() >= 2);
    std::size_t best = 1;
    for (std::size_t s = 2; s < w.size(); ++s) {
        Word cur(w.begin() + s, w.end());
        Word b(w.begin() + best, w.end());
        if (cur < b) best = s;
    }
    return {Word(w.begin(), w.begin() + best), Word(w.begin() + best, w.end())};
}

int mono_cmp(const CommMono& a, const CommMono& b) {
    std::size_t da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    std::size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        int c = word_cmp(a.factors[i], b.factors[j]);
        if (c != 0) return c; // the side holding the greater variable wins
        ++i;
        ++j;
    }
    // equal degree forces simultaneous exhaustion
    return 0;
}

namespace {
struct WordGreater {
    bool operator()(const Word& x, const Word& y) const { return word_cmp(x, y) > 0; }
};
} // namespace

CommMono mono_mul(const CommMono& a, const CommMono& b) {
    CommMono out;
    out.factors.reserve(a.factors.size() + b.factors.size());
    std::merge(a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end(),
               std::back_inserter(out.factors), WordGreater{});
    return out;
}

bool mono_divides(const CommMono& a, const CommMono& m) {
    std::size_t i = 0, j = 0;
    while (i < a.factors.size() && j < m.factors.size()) {
        int c = word_cmp(a.factors[i], m.factors[j]);
        if (c == 0) {
            ++i;
            ++j;
        } else if (c > 0) {
            return false; // a holds a variable greater than anything left in m
        } else {
            ++j;
        }
    }
    return i == a.factors.size();
}

CommMono mono_quotient(const CommMono& m, const CommMono& a) {
    CommMono out;
    std::size_t i = 0;
    for (std::size_t j = 0; j < m.factors.size(); ++j) {
        if (i < a.factors.size() && word_cmp(a.factors[i], m.factors[j]) == 0)
            ++i;
        else
            out.factors.push_back(m.factors[j]);
    }
    assert(i == a.factors.size());
    return out;
}

CommMono mono_lcm(const CommMono& a, const CommMono& b) {
    CommMono out;
    std::size_t i = 0, j = 0;
    while (i < a.factors.size() || j < b.factors.size()) {
        if (i == a.factors.size())
            out.factors.push_back(b.factors[j++]);
        else if (j == b.factors.size())
            out.factors.push_back(a.factors[i++]);
        else {
            int c = word_cmp(a.factors[i], b.factors[j]);
            if (c == 0) {
                out.factors.push_back(a.factors[i]);
                ++i;
                ++j;
            } else if (c > 0)
                out.factors.push_back(a.factors[i++]);
            else
                out.factors.push_back(b.factors[j++]);
        }
    }
    return out;
}

bool mono_coprime(const CommMono& a, const CommMono& b) {
    std::size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        int c = word_cmp(a.factors[i], b.factors[j]);
        if (c == 0) return false;
        if (c > 0)
            ++i;
        else
            ++j;
    }
    return true;
}

FpElem fp_zero() { return {}; }

FpElem fp_one() {
    FpElem x;
    x[CommMono{}] = 1;
    return x;
}

FpElem fp_gen(Letter g) {
    FpElem x;
    CommMono m;
    m.factors.push_back(Word{g});
    x[m] = 1;
    return x;
}

FpElem fp_mono(CommMono m) {
    FpElem x;
    x[std::move(m)] = 1;
    return x;
}

void fp_add_term(FpElem& x, const CommMono& m, const Rational& c) {
    if (c == 0) return;
    auto it = x.find(m);
    if (it == x.end()) {
        x.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) x.erase(it);
    }
}

void fp_add_scaled(FpElem& x, const FpElem& y, const Rational& c) {
    if (c == 0) return;
    for (const auto& [m, cy] : y) fp_add_term(x, m, cy * c);
}

FpElem fp_add(const FpElem& x, const FpElem& y) {
    FpElem out = x;
    fp_add_scaled(out, y, Rational(1));
    return out;
}

FpElem fp_sub(const FpElem& x, const FpElem& y) {
    FpElem out = x;
    fp_add_scaled(out, y, Rational(-1));
    return out;
}

FpElem fp_scale(const FpElem& x, const Rational& c) {
    FpElem out;
    if (c == 0) return out;
    for (const auto& [m, cx] : x) out[m] = cx * c;
    return out;
}

FpElem fp_mul(const FpElem& x, const FpElem& y) {
    FpElem out;
    for (const auto& [mx, cx] : x)
        for (const auto& [my, cy] : y) fp_add_term(out, mono_mul(mx, my), cx * cy);
    return out;
}

long fp_degree(const FpElem& x) {
    if (x.empty()) return -1;
    return static_cast<long>(x.rbegin()->first.degree());
}

// ---------------------------------------------------------------------------
// Free Lie algebra in the Lyndon basis.
//
// The standard bracketing of a Lyndon word expands, inside the free
// associative algebra, as the word itself plus lexicographically larger words
// of the same length. That triangularity drives the rewriting below.

namespace {

using AssocPoly = std::map<Word, Rational>; // homogeneous, keyed by plain lex

void assoc_add(AssocPoly& x, const Word& w, const Rational& c) {
    if (c == 0) return;
    auto it = x.find(w);
    if (it == x.end())
        x.emplace(w, c);
    else {
        it->second += c;
        if (it->second == 0) x.erase(it);
    }
}

AssocPoly assoc_mul(const AssocPoly& x, const AssocPoly& y) {
    AssocPoly out;
    for (const auto& [wx, cx] : x)
        for (const auto& [wy, cy] : y) {
            Word w = wx;
            w.insert(w.end(), wy.begin(), wy.end());
            assoc_add(out, w, cx * cy);
        }
    return out;
}

std::map<Word, AssocPoly> g_expansion_memo;
std::mutex g_expansion_mutex;

AssocPoly expansion(const Word& w) {
    {
        std::lock_guard<std::mutex> lk(g_expansion_mutex);
        auto it = g_expansion_memo.find(w);
        if (it != g_expansion_memo.end()) return it->second;
    }
    AssocPoly out;
    if (w.size() == 1) {
        out[w] = 1;
    } else {
        auto [u, v] = standard_factorization(w);
        AssocPoly eu = expansion(u), ev = expansion(v);
        out = assoc_mul(eu, ev);
        AssocPoly vu = assoc_mul(ev, eu);
        for (const auto& [word, c] : vu) assoc_add(out, word, -c);
    }
    std::lock_guard<std::mutex> lk(g_expansion_mutex);
    g_expansion_memo.emplace(w, out);
    return out;
}

/// Rewrites a homogeneous Lie element (given in the associative algebra) into
/// the Lyndon basis.
FpElem to_lyndon_basis(AssocPoly p) {
    FpElem out;
    while (!p.empty()) {
        auto it = p.begin(); // lexicographically smallest word
        Word w = it->first;
        Rational c = it->second;
        assert(is_lyndon(w));
        CommMono m;
        m.factors.push_back(w);
        fp_add_term(out, m, c);
        for (const auto& [word, ce] : expansion(w)) assoc_add(p, word, -c * ce);
    }
    return out;
}

std::map<std::pair<Word, Word>, FpElem> g_bracket_memo;
std::mutex g_bracket_mutex;

} // namespace

FpElem lie_bracket(const Word& a, const Word& b) {
    if (a == b) return {};
    {
        std::lock_guard<std::mutex> lk(g_bracket_mutex);
        auto it = g_bracket_memo.find({a, b});
        if (it != g_bracket_memo.end()) return it->second;
    }
    AssocPoly ea = expansion(a), eb = expansion(b);
    AssocPoly comm = assoc_mul(ea, eb);
    for (const auto& [w, c] : assoc_mul(eb, ea)) assoc_add(comm, w, -c);
    FpElem out = to_lyndon_basis(std::move(comm));
    std::lock_guard<std::mutex> lk(g_bracket_mutex);
    g_bracket_memo.emplace(std::make_pair(a, b), out);
    return out;
}

namespace {

/// [A, B] for commutative monomials via the Leibniz rule in both slots.
FpElem bracket_monos(const CommMono& a, const CommMono& b) {
    FpElem out;
    for (std::size_t p = 0; p < a.factors.size(); ++p) {
        CommMono rest_a;
        rest_a.factors.reserve(a.factors.size() - 1);
        for (std::size_t t = 0; t < a.factors.size(); ++t)
            if (t != p) rest_a.factors.push_back(a.factors[t]);
        for (std::size_t q = 0; q < b.factors.size(); ++q) {
            CommMono rest_b;
            rest_b.factors.reserve(b.factors.size() - 1);
            for (std::size_t t = 0; t < b.factors.size(); ++t)
                if (t != q) rest_b.factors.push_back(b.factors[t]);
            FpElem lb = lie_bracket(a.factors[p], b.factors[q]);
            if (lb.empty()) continue;
            CommMono rest = mono_mul(rest_a, rest_b);
            for (const auto& [m, c] : lb) fp_add_term(out, mono_mul(rest, m), c);
        }
    }
    return out;
}

} // namespace

FpElem fp_bracket(const FpElem& x, const FpElem& y) {
    FpElem out;
    for (const auto& [mx, cx] : x)
        for (const auto& [my, cy] : y) fp_add_scaled(out, bracket_monos(mx, my), cx * cy);
    return out;
}

std::vector<CommMono> enumerate_monomials(std::size_t alphabet_size, std::size_t degree) {
    // All Lyndon words of degree <= d, descending under the variable order.
    std::vector<Word> vars;
    for (std::size_t d = degree; d >= 1; --d) {
        auto ws = lyndon_words(alphabet_size, d);
        std::sort(ws.begin(), ws.end(), WordGreater{});
        vars.insert(vars.end(), ws.begin(), ws.end());
    }
    std::vector<CommMono> out;
    CommMono cur;
    // choose factors non-increasingly from vars
    auto rec = [&](auto&& self, std::size_t start, std::size_t remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t v = start; v < vars.size(); ++v) {
            if (vars[v].size() > remaining) continue;
            cur.factors.push_back(vars[v]);
            self(self, v, remaining - vars[v].size());
            cur.factors.pop_back();
        }
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), MonoLess{});
    return out;
}

} // namespace pcoact
