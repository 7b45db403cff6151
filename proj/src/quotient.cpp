#include "pcoact/quotient.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pcoact/errors.hpp"

namespace pcoact {

namespace {

using Memo = std::map<CommMono, FpElem, MonoLess>;

const std::size_t NPOS = static_cast<std::size_t>(-1);

using Subst = std::map<Letter, Rational>;

/// Projection along "letter = constant" relations: a single-letter factor is
/// replaced by its constant value, and any bracket word containing such a
/// letter dies (its bracket with a central constant vanishes).
FpElem subst_apply(const FpElem& f, const Subst& subst) {
    if (subst.empty()) return f;
    FpElem out;
    for (const auto& [mono, c] : f) {
        Rational coeff = c;
        CommMono m2;
        bool dead = false;
        for (const auto& w : mono.factors) {
            if (w.size() == 1) {
                auto it = subst.find(w.front());
                if (it != subst.end()) {
                    coeff *= it->second;
                    if (coeff == 0) break;
                    continue;
                }
            } else if (std::any_of(w.begin(), w.end(),
                                   [&](Letter l) { return subst.count(l) != 0; })) {
                dead = true;
                break;
            }
            m2.factors.push_back(w);
        }
        if (dead || coeff == 0) continue;
        fp_add_term(out, m2, coeff);
    }
    return out;
}

/// Finds letters pinned to constants by the relations ("x - c" shapes),
/// iterating because one substitution can expose another.
Subst find_pinned_letters(const std::vector<FpElem>& relations) {
    Subst subst;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& rel : relations) {
            FpElem f = subst_apply(rel, subst);
            if (f.empty() || f.size() > 2) continue;
            const auto& [lead, lc] = *f.rbegin();
            if (lead.factors.size() != 1 || lead.factors.front().size() != 1) continue;
            Letter l = lead.factors.front().front();
            if (subst.count(l)) continue;
            Rational value = 0;
            if (f.size() == 2) {
                const auto& [tail, tc] = *f.begin();
                if (!tail.factors.empty()) continue; // tail is not a constant
                value = -tc / lc;
            }
            subst.emplace(l, value);
            changed = true;
        }
    }
    return subst;
}

/// Clears denominators and divides out the integer content, making the lead
/// coefficient positive. Fraction-free rows keep coefficient growth in check
/// where monic normalization lets denominators snowball.
void make_primitive(FpElem& f) {
    if (f.empty()) return;
    using boost::multiprecision::cpp_int;
    cpp_int den = 1;
    for (const auto& [m, c] : f) {
        (void)m;
        den = lcm(den, denominator(c));
    }
    cpp_int num = 0;
    for (const auto& [m, c] : f) {
        (void)m;
        num = gcd(num, cpp_int(numerator(c) * (den / denominator(c))));
        if (num == 1) break;
    }
    Rational scale(den, num);
    if (f.rbegin()->second < 0) scale = -scale;
    if (scale == 1) return;
    for (auto& [m, c] : f) {
        (void)m;
        c *= scale;
    }
}

// deterministic total order on elements, used only as an insertion tie-break
bool fp_cmp_less(const FpElem& a, const FpElem& b) {
    auto ia = a.rbegin(), ib = b.rbegin();
    for (; ia != a.rend() && ib != b.rend(); ++ia, ++ib) {
        int c = mono_cmp(ia->first, ib->first);
        if (c != 0) return c < 0;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return a.size() < b.size();
}

/// Truncated completion of the Poisson ideal: head rewriting over the
/// commutative structure (Lie monomials acting as variables), S-polynomial
/// candidates for the multiplicative closure and generator brackets for the
/// Lie closure, everything capped at filtration degree D+margin. Tails stay
/// unreduced until the final cleanup; only leading monomials are rewritten
/// during completion.
struct Engine {
    std::size_t alphabet = 0;
    std::size_t cap = 0;
    std::size_t budget = 0;
    Subst subst; // letters pinned to constants, eliminated from the run

    std::vector<FpElem> rows; // monic, live leads mutually indivisible
    std::vector<CommMono> leads;
    std::vector<char> alive;
    std::size_t live_count = 0;
    // rows indexed by the greatest variable of their lead, for divisor lookup
    std::map<Word, std::vector<std::size_t>> buckets;
    std::set<CommMono, MonoLess> seen;

    void note(const FpElem& f) {
        for (const auto& [m, c] : f) {
            (void)c;
            seen.insert(m);
        }
        if (seen.size() > budget) throw BudgetExceeded(seen.size());
    }

    std::size_t find_divisor(const CommMono& m) const {
        std::size_t best = NPOS;
        auto consider = [&](std::size_t r) {
            if (!alive[r] || !mono_divides(leads[r], m)) return;
            if (best == NPOS || mono_cmp(leads[r], leads[best]) > 0) best = r;
        };
        auto itc = buckets.find(Word{});
        if (itc != buckets.end())
            for (auto r : itc->second) consider(r);
        const Word* prev = nullptr;
        for (const auto& w : m.factors) {
            if (prev && *prev == w) continue; // repeated variable
            prev = &w;
            auto it = buckets.find(w);
            if (it == buckets.end()) continue;
            for (auto r : it->second) consider(r);
        }
        return best;
    }

    /// Rewrites the leading monomial until it is irreducible; tails are left
    /// alone. Pure with respect to the row set.
    /// Full normal form against the current rows: every monomial is rewritten,
    /// not just the lead. Keeping rows fully reduced keeps them sparse and
    /// their coefficients small. Pure with respect to the row set.
    FpElem head_reduce(FpElem f) const {
        FpElem out;
        std::size_t steps = 0;
        while (!f.empty()) {
            auto top_it = std::prev(f.end());
            std::size_t r = find_divisor(top_it->first);
            if (r == NPOS) { // irreducible: peel off into the result
                out.emplace(top_it->first, std::move(top_it->second));
                f.erase(top_it);
                continue;
            }
            Rational c = top_it->second / rows[r].rbegin()->second;
            CommMono cof = mono_quotient(top_it->first, leads[r]);
            for (const auto& [m, rc] : rows[r]) fp_add_term(f, mono_mul(cof, m), -c * rc);
            // periodic content strip keeps the coefficients from snowballing
            if ((++steps & 15u) == 0) {
                for (const auto& [m, cc] : out) fp_add_term(f, m, cc);
                out.clear();
                make_primitive(f);
            }
        }
        make_primitive(out);
        return out;
    }

    /// Full normal form, memoized per monomial; used only by the final
    /// cleanup, where the row set no longer changes.
    FpElem nf_mono(const CommMono& m, Memo& memo) const {
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        std::size_t r = find_divisor(m);
        FpElem res;
        if (r == NPOS) {
            res[m] = 1;
        } else {
            CommMono cof = mono_quotient(m, leads[r]);
            const FpElem& row = rows[r];
            auto end = std::prev(row.end());
            const Rational& lc = end->second;
            for (auto t = row.begin(); t != end; ++t)
                fp_add_scaled(res, nf_mono(mono_mul(cof, t->first), memo), -t->second / lc);
        }
        memo.emplace(m, res);
        return res;
    }

    FpElem nf(const FpElem& x, Memo& memo) const {
        FpElem out;
        for (const auto& [m, c] : x) fp_add_scaled(out, nf_mono(m, memo), c);
        return out;
    }

    void add_row(FpElem f) {
        make_primitive(f);
        const CommMono& lead = f.rbegin()->first;
        std::size_t idx = rows.size();
        leads.push_back(lead);
        Word key = lead.factors.empty() ? Word{} : lead.factors.front();
        buckets[key].push_back(idx);
        rows.push_back(std::move(f));
        alive.push_back(1);
        ++live_count;
    }

    /// Candidate queue entry. `lie` marks bracket-descendants of the original
    /// relations: only those need further brackets with the generators, since
    /// the algebraic ideal generated by a bracket-closed set is already a
    /// Poisson ideal (Leibniz pushes brackets onto the generating set).
    struct Cand {
        FpElem f;
        bool lie = false;
    };

    /// Retires live rows whose lead the new lead divides; they are requeued so
    /// their information is not lost, but they no longer feed candidate
    /// generation. Keeps the live basis lead-minimal throughout the run.
    /// Requeued rows carry lie=false: their brackets were already emitted at
    /// first insertion.
    void evict_multiples(std::size_t idx, std::vector<Cand>& requeue) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == idx || !alive[r]) continue;
            if (!mono_divides(leads[idx], leads[r])) continue;
            alive[r] = 0;
            --live_count;
            requeue.push_back({rows[r], false});
        }
    }

    /// Buchberger chain criterion, strict form: the pair (r, r2) is redundant
    /// when some third live lead divides lcm(r, r2) properly on both sides.
    /// The two sub-pairs have strictly smaller lcms (which also stay under the
    /// degree cap, since they divide this one), so induction on the lcm makes
    /// the strict form sound without pair-ordering bookkeeping.
    bool chain_skippable(std::size_t r, std::size_t r2, const CommMono& l) const {
        auto check = [&](std::size_t r3) {
            if (r3 == r || r3 == r2 || !alive[r3]) return false;
            if (!mono_divides(leads[r3], l)) return false;
            if (mono_cmp(mono_lcm(leads[r], leads[r3]), l) == 0) return false;
            if (mono_cmp(mono_lcm(leads[r2], leads[r3]), l) == 0) return false;
            return true;
        };
        auto itc = buckets.find(Word{});
        if (itc != buckets.end())
            for (auto r3 : itc->second)
                if (check(r3)) return true;
        const Word* prev = nullptr;
        for (const auto& w : l.factors) {
            if (prev && *prev == w) continue;
            prev = &w;
            auto it = buckets.find(w);
            if (it == buckets.end()) continue;
            for (auto r3 : it->second)
                if (check(r3)) return true;
        }
        return false;
    }

    void gen_candidates(std::size_t r, bool lie, std::vector<Cand>& out) const {
        // Lie closure: bracket-descendants of the original relations only;
        // their closure under brackets with single generators reaches all
        // bracket multiples through Jacobi and Leibniz.
        // the lead's bracket may exceed the cap while lower terms' brackets
        // cancel into range, so filter on the actual bracket degree
        if (lie && fp_degree(rows[r]) >= 1) {
            for (std::size_t g = 0; g < alphabet; ++g) {
                if (subst.count(static_cast<Letter>(g))) continue; // central constant
                FpElem br = fp_bracket(fp_gen(static_cast<Letter>(g)), rows[r]);
                if (!br.empty() && fp_degree(br) <= static_cast<long>(cap))
                    out.push_back({std::move(br), true});
            }
        }
        // multiplicative closure: S-polynomials within the degree cap
        for (std::size_t r2 = 0; r2 + 1 < rows.size(); ++r2) {
            if (!alive[r2]) continue;
            if (mono_coprime(leads[r], leads[r2])) continue;
            CommMono l = mono_lcm(leads[r], leads[r2]);
            if (l.degree() > cap) continue;
            if (chain_skippable(r, r2, l)) continue;
            FpElem s = fp_mul(fp_mono(mono_quotient(l, leads[r])), rows[r]);
            const Rational& lc1 = rows[r].rbegin()->second;
            const Rational& lc2 = rows[r2].rbegin()->second;
            if (lc2 != 1)
                for (auto& [m, c] : s) {
                    (void)m;
                    c *= lc2;
                }
            fp_add_scaled(s, fp_mul(fp_mono(mono_quotient(l, leads[r2])), rows[r2]), -lc1);
            if (!s.empty()) out.push_back({std::move(s), false});
        }
    }

    void run(const RelationSet& rels, bool parallel) {
        const bool trace = std::getenv("PCOACT_SAT_TRACE") != nullptr;
        std::vector<Cand> pending;
        for (const auto& r : rels.relations) {
            FpElem f = subst_apply(r, subst);
            if (f.empty()) continue;
            if (fp_degree(f) > static_cast<long>(cap)) continue;
            pending.push_back({std::move(f), true});
        }
        double t_red = 0, t_ins = 0;
        std::size_t n_spair = 0, n_lie = 0, n_evict = 0;
        while (!pending.empty()) {
            if (trace) {
                std::size_t terms = 0, maxterms = 0, maxbits = 0;
                for (std::size_t r = 0; r < rows.size(); ++r) {
                    if (!alive[r]) continue;
                    terms += rows[r].size();
                    maxterms = std::max(maxterms, rows[r].size());
                    for (const auto& [mm, cc] : rows[r]) {
                        (void)mm;
                        maxbits = std::max(
                            {maxbits, static_cast<std::size_t>(msb(abs(numerator(cc)) + 1)),
                             static_cast<std::size_t>(msb(denominator(cc)))});
                    }
                }
                std::fprintf(stderr,
                             "[sat] cap=%zu live=%zu/%zu pending=%zu seen=%zu "
                             "red=%.1fs ins=%.1fs sp=%zu lie=%zu ev=%zu terms=%zu mt=%zu mb=%zu\n",
                             cap, live_count, rows.size(), pending.size(), seen.size(), t_red,
                             t_ins, n_spair, n_lie, n_evict, terms, maxterms, maxbits);
            }
            for (const auto& c : pending) note(c.f);
            auto tp0 = std::chrono::steady_clock::now();
            std::vector<Cand> reduced(pending.size());
            // reduction against the frozen basis; pure, so the parallel and
            // serial lanes produce identical results
#ifdef _OPENMP
            if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
                for (long i = 0; i < static_cast<long>(pending.size()); ++i)
                    reduced[i] = {head_reduce(std::move(pending[i].f)), pending[i].lie};
            } else
#endif
            {
                (void)parallel;
                for (std::size_t i = 0; i < pending.size(); ++i)
                    reduced[i] = {head_reduce(std::move(pending[i].f)), pending[i].lie};
            }
            auto tp1 = std::chrono::steady_clock::now();
            t_red += std::chrono::duration<double>(tp1 - tp0).count();
            // insert smaller leads first: they prune more of what follows
            std::sort(reduced.begin(), reduced.end(), [](const Cand& x, const Cand& y) {
                const FpElem& a = x.f;
                const FpElem& b = y.f;
                if (a.empty() || b.empty()) return b.empty() < a.empty();
                int c = mono_cmp(a.rbegin()->first, b.rbegin()->first);
                if (c != 0) return c < 0;
                if (x.lie != y.lie) return x.lie > y.lie;
                return fp_cmp_less(a, b);
            });
            std::vector<Cand> next;
            for (auto& cand : reduced) {
                if (cand.f.empty()) continue;
                FpElem g = head_reduce(std::move(cand.f)); // basis grew in-batch
                if (g.empty()) continue;
                note(g);
                add_row(std::move(g));
                std::size_t before = next.size();
                evict_multiples(rows.size() - 1, next);
                n_evict += next.size() - before;
                before = next.size();
                gen_candidates(rows.size() - 1, cand.lie, next);
                for (std::size_t k = before; k < next.size(); ++k)
                    next[k].lie ? ++n_lie : ++n_spair;
            }
            t_ins += std::chrono::duration<double>(std::chrono::steady_clock::now() - tp1).count();
            pending = std::move(next);
        }
    }

    /// Restricts to rows of leading degree <= D, drops rows made redundant by
    /// smaller leads (verifying they reduce to zero first) and fully
    /// tail-reduces the survivors.
    Engine cleanup(std::size_t D) const {
        std::vector<std::size_t> order;
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (alive[r] && leads[r].degree() <= D) order.push_back(r);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return mono_cmp(leads[a], leads[b]) < 0; });

        Engine kept;
        kept.alphabet = alphabet;
        kept.cap = cap;
        kept.budget = budget;
        kept.subst = subst;
        std::vector<std::size_t> dropped;
        for (auto r : order) {
            if (kept.find_divisor(leads[r]) != NPOS)
                dropped.push_back(r);
            else
                kept.add_row(rows[r]);
        }
        {
            Memo memo;
            for (auto r : dropped) {
                FpElem g = kept.nf(rows[r], memo);
                if (!g.empty()) { // truncation left a genuinely independent row
                    kept.add_row(std::move(g));
                    memo.clear();
                }
            }
        }
        // tail reduction, ascending leads
        std::vector<std::size_t> korder(kept.rows.size());
        std::iota(korder.begin(), korder.end(), 0);
        std::sort(korder.begin(), korder.end(), [&](std::size_t a, std::size_t b) {
            return mono_cmp(kept.leads[a], kept.leads[b]) < 0;
        });
        for (auto r : korder) {
            FpElem& row = kept.rows[r];
            auto lead_it = std::prev(row.end());
            FpElem tail(row.begin(), lead_it);
            Memo tmemo;
            FpElem red = kept.nf(tail, tmemo);
            FpElem fresh;
            fresh[kept.leads[r]] = 1; // final basis is monic (reduced echelon)
            fp_add_scaled(fresh, red, Rational(1) / lead_it->second);
            row = std::move(fresh);
        }
        return kept;
    }
};

} // namespace

FpElem QuotientContext::normal_form(const FpElem& x) const {
    if (fp_degree(x) > static_cast<long>(D))
        throw DegreeOverflow("normal_form: element degree exceeds truncation degree");
    Memo memo;
    FpElem out;
    // rows are sorted by descending lead, so a front-to-back scan finds the
    // greatest dividing lead first
    auto nf_mono = [&](auto&& self, const CommMono& m) -> FpElem {
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        std::size_t best = NPOS;
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (mono_divides(lead(r), m)) {
                best = r;
                break;
            }
        FpElem res;
        if (best == NPOS) {
            res[m] = 1;
        } else {
            CommMono cof = mono_quotient(m, lead(best));
            const FpElem& row = rows[best];
            auto end = std::prev(row.end());
            for (auto t = row.begin(); t != end; ++t)
                fp_add_scaled(res, self(self, mono_mul(cof, t->first)), -t->second);
        }
        memo.emplace(m, res);
        return res;
    };
    for (const auto& [m, c] : x) fp_add_scaled(out, nf_mono(nf_mono, m), c);
    return out;
}

bool QuotientContext::is_zero_mod(const FpElem& x) const { return normal_form(x).empty(); }

std::vector<std::size_t> QuotientContext::quotient_dims() const {
    auto ranks = ideal_ranks();
    std::vector<std::size_t> dims;
    for (std::size_t d = 0; d <= D; ++d)
        dims.push_back(enumerate_monomials(rels.alphabet_size, d).size() - ranks[d]);
    return dims;
}

std::vector<std::size_t> QuotientContext::ideal_ranks() const {
    std::vector<std::size_t> ranks;
    for (std::size_t d = 0; d <= D; ++d) {
        auto monos = enumerate_monomials(rels.alphabet_size, d);
        std::size_t reducible = 0;
        for (const auto& m : monos)
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (mono_divides(lead(r), m)) {
                    ++reducible;
                    break;
                }
        ranks.push_back(reducible);
    }
    return ranks;
}

QuotientContext saturate(const RelationSet& rels, std::size_t D, std::size_t m,
                         const SaturateOptions& opts) {
    Engine e;
    e.alphabet = rels.alphabet_size;
    e.cap = D + m;
    e.budget = opts.budget;
    e.subst = find_pinned_letters(rels.relations);
    e.run(rels, opts.parallel);
    Engine kept = e.cleanup(D);

    // restore the eliminated letters: the pinned relations themselves, plus
    // every bracket word through a pinned letter (central constants bracket to
    // zero, so those words lie in the ideal)
    for (const auto& [l, value] : e.subst) {
        FpElem f;
        CommMono m1;
        m1.factors.push_back(Word{l});
        f[m1] = 1;
        if (value != 0) f[CommMono{}] = -value;
        kept.add_row(std::move(f));
    }
    if (!e.subst.empty())
        for (std::size_t d = 2; d <= D; ++d)
            for (const auto& w : lyndon_words(rels.alphabet_size, d))
                if (std::any_of(w.begin(), w.end(),
                                [&](Letter l) { return e.subst.count(l) != 0; })) {
                    FpElem f;
                    CommMono mw;
                    mw.factors.push_back(w);
                    f[mw] = 1;
                    kept.add_row(std::move(f));
                }

    QuotientContext ctx;
    ctx.rels = rels;
    ctx.D = D;
    ctx.margin = m;
    std::vector<std::size_t> order(kept.rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return mono_cmp(kept.leads[a], kept.leads[b]) > 0;
    });
    for (auto r : order) ctx.rows.push_back(std::move(kept.rows[r]));
    return ctx;
}

QuotientContext saturate_with_stability(const RelationSet& rels, std::size_t D, std::size_t m,
                                        const SaturateOptions& opts) {
    QuotientContext ctx = saturate(rels, D, m, opts);
    QuotientContext probe = saturate(rels, D, m + 1, opts);
    ctx.margin_stable = (ctx.quotient_dims() == probe.quotient_dims());
    return ctx;
}

Tensor2 t2_zero() { return {}; }

Tensor2 t2_one() {
    Tensor2 t;
    t[{CommMono{}, CommMono{}}] = 1;
    return t;
}

void t2_add_term(Tensor2& t, const CommMono& a, const CommMono& b, const Rational& c) {
    if (c == 0) return;
    auto key = std::make_pair(a, b);
    auto it = t.find(key);
    if (it == t.end())
        t.emplace(std::move(key), c);
    else {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}

void t2_add_scaled(Tensor2& t, const Tensor2& u, const Rational& c) {
    if (c == 0) return;
    for (const auto& [k, cu] : u) t2_add_term(t, k.first, k.second, cu * c);
}

Tensor2 t2_mul(const Tensor2& x, const Tensor2& y) {
    Tensor2 out;
    for (const auto& [kx, cx] : x)
        for (const auto& [ky, cy] : y)
            t2_add_term(out, mono_mul(kx.first, ky.first), mono_mul(kx.second, ky.second),
                        cx * cy);
    return out;
}

Tensor2 t2_bracket(const Tensor2& x, const Tensor2& y) {
    Tensor2 out;
    for (const auto& [kx, cx] : x)
        for (const auto& [ky, cy] : y) {
            Rational c = cx * cy;
            // pr (x) [q,s]
            CommMono left = mono_mul(kx.first, ky.first);
            FpElem br = fp_bracket(fp_mono(kx.second), fp_mono(ky.second));
            for (const auto& [m, cb] : br) t2_add_term(out, left, m, c * cb);
            // [p,r] (x) qs
            CommMono right = mono_mul(kx.second, ky.second);
            FpElem bl = fp_bracket(fp_mono(kx.first), fp_mono(ky.first));
            for (const auto& [m, cb] : bl) t2_add_term(out, m, right, c * cb);
        }
    return out;
}

Tensor2 t2_from(const FpElem& left, const FpElem& right) {
    Tensor2 out;
    for (const auto& [ml, cl] : left)
        for (const auto& [mr, cr] : right) t2_add_term(out, ml, mr, cl * cr);
    return out;
}

Tensor2 tensor2_nf(const Tensor2& t, const QuotientContext& ctx_left,
                   const QuotientContext& ctx_right) {
    Tensor2 out;
    for (const auto& [k, c] : t) {
        FpElem ln = ctx_left.normal_form(fp_mono(k.first));
        FpElem rn = ctx_right.normal_form(fp_mono(k.second));
        for (const auto& [ml, cl] : ln)
            for (const auto& [mr, cr] : rn) t2_add_term(out, ml, mr, c * cl * cr);
    }
    return out;
}

} // namespace pcoact
