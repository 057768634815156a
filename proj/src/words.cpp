#include "mhopf/words.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mhopf {

EvaluationPair evaluation_of(const Word& w) {
    EvaluationPair r;
    r.ev.assign(max_letter(w), 0);
    for (Letter x : w) ++r.ev[x - 1];
    for (Letter c : r.ev)
        if (c != 0) r.pev.push_back(c);
    return r;
}

static std::vector<std::size_t> stable_order(const Word& w) {
    std::vector<std::size_t> idx(w.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
    return idx;
}

bool is_m_word(const Word& w, unsigned m) {
    if (m == 0) return false;
    for (Letter c : evaluation_of(w).ev)
        if (c % m != 0) return false;
    return true;
}

Word std_m(const Word& w, unsigned m) {
    if (m == 0) throw Error(ErrorCode::invalid_argument, "m must be positive");
    if (!is_m_word(w, m))
        throw Error(ErrorCode::not_an_m_word, "letter multiplicities are not divisible by m");
    Word r(std::vector<Letter>(w.size(), 0));
    auto idx = stable_order(w);
    for (std::size_t rank = 0; rank < idx.size(); ++rank) r[idx[rank]] = static_cast<Letter>(rank / m + 1);
    return r;
}

Word pack(const Word& w) {
    std::vector<Letter> letters(w.begin(), w.end());
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    Word r;
    r.reserve(w.size());
    for (Letter x : w)
        r.push_back(static_cast<Letter>(std::lower_bound(letters.begin(), letters.end(), x) - letters.begin() + 1));
    return r;
}

Word park_m(const Word& w, unsigned m) {
    if (m == 0) throw Error(ErrorCode::invalid_argument, "m must be positive");
    auto idx = stable_order(w);
    std::vector<long long> u(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) u[i] = w[idx[i]];
    long long drop = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        u[i] -= drop;
        long long bound = static_cast<long long>(m) * static_cast<long long>(i) + 1;
        if (u[i] > bound) {
            drop += u[i] - bound;
            u[i] = bound;
        }
    }
    Word r(std::vector<Letter>(w.size(), 0));
    for (std::size_t i = 0; i < idx.size(); ++i) r[idx[i]] = static_cast<Letter>(u[i]);
    return r;
}

Word park_decrement(const Word& w) {
    Word r = w;
    const std::size_t n = r.size();
    for (;;) {
        std::size_t d = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            std::size_t below = std::count_if(r.begin(), r.end(), [&](Letter x) { return x <= i; });
            if (below < i) {
                d = i;
                break;
            }
        }
        if (d == 0) return r;
        for (Letter& x : r)
            if (x > d) --x;
    }
}

Word shift(const Word& w, Letter k) {
    Word r = w;
    for (Letter& x : r) x += k;
    return r;
}

Word restrict(const Word& w, Letter lo, Letter hi) {
    Word r;
    for (Letter x : w)
        if (x >= lo && x <= hi) r.push_back(x);
    return r;
}

static void shuffle_into(const Word& u, std::size_t i, const Word& v, std::size_t j, Word& cur,
                         std::vector<Word>& out) {
    if (i == u.size() && j == v.size()) {
        out.push_back(cur);
        return;
    }
    if (i < u.size()) {
        cur.push_back(u[i]);
        shuffle_into(u, i + 1, v, j, cur, out);
        cur.pop_back();
    }
    if (j < v.size()) {
        cur.push_back(v[j]);
        shuffle_into(u, i, v, j + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<Word> shuffle(const Word& u, const Word& v) {
    std::vector<Word> out;
    Word cur;
    cur.reserve(u.size() + v.size());
    shuffle_into(u, 0, v, 0, cur, out);
    return out;
}

std::vector<Word> shifted_shuffle_by(const Word& u, const Word& v, Letter k) {
    return shuffle(u, shift(v, k));
}

std::vector<Word> shifted_shuffle(const Word& u, const Word& v) {
    return shifted_shuffle_by(u, v, max_letter(u));
}

bool is_m_permutation(const Word& w, unsigned m) {
    if (m == 0 || w.size() % m != 0) return false;
    auto ev = evaluation_of(w).ev;
    return std::all_of(ev.begin(), ev.end(), [&](Letter c) { return c == m; });
}

std::vector<Word> m_convolution(const Word& alpha, const Word& beta, unsigned m) {
    if (!is_m_permutation(alpha, m) || !is_m_permutation(beta, m))
        throw Error(ErrorCode::not_an_m_permutation, "convolution arguments must be m-permutations");
    const Letter n = max_letter(alpha);
    const Letter p = max_letter(beta);
    std::vector<Word> out;
    std::vector<bool> choose(n + p, false);
    std::fill(choose.begin(), choose.begin() + n, true);
    do {
        std::vector<Letter> left, right;
        for (Letter v = 1; v <= n + p; ++v) (choose[v - 1] ? left : right).push_back(v);
        Word g;
        for (Letter x : alpha) g.push_back(left[x - 1]);
        for (Letter x : beta) g.push_back(right[x - 1]);
        out.push_back(g);
    } while (std::prev_permutation(choose.begin(), choose.end()));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_packed(const Word& w) {
    auto ev = evaluation_of(w).ev;
    return std::all_of(ev.begin(), ev.end(), [](Letter c) { return c > 0; });
}

bool is_m_parking(const Word& w, unsigned m) {
    std::vector<Letter> u(w.begin(), w.end());
    std::sort(u.begin(), u.end());
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] < 1 || u[i] > m * i + 1) return false;
    return true;
}

bool is_nondecreasing(const Word& w) { return std::is_sorted(w.begin(), w.end()); }

bool is_ndpf(const Word& w, unsigned m) { return is_nondecreasing(w) && is_m_parking(w, m); }

std::size_t inversions(const Word& w) {
    std::size_t inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

Composition recoil_composition(const Word& w) {
    Word s = std_m(w, 1);
    const std::size_t n = s.size();
    std::vector<std::size_t> pos(n + 1);
    for (std::size_t i = 0; i < n; ++i) pos[s[i]] = i;
    Composition c;
    Letter run = 0;
    for (std::size_t v = 1; v <= n; ++v) {
        ++run;
        if (v == n || pos[v + 1] < pos[v]) {
            c.push_back(run);
            run = 0;
        }
    }
    return c;
}

Word sorted_word(const std::vector<Letter>& ev) {
    Word w;
    for (std::size_t i = 0; i < ev.size(); ++i)
        for (Letter k = 0; k < ev[i]; ++k) w.push_back(static_cast<Letter>(i + 1));
    return w;
}

std::vector<Composition> compositions(unsigned n) {
    std::vector<Composition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        Composition c;
        Letter run = 1;
        for (unsigned k = 0; k + 1 < n; ++k) {
            if (mask >> k & 1u) {
                c.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        c.push_back(run);
        out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Composition> coarsenings(const Composition& c) {
    std::vector<Composition> out;
    if (c.empty()) {
        out.emplace_back();
        return out;
    }
    const std::size_t gaps = c.size() - 1;
    for (std::size_t mask = 0; mask < (std::size_t{1} << gaps); ++mask) {
        Composition r{c[0]};
        for (std::size_t k = 1; k < c.size(); ++k) {
            if (mask >> (k - 1) & 1u)
                r[r.size() - 1] += c[k];
            else
                r.push_back(c[k]);
        }
        out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

static void partitions_into(unsigned rest, unsigned cap, Composition& cur, std::vector<Composition>& out) {
    if (rest == 0) {
        out.push_back(cur);
        return;
    }
    for (unsigned p = std::min(rest, cap); p >= 1; --p) {
        cur.push_back(p);
        partitions_into(rest - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<Composition> partitions(unsigned n) {
    std::vector<Composition> out;
    Composition cur;
    partitions_into(n, n, cur, out);
    return out;
}

Composition mirror(const Composition& c) { return Composition(c.vec().rbegin(), c.vec().rend()); }

Composition scale(const Composition& c, unsigned m) {
    Composition r = c;
    for (Letter& x : r) x *= m;
    return r;
}

bool is_coarsening(const Composition& coarse, const Composition& fine) {
    if (weight(coarse) != weight(fine)) return false;
    std::size_t j = 0;
    for (Letter part : coarse) {
        Letter acc = 0;
        while (acc < part && j < fine.size()) acc += fine[j++];
        if (acc != part) return false;
    }
    return j == fine.size();
}

std::optional<Family> parse_family(const std::string& name) {
    static const std::map<std::string, FamilyKind> names = {
        {"m_permutations", FamilyKind::m_permutations}, {"packed_m_words", FamilyKind::packed_m_words},
        {"m_parking", FamilyKind::m_parking},           {"ndpf_m", FamilyKind::ndpf_m},
        {"multiparking", FamilyKind::multiparking},     {"words_of_evaluation", FamilyKind::words_of_evaluation},
    };
    auto it = names.find(name);
    if (it == names.end()) return std::nullopt;
    return Family{it->second, {}};
}

std::string family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::m_permutations: return "m_permutations";
        case FamilyKind::packed_m_words: return "packed_m_words";
        case FamilyKind::m_parking: return "m_parking";
        case FamilyKind::ndpf_m: return "ndpf_m";
        case FamilyKind::multiparking: return "multiparking";
        case FamilyKind::words_of_evaluation: return "words_of_evaluation";
    }
    return "";
}

static void ndpf_into(unsigned n, unsigned m, Word& cur, std::vector<Word>& out) {
    const std::size_t i = cur.size();
    if (i == n) {
        out.push_back(cur);
        return;
    }
    Letter lo = cur.empty() ? 1 : cur.back();
    for (Letter v = lo; v <= m * i + 1; ++v) {
        cur.push_back(v);
        ndpf_into(n, m, cur, out);
        cur.pop_back();
    }
}

std::vector<Word> ndpf_list(unsigned n, unsigned m) {
    std::vector<Word> out;
    Word cur;
    ndpf_into(n, m, cur, out);
    return out;
}

std::vector<std::vector<Letter>> family_evaluations(const Family& f, unsigned n, unsigned m) {
    std::vector<std::vector<Letter>> out;
    switch (f.kind) {
        case FamilyKind::m_permutations:
            out.emplace_back(n, m);
            break;
        case FamilyKind::packed_m_words:
            for (const auto& k : compositions(n)) out.push_back(scale(k, m).vec());
            break;
        case FamilyKind::m_parking:
            for (const auto& p : ndpf_list(n, m)) out.push_back(evaluation_of(p).ev);
            break;
        case FamilyKind::multiparking:
            for (const auto& p : ndpf_list(n, 1)) {
                auto ev = evaluation_of(p).ev;
                for (Letter& c : ev) c *= m;
                out.push_back(ev);
            }
            break;
        case FamilyKind::words_of_evaluation:
            out.push_back(f.evaluation.vec());
            break;
        case FamilyKind::ndpf_m:
            throw Error(ErrorCode::invalid_argument, "ndpf_m is not closed under rearrangement");
    }
    return out;
}

Integer family_size(const Family& f, unsigned n, unsigned m) {
    if (f.kind == FamilyKind::ndpf_m) return ndpf_list(n, m).size();
    Integer total = 0;
    for (const auto& ev : family_evaluations(f, n, m)) total += multinomial(ev);
    return total;
}

void for_each_word_of_evaluation(const std::vector<Letter>& ev, const std::function<void(const Word&)>& visit) {
    Word w = sorted_word(ev);
    do {
        visit(w);
    } while (std::next_permutation(w.begin(), w.end()));
}

void for_each_member(const Family& f, unsigned n, unsigned m, std::size_t budget,
                     const std::function<void(const Word&)>& visit) {
    if (m == 0) throw Error(ErrorCode::invalid_argument, "m must be positive");
    Integer size = family_size(f, n, m);
    if (size > budget)
        throw Error(ErrorCode::budget_exceeded,
                    family_name(f.kind) + " has " + size.str() + " members, budget " + std::to_string(budget));
    if (f.kind == FamilyKind::ndpf_m) {
        for (const auto& p : ndpf_list(n, m)) visit(p);
        return;
    }
    for (const auto& ev : family_evaluations(f, n, m)) for_each_word_of_evaluation(ev, visit);
}

std::vector<Word> enumerate_family(const Family& f, unsigned n, unsigned m, std::size_t budget) {
    std::vector<Word> out;
    for_each_member(f, n, m, budget, [&](const Word& w) { out.push_back(w); });
    return out;
}

}  // namespace mhopf
