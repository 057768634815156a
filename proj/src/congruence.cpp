#include "mhopf/congruence.hpp"

#include "mhopf/series.hpp"
#include "mhopf/words.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

namespace mhopf {

std::optional<Congruence> parse_congruence(const std::string& name) {
    static const std::map<std::string, Congruence> names = {
        {"plactic", Congruence::plactic},           {"hypoplactic", Congruence::hypoplactic},
        {"sylvester", Congruence::sylvester},       {"hyposylvester", Congruence::hyposylvester},
        {"metasylvester", Congruence::metasylvester},
    };
    auto it = names.find(name);
    if (it == names.end()) return std::nullopt;
    return it->second;
}

std::string congruence_name(Congruence c) {
    switch (c) {
        case Congruence::plactic: return "plactic";
        case Congruence::hypoplactic: return "hypoplactic";
        case Congruence::sylvester: return "sylvester";
        case Congruence::hyposylvester: return "hyposylvester";
        case Congruence::metasylvester: return "metasylvester";
    }
    return "";
}

namespace {

bool exists_in(const Word& w, std::size_t from, std::size_t to, Letter lo, Letter hi) {
    for (std::size_t j = from; j < to; ++j)
        if (w[j] >= lo && w[j] <= hi) return true;
    return false;
}

bool swappable(const Word& w, std::size_t i, Congruence c) {
    const Letter x = w[i], y = w[i + 1];
    if (x == y) return false;
    const Letter a = std::min(x, y), b = std::max(x, y);
    const std::size_t n = w.size();
    switch (c) {
        case Congruence::sylvester:
            return exists_in(w, i + 2, n, a, b - 1);
        case Congruence::hypoplactic:
            return exists_in(w, i + 2, n, a, b - 1) || exists_in(w, 0, i, a + 1, b);
        case Congruence::hyposylvester:
            return exists_in(w, 0, n, a + 1, b - 1) || exists_in(w, i + 2, n, a, a);
        case Congruence::metasylvester:
            if (exists_in(w, i + 2, n, a, a)) return true;
            for (Letter m = a + 1; m < b; ++m)
                if (exists_in(w, 0, i, m, m) && exists_in(w, i + 2, n, m, m)) return true;
            return false;
        case Congruence::plactic:
            return false;
    }
    return false;
}

void plactic_neighbors(const Word& w, std::vector<Word>& out) {
    for (std::size_t i = 0; i + 2 < w.size(); ++i) {
        const Letter p = w[i], q = w[i + 1], r = w[i + 2];
        if (std::min(p, q) <= r && r < std::max(p, q)) {
            Word v = w;
            std::swap(v[i], v[i + 1]);
            out.push_back(v);
        }
        if (std::min(q, r) < p && p <= std::max(q, r)) {
            Word v = w;
            std::swap(v[i + 1], v[i + 2]);
            out.push_back(v);
        }
    }
}

}  // namespace

std::vector<Word> neighbors(const Word& w, Congruence c) {
    std::vector<Word> out;
    if (c == Congruence::plactic) {
        plactic_neighbors(w, out);
    } else {
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (!swappable(w, i, c)) continue;
            Word v = w;
            std::swap(v[i], v[i + 1]);
            out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

static void close_class(const Word& w, Congruence c, std::size_t budget,
                        std::unordered_set<Word, SequenceHash>& seen, std::vector<Word>& members) {
    std::deque<Word> queue{w};
    seen.insert(w);
    while (!queue.empty()) {
        Word u = std::move(queue.front());
        queue.pop_front();
        for (auto& v : neighbors(u, c)) {
            if (seen.insert(v).second) {
                if (seen.size() > budget)
                    throw Error(ErrorCode::budget_exceeded, "class closure exceeded " + std::to_string(budget) + " words");
                queue.push_back(v);
            }
        }
        members.push_back(std::move(u));
    }
}

std::vector<Word> cong_class(const Word& w, Congruence c, std::size_t budget) {
    std::unordered_set<Word, SequenceHash> seen;
    std::vector<Word> members;
    close_class(w, c, budget, seen, members);
    std::sort(members.begin(), members.end());
    return members;
}

Word canonical(const Word& w, Congruence c, std::size_t budget) {
    auto members = cong_class(w, c, budget);
    if (c == Congruence::plactic || c == Congruence::hypoplactic) return members.back();
    std::vector<Word> tops;
    for (const auto& u : members) {
        const std::size_t inv = inversions(u);
        auto nb = neighbors(u, c);
        if (std::none_of(nb.begin(), nb.end(), [&](const Word& v) { return inversions(v) > inv; }))
            tops.push_back(u);
    }
    if (tops.size() != 1)
        throw Error(ErrorCode::non_unique_canonical,
                    std::to_string(tops.size()) + " maximal elements in a " + congruence_name(c) + " class");
    return tops.front();
}

std::vector<Letter> signature_hs(const Word& w) {
    Word p = pack(w);
    const Letter r = max_letter(p);
    std::vector<Letter> sig;
    for (Letter k = 1; k < r; ++k) {
        std::size_t last = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] == k) last = i;
        Letter count = 0;
        for (std::size_t i = 0; i < last; ++i)
            if (p[i] == k + 1) ++count;
        sig.push_back(count);
    }
    return sig;
}

Integer count_classes_formula(const Composition& ev, Congruence c) {
    Integer r = 1;
    switch (c) {
        case Congruence::hyposylvester:
            for (std::size_t k = 1; k < ev.size(); ++k) r *= ev[k] + 1;
            return r;
        case Congruence::metasylvester: {
            unsigned tail = 0;
            for (std::size_t k = ev.size(); k-- > 1;) {
                tail += ev[k];
                r *= 1 + tail;
            }
            return r;
        }
        case Congruence::hypoplactic:
            return ev.empty() ? Integer(1) : Integer(1) << (ev.size() - 1);
        case Congruence::sylvester:
            return sylvester_count(ev);
        case Congruence::plactic: {
            Integer total = 0;
            for (const auto& lambda : partitions(static_cast<unsigned>(weight(ev)))) total += kostka(lambda, ev);
            return total;
        }
    }
    return r;
}

std::vector<std::vector<Word>> classes_of_evaluation(const std::vector<Letter>& ev, Congruence c,
                                                     std::size_t budget) {
    Integer size = multinomial(ev);
    if (size > budget)
        throw Error(ErrorCode::budget_exceeded,
                    "evaluation has " + size.str() + " words, budget " + std::to_string(budget));
    std::unordered_set<Word, SequenceHash> seen;
    std::vector<std::vector<Word>> classes;
    for_each_word_of_evaluation(ev, [&](const Word& w) {
        if (seen.count(w)) return;
        std::vector<Word> members;
        close_class(w, c, closure_budget, seen, members);
        std::sort(members.begin(), members.end());
        classes.push_back(std::move(members));
    });
    return classes;
}

Integer count_classes_brute(const std::vector<Letter>& ev, Congruence c, std::size_t budget) {
    Integer size = multinomial(ev);
    if (size > budget)
        throw Error(ErrorCode::budget_exceeded,
                    "evaluation has " + size.str() + " words, budget " + std::to_string(budget));
    std::unordered_set<Word, SequenceHash> seen;
    seen.reserve(static_cast<std::size_t>(size));
    std::size_t count = 0;
    for_each_word_of_evaluation(ev, [&](const Word& w) {
        if (seen.count(w)) return;
        std::vector<Word> members;
        close_class(w, c, closure_budget, seen, members);
        ++count;
    });
    return count;
}

Integer count_classes(const Composition& ev, Congruence c, CountMethod method, std::size_t budget) {
    if (method == CountMethod::formula) return count_classes_formula(ev, c);
    return count_classes_brute(ev.vec(), c, budget);
}

static Integer kostka_rec(const Composition& shape, const Composition& content, std::size_t step,
                          std::vector<Letter>& filled) {
    if (step == content.size()) {
        for (std::size_t r = 0; r < shape.size(); ++r)
            if (filled[r] != shape[r]) return 0;
        return 1;
    }
    Integer total = 0;
    const std::vector<Letter> before = filled;
    // Distribute content[step] boxes as a horizontal strip, row by row.
    std::function<void(std::size_t, Letter)> place = [&](std::size_t row, Letter left) {
        if (row == shape.size()) {
            if (left == 0) total += kostka_rec(shape, content, step + 1, filled);
            return;
        }
        Letter cap = shape[row] - before[row];
        if (row > 0) cap = std::min<Letter>(cap, before[row - 1] - before[row]);
        for (Letter t = 0; t <= std::min(cap, left); ++t) {
            filled[row] = before[row] + t;
            place(row + 1, left - t);
        }
        filled[row] = before[row];
    };
    place(0, content[step]);
    return total;
}

Integer kostka(const Composition& shape, const Composition& content) {
    if (weight(shape) != weight(content)) return 0;
    std::vector<Letter> filled(shape.size(), 0);
    return kostka_rec(shape, content, 0, filled);
}

}  // namespace mhopf
