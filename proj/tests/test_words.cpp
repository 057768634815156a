#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mhopf/text.hpp"
#include "mhopf/words.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

using namespace mhopf;

namespace {

Word w(const std::string& s) { return parse_word(s); }

// Naive standardization: stable sort of positions by letter.
Word naive_std(const Word& u) {
    std::vector<std::size_t> pos(u.size());
    std::iota(pos.begin(), pos.end(), 0);
    std::stable_sort(pos.begin(), pos.end(), [&](std::size_t a, std::size_t b) { return u[a] < u[b]; });
    Word out(std::vector<Letter>(u.size()));
    for (std::size_t r = 0; r < pos.size(); ++r) out[pos[r]] = static_cast<Letter>(r + 1);
    return out;
}

Word naive_std_m(const Word& u, unsigned m) {
    Word s = naive_std(u);
    for (auto& x : s) x = (x + m - 1) / m;
    return s;
}

Word naive_pack(const Word& u) {
    std::set<Letter> values(u.begin(), u.end());
    Word out;
    for (Letter x : u) out.push_back(static_cast<Letter>(std::distance(values.begin(), values.find(x)) + 1));
    return out;
}

bool naive_is_m_parking(const Word& u, unsigned m) {
    std::vector<Letter> s(u.begin(), u.end());
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] < 1 || s[i] > m * i + 1) return false;
    return true;
}

// m = 1: while not a parking function, take the least k with fewer than k
// letters <= k and decrement every letter > k.
Word decrement_park(Word u) {
    for (;;) {
        Letter k = 0;
        for (Letter c = 1; c <= u.size(); ++c) {
            std::size_t below = std::count_if(u.begin(), u.end(), [&](Letter x) { return x <= c; });
            if (below < c) {
                k = c;
                break;
            }
        }
        if (k == 0) return u;
        for (auto& x : u)
            if (x > k) --x;
    }
}

// Any m: lower the first offending sorted value to its bound, together with
// every larger letter.
Word lowering_park(Word u, unsigned m) {
    for (;;) {
        std::vector<Letter> s(u.begin(), u.end());
        std::sort(s.begin(), s.end());
        std::size_t i = 0;
        while (i < s.size() && s[i] <= m * i + 1) ++i;
        if (i == s.size()) return u;
        const Letter v = s[i], excess = v - static_cast<Letter>(m * i + 1);
        for (auto& x : u)
            if (x >= v) x -= excess;
    }
}

void all_words(unsigned len, Letter max_letter, const std::function<void(const Word&)>& f) {
    Word u(std::vector<Letter>(len, 1));
    for (;;) {
        f(u);
        std::size_t i = len;
        while (i > 0 && u[i - 1] == max_letter) u[--i] = 1;
        if (i == 0) return;
        ++u[i - 1];
    }
}

Integer fuss_catalan(unsigned n, unsigned m) { return binomial((m + 1) * n, n) / (m * n + 1); }

}  // namespace

TEST_CASE("standardization examples") {
    CHECK(std_m(w("2213"), 1) == w("2314"));
    CHECK(std_m(w("1121323212"), 2) == w("1132535424"));
    CHECK(std_m(w("11"), 2) == w("11"));
    CHECK_THROWS_AS(std_m(w("112"), 2), Error);
}

TEST_CASE("std_m agrees with the naive definition") {
    for (unsigned len = 1; len <= 6; ++len) {
        all_words(len, 3, [](const Word& u) {
            CHECK(std_m(u, 1) == naive_std(u));
            if (is_m_word(u, 2)) CHECK(std_m(u, 2) == naive_std_m(u, 2));
        });
    }
}

TEST_CASE("pack agrees with the naive definition") {
    CHECK(pack(w("3511")) == w("2311"));
    for (unsigned len = 1; len <= 5; ++len)
        all_words(len, 5, [](const Word& u) { CHECK(pack(u) == naive_pack(u)); });
}

TEST_CASE("park examples") {
    CHECK(park_m(parse_word("[3,5,1,1,11,8,8,2]"), 1) == parse_word("[3,5,1,1,8,6,6,2]"));
    CHECK(park_m(w("13"), 2) == w("13"));
    CHECK(park_m(w("51"), 2) == w("31"));
}

TEST_CASE("park_m agrees with the lowering and decrement procedures") {
    for (unsigned len = 1; len <= 5; ++len) {
        all_words(len, 8, [](const Word& u) {
            const Word p1 = park_m(u, 1);
            CHECK(p1 == decrement_park(u));
            CHECK(park_decrement(u) == p1);
            for (unsigned m = 1; m <= 2; ++m) {
                const Word p = park_m(u, m);
                CHECK(p == lowering_park(u, m));
                CHECK(naive_is_m_parking(p, m));
                CHECK(naive_std(p) == naive_std(u));
                CHECK(park_m(p, m) == p);
            }
        });
    }
}

TEST_CASE("predicates") {
    CHECK(is_m_permutation(w("2121"), 2));
    CHECK_FALSE(is_m_permutation(w("2122"), 2));
    CHECK(is_packed(w("2131")));
    CHECK_FALSE(is_packed(w("313")));
    CHECK(is_m_parking(w("15"), 4));
    CHECK_FALSE(is_m_parking(w("15"), 3));
    CHECK(inversions(w("321")) == 3);
}

TEST_CASE("family sizes match brute-force filtering and closed forms") {
    for (unsigned m = 1; m <= 3; ++m) {
        for (unsigned n = 1; n <= 4; ++n) {
            Integer perm = factorial(m * n);
            for (unsigned i = 0; i < n; ++i) perm /= factorial(m);
            CHECK(family_size({FamilyKind::m_permutations, {}}, n, m) == perm);
            Integer park = 1;
            for (unsigned i = 1; i < n; ++i) park *= m * n + 1;
            CHECK(family_size({FamilyKind::m_parking, {}}, n, m) == park);
            CHECK(ndpf_list(n, m).size() == fuss_catalan(n, m));
        }
    }
    for (unsigned m = 1; m <= 2; ++m) {
        for (unsigned n = 1; n * m <= 6 && n <= 3; ++n) {
            std::size_t perms = 0, packed = 0;
            all_words(m * n, n, [&](const Word& u) {
                if (is_m_word(u, m) && std::set<Letter>(u.begin(), u.end()).size() == n) ++perms;
            });
            all_words(m * n, m * n, [&](const Word& u) {
                if (is_m_word(u, m) && naive_pack(u) == u) ++packed;
            });
            CHECK(enumerate_family({FamilyKind::m_permutations, {}}, n, m).size() == perms);
            CHECK(enumerate_family({FamilyKind::packed_m_words, {}}, n, m).size() == packed);
            std::size_t pf = 0;
            all_words(n, m * (n - 1) + 1, [&](const Word& u) { pf += naive_is_m_parking(u, m); });
            CHECK(enumerate_family({FamilyKind::m_parking, {}}, n, m).size() == pf);
        }
    }
}

TEST_CASE("nondecreasing m-parking functions repeat to ordinary ones") {
    const unsigned m = 2;
    for (unsigned n = 1; n <= 4; ++n) {
        std::set<Word> expected;
        for (const auto& p : ndpf_list(m * n, 1)) {
            std::map<Letter, unsigned> ev;
            for (Letter x : p) ++ev[x];
            if (std::all_of(ev.begin(), ev.end(), [&](const auto& e) { return e.second % m == 0; })) expected.insert(p);
        }
        std::set<Word> got;
        for (const auto& q : ndpf_list(n, m)) {
            Word r;
            for (Letter x : q)
                for (unsigned k = 0; k < m; ++k) r.push_back(x);
            got.insert(r);
        }
        CHECK(got == expected);
    }
}

TEST_CASE("multiparking functions") {
    CHECK(family_size({FamilyKind::multiparking, {}}, 2, 2) == 7);
    CHECK(enumerate_family({FamilyKind::multiparking, {}}, 3, 2).size() == 136);
    // Shuffles of two parking functions of the same evaluation.
    std::set<Word> shuffled;
    for (const auto& a : enumerate_family({FamilyKind::m_parking, {}}, 2, 1))
        for (const auto& b : enumerate_family({FamilyKind::m_parking, {}}, 2, 1))
            if (evaluation_of(a).ev == evaluation_of(b).ev)
                for (const auto& s : shuffle(a, b)) shuffled.insert(s);
    CHECK(shuffled.size() == 7);
}

TEST_CASE("shuffle and convolution sizes") {
    CHECK(shuffle(w("12"), w("34")).size() == 6);
    CHECK(shifted_shuffle(w("11"), w("1212")).size() == 15);
    CHECK(m_convolution(w("2121"), w("11"), 2).size() == 3);
}

TEST_CASE("budget is enforced before streaming") {
    CHECK_THROWS_AS(enumerate_family({FamilyKind::m_permutations, {}}, 6, 2, 1000), Error);
}
