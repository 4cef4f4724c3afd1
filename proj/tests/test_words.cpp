#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brauer/complex.hpp"
#include "brauer/homology.hpp"

#include <algorithm>

using namespace brauer;

namespace {

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long falling(long n, long k) {
    long r = 1;
    for (long i = 0; i < k; ++i) r *= n - i;
    return r;
}

int word_index(const std::vector<SepWord>& words, const SepWord& w) {
    auto it = std::lower_bound(words.begin(), words.end(), w);
    REQUIRE(it != words.end());
    REQUIRE(*it == w);
    return (int)(it - words.begin());
}

}  // namespace

TEST_CASE("word bases: the X={a}, s=2 example") {
    Ring ring = Ring::parse("Z", "0");
    WordComplex w = build_w({7}, 2, ring);
    CHECK(w.cx.rank(-1) == 1);  // ||
    REQUIRE(w.cx.rank(0) == 3);  // ||a, |a|, a||
    std::vector<SepWord> expected = {SepWord{{0, 0, 7}}, SepWord{{0, 7, 0}}, SepWord{{7, 0, 0}}};
    std::sort(expected.begin(), expected.end());
    CHECK(w.words_at(0) == expected);
}

TEST_CASE("boundary examples from the paper: X={a,b}, s=1") {
    Ring ring = Ring::parse("Z", "0");
    // letters: a = 1, b = 2
    WordComplex w = build_w({1, 2}, 1, ring);
    CHECK(w.cx.rank(-1) == 1);
    CHECK(w.cx.rank(0) == 4);   // |a a| |b b|
    CHECK(w.cx.rank(1) == 6);   // |ab a|b ab| |ba b|a ba|

    const auto& deg0 = w.words_at(0);
    const auto& deg1 = w.words_at(1);
    const RatMat& d1 = w.cx.boundary(1);

    // del(a|b) = |b + a|
    {
        int c = word_index(deg1, SepWord{{1, 0, 2}});
        std::map<int, Rat> got(d1.col[c].begin(), d1.col[c].end());
        std::map<int, Rat> want{{word_index(deg0, SepWord{{0, 2}}), Rat(1)},
                                {word_index(deg0, SepWord{{1, 0}}), Rat(1)}};
        CHECK(got == want);
    }
    // del(|ba) = -|a + |b
    {
        int c = word_index(deg1, SepWord{{0, 2, 1}});
        std::map<int, Rat> got(d1.col[c].begin(), d1.col[c].end());
        std::map<int, Rat> want{{word_index(deg0, SepWord{{0, 1}}), Rat(-1)},
                                {word_index(deg0, SepWord{{0, 2}}), Rat(1)}};
        CHECK(got == want);
    }
}

TEST_CASE("rank formula against the combinatorial count") {
    Ring ring = Ring::parse("Z", "0");
    for (int size = 1; size <= 4; ++size) {
        std::vector<int> X;
        for (int a = 1; a <= size; ++a) X.push_back(a);
        for (int s = 0; s <= 3; ++s) {
            WordComplex w = build_w(X, s, ring);
            for (int p = -1; p <= size - 1; ++p)
                CHECK(w.cx.rank(p) == falling(size, p + 1) * binom(p + 1 + s, s));
        }
    }
}

TEST_CASE("classical injective words (s=0) are acyclic up to the top") {
    Ring ring = Ring::parse("Z", "0");
    for (int size = 1; size <= 4; ++size) {
        std::vector<int> X;
        for (int a = 1; a <= size; ++a) X.push_back(a);
        WordComplex w = build_w(X, 0, ring);
        for (auto& h : homology_range(w.cx, -1, size - 2)) CHECK(h.is_zero());
    }
}

TEST_CASE("W_X^(s) is highly acyclic for small X and s") {
    Ring ring = Ring::parse("Z", "0");
    for (int size = 1; size <= 4; ++size) {
        std::vector<int> X;
        for (int a = 1; a <= size; ++a) X.push_back(a);
        for (int s = 1; s <= 3; ++s) {
            WordComplex w = build_w(X, s, ring);
            for (auto& h : homology_range(w.cx, -1, size - 2)) CHECK(h.is_zero());
        }
    }
}

TEST_CASE("the worked tuple of the eight-strand example") {
    // n=8, k=2, j=1, degree p=5, box of size 2
    BoxDiagram label(8, 2,
                     {{-1, 2}, {-4, 6}, {-7, 3}, {-3, -2}, {-8, -5}, {1, 5}},
                     {-6, 4});
    WordTuple t = phi_tuple(label);
    CHECK(t.X == std::vector<int>{1, 4, 6, 7});
    CHECK(t.P == std::vector<std::pair<int, int>>{{2, 3}, {5, 8}});
    CHECK(t.y_size == 3);
    CHECK(t.y_pairs == std::vector<std::pair<int, int>>{{1, 3}});
    CHECK(t.word == SepWord{{0, 1, 7, 0, 0, 4}});  // |17||4

    CHECK(phi_inverse(8, 2, t) == label);
}

TEST_CASE("phi round-trips and intertwines differentials, n <= 4") {
    Ring ring = Ring::parse("Z", "0");
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= n / 2; ++k)
            for (int j = 0; j <= k; ++j) {
                PhiReport rep = phi_iso_check(n, k, j, ring);
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(j);
                CHECK(rep.roundtrip);
                CHECK(rep.chain_map);
                CHECK(rep.pass);
            }
}

TEST_CASE("word complex input validation") {
    Ring ring = Ring::parse("Z", "0");
    CHECK_THROWS_AS(build_w({1, 2, 3, 4, 5, 6, 7}, 3, ring), budget_error);
    CHECK_THROWS_AS(build_w({0, 1}, 1, ring), diagram_error);
    CHECK_THROWS_AS(build_w({1, 2}, -1, ring), diagram_error);
}
