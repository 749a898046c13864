#include <doctest.h>

#include <algorithm>

#include "test_support.hpp"

using namespace lypbw;
using testsup::mk;

TEST_CASE("alphabet invariants") {
    CHECK_THROWS_AS(Alphabet({{"x", 1}, {"x", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet({{"x", 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet({{"", 1}}), std::invalid_argument);
    const Alphabet a({{"x", 1}, {"y", 2}});
    CHECK(a.index_of("y") == 1);
    CHECK(a.index_of("z") == -1);
}

TEST_CASE("lex order: proper prefixes are larger") {
    // Letters y < x, matching the convention of the x > y examples.
    const auto a = testsup::make_alphabet({{"y", 1}, {"x", 1}});
    const Word x = mk(*a, {1});
    const Word xx = mk(*a, {1, 1}), xy = mk(*a, {1, 0}), xxy = mk(*a, {1, 1, 0});

    CHECK(lex_compare(x, xx) == std::strong_ordering::greater);  // x > x^2
    CHECK(lex_compare(xy, xxy) == std::strong_ordering::less);   // xy < x^2 y
    CHECK(lex_compare(xy, xy) == std::strong_ordering::equal);
    // Every nonempty word has the empty word as proper prefix.
    CHECK(lex_compare(x, Word()) == std::strong_ordering::less);
}

TEST_CASE("lex order: total, left-compatible, not right-compatible") {
    const auto a = testsup::two_letters();
    const auto words = words_up_to_degree(*a, 5);
    for (const Word& u : words)
        for (const Word& v : words) {
            const auto uv = lex_compare(u, v);
            const auto vu = lex_compare(v, u);
            CHECK((uv == std::strong_ordering::equal) == (u == v));
            CHECK((uv == std::strong_ordering::less) == (vu == std::strong_ordering::greater));
        }
    const auto small = words_up_to_degree(*a, 3);
    for (const Word& u : small)
        for (const Word& v : small) {
            if (!(lex_compare(u, v) < 0)) continue;
            for (const Word& w : small)
                CHECK(lex_compare(w.concat(u), w.concat(v)) < 0);
        }
    // Right concatenation flips this pair: b > bb but ba < bba.
    const Word x = mk(*a, {1}), xx = mk(*a, {1, 1}), y = mk(*a, {0});
    CHECK(lex_compare(x, xx) > 0);
    CHECK(lex_compare(x.concat(y), xx.concat(y)) < 0);
}

TEST_CASE("bounded words are well ordered: sorting works") {
    for (const auto& a : {testsup::two_letters(), testsup::three_letters()}) {
        auto words = words_up_to_degree(*a, 5);
        std::sort(words.begin(), words.end(), LexLess{});
        CHECK(std::is_sorted(words.begin(), words.end(), LexLess{}));
        for (size_t i = 0; i + 1 < words.size(); ++i)
            CHECK(lex_compare(words[i], words[i + 1]) < 0);
    }
}

TEST_CASE("glex order: degree clause, lex tie-break, admissibility") {
    const auto a = testsup::make_alphabet({{"x", 1}, {"y", 2}});
    CHECK(glex_compare(mk(*a, {0}), mk(*a, {1})) < 0);  // degree decides first
    const auto b = testsup::two_letters();
    const auto words = words_up_to_degree(*b, 5);
    for (const Word& u : words)
        for (const Word& v : words) {
            if (u.degree() == v.degree())
                CHECK(glex_compare(u, v) == lex_compare(u, v));
            else
                CHECK((glex_compare(u, v) < 0) == (u.degree() < v.degree()));
        }
    // Compatible with concatenation on both sides, exhaustively in low degree.
    const auto small = words_up_to_degree(*b, 4);
    for (const Word& u : small)
        for (const Word& v : small) {
            if (!(glex_compare(u, v) < 0)) continue;
            for (const Word& w : small) {
                CHECK(glex_compare(w.concat(u), w.concat(v)) < 0);
                CHECK(glex_compare(u.concat(w), v.concat(w)) < 0);
            }
        }
}

TEST_CASE("is_lyndon basics") {
    const auto a = testsup::two_letters();  // a < b
    CHECK(is_lyndon(mk(*a, {1, 0})));
    CHECK_FALSE(is_lyndon(mk(*a, {0, 1})));
    CHECK_FALSE(is_lyndon(Word()));
    CHECK(is_lyndon(mk(*a, {0})));
    CHECK_FALSE(is_lyndon(mk(*a, {0, 0})));
}

TEST_CASE("is_lyndon agrees with the rotation definition") {
    const auto two = testsup::two_letters();
    for (const Word& u : words_up_to_degree(*two, 8))
        CHECK(is_lyndon(u) == testsup::lyndon_by_definition(*two, u));
    const auto three = testsup::three_letters();
    for (const Word& u : words_up_to_degree(*three, 6))
        CHECK(is_lyndon(u) == testsup::lyndon_by_definition(*three, u));
}

TEST_CASE("Lyndon counts by length over two letters") {
    const auto a = testsup::two_letters();
    std::vector<int> counts(6, 0);
    for (const Word& u : words_up_to_degree(*a, 5))
        if (is_lyndon(u)) ++counts[static_cast<size_t>(u.length())];
    CHECK(counts[1] == 2);
    CHECK(counts[2] == 1);
    CHECK(counts[3] == 2);
    CHECK(counts[4] == 3);
    CHECK(counts[5] == 6);
}

TEST_CASE("shirshov factorization") {
    const auto a = testsup::make_alphabet({{"x1", 1}, {"x2", 1}});
    SUBCASE("the running example") {
        const auto [l, r] = shirshov_factorization(*a, mk(*a, {1, 1, 0, 1, 0}));
        CHECK(l == mk(*a, {1, 1, 0}));
        CHECK(r == mk(*a, {1, 0}));
    }
    SUBCASE("two letters") {
        const auto [l, r] = shirshov_factorization(*a, mk(*a, {1, 0}));
        CHECK(l == mk(*a, {1}));
        CHECK(r == mk(*a, {0}));
    }
    SUBCASE("x2 x1 x1") {
        const auto [l, r] = shirshov_factorization(*a, mk(*a, {1, 0, 0}));
        CHECK(l == mk(*a, {1, 0}));
        CHECK(r == mk(*a, {0}));
    }
    SUBCASE("too short") {
        CHECK_THROWS_AS(shirshov_factorization(*a, mk(*a, {1})), std::invalid_argument);
    }
}

namespace {

void check_lyndon_facts(const AlphabetPtr& a, int max_len) {
    const std::vector<Word> all = words_up_to_degree(*a, max_len);
    std::vector<Word> lyndon;
    for (const Word& u : all)
        if (is_lyndon(u)) lyndon.push_back(u);

    // (L1) Lyndon iff greater than every proper nonempty suffix.
    for (const Word& u : all) {
        bool beats_suffixes = !u.empty();
        for (int i = 1; i < u.length(); ++i)
            if (!(lex_compare(u, u.subword(*a, i, u.length() - i)) > 0)) beats_suffixes = false;
        CHECK(is_lyndon(u) == beats_suffixes);
    }

    // (L2) u = w1 w2, v = w2 w3 Lyndon with u > v implies w1 w2 w3 Lyndon.
    for (const Word& u : lyndon)
        for (const Word& v : lyndon) {
            if (!(lex_compare(u, v) > 0)) continue;
            for (int cut = 0; cut <= u.length(); ++cut) {
                const Word w2 = u.subword(*a, cut, u.length() - cut);
                if (w2.length() > v.length()) continue;
                if (!(v.subword(*a, 0, w2.length()) == w2)) continue;
                const Word w1 = u.subword(*a, 0, cut);
                const Word w3 = v.subword(*a, w2.length(), v.length() - w2.length());
                if (u.length() + w3.length() > max_len + 2) continue;
                CHECK(is_lyndon(w1.concat(w2).concat(w3)));
            }
        }

    // (L3) for |u| >= 2: Lyndon iff both Shirshov parts are and uL > uR.
    for (const Word& u : all) {
        if (u.length() < 2) continue;
        const auto [l, r] = shirshov_factorization(*a, u);
        const bool expected = is_lyndon(l) && is_lyndon(r) && lex_compare(l, r) > 0;
        CHECK(is_lyndon(u) == expected);
    }

    // (L4) for Lyndon u > v: sh(uv) = (u, v) iff u is a letter or uR <= v.
    for (const Word& u : lyndon)
        for (const Word& v : lyndon) {
            if (!(lex_compare(u, v) > 0)) continue;
            if (u.length() + v.length() > max_len + 2) continue;
            const auto [l, r] = shirshov_factorization(*a, u.concat(v));
            const bool split_at_uv = l == u && r == v;
            bool expected = true;
            if (u.length() >= 2) {
                const auto [ul, ur] = shirshov_factorization(*a, u);
                expected = lex_compare(ur, v) <= 0;
            }
            CHECK(split_at_uv == expected);
        }

    // (L5) existence and uniqueness of the nondecreasing factorization.
    for (const Word& u : all) {
        if (u.empty()) continue;
        const auto found = testsup::cfl_brute_force(*a, u);
        CHECK(found.size() == 1);
        CHECK(cfl_factorization(*a, u) == found.front());
    }

    // (L6) a Lyndon factor of a nondecreasing product is a factor of a part.
    for (const Word& u : all) {
        if (u.empty()) continue;
        const auto parts = cfl_factorization(*a, u);
        for (int start = 0; start < u.length(); ++start)
            for (int len = 1; start + len <= u.length(); ++len) {
                const Word v = u.subword(*a, start, len);
                if (!is_lyndon(v)) continue;
                bool inside_some_part = false;
                for (const Word& part : parts)
                    if (is_factor(v, part)) inside_some_part = true;
                CHECK(inside_some_part);
            }
    }
}

}  // namespace

TEST_CASE("Lyndon facts L1-L6, exhaustively in low degree") {
    check_lyndon_facts(testsup::two_letters(), 6);
    check_lyndon_facts(testsup::three_letters(), 4);
}

TEST_CASE("cfl factorization") {
    const auto a = testsup::make_alphabet({{"x1", 1}, {"x2", 1}});
    CHECK(cfl_factorization(*a, mk(*a, {1, 0})) == std::vector<Word>{mk(*a, {1, 0})});
    CHECK(cfl_factorization(*a, mk(*a, {0, 1, 1})) ==
          std::vector<Word>{mk(*a, {0}), mk(*a, {1}), mk(*a, {1})});
    CHECK(cfl_factorization(*a, Word()).empty());
    for (const Word& u : words_up_to_degree(*a, 8)) {
        if (u.empty()) continue;
        const auto parts = cfl_factorization(*a, u);
        Word joined;
        for (const Word& p : parts) {
            CHECK(is_lyndon(p));
            joined = joined.concat(p);
        }
        CHECK(joined == u);
        for (size_t i = 0; i + 1 < parts.size(); ++i)
            CHECK(lex_compare(parts[i], parts[i + 1]) <= 0);
        CHECK((parts.size() == 1) == is_lyndon(u));
    }
}

TEST_CASE("enumerate_lyndon") {
    const auto a = testsup::make_alphabet({{"x1", 1}, {"x2", 1}});
    CHECK(enumerate_lyndon(*a, 2) ==
          std::vector<Word>{mk(*a, {0}), mk(*a, {1}), mk(*a, {1, 0})});

    const auto one = testsup::make_alphabet({{"x", 1}});
    for (int bound : {1, 4, 8}) CHECK(enumerate_lyndon(*one, bound).size() == 1);

    CHECK(enumerate_lyndon(*testsup::three_letters(), 3).size() == 14);

    // Enumeration is by degree, not length.
    const auto graded = testsup::make_alphabet({{"v", 1}, {"w", 2}});
    CHECK(enumerate_lyndon(*graded, 3) ==
          std::vector<Word>{mk(*graded, {0}), mk(*graded, {1}), mk(*graded, {1, 0})});

    const auto many = enumerate_lyndon(*testsup::three_letters(), 5);
    for (size_t i = 0; i + 1 < many.size(); ++i) CHECK(glex_compare(many[i], many[i + 1]) < 0);
}
