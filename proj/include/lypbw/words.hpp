#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lypbw {

struct Generator {
    std::string name;
    int degree = 1;
};

/// A well-ordered graded alphabet. The rank of a letter is its list position,
/// so the order on letters is total by construction. Every letter carries a
/// positive degree.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Generator> generators);

    int size() const { return static_cast<int>(generators_.size()); }
    const Generator& generator(int i) const { return generators_.at(static_cast<size_t>(i)); }
    int degree(int i) const { return generators_.at(static_cast<size_t>(i)).degree; }
    const std::string& name(int i) const { return generators_.at(static_cast<size_t>(i)).name; }

    /// Rank of the named letter, or -1 when absent.
    int index_of(std::string_view name) const;

    bool operator==(const Alphabet& other) const;

private:
    std::vector<Generator> generators_;
};

/// A word on an alphabet: a sequence of letter ranks with its degree cached.
/// The empty word is the monoid unit and has degree 0. Degree is additive
/// under concatenation.
class Word {
public:
    Word() = default;
    Word(std::vector<int32_t> letters, int degree)
        : letters_(std::move(letters)), degree_(degree) {}

    static Word letter(int32_t index, int degree) { return Word({index}, degree); }

    const std::vector<int32_t>& letters() const { return letters_; }
    int degree() const { return degree_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }

    Word concat(const Word& other) const;
    /// Subword of `len` letters starting at position `pos`; degree recomputed
    /// against `alphabet`.
    Word subword(const Alphabet& alphabet, int pos, int len) const;

    bool operator==(const Word& other) const {
        return degree_ == other.degree_ && letters_ == other.letters_;
    }

private:
    std::vector<int32_t> letters_;
    int32_t degree_ = 0;
};

/// Builds a word from letter ranks, validating them against the alphabet.
Word make_word(const Alphabet& alphabet, std::span<const int32_t> letters);
Word make_word(const Alphabet& alphabet, std::initializer_list<int32_t> letters);

/// The lexicographic order with the proper-prefix clause: u < v when v is a
/// proper prefix of u, otherwise the first differing letter decides. With one
/// letter x this gives x > x*x. Total, compatible with concatenation from the
/// left but not from the right.
std::strong_ordering lex_compare(const Word& u, const Word& v);

/// Degree first, then lex_compare. An admissible order: a well order
/// compatible with concatenation on both sides.
std::strong_ordering glex_compare(const Word& u, const Word& v);

/// Canonical order for containers keyed by Word.
inline bool operator<(const Word& u, const Word& v) { return glex_compare(u, v) < 0; }

struct LexLess {
    bool operator()(const Word& u, const Word& v) const { return lex_compare(u, v) < 0; }
};

/// A nonempty word u is Lyndon when u > wv for every factorization u = vw
/// with v, w nonempty; equivalently u is greater than every proper nonempty
/// suffix. In this convention a Lyndon word starts with its largest letter.
bool is_lyndon(const Word& u);

/// Splits u = u_L u_R at the lexicographically largest proper suffix u_R.
/// Requires |u| >= 2. When u is Lyndon both parts are Lyndon and u_L > u_R.
std::pair<Word, Word> shirshov_factorization(const Alphabet& alphabet, const Word& u);

/// The unique factorization of u into a lexicographically nondecreasing
/// product of Lyndon words. The empty word yields the empty list.
std::vector<Word> cfl_factorization(const Alphabet& alphabet, const Word& u);

/// All words of degree exactly n, in glex order.
std::vector<Word> words_of_degree(const Alphabet& alphabet, int n);

/// All words of degree <= n (including the empty word), in glex order.
std::vector<Word> words_up_to_degree(const Alphabet& alphabet, int n);

/// All Lyndon words of degree <= max_degree, sorted by glex. Complete and
/// duplicate-free.
std::vector<Word> enumerate_lyndon(const Alphabet& alphabet, int max_degree);

/// True when `factor` occurs as a contiguous factor of `u`.
bool is_factor(const Word& factor, const Word& u);

std::string word_to_string(const Alphabet& alphabet, const Word& u);

}  // namespace lypbw
