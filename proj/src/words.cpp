#include "lypbw/words.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace lypbw {

Alphabet::Alphabet(std::vector<Generator> generators) : generators_(std::move(generators)) {
    std::unordered_set<std::string_view> seen;
    for (const auto& g : generators_) {
        if (g.name.empty())
            throw std::invalid_argument("alphabet: generator name must be non-empty");
        if (g.degree < 1)
            throw std::invalid_argument("alphabet: generator '" + g.name + "' must have degree >= 1");
        if (!seen.insert(g.name).second)
            throw std::invalid_argument("alphabet: duplicate generator name '" + g.name + "'");
    }
}

int Alphabet::index_of(std::string_view name) const {
    for (size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == name) return static_cast<int>(i);
    return -1;
}

bool Alphabet::operator==(const Alphabet& other) const {
    if (generators_.size() != other.generators_.size()) return false;
    for (size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name != other.generators_[i].name ||
            generators_[i].degree != other.generators_[i].degree)
            return false;
    return true;
}

Word Word::concat(const Word& other) const {
    std::vector<int32_t> letters = letters_;
    letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
    return Word(std::move(letters), degree_ + other.degree_);
}

Word Word::subword(const Alphabet& alphabet, int pos, int len) const {
    std::vector<int32_t> letters(letters_.begin() + pos, letters_.begin() + pos + len);
    int degree = 0;
    for (int32_t x : letters) degree += alphabet.degree(x);
    return Word(std::move(letters), degree);
}

Word make_word(const Alphabet& alphabet, std::span<const int32_t> letters) {
    int degree = 0;
    std::vector<int32_t> copy;
    copy.reserve(letters.size());
    for (int32_t x : letters) {
        if (x < 0 || x >= alphabet.size())
            throw std::invalid_argument("word: letter rank out of range");
        degree += alphabet.degree(x);
        copy.push_back(x);
    }
    return Word(std::move(copy), degree);
}

Word make_word(const Alphabet& alphabet, std::initializer_list<int32_t> letters) {
    return make_word(alphabet, std::span<const int32_t>(letters.begin(), letters.size()));
}

namespace {

// Shared by lex_compare and the suffix scans: compares letter ranges under
// the proper-prefix-is-larger convention.
std::strong_ordering lex_compare_ranges(std::span<const int32_t> a, std::span<const int32_t> b) {
    const size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
    if (a.size() == b.size()) return std::strong_ordering::equal;
    return a.size() < b.size() ? std::strong_ordering::greater : std::strong_ordering::less;
}

}  // namespace

std::strong_ordering lex_compare(const Word& u, const Word& v) {
    return lex_compare_ranges(u.letters(), v.letters());
}

std::strong_ordering glex_compare(const Word& u, const Word& v) {
    if (u.degree() != v.degree()) return u.degree() <=> v.degree();
    return lex_compare(u, v);
}

bool is_lyndon(const Word& u) {
    if (u.empty()) return false;
    const std::span<const int32_t> w(u.letters());
    for (size_t i = 1; i < w.size(); ++i)
        if (lex_compare_ranges(w, w.subspan(i)) != std::strong_ordering::greater) return false;
    return true;
}

std::pair<Word, Word> shirshov_factorization(const Alphabet& alphabet, const Word& u) {
    if (u.length() < 2)
        throw std::invalid_argument("no Shirshov factorization: word has length < 2");
    const std::span<const int32_t> w(u.letters());
    size_t best = 1;
    for (size_t i = 2; i < w.size(); ++i)
        if (lex_compare_ranges(w.subspan(i), w.subspan(best)) > 0) best = i;
    const int split = static_cast<int>(best);
    return {u.subword(alphabet, 0, split), u.subword(alphabet, split, u.length() - split)};
}

std::vector<Word> cfl_factorization(const Alphabet& alphabet, const Word& u) {
    // Duval's factorization with letter comparisons mirrored to match this
    // convention; the factors come out nondecreasing.
    std::vector<Word> factors;
    const auto& s = u.letters();
    const int n = u.length();
    int k = 0;
    while (k < n) {
        int i = k, j = k + 1;
        while (j < n && s[i] >= s[j]) {
            if (s[i] > s[j])
                i = k;
            else
                ++i;
            ++j;
        }
        const int step = j - i;
        while (k <= i) {
            factors.push_back(u.subword(alphabet, k, step));
            k += step;
        }
    }
    return factors;
}

namespace {

void extend_words(const Alphabet& alphabet, int max_degree, Word& current,
                  std::vector<Word>& out, bool keep_all) {
    for (int32_t x = 0; x < alphabet.size(); ++x) {
        const int d = alphabet.degree(x);
        if (current.degree() + d > max_degree) continue;
        Word next = current.concat(Word::letter(x, d));
        if (keep_all || next.degree() == max_degree) out.push_back(next);
        extend_words(alphabet, max_degree, next, out, keep_all);
    }
}

}  // namespace

std::vector<Word> words_of_degree(const Alphabet& alphabet, int n) {
    if (n < 0) throw std::invalid_argument("words_of_degree: negative degree");
    std::vector<Word> out;
    Word start;
    if (n == 0) {
        out.push_back(start);
        return out;
    }
    extend_words(alphabet, n, start, out, /*keep_all=*/false);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> words_up_to_degree(const Alphabet& alphabet, int n) {
    if (n < 0) throw std::invalid_argument("words_up_to_degree: negative degree");
    std::vector<Word> out;
    Word start;
    out.push_back(start);
    extend_words(alphabet, n, start, out, /*keep_all=*/true);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> enumerate_lyndon(const Alphabet& alphabet, int max_degree) {
    if (max_degree < 1) throw std::invalid_argument("enumerate_lyndon: max_degree must be >= 1");
    std::vector<Word> out;
    for (const Word& w : words_up_to_degree(alphabet, max_degree))
        if (is_lyndon(w)) out.push_back(w);
    return out;  // words_up_to_degree is already glex-sorted
}

bool is_factor(const Word& factor, const Word& u) {
    const auto& f = factor.letters();
    const auto& w = u.letters();
    if (f.empty()) return true;
    if (f.size() > w.size()) return false;
    return std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end();
}

std::string word_to_string(const Alphabet& alphabet, const Word& u) {
    if (u.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < u.letters().size(); ++i) {
        if (i) s += "\xc2\xb7";  // middle dot
        s += alphabet.name(u.letters()[i]);
    }
    return s;
}

}  // namespace lypbw
