#include "lypbw/groebner.hpp"

#include <algorithm>
#include <stdexcept>

namespace lypbw {

namespace {

int max_term_degree(const Poly& f) {
    int d = 0;
    for (const auto& [w, c] : f.terms()) d = std::max(d, w.degree());
    return d;
}

Poly make_monic(const Poly& f) {
    const auto [w, c] = f.leading_term();
    if (c == 1) return f;
    Rational inv = Rational(1) / c;
    return f.scaled(inv);
}

// Position of the leftmost occurrence of `factor` in `w`, or -1.
int find_factor(const Word& factor, const Word& w) {
    const auto& f = factor.letters();
    const auto& u = w.letters();
    if (f.size() > u.size()) return -1;
    auto it = std::search(u.begin(), u.end(), f.begin(), f.end());
    return it == u.end() ? -1 : static_cast<int>(it - u.begin());
}

// One reduction pass against an explicit element list: repeatedly rewrites
// the glex-largest reducible word. Deterministic: smallest element index,
// leftmost occurrence.
Poly reduce_against(const Poly& f, const std::vector<Poly>& elements, const Alphabet& alphabet,
                    const AlphabetPtr& aptr) {
    Poly rest = f;
    Poly result(aptr);
    while (!rest.is_zero()) {
        const auto [w, c] = rest.leading_term();
        int element = -1, pos = -1;
        for (size_t i = 0; i < elements.size(); ++i) {
            const int p = find_factor(elements[i].leading_word(), w);
            if (p >= 0) {
                element = static_cast<int>(i);
                pos = p;
                break;
            }
        }
        if (element < 0) {
            result.add_term(w, c);
            rest.add_term(w, -c);
            continue;
        }
        const Word& lw = elements[static_cast<size_t>(element)].leading_word();
        const Word left = w.subword(alphabet, 0, pos);
        const Word right = w.subword(alphabet, pos + lw.length(), w.length() - pos - lw.length());
        const Poly replaced = Poly::monomial(aptr, left, c) *
                              elements[static_cast<size_t>(element)] *
                              Poly::monomial(aptr, right, Rational(1));
        rest -= replaced;
    }
    return result;
}

// Interreduces to a fixpoint: every element monic with tail in normal form
// with respect to the others, no leading word dividing another.
void interreduce(std::vector<Poly>& elements, const Alphabet& alphabet, const AlphabetPtr& aptr) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(elements.begin(), elements.end(),
                  [](const Poly& a, const Poly& b) { return a.leading_word() < b.leading_word(); });
        for (size_t i = 0; i < elements.size(); ++i) {
            std::vector<Poly> others;
            others.reserve(elements.size() - 1);
            for (size_t j = 0; j < elements.size(); ++j)
                if (j != i) others.push_back(elements[j]);
            Poly reduced = reduce_against(elements[i], others, alphabet, aptr);
            if (reduced.is_zero()) {
                elements.erase(elements.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
            reduced = make_monic(reduced);
            if (!(reduced == elements[i])) {
                elements[i] = reduced;
                changed = true;
                break;
            }
        }
    }
}

struct Overlap {
    Word word;   // a c b, where lw_i = a c and lw_j = c b
    size_t i = 0, j = 0;
    int cut = 0; // |c|
};

// Proper one-sided overlaps between leading words: a nonempty proper suffix
// of lw_i equal to a nonempty proper prefix of lw_j. Inclusion ambiguities
// cannot occur between reduced elements.
std::vector<Overlap> find_overlaps(const std::vector<Poly>& elements, const Alphabet& alphabet,
                                   int degree_cap) {
    std::vector<Overlap> overlaps;
    for (size_t i = 0; i < elements.size(); ++i) {
        const Word wi = elements[i].leading_word();
        for (size_t j = 0; j < elements.size(); ++j) {
            const Word wj = elements[j].leading_word();
            const int max_cut = std::min(wi.length(), wj.length()) - 1;
            for (int cut = 1; cut <= max_cut; ++cut) {
                bool match = true;
                for (int p = 0; p < cut; ++p)
                    if (wi.letters()[static_cast<size_t>(wi.length() - cut + p)] !=
                        wj.letters()[static_cast<size_t>(p)]) {
                        match = false;
                        break;
                    }
                if (!match) continue;
                const Word tail = wj.subword(alphabet, cut, wj.length() - cut);
                const Word overlap_word = wi.concat(tail);
                if (degree_cap >= 0 && overlap_word.degree() > degree_cap) continue;
                overlaps.push_back({overlap_word, i, j, cut});
            }
        }
    }
    std::sort(overlaps.begin(), overlaps.end(), [](const Overlap& a, const Overlap& b) {
        const auto c = glex_compare(a.word, b.word);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
    return overlaps;
}

// S-polynomial of an overlap: g_i * b - a * g_j, leading terms cancelling on
// the overlap word.
Poly s_polynomial(const Overlap& o, const std::vector<Poly>& elements, const Alphabet& alphabet,
                  const AlphabetPtr& aptr) {
    const Word wi = elements[o.i].leading_word();
    const Word wj = elements[o.j].leading_word();
    const Word a = wi.subword(alphabet, 0, wi.length() - o.cut);
    const Word b = wj.subword(alphabet, o.cut, wj.length() - o.cut);
    return elements[o.i] * Poly::monomial(aptr, b, Rational(1)) -
           Poly::monomial(aptr, a, Rational(1)) * elements[o.j];
}

}  // namespace

TruncatedGB complete(AlphabetPtr alphabet, std::vector<Poly> generators, int bound) {
    if (bound < 1) throw std::invalid_argument("complete: bound must be >= 1");
    std::vector<Poly> elements;
    for (const Poly& g : generators) {
        if (g.is_zero()) throw std::invalid_argument("complete: zero generator");
        const auto d = g.homogeneous_degree();
        if (!d) throw std::invalid_argument("complete: inhomogeneous generator");
        if (*d < 1) throw std::invalid_argument("complete: generator of degree 0");
        if (*d > bound) throw std::invalid_argument("complete: generator beyond truncation");
        elements.push_back(make_monic(g));
    }

    const Alphabet& alpha = *alphabet;
    interreduce(elements, alpha, alphabet);
    while (true) {
        const auto overlaps = find_overlaps(elements, alpha, bound);
        Poly next(alphabet);
        for (const Overlap& o : overlaps) {
            const Poly s = s_polynomial(o, elements, alpha, alphabet);
            const Poly r = reduce_against(s, elements, alpha, alphabet);
            if (!r.is_zero()) {
                next = make_monic(r);
                break;
            }
        }
        if (next.is_zero()) break;
        elements.push_back(next);
        interreduce(elements, alpha, alphabet);
    }

    TruncatedGB gb;
    gb.alphabet = alphabet;
    gb.elements = std::move(elements);
    gb.bound = bound;
    gb.complete_below = bound;
    for (const Poly& e : gb.elements) gb.obstructions.push_back(e.leading_word());

    // Reduced elements admit no inclusion ambiguities.
    for (size_t i = 0; i < gb.obstructions.size(); ++i)
        for (size_t j = 0; j < gb.obstructions.size(); ++j)
            if (i != j && is_factor(gb.obstructions[i], gb.obstructions[j]))
                throw std::logic_error("complete: inclusion ambiguity among reduced elements");

    gb.finite_certificate = find_overlaps(gb.elements, alpha, -1).size() ==
                            find_overlaps(gb.elements, alpha, bound).size();
    return gb;
}

Poly normal_form(const Poly& f, const TruncatedGB& gb) {
    if (max_term_degree(f) > gb.complete_below)
        throw std::domain_error("normal_form: beyond truncation");
    return reduce_against(f, gb.elements, *gb.alphabet, gb.alphabet);
}

TensorPoly reduce_legs(const TensorPoly& t, const TruncatedGB& gb) {
    TensorPoly r(t.alphabet());
    for (const auto& [key, c] : t.terms()) {
        const Poly left = normal_form(Poly::monomial(t.alphabet(), key.first, Rational(1)), gb);
        const Poly right = normal_form(Poly::monomial(t.alphabet(), key.second, Rational(1)), gb);
        r += tensor(left, right).scaled(c);
    }
    return r;
}

bool is_reducible(const Word& u, const TruncatedGB& gb) {
    if (u.degree() > gb.complete_below)
        throw std::domain_error("is_reducible: beyond truncation");
    for (const Word& o : gb.obstructions)
        if (is_factor(o, u)) return true;
    return false;
}

std::vector<Word> irreducible_words(const TruncatedGB& gb, int n) {
    if (n < 0) throw std::invalid_argument("irreducible_words: negative degree");
    if (n > gb.complete_below)
        throw std::domain_error("irreducible_words: beyond truncation");
    std::vector<Word> out;
    for (const Word& w : words_of_degree(*gb.alphabet, n))
        if (!is_reducible(w, gb)) out.push_back(w);
    return out;
}

}  // namespace lypbw
