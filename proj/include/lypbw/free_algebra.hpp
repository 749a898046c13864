#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lypbw/rational.hpp"
#include "lypbw/words.hpp"

namespace lypbw {

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// Element of the free algebra on an alphabet: a sparse rational linear
/// combination of words. Terms are kept in glex order with no zero
/// coefficients stored.
class Poly {
public:
    Poly() = default;
    explicit Poly(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

    static Poly zero(AlphabetPtr alphabet) { return Poly(std::move(alphabet)); }
    static Poly unit(AlphabetPtr alphabet);
    static Poly monomial(AlphabetPtr alphabet, Word w, Rational c);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    /// The common degree of all terms, or nullopt when the polynomial is zero
    /// or inhomogeneous.
    std::optional<int> homogeneous_degree() const;

    /// glex-largest term. Throws on the zero polynomial.
    std::pair<Word, Rational> leading_term() const;
    Word leading_word() const { return leading_term().first; }

    Rational coefficient(const Word& w) const;

    Poly& add_term(const Word& w, const Rational& c);

    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator-() const;
    Poly operator*(const Poly& other) const;
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);

    Poly scaled(const Rational& c) const;

    bool operator==(const Poly& other) const { return terms_ == other.terms_; }

private:
    void ensure_compatible(const Poly& other) const;

    AlphabetPtr alphabet_;
    std::map<Word, Rational> terms_;
};

/// Element of the tensor square: sparse combination of word pairs. Carrier
/// for images of the comultiplication; kept first-class so per-leg reduction
/// is a leg-wise map.
class TensorPoly {
public:
    using Key = std::pair<Word, Word>;

    TensorPoly() = default;
    explicit TensorPoly(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

    static TensorPoly zero(AlphabetPtr alphabet) { return TensorPoly(std::move(alphabet)); }
    static TensorPoly unit(AlphabetPtr alphabet);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// The common total degree (left + right) of all terms, or nullopt.
    std::optional<int> homogeneous_degree() const;

    TensorPoly& add_term(const Word& left, const Word& right, const Rational& c);

    TensorPoly operator+(const TensorPoly& other) const;
    TensorPoly operator-(const TensorPoly& other) const;
    TensorPoly operator*(const TensorPoly& other) const;
    TensorPoly& operator+=(const TensorPoly& other);
    TensorPoly& operator-=(const TensorPoly& other);
    TensorPoly scaled(const Rational& c) const;

    bool operator==(const TensorPoly& other) const { return terms_ == other.terms_; }

private:
    void ensure_compatible(const TensorPoly& other) const;

    AlphabetPtr alphabet_;
    std::map<Key, Rational> terms_;
};

/// f (x) g as an element of the tensor square.
TensorPoly tensor(const Poly& f, const Poly& g);

/// [f, g] = fg - gf.
Poly commutator(const Poly& f, const Poly& g);

/// The standard bracketing of a word: [1] = 1, [x] = x for letters, and for
/// |u| >= 2 with sh(u) = (uL, uR), [u] = [[uL],[uR]] when u is Lyndon and
/// [uL][uR] otherwise. Its leading word is u with coefficient 1.
Poly standard_bracket(const AlphabetPtr& alphabet, const Word& u);

/// The multiplicative-linear extension of per-letter images to all of the
/// free algebra, with 1 mapped to 1 (x) 1. The image slot of every letter
/// occurring in f must be set.
TensorPoly apply_delta(const Poly& f, const std::vector<std::optional<TensorPoly>>& images);

/// Canonical textual rendering, terms in glex-descending order.
std::string poly_to_string(const Poly& f);
std::string tensor_to_string(const TensorPoly& t);

}  // namespace lypbw
