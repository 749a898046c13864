#include "lypbw/free_algebra.hpp"

#include <stdexcept>

namespace lypbw {

namespace {

void check_alphabets(const AlphabetPtr& a, const AlphabetPtr& b) {
    if (a == b) return;
    if (a && b && *a == *b) return;
    throw std::invalid_argument("alphabet mismatch");
}

}  // namespace

Poly Poly::unit(AlphabetPtr alphabet) {
    Poly p(std::move(alphabet));
    p.add_term(Word(), Rational(1));
    return p;
}

Poly Poly::monomial(AlphabetPtr alphabet, Word w, Rational c) {
    Poly p(std::move(alphabet));
    p.add_term(w, c);
    return p;
}

std::optional<int> Poly::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = terms_.begin()->first.degree();
    for (const auto& [w, c] : terms_)
        if (w.degree() != d) return std::nullopt;
    return d;
}

std::pair<Word, Rational> Poly::leading_term() const {
    if (terms_.empty()) throw std::domain_error("no leading word: zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

Rational Poly::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

Poly& Poly::add_term(const Word& w, const Rational& c) {
    if (c == 0) return *this;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

void Poly::ensure_compatible(const Poly& other) const {
    check_alphabets(alphabet_, other.alphabet_);
}

Poly Poly::operator+(const Poly& other) const {
    Poly r = *this;
    r += other;
    return r;
}

Poly Poly::operator-(const Poly& other) const {
    Poly r = *this;
    r -= other;
    return r;
}

Poly Poly::operator-() const {
    return scaled(Rational(-1));
}

Poly& Poly::operator+=(const Poly& other) {
    ensure_compatible(other);
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    ensure_compatible(other);
    for (const auto& [w, c] : other.terms_) add_term(w, -c);
    return *this;
}

Poly Poly::operator*(const Poly& other) const {
    ensure_compatible(other);
    Poly r(alphabet_ ? alphabet_ : other.alphabet_);
    for (const auto& [u, a] : terms_)
        for (const auto& [v, b] : other.terms_) r.add_term(u.concat(v), a * b);
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r(alphabet_);
    if (c == 0) return r;
    for (const auto& [w, a] : terms_) r.terms_.emplace(w, a * c);
    return r;
}

TensorPoly TensorPoly::unit(AlphabetPtr alphabet) {
    TensorPoly t(std::move(alphabet));
    t.add_term(Word(), Word(), Rational(1));
    return t;
}

std::optional<int> TensorPoly::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const auto& first = terms_.begin()->first;
    const int d = first.first.degree() + first.second.degree();
    for (const auto& [key, c] : terms_)
        if (key.first.degree() + key.second.degree() != d) return std::nullopt;
    return d;
}

TensorPoly& TensorPoly::add_term(const Word& left, const Word& right, const Rational& c) {
    if (c == 0) return *this;
    auto [it, inserted] = terms_.emplace(Key{left, right}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

void TensorPoly::ensure_compatible(const TensorPoly& other) const {
    check_alphabets(alphabet_, other.alphabet_);
}

TensorPoly TensorPoly::operator+(const TensorPoly& other) const {
    TensorPoly r = *this;
    r += other;
    return r;
}

TensorPoly TensorPoly::operator-(const TensorPoly& other) const {
    TensorPoly r = *this;
    r -= other;
    return r;
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& other) {
    ensure_compatible(other);
    for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
    return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& other) {
    ensure_compatible(other);
    for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, -c);
    return *this;
}

TensorPoly TensorPoly::operator*(const TensorPoly& other) const {
    // (a (x) b)(c (x) d) = ac (x) bd, extended bilinearly.
    ensure_compatible(other);
    TensorPoly r(alphabet_ ? alphabet_ : other.alphabet_);
    for (const auto& [u, a] : terms_)
        for (const auto& [v, b] : other.terms_)
            r.add_term(u.first.concat(v.first), u.second.concat(v.second), a * b);
    return r;
}

TensorPoly TensorPoly::scaled(const Rational& c) const {
    TensorPoly r(alphabet_);
    if (c == 0) return r;
    for (const auto& [key, a] : terms_) r.terms_.emplace(key, a * c);
    return r;
}

TensorPoly tensor(const Poly& f, const Poly& g) {
    TensorPoly r(f.alphabet() ? f.alphabet() : g.alphabet());
    for (const auto& [u, a] : f.terms())
        for (const auto& [v, b] : g.terms()) r.add_term(u, v, a * b);
    return r;
}

Poly commutator(const Poly& f, const Poly& g) {
    return f * g - g * f;
}

Poly standard_bracket(const AlphabetPtr& alphabet, const Word& u) {
    if (u.empty()) return Poly::unit(alphabet);
    if (u.length() == 1) return Poly::monomial(alphabet, u, Rational(1));
    auto [left, right] = shirshov_factorization(*alphabet, u);
    const Poly bl = standard_bracket(alphabet, left);
    const Poly br = standard_bracket(alphabet, right);
    return is_lyndon(u) ? commutator(bl, br) : bl * br;
}

TensorPoly apply_delta(const Poly& f, const std::vector<std::optional<TensorPoly>>& images) {
    TensorPoly r(f.alphabet());
    for (const auto& [w, c] : f.terms()) {
        TensorPoly prod = TensorPoly::unit(f.alphabet());
        for (int32_t x : w.letters()) {
            if (x < 0 || static_cast<size_t>(x) >= images.size() || !images[static_cast<size_t>(x)])
                throw std::invalid_argument("apply_delta: no image for a generator occurring in f");
            prod = prod * *images[static_cast<size_t>(x)];
        }
        r += prod.scaled(c);
    }
    return r;
}

namespace {

void append_term(std::string& s, bool first, const Rational& c, const std::string& body) {
    const bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first)
        s += negative ? "-" : "";
    else
        s += negative ? " - " : " + ";
    const bool unit_coeff = mag == 1 && body != "1";
    if (!unit_coeff) {
        s += rational_to_string(mag);
        if (body != "1") s += " ";
    }
    if (body != "1") s += body;
}

}  // namespace

std::string poly_to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    const Alphabet& alpha = *f.alphabet();
    std::string s;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        append_term(s, first, it->second, word_to_string(alpha, it->first));
        first = false;
    }
    return s;
}

std::string tensor_to_string(const TensorPoly& t) {
    if (t.is_zero()) return "0";
    const Alphabet& alpha = *t.alphabet();
    std::string s;
    bool first = true;
    for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it) {
        const std::string body = word_to_string(alpha, it->first.first) + "\xe2\x8a\x97" +
                                 word_to_string(alpha, it->first.second);
        append_term(s, first, it->second, body);
        first = false;
    }
    return s;
}

}  // namespace lypbw
