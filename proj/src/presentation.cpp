#include "lypbw/presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace lypbw {

std::vector<int32_t> Presentation::subalgebra_letters() const {
    std::vector<int32_t> out;
    for (int32_t i = 0; i < alphabet->size(); ++i)
        if (in_subalgebra[static_cast<size_t>(i)]) out.push_back(i);
    return out;
}

bool Presentation::has_subalgebra_letters_only(const Word& w) const {
    for (int32_t x : w.letters())
        if (!in_subalgebra[static_cast<size_t>(x)]) return false;
    return true;
}

Alphabet canonical_alphabet(const std::vector<Generator>& listed, const std::vector<bool>& marks,
                            std::vector<int>* listed_to_canonical) {
    if (listed.size() != marks.size())
        throw std::invalid_argument("canonical_alphabet: marks/generators size mismatch");
    std::vector<int> order(listed.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (marks[static_cast<size_t>(a)] != marks[static_cast<size_t>(b)])
            return marks[static_cast<size_t>(a)];
        return listed[static_cast<size_t>(a)].degree < listed[static_cast<size_t>(b)].degree;
    });
    std::vector<Generator> sorted;
    sorted.reserve(listed.size());
    for (int i : order) sorted.push_back(listed[static_cast<size_t>(i)]);
    if (listed_to_canonical) {
        listed_to_canonical->assign(listed.size(), -1);
        for (size_t pos = 0; pos < order.size(); ++pos)
            (*listed_to_canonical)[static_cast<size_t>(order[pos])] = static_cast<int>(pos);
    }
    return Alphabet(std::move(sorted));
}

namespace {

// The image minus g(x)1 + 1(x)g; all remaining terms must have positive
// degree on both legs.
TensorPoly shape_remainder(const TensorPoly& image, const Poly& g) {
    TensorPoly r = image;
    r -= tensor(g, Poly::unit(g.alphabet()));
    r -= tensor(Poly::unit(g.alphabet()), g);
    return r;
}

bool both_legs_positive(const TensorPoly& t) {
    for (const auto& [key, c] : t.terms())
        if (key.first.empty() || key.second.empty()) return false;
    return true;
}

}  // namespace

std::vector<Violation> validate(const Presentation& p) {
    std::vector<Violation> out;
    const Alphabet& alpha = *p.alphabet;
    if (p.in_subalgebra.size() != static_cast<size_t>(alpha.size()) ||
        p.delta_images.size() != static_cast<size_t>(alpha.size())) {
        out.push_back({"presentation", "internal arrays not aligned with the alphabet"});
        return out;
    }
    if (p.bound < 1) out.push_back({"max_degree", "degree bound must be >= 1"});

    // Order: marked letters first, ascending degree within each block.
    bool seen_unmarked = false;
    for (int i = 0; i < alpha.size(); ++i) {
        if (!p.in_subalgebra[static_cast<size_t>(i)]) {
            seen_unmarked = true;
        } else if (seen_unmarked) {
            out.push_back({"generator '" + alpha.name(i) + "'",
                           "subalgebra generators must precede the others"});
        }
        if (i > 0 && p.in_subalgebra[static_cast<size_t>(i)] == p.in_subalgebra[static_cast<size_t>(i - 1)] &&
            alpha.degree(i) < alpha.degree(i - 1))
            out.push_back({"generator '" + alpha.name(i) + "'",
                           "generators must be ordered by ascending degree within each block"});
    }

    for (size_t r = 0; r < p.relations.size(); ++r) {
        const std::string where = "relation " + std::to_string(r);
        const Poly& f = p.relations[r];
        if (f.is_zero()) {
            out.push_back({where, "relation is zero"});
            continue;
        }
        const auto d = f.homogeneous_degree();
        if (!d) {
            out.push_back({where, "relation not homogeneous"});
            continue;
        }
        if (*d < 1) out.push_back({where, "relation has degree 0"});
        if (*d > p.bound) out.push_back({where, "relation degree exceeds the bound"});
    }

    for (int i = 0; i < alpha.size(); ++i) {
        const std::string where = "delta image of '" + alpha.name(i) + "'";
        const auto& image = p.delta_images[static_cast<size_t>(i)];
        if (!image) {
            out.push_back({where, "missing delta image"});
            continue;
        }
        const auto d = image->homogeneous_degree();
        if (!d || *d != alpha.degree(i)) {
            out.push_back({where, "image is not homogeneous of the generator degree"});
            continue;
        }
        const Poly g = Poly::monomial(p.alphabet, Word::letter(i, alpha.degree(i)), Rational(1));
        if (!both_legs_positive(shape_remainder(*image, g)))
            out.push_back({where, "image is not g(x)1 + 1(x)g + (positive (x) positive)"});
        if (p.in_subalgebra[static_cast<size_t>(i)]) {
            for (const auto& [key, c] : image->terms())
                if (!p.has_subalgebra_letters_only(key.first) ||
                    !p.has_subalgebra_letters_only(key.second)) {
                    out.push_back({where, "subalgebra generator image leaves the subalgebra"});
                    break;
                }
        }
    }
    return out;
}

DeltaCheckReport check_delta_ideal(const Presentation& p, const TruncatedGB& gb,
                                   const TruncatedGB* gb_sub) {
    DeltaCheckReport report;
    report.checked_degree = p.bound;

    for (size_t i = 0; i < gb.elements.size(); ++i) {
        const TensorPoly image = apply_delta(gb.elements[i], p.delta_images);
        const TensorPoly residual = reduce_legs(image, gb);
        if (!residual.is_zero())
            report.violations.push_back(
                {DeltaViolation::Kind::ideal, static_cast<int>(i), residual});
    }

    // Def-2.1 shape survives reduction: the reduced image of each letter must
    // still be gbar(x)1 + 1(x)gbar + (positive (x) positive).
    for (int i = 0; i < p.alphabet->size(); ++i) {
        if (!p.delta_images[static_cast<size_t>(i)]) continue;
        const Poly g = Poly::monomial(p.alphabet, Word::letter(i, p.alphabet->degree(i)), Rational(1));
        const Poly g_nf = normal_form(g, gb);
        const TensorPoly reduced = reduce_legs(*p.delta_images[static_cast<size_t>(i)], gb);
        const TensorPoly remainder = shape_remainder(reduced, g_nf);
        if (!both_legs_positive(remainder)) {
            TensorPoly bad(p.alphabet);
            for (const auto& [key, c] : remainder.terms())
                if (key.first.empty() || key.second.empty()) bad.add_term(key.first, key.second, c);
            report.violations.push_back({DeltaViolation::Kind::shape, i, bad});
        }
        if (gb_sub && p.in_subalgebra[static_cast<size_t>(i)]) {
            // Marked letters keep their ranks in the restricted alphabet, so
            // terms carry over verbatim; reduction against the subalgebra
            // basis must agree with the full reduction.
            TensorPoly image_sub(gb_sub->alphabet);
            for (const auto& [key, c] : p.delta_images[static_cast<size_t>(i)]->terms())
                image_sub.add_term(key.first, key.second, c);
            const TensorPoly via_sub = reduce_legs(image_sub, *gb_sub);
            if (!(via_sub.terms() == reduced.terms())) {
                TensorPoly difference(p.alphabet);
                for (const auto& [key, c] : via_sub.terms()) difference.add_term(key.first, key.second, c);
                difference -= reduced;
                report.violations.push_back({DeltaViolation::Kind::shape, i, difference});
            }
        }
    }
    return report;
}

namespace {

int marked_prefix_size(const Presentation& p) {
    int k = 0;
    while (k < p.alphabet->size() && p.in_subalgebra[static_cast<size_t>(k)]) ++k;
    for (int i = k; i < p.alphabet->size(); ++i)
        if (p.in_subalgebra[static_cast<size_t>(i)])
            throw std::logic_error("presentation: subalgebra letters are not a prefix");
    return k;
}

}  // namespace

Presentation restrict_to_subalgebra(const Presentation& p, const TruncatedGB& gb,
                                    const DeltaCheckReport& delta) {
    if (!delta.ok())
        throw std::domain_error("restrict_to_subalgebra: hypotheses not established");
    const int k = marked_prefix_size(p);

    std::vector<Generator> gens;
    for (int i = 0; i < k; ++i) gens.push_back(p.alphabet->generator(i));
    auto sub_alpha = std::make_shared<const Alphabet>(Alphabet(std::move(gens)));

    Presentation sub;
    sub.alphabet = sub_alpha;
    sub.in_subalgebra.assign(static_cast<size_t>(k), true);
    sub.bound = p.bound;

    // Marked letters keep their ranks, so words carry over verbatim.
    for (const Poly& e : gb.elements) {
        bool inside = true;
        for (const auto& [w, c] : e.terms())
            if (!p.has_subalgebra_letters_only(w)) {
                inside = false;
                break;
            }
        if (!inside) continue;
        Poly copy(sub_alpha);
        for (const auto& [w, c] : e.terms()) copy.add_term(w, c);
        sub.relations.push_back(copy);
    }
    for (int i = 0; i < k; ++i) {
        TensorPoly image(sub_alpha);
        for (const auto& [key, c] : p.delta_images[static_cast<size_t>(i)]->terms())
            image.add_term(key.first, key.second, c);
        sub.delta_images.push_back(image);
    }
    return sub;
}

namespace {

using Triple = std::tuple<Word, Word, Word>;
using Tensor3 = std::map<Triple, Rational>;

void add_triple_product(Tensor3& acc, const Poly& a, const Poly& b, const Poly& c,
                        const Rational& scale) {
    for (const auto& [u, x] : a.terms())
        for (const auto& [v, y] : b.terms())
            for (const auto& [w, z] : c.terms()) {
                const Rational coeff = scale * x * y * z;
                auto [it, inserted] = acc.emplace(Triple{u, v, w}, coeff);
                if (!inserted) {
                    it->second += coeff;
                    if (it->second == 0) acc.erase(it);
                }
            }
}

Poly word_nf(const AlphabetPtr& alpha, const Word& w, const TruncatedGB& gb) {
    return normal_form(Poly::monomial(alpha, w, Rational(1)), gb);
}

}  // namespace

std::vector<Violation> check_coassociativity(const Presentation& p, const TruncatedGB& gb) {
    std::vector<Violation> out;
    for (int i = 0; i < p.alphabet->size(); ++i) {
        const auto& image = p.delta_images[static_cast<size_t>(i)];
        if (!image) continue;
        Tensor3 lhs, rhs;
        for (const auto& [key, c] : image->terms()) {
            // (Delta (x) id): expand the left leg.
            const TensorPoly left = apply_delta(
                Poly::monomial(p.alphabet, key.first, Rational(1)), p.delta_images);
            for (const auto& [lk, lc] : left.terms())
                add_triple_product(lhs, word_nf(p.alphabet, lk.first, gb),
                                   word_nf(p.alphabet, lk.second, gb),
                                   word_nf(p.alphabet, key.second, gb), c * lc);
            // (id (x) Delta): expand the right leg.
            const TensorPoly right = apply_delta(
                Poly::monomial(p.alphabet, key.second, Rational(1)), p.delta_images);
            for (const auto& [rk, rc] : right.terms())
                add_triple_product(rhs, word_nf(p.alphabet, key.first, gb),
                                   word_nf(p.alphabet, rk.first, gb),
                                   word_nf(p.alphabet, rk.second, gb), c * rc);
        }
        if (!(lhs == rhs))
            out.push_back({"delta image of '" + p.alphabet->name(i) + "'",
                           "comultiplication is not coassociative on this generator"});
    }
    return out;
}

SubalgebraComparison compare_subalgebra_data(const Presentation& p, const TruncatedGB& gb,
                                             const DeltaCheckReport& delta) {
    const Presentation sub = restrict_to_subalgebra(p, gb, delta);

    std::vector<Poly> j_generators;
    if (!p.subalgebra_relations.empty()) {
        for (const Poly& f : p.subalgebra_relations) {
            for (const auto& [w, c] : f.terms())
                if (!p.has_subalgebra_letters_only(w))
                    throw std::invalid_argument(
                        "subalgebra relation uses a letter outside the subalgebra");
            Poly copy(sub.alphabet);
            for (const auto& [w, c] : f.terms()) copy.add_term(w, c);
            j_generators.push_back(copy);
        }
    } else {
        j_generators = sub.relations;
    }

    SubalgebraComparison cmp;
    cmp.gb_sub = complete(sub.alphabet, j_generators, p.bound);

    // N_J dependes only on irreducibility, computed here from the independent
    // completion; the right-hand sides are restrictions of the full-alphabet
    // data.
    std::vector<Word> n_j;
    if (sub.alphabet->size() > 0)
        for (const Word& w : enumerate_lyndon(*sub.alphabet, p.bound))
            if (!is_reducible(w, cmp.gb_sub)) n_j.push_back(w);
    std::vector<Word> n_i_restricted;
    for (const Word& w : enumerate_lyndon(*p.alphabet, p.bound))
        if (p.has_subalgebra_letters_only(w) && !is_reducible(w, gb)) n_i_restricted.push_back(w);
    cmp.irreducible_lyndon_match = n_j == n_i_restricted;

    std::vector<Word> o_i_restricted;
    for (const Word& w : gb.obstructions)
        if (p.has_subalgebra_letters_only(w)) o_i_restricted.push_back(w);
    cmp.obstructions_match = cmp.gb_sub.obstructions == o_i_restricted;

    cmp.basis_match = cmp.gb_sub.elements.size() == sub.relations.size();
    if (cmp.basis_match)
        for (size_t i = 0; i < sub.relations.size(); ++i)
            if (!(cmp.gb_sub.elements[i] == sub.relations[i])) {
                cmp.basis_match = false;
                break;
            }
    return cmp;
}

}  // namespace lypbw
