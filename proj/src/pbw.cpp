#include "lypbw/pbw.hpp"

#include <algorithm>
#include <stdexcept>

namespace lypbw {

const Poly& BracketBasis::nf_bracket(const Word& w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    Poly nf = normal_form(standard_bracket(gb_.alphabet, w), gb_);
    return cache_.emplace(w, std::move(nf)).first->second;
}

std::vector<std::pair<Rational, Word>> BracketBasis::decompose(Poly f) {
    std::vector<std::pair<Rational, Word>> out;
    while (!f.is_zero()) {
        const auto [w, c] = f.leading_term();
        if (is_reducible(w, gb_))
            throw std::logic_error("bracket decomposition: reducible leading word");
        f -= nf_bracket(w).scaled(c);
        out.emplace_back(c, w);
    }
    return out;
}

std::vector<std::tuple<Rational, Word, Word>> BracketBasis::decompose_pairs(TensorPoly f) {
    std::vector<std::tuple<Rational, Word, Word>> out;
    while (!f.is_zero()) {
        const auto it = f.terms().rbegin();
        const auto [left, right] = it->first;
        const Rational c = it->second;
        if (is_reducible(left, gb_) || is_reducible(right, gb_))
            throw std::logic_error("bracket decomposition: reducible leading pair");
        f -= tensor(nf_bracket(left), nf_bracket(right)).scaled(c);
        out.emplace_back(c, left, right);
    }
    return out;
}

PbwData compute_pbw(const Presentation& p, const TruncatedGB& gb, const DeltaCheckReport& delta) {
    if (!delta.ok())
        throw std::domain_error("compute_pbw: delta checks have not passed");
    PbwData d;
    for (const Word& w : enumerate_lyndon(*p.alphabet, p.bound)) {
        if (is_reducible(w, gb)) continue;
        d.n_i.push_back(w);
        if (p.has_subalgebra_letters_only(w)) d.n_j.push_back(w);
    }
    for (const Word& w : d.n_i)
        if (!p.has_subalgebra_letters_only(w)) d.gamma.push_back(w);
    std::sort(d.gamma.begin(), d.gamma.end(), LexLess{});

    BracketBasis basis(gb);
    for (const Word& g : d.gamma) d.z.emplace(g, basis.nf_bracket(g));
    return d;
}

bool cfl_parts_within(const Alphabet& alphabet, const Word& w, const std::set<Word>& allowed) {
    for (const Word& part : cfl_factorization(alphabet, w))
        if (!allowed.count(part)) return false;
    return true;
}

namespace {

std::set<Word> lex_lower_set(const std::vector<Word>& n_i, const Word& gamma) {
    std::set<Word> allowed;
    for (const Word& v : n_i)
        if (lex_compare(v, gamma) < 0) allowed.insert(v);
    return allowed;
}

}  // namespace

std::vector<AlgebraGenerator> generators_below(const PbwData& d, const Presentation& p,
                                               const Word& gamma) {
    std::vector<AlgebraGenerator> out;
    for (int32_t x : p.subalgebra_letters()) out.push_back({true, x, Word()});
    for (const Word& delta : d.gamma) {
        if (!(lex_compare(delta, gamma) < 0)) continue;
        out.push_back({false, -1, delta});
    }
    return out;
}

Poly generator_poly(const AlgebraGenerator& g, const PbwData& d, const Presentation& p) {
    if (g.is_letter)
        return Poly::monomial(p.alphabet, Word::letter(g.letter, p.alphabet->degree(g.letter)),
                              Rational(1));
    return d.z.at(g.gamma);
}

int generator_degree(const AlgebraGenerator& g, const Presentation& p) {
    return g.is_letter ? p.alphabet->degree(g.letter) : g.gamma.degree();
}

bool Condition1Report::ok() const {
    for (const auto& e : entries)
        if (e.status == CheckStatus::fail) return false;
    return true;
}

Condition1Report verify_condition_1(const PbwData& d, const Presentation& p,
                                    const TruncatedGB& gb) {
    Condition1Report report;
    BracketBasis basis(gb);
    for (const Word& gamma : d.gamma) {
        Condition1Entry entry;
        entry.gamma = gamma;
        const Poly& z = d.z.at(gamma);
        TensorPoly residual = reduce_legs(apply_delta(z, p.delta_images), gb);
        residual -= tensor(z, Poly::unit(p.alphabet));
        residual -= tensor(Poly::unit(p.alphabet), z);
        entry.residual = residual;
        entry.status = CheckStatus::pass;
        const std::set<Word> allowed = lex_lower_set(d.n_i, gamma);
        for (const auto& [c, left, right] : basis.decompose_pairs(residual)) {
            if (left.empty() || right.empty() ||
                !cfl_parts_within(*p.alphabet, left, allowed) ||
                !cfl_parts_within(*p.alphabet, right, allowed)) {
                entry.status = CheckStatus::fail;
                break;
            }
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

bool Condition2Report::ok() const {
    for (const auto& e : entries)
        if (e.status == CheckStatus::fail) return false;
    return true;
}

Condition2Report verify_condition_2(const PbwData& d, const Presentation& p,
                                    const TruncatedGB& gb) {
    Condition2Report report;
    BracketBasis basis(gb);
    for (const Word& gamma : d.gamma) {
        const Poly& z = d.z.at(gamma);
        const std::set<Word> allowed = lex_lower_set(d.n_i, gamma);
        for (const AlgebraGenerator& g : generators_below(d, p, gamma)) {
            Condition2Entry entry;
            entry.gamma = gamma;
            entry.gen = g;
            if (gamma.degree() + generator_degree(g, p) > gb.complete_below) {
                entry.status = CheckStatus::unverifiable;
                report.entries.push_back(std::move(entry));
                continue;
            }
            const Poly gp = generator_poly(g, d, p);
            entry.commutator_nf = normal_form(commutator(z, gp), gb);
            entry.status = CheckStatus::pass;
            for (const auto& [c, w] : basis.decompose(entry.commutator_nf))
                if (!cfl_parts_within(*p.alphabet, w, allowed)) {
                    entry.status = CheckStatus::fail;
                    break;
                }
            report.entries.push_back(std::move(entry));
        }
    }
    return report;
}

std::vector<Word> subalgebra_basis_words(const Presentation& p, const TruncatedGB& gb, int n) {
    std::vector<Word> out;
    for (const Word& w : irreducible_words(gb, n))
        if (p.has_subalgebra_letters_only(w)) out.push_back(w);
    return out;
}

namespace {

// Nondecreasing sequences in Gamma (lex order) with total degree <= cap,
// paired with the normal form of the product of their z's; the empty
// sequence carries the unit.
void gamma_sequences(const PbwData& d, const TruncatedGB& gb, size_t min_index, const Poly& acc,
                     int used, int cap, std::vector<std::pair<int, Poly>>& out) {
    out.emplace_back(used, acc);
    for (size_t i = min_index; i < d.gamma.size(); ++i) {
        const Word& g = d.gamma[i];
        if (used + g.degree() > cap) continue;
        Poly next = normal_form(acc * d.z.at(g), gb);
        if (next.is_zero()) continue;
        gamma_sequences(d, gb, i, next, used + g.degree(), cap, out);
    }
}

int fill_rank(const std::vector<Poly>& family, const std::vector<Word>& basis) {
    std::map<Word, int> column;
    for (size_t i = 0; i < basis.size(); ++i) column[basis[i]] = static_cast<int>(i);
    QMatrix m(static_cast<int>(family.size()), static_cast<int>(basis.size()));
    for (size_t r = 0; r < family.size(); ++r)
        for (const auto& [w, c] : family[r].terms()) m.at(static_cast<int>(r), column.at(w)) = c;
    return rank(std::move(m));
}

}  // namespace

Condition3Entry verify_condition_3(const PbwData& d, const Presentation& p, const TruncatedGB& gb,
                                   int n) {
    Condition3Entry entry;
    entry.degree = n;
    const std::vector<Word> basis = irreducible_words(gb, n);
    entry.dim = static_cast<int>(basis.size());

    std::vector<std::pair<int, Poly>> products;
    gamma_sequences(d, gb, 0, Poly::unit(p.alphabet), 0, n, products);

    std::vector<Poly> left, right;
    for (const auto& [deg, zprod] : products) {
        for (const Word& b : subalgebra_basis_words(p, gb, n - deg)) {
            const Poly bp = Poly::monomial(p.alphabet, b, Rational(1));
            left.push_back(normal_form(bp * zprod, gb));
            right.push_back(normal_form(zprod * bp, gb));
        }
    }
    entry.left_count = static_cast<int>(left.size());
    entry.right_count = static_cast<int>(right.size());
    entry.left_rank = fill_rank(left, basis);
    entry.right_rank = fill_rank(right, basis);
    return entry;
}

HilbertReport hilbert_report(const PbwData& d, const TruncatedGB& gb) {
    HilbertReport report;
    const int bound = gb.complete_below;
    for (int n = 0; n <= bound; ++n)
        report.dims.push_back(static_cast<long>(irreducible_words(gb, n).size()));

    report.product_dims.assign(static_cast<size_t>(bound) + 1, 0);
    report.product_dims[0] = 1;
    for (const Word& v : d.n_i) {
        const int dv = v.degree();
        for (int n = dv; n <= bound; ++n)
            report.product_dims[static_cast<size_t>(n)] +=
                report.product_dims[static_cast<size_t>(n - dv)];
    }

    report.n_i_count = static_cast<long>(d.n_i.size());
    report.n_j_count = static_cast<long>(d.n_j.size());
    report.gamma_count = static_cast<long>(d.gamma.size());

    bool no_tail_words = true;
    for (const Word& v : d.n_i)
        if (2 * v.degree() > bound) no_tail_words = false;
    report.certified_complete = gb.finite_certificate && no_tail_words;
    return report;
}

ReorderedProduct reorder_to_bounded(BracketBasis& basis, const Alphabet& alphabet,
                                    const std::vector<Word>& sequence) {
    const TruncatedGB& gb = basis.gb();
    int total = 0;
    for (const Word& w : sequence) {
        if (!is_lyndon(w) || is_reducible(w, gb))
            throw std::invalid_argument("reorder_to_bounded: word outside the irreducible Lyndon set");
        total += w.degree();
    }
    if (total > gb.complete_below)
        throw std::domain_error("reorder_to_bounded: beyond truncation");

    Poly f = Poly::unit(gb.alphabet);
    for (const Word& w : sequence) f = normal_form(f * basis.nf_bracket(w), gb);

    ReorderedProduct out;
    out.bounded_by_input_max = true;
    out.degree_preserved = true;
    const Word* input_max = nullptr;
    for (const Word& w : sequence)
        if (!input_max || lex_compare(w, *input_max) > 0) input_max = &w;

    for (const auto& [c, w] : basis.decompose(f)) {
        if (w.degree() != total) out.degree_preserved = false;
        std::vector<Word> parts = cfl_factorization(alphabet, w);
        for (const Word& part : parts)
            if (!input_max || lex_compare(part, *input_max) > 0) out.bounded_by_input_max = false;
        out.terms.emplace_back(c, std::move(parts));
    }
    if (sequence.empty()) out.bounded_by_input_max = true;
    return out;
}

std::vector<ReorderedProduct> reorder_to_bounded(BracketBasis& basis, const Alphabet& alphabet,
                                                 const std::vector<std::vector<Word>>& sequences) {
    std::vector<ReorderedProduct> out;
    out.reserve(sequences.size());
    for (const auto& seq : sequences) out.push_back(reorder_to_bounded(basis, alphabet, seq));
    return out;
}

}  // namespace lypbw
