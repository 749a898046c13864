#include "lypbw/ore_tower.hpp"

#include <algorithm>
#include <stdexcept>

namespace lypbw {

namespace {

// Irreducible words of degree n whose Lyndon parts all lie in `allowed`: the
// degree-n basis of the corresponding stage.
std::vector<Word> stage_basis_words(const TruncatedGB& gb, const std::set<Word>& allowed, int n) {
    std::vector<Word> out;
    for (const Word& w : irreducible_words(gb, n))
        if (cfl_parts_within(*gb.alphabet, w, allowed)) out.push_back(w);
    return out;
}

std::set<Word> allowed_below(const std::vector<Word>& n_i, const Word& gamma, bool strict) {
    std::set<Word> allowed;
    for (const Word& v : n_i) {
        const auto c = lex_compare(v, gamma);
        if (c < 0 || (!strict && c == 0)) allowed.insert(v);
    }
    return allowed;
}

}  // namespace

TowerReport build_tower(const PbwData& d, const Presentation& p, const TruncatedGB& gb) {
    TowerReport report;
    report.step_count = static_cast<int>(d.gamma.size());
    report.certified_through_degree = gb.complete_below;

    bool no_tail_words = true;
    for (const Word& v : d.n_i)
        if (2 * v.degree() > gb.complete_below) no_tail_words = false;
    report.certified = gb.finite_certificate && no_tail_words;

    BracketBasis basis(gb);
    for (const Word& gamma : d.gamma) {
        TowerStep step;
        step.gamma = gamma;
        step.z = d.z.at(gamma);
        step.degree = gamma.degree();
        const std::set<Word> lower = allowed_below(d.n_i, gamma, /*strict=*/true);

        for (const AlgebraGenerator& g : generators_below(d, p, gamma)) {
            TowerStep::DeltaEntry entry;
            entry.gen = g;
            if (gamma.degree() + generator_degree(g, p) > gb.complete_below) {
                entry.status = CheckStatus::unverifiable;
                report.partial = true;
                step.delta_table.push_back(std::move(entry));
                continue;
            }
            const Poly gp = generator_poly(g, d, p);
            entry.value = normal_form(step.z * gp - gp * step.z, gb);
            entry.status = CheckStatus::pass;
            for (const auto& [c, w] : basis.decompose(entry.value)) {
                std::vector<Word> parts = cfl_factorization(*p.alphabet, w);
                bool inside = true;
                for (const Word& part : parts)
                    if (!lower.count(part)) inside = false;
                if (!inside) {
                    entry.status = CheckStatus::fail;
                    if (!report.failed)
                        report.failure_reason =
                            "derivation left its stage: condition (2) violated";
                    report.failed = true;
                }
                entry.value_pbw.emplace_back(c, std::move(parts));
            }
            step.delta_table.push_back(std::move(entry));
        }

        // Leibniz on generator pairs: delta(fg) = delta(f) g + f delta(g).
        {
            const auto gens = generators_below(d, p, gamma);
            bool any_skipped = false, any_failed = false;
            for (const auto& f : gens) {
                for (const auto& g : gens) {
                    const int total =
                        gamma.degree() + generator_degree(f, p) + generator_degree(g, p);
                    if (total > gb.complete_below) {
                        any_skipped = true;
                        continue;
                    }
                    const Poly fp = generator_poly(f, d, p);
                    const Poly gp = generator_poly(g, d, p);
                    const Poly fg = normal_form(fp * gp, gb);
                    const Poly lhs = normal_form(step.z * fg - fg * step.z, gb);
                    const Poly df = normal_form(step.z * fp - fp * step.z, gb);
                    const Poly dg = normal_form(step.z * gp - gp * step.z, gb);
                    const Poly rhs = normal_form(df * gp + fp * dg, gb);
                    if (!(lhs == rhs)) any_failed = true;
                }
            }
            step.leibniz = any_failed ? CheckStatus::fail
                                      : (any_skipped ? CheckStatus::unverifiable : CheckStatus::pass);
            if (any_failed) {
                if (!report.failed) report.failure_reason = "Leibniz identity violated";
                report.failed = true;
            }
            if (any_skipped) report.partial = true;
        }

        report.steps.push_back(std::move(step));
    }

    // Degreewise freeness of every stage over its predecessor.
    for (int i = 0; i < report.step_count; ++i) {
        TowerStep& step = report.steps[static_cast<size_t>(i)];
        for (int n = 0; n <= gb.complete_below; ++n) {
            const bool pass = verify_step_freeness(report, d, p, gb, i, n);
            step.freeness.emplace_back(n, pass);
            if (!pass) {
                step.freeness_ok = false;
                if (!report.failed) report.failure_reason = "degreewise freeness violated";
                report.failed = true;
            }
        }
    }
    return report;
}

bool verify_step_freeness(const TowerReport& report, const PbwData& d, const Presentation& p,
                          const TruncatedGB& gb, int step_index, int n) {
    if (n > gb.complete_below)
        throw std::domain_error("verify_step_freeness: beyond truncation");
    if (step_index < 0 || step_index >= static_cast<int>(report.steps.size()))
        throw std::invalid_argument("verify_step_freeness: no such step");
    const TowerStep& step = report.steps[static_cast<size_t>(step_index)];
    BracketBasis basis(gb);

    // The reported derivation table must reproduce the commutators in scope.
    for (const auto& entry : step.delta_table) {
        if (entry.status == CheckStatus::unverifiable) continue;
        if (step.degree + generator_degree(entry.gen, p) > n) continue;
        const Poly gp = generator_poly(entry.gen, d, p);
        const Poly commutator_nf = normal_form(step.z * gp - gp * step.z, gb);
        Poly from_table(p.alphabet);
        for (const auto& [c, parts] : entry.value_pbw) {
            Poly prod = Poly::unit(p.alphabet);
            for (const Word& part : parts) prod = normal_form(prod * basis.nf_bracket(part), gb);
            from_table += prod.scaled(c);
        }
        if (!(commutator_nf == from_table)) return false;
    }

    const std::set<Word> lower = allowed_below(d.n_i, step.gamma, /*strict=*/true);
    const std::set<Word> upto = allowed_below(d.n_i, step.gamma, /*strict=*/false);
    const std::vector<Word> stage_basis = stage_basis_words(gb, upto, n);

    // The previous stage's PBW basis consists of the bracket monomials [h],
    // not the word cosets: only the former filter by Lyndon parts.
    std::vector<Poly> family;
    Poly zpow = Poly::unit(p.alphabet);
    for (int j = 0; n - j * step.degree >= 0; ++j) {
        if (j > 0) zpow = normal_form(zpow * step.z, gb);
        if (zpow.is_zero()) break;
        for (const Word& h : stage_basis_words(gb, lower, n - j * step.degree))
            family.push_back(normal_form(basis.nf_bracket(h) * zpow, gb));
    }

    if (family.size() != stage_basis.size()) return false;
    // Coordinates in the bracket basis: every component must stay inside the
    // stage, and the family must be independent.
    std::map<Word, int> column;
    for (size_t i = 0; i < stage_basis.size(); ++i) column[stage_basis[i]] = static_cast<int>(i);
    QMatrix m(static_cast<int>(family.size()), static_cast<int>(stage_basis.size()));
    for (size_t r = 0; r < family.size(); ++r)
        for (const auto& [c, w] : basis.decompose(family[r])) {
            auto it = column.find(w);
            if (it == column.end()) return false;  // escapes the stage
            m.at(static_cast<int>(r), it->second) = c;
        }
    return rank(std::move(m)) == static_cast<int>(stage_basis.size());
}

}  // namespace lypbw
