#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lypbw/groebner.hpp"

namespace lypbw {

/// A presented pair: the algebra on the full alphabet modulo `relations`,
/// together with the subalgebra generated by the marked letters, and
/// per-letter comultiplication images. The generator order is part of the
/// data: all marked letters precede all unmarked ones, each block sorted by
/// ascending degree and then by the order the user listed them.
struct Presentation {
    AlphabetPtr alphabet;
    std::vector<bool> in_subalgebra;                  // aligned with letter ranks
    std::vector<Poly> relations;
    std::vector<std::optional<TensorPoly>> delta_images;  // aligned with letter ranks
    int bound = 6;
    /// Optional independent generating set for the subalgebra ideal, used by
    /// the cross-checks; empty means "derive from the restricted basis".
    std::vector<Poly> subalgebra_relations;

    std::vector<int32_t> subalgebra_letters() const;
    bool has_subalgebra_letters_only(const Word& w) const;
};

/// Builds the canonical presentation from user-listed generators: sorts the
/// alphabet as required, remapping nothing else (callers construct relations
/// and images against the returned alphabet).
Alphabet canonical_alphabet(const std::vector<Generator>& listed,
                            const std::vector<bool>& marks,
                            std::vector<int>* listed_to_canonical = nullptr);

struct Violation {
    std::string where;
    std::string message;
};

/// Checks all presentation invariants: relations homogeneous of positive
/// degree within the bound, images present with the pseudo-comultiplication
/// shape and the right total degree, marked-letter images supported on marked
/// letters only, and the generator order. Violations are data, not errors.
std::vector<Violation> validate(const Presentation& p);

struct DeltaViolation {
    enum class Kind { ideal, shape };
    Kind kind;
    int index;             // basis element / letter rank
    TensorPoly residual;
};

struct DeltaCheckReport {
    int checked_degree = 0;
    std::vector<DeltaViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Verifies, exactly and degree-truncated, that the lifted comultiplication
/// maps the ideal into k<X> (x) I + I (x) k<X>: every basis element's image
/// must vanish after leg-wise reduction. Also re-checks each letter image's
/// shape after reduction. When `gb_sub` is given, marked-letter images are
/// cross-reduced against it and must agree.
DeltaCheckReport check_delta_ideal(const Presentation& p, const TruncatedGB& gb,
                                   const TruncatedGB* gb_sub = nullptr);

/// The induced presentation of the subalgebra on the marked letters: its
/// relations are exactly the basis elements supported on marked letters.
/// Requires the delta checks to have passed.
Presentation restrict_to_subalgebra(const Presentation& p, const TruncatedGB& gb,
                                    const DeltaCheckReport& delta);

/// Coassociativity of the lifted comultiplication on generators, checked on
/// reduced legs up to the bound. Optional strict-mode check; pseudo-
/// comultiplications need not pass it.
std::vector<Violation> check_coassociativity(const Presentation& p, const TruncatedGB& gb);

struct SubalgebraComparison {
    bool irreducible_lyndon_match = false;  // N_J = N_I restricted
    bool obstructions_match = false;        // O_J = O_I restricted
    bool basis_match = false;               // G_J = G_I restricted
    TruncatedGB gb_sub;                     // the independently completed basis
};

/// Completes the subalgebra ideal from scratch over the marked letters (from
/// `subalgebra_relations` when provided, else from the restricted basis) and
/// compares the three derived sets against the restrictions of the full ones,
/// extensionally up to the bound.
SubalgebraComparison compare_subalgebra_data(const Presentation& p, const TruncatedGB& gb,
                                             const DeltaCheckReport& delta);

}  // namespace lypbw
