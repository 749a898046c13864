#pragma once

#include <vector>

#include "lypbw/free_algebra.hpp"

namespace lypbw {

/// Reduced Groebner basis data for a homogeneous ideal, valid up to a degree
/// bound. Every element is monic and homogeneous; the set is reduced (no word
/// of any element has a factor among the other leading words, and tails are
/// in normal form). The obstructions are exactly the leading words; each
/// obstruction's proper factors are irreducible.
struct TruncatedGB {
    AlphabetPtr alphabet;
    std::vector<Poly> elements;     // sorted by glex of leading word
    std::vector<Word> obstructions; // = leading words, glex ascending
    int bound = 0;
    /// Largest degree d <= bound such that all overlaps of degree <= d have
    /// been resolved. Queries beyond it are refused.
    int complete_below = 0;
    /// True when every overlap of the final basis (any degree) has overlap
    /// word of degree <= bound; the basis is then a full Groebner basis of
    /// the ideal, not just a truncation.
    bool finite_certificate = false;
};

/// Computes the reduced Groebner basis of the ideal generated by
/// `generators`, truncated at degree `bound`: all elements have degree <=
/// bound and every overlap of degree <= bound reduces to zero. Output order
/// is deterministic (glex on leading words). Generators must be homogeneous
/// of positive degree <= bound.
TruncatedGB complete(AlphabetPtr alphabet, std::vector<Poly> generators, int bound);

/// Reduces f modulo the basis: the result contains no word with a factor
/// among the obstructions and differs from f by an ideal element. Linear and
/// idempotent. Throws "beyond truncation" when a term degree exceeds
/// complete_below.
Poly normal_form(const Poly& f, const TruncatedGB& gb);

/// Leg-wise normal form on the tensor square.
TensorPoly reduce_legs(const TensorPoly& t, const TruncatedGB& gb);

/// True iff u has a factor among the obstructions. Requires deg(u) <=
/// complete_below.
bool is_reducible(const Word& u, const TruncatedGB& gb);

/// All degree-n words with no obstruction factor, glex-sorted; their count is
/// the dimension of the quotient algebra in degree n.
std::vector<Word> irreducible_words(const TruncatedGB& gb, int n);

}  // namespace lypbw
