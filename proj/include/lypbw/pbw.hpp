#pragma once

#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "lypbw/linalg.hpp"
#include "lypbw/presentation.hpp"

namespace lypbw {

/// Caches normal forms of standard bracketings and decomposes polynomials in
/// the triangular basis {[w] mod I : w irreducible}. The decomposition is the
/// working notion of membership for the subalgebras cut out by Lyndon-word
/// lower sets.
class BracketBasis {
public:
    explicit BracketBasis(const TruncatedGB& gb) : gb_(gb) {}

    const TruncatedGB& gb() const { return gb_; }

    /// Normal form of the standard bracketing of w; leading word w, leading
    /// coefficient 1 whenever w is irreducible.
    const Poly& nf_bracket(const Word& w);

    /// Writes f (already in normal form) as sum of c_w * [w] over irreducible
    /// words w, by triangular elimination from the leading word down.
    std::vector<std::pair<Rational, Word>> decompose(Poly f);

    /// Bilateral version on the tensor square: f as sum of c * [u] (x) [v].
    std::vector<std::tuple<Rational, Word, Word>> decompose_pairs(TensorPoly f);

private:
    const TruncatedGB& gb_;
    std::map<Word, Poly> cache_;
};

/// The relative PBW data of a checked presentation: irreducible Lyndon words
/// of the full and restricted alphabets, their difference Gamma carrying the
/// restriction of the lex order, and the PBW generators z = [gamma] mod I in
/// normal form.
struct PbwData {
    std::vector<Word> n_i;   // glex ascending
    std::vector<Word> n_j;   // glex ascending
    std::vector<Word> gamma; // LEX ascending: this is Gamma's total order
    std::map<Word, Poly> z;  // gamma -> normal form of its bracketing
};

/// Requires the delta checks to have passed.
PbwData compute_pbw(const Presentation& p, const TruncatedGB& gb, const DeltaCheckReport& delta);

enum class CheckStatus { pass, fail, unverifiable };

/// A generator of one of the ladder subalgebras: a marked letter or a PBW
/// generator below the current index.
struct AlgebraGenerator {
    bool is_letter = true;
    int32_t letter = -1;
    Word gamma;
};

/// Generators of the subalgebra spanned below `gamma`: the marked letters in
/// rank order, then the z_delta with delta < gamma in lex order.
std::vector<AlgebraGenerator> generators_below(const PbwData& d, const Presentation& p,
                                               const Word& gamma);

Poly generator_poly(const AlgebraGenerator& g, const PbwData& d, const Presentation& p);
int generator_degree(const AlgebraGenerator& g, const Presentation& p);

struct Condition1Entry {
    Word gamma;
    CheckStatus status = CheckStatus::pass;
    TensorPoly residual;  // reduced image minus z(x)1 + 1(x)z
};

struct Condition1Report {
    std::vector<Condition1Entry> entries;
    bool ok() const;
};

/// First generator condition: for each gamma the reduced coproduct of z_gamma
/// minus its primitive part must decompose into bracket pairs [u] (x) [v]
/// with u, v nonempty and all Lyndon parts strictly below gamma.
Condition1Report verify_condition_1(const PbwData& d, const Presentation& p,
                                    const TruncatedGB& gb);

struct Condition2Entry {
    Word gamma;
    AlgebraGenerator gen;
    CheckStatus status = CheckStatus::pass;
    Poly commutator_nf;
};

struct Condition2Report {
    std::vector<Condition2Entry> entries;
    bool ok() const;
};

/// Second generator condition: each [z_gamma, g], g a generator below gamma,
/// must decompose into brackets of Lyndon words strictly below gamma.
Condition2Report verify_condition_2(const PbwData& d, const Presentation& p,
                                    const TruncatedGB& gb);

struct Condition3Entry {
    int degree = 0;
    int dim = 0;
    int left_count = 0, left_rank = 0;
    int right_count = 0, right_rank = 0;
    bool pass() const {
        return left_count == dim && left_rank == dim && right_count == dim && right_rank == dim;
    }
};

/// Third generator condition, in one degree: the nondecreasing z-products with
/// subalgebra-basis coefficients on the left (resp. right) must have
/// cardinality and rank equal to the dimension of the full algebra there.
Condition3Entry verify_condition_3(const PbwData& d, const Presentation& p, const TruncatedGB& gb,
                                   int n);

struct HilbertReport {
    std::vector<long> dims;          // dim A_n for n = 0..bound
    std::vector<long> product_dims;  // coefficients of prod 1/(1 - t^deg v) over N_I
    long n_i_count = 0;
    long n_j_count = 0;
    long gamma_count = 0;
    bool certified_complete = false;
};

HilbertReport hilbert_report(const PbwData& d, const TruncatedGB& gb);

struct ReorderedProduct {
    std::vector<std::pair<Rational, std::vector<Word>>> terms;  // nondecreasing Lyndon sequences
    bool bounded_by_input_max = false;
    bool degree_preserved = false;
};

/// Rewrites a product of bracketings indexed by irreducible Lyndon words into
/// the nondecreasing spanning set, certifying that no Lyndon word above the
/// input maximum appears and that the degree is preserved.
ReorderedProduct reorder_to_bounded(BracketBasis& basis, const Alphabet& alphabet,
                                    const std::vector<Word>& sequence);
std::vector<ReorderedProduct> reorder_to_bounded(BracketBasis& basis, const Alphabet& alphabet,
                                                 const std::vector<std::vector<Word>>& sequences);

/// Irreducible words of degree n supported on marked letters: the degree-n
/// basis of the subalgebra.
std::vector<Word> subalgebra_basis_words(const Presentation& p, const TruncatedGB& gb, int n);

/// Lyndon parts of every term of w's factorization lie in `allowed`.
bool cfl_parts_within(const Alphabet& alphabet, const Word& w, const std::set<Word>& allowed);

}  // namespace lypbw
