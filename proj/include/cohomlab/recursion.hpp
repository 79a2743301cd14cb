#pragma once

#include <map>
#include <mutex>
#include <tuple>

#include "cohomlab/actions.hpp"
#include "cohomlab/character_table.hpp"

namespace cohomlab {

/// Which action a graded character describes. Canonical and deconed live
/// over S_n, the two extended views over S_{n+1} (ground set {0..n}).
enum class View { canonical, extended, deconed, deconed_extended };

View view_from_string(const std::string& s);
const char* to_string(View v);

bool view_is_extended(View v);

/// Map from degree index k to the class function of the action on that
/// graded piece. Degrees are plain integers; the honest cohomological
/// degree is k(d-1) for the configuration space views.
struct GradedCharacter {
    int n = 0;
    Parity parity = Parity::odd;
    View view = View::canonical;
    int group_degree = 0;                 // n, or n+1 for extended views
    std::map<int, ClassFunction> degrees;  // computed degrees only
    int max_degree = -1;                   // top degree carried by this object

    const ClassFunction& at(int k) const { return degrees.at(k); }
};

/// Top degree of a view: n-1 for the configuration space, n-2 deconed.
int top_degree(int n, View view);

/// Character-level computations with per-degree caching. The recursion of
/// the extended action is the normative route for the even-parity extended
/// characters; odd parity additionally has the matrix route for
/// cross-checking. All caches are guarded for concurrent use.
class CharacterLab {
public:
    explicit CharacterLab(int max_n = kDefaultMaxPointsForCharacters) : max_n_(max_n) {}

    int max_n() const { return max_n_; }

    /// Trace-computed character of the canonical S_n action in degree k.
    const ClassFunction& canonical(int n, Parity parity, int k);

    /// Extended character over S_{n+1} in degree k, by inverting
    /// chi(n+1,k) = ext(n,k) + p_{n+1} ext(n,k-1). Every step must pass the
    /// genuine-character test; failures raise NotGenuineCharacterError.
    const ClassFunction& extended(int n, Parity parity, int k);

    /// Extended character through action matrices (parity odd only).
    const ClassFunction& extended_by_matrices(int n, int k);

    /// Character of S_n on the deconed module in degree k, by inverting
    /// chi_even(n,k) = deconed(n,k) + deconed(n,k-1).
    const ClassFunction& deconed(int n, int k);

    /// Extended S_{n+1} character of the deconed module.
    const ClassFunction& deconed_extended(int n, int k);

    /// chi(n,k) rebuilt from the extended characters one point down;
    /// must agree with the trace computation.
    ClassFunction canonical_by_recursion(int n, Parity parity, int k);

    /// Assemble a graded character. max_k < 0 means the view's full range.
    GradedCharacter graded(int n, Parity parity, View view, int max_k = -1);

    /// Multiplicity of V_lambda in each computed degree.
    std::map<int, Integer> locate_multiplicities(const Partition& lambda,
                                                 const GradedCharacter& gc);

    /// (a) odd total = regular, (b) even total = 2 Ind_{S_2}^{S_n} 1,
    /// (c) total = Ind of the (n-1) total, (d) deconed total = Ind_{S_2}^{S_n} 1.
    CheckReport verify_global_identities(int n, Parity parity);

    /// <Res_{S_{n-1}} chi(n,k), trivial> per degree: dimensions of the
    /// cohomology of the quotient by S_{n-1}.
    std::vector<Integer> invariant_dimensions(int n, Parity parity);

    /// Closed forms for degrees 1 and 2: extended and deconed-extended
    /// decompositions plus the stated S_n restrictions.
    CheckReport verify_lowdegree_theorems(int n);

private:
    ClassFunction compute_canonical(int n, Parity parity, int k);
    ClassFunction compute_extended(int n, Parity parity, int k);
    ClassFunction compute_deconed(int n, Parity parity, int k);
    ClassFunction compute_deconed_extended(int n, Parity parity, int k);
    ClassFunction compute_extended_matrices(int n, Parity parity, int k);

    int max_n_;
    std::mutex mu_;
    std::map<std::tuple<int, int, int>, ClassFunction> canonical_cache_;
    std::map<std::tuple<int, int, int>, ClassFunction> extended_cache_;
    std::map<std::tuple<int, int, int>, ClassFunction> extended_matrix_cache_;
    std::map<std::tuple<int, int, int>, ClassFunction> deconed_cache_;
    std::map<std::tuple<int, int, int>, ClassFunction> deconed_extended_cache_;
};

/// Process-wide lab with the default ceiling (shared caches).
CharacterLab& shared_lab();

}  // namespace cohomlab
