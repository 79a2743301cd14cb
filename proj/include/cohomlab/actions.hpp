#pragma once

#include <map>
#include <stdexcept>

#include "cohomlab/algebra.hpp"
#include "cohomlab/classfunc.hpp"
#include "cohomlab/permutation.hpp"
#include "cohomlab/report.hpp"

namespace cohomlab {

/// Full trace suites above this n are refused by default (n! growth).
inline constexpr int kDefaultMaxPointsForCharacters = 8;

class UnsupportedActionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// sigma A_{i,j} = A_{sigma i, sigma j}, extended as an algebra map; sigma
/// must act on {1..n}.
AlgebraElement act_permutation(const Permutation& sigma, const AlgebraElement& x);

/// The transposition (0,1) of the extended ground set {0..n}, parity odd:
///   (0,1) A_{1,j} = -A_{1,j}
///   (0,1) A_{i,j} = A_{i,j} - A_{1,j} + A_{1,i}   (1 < i < j)
/// extended multiplicatively. Even parity has no such formula and errors.
AlgebraElement act_s0(const AlgebraElement& x);

/// Action of g on {0..n} (parity odd) through the Coxeter factorization
/// g = s_{w_0} o ... o s_{w_r}; only s_0 needs the special formulas.
AlgebraElement act_extended(const Permutation& g, const AlgebraElement& x);

enum class ActionView { canonical, extended };

/// Matrix of a group element on one graded piece, columns indexed by
/// admissible_basis(n,k). Columns are stored sparsely; to_dense() serves
/// export and inspection.
class ActionMatrix {
public:
    ActionMatrix(int n, int k, Parity parity, ActionView view);
    static ActionMatrix identity(int n, int k, Parity parity, ActionView view);

    int n() const { return n_; }
    int k() const { return k_; }
    int dim() const { return dim_; }
    Parity parity() const { return parity_; }
    ActionView view() const { return view_; }

    std::map<int, Integer>& col(int c) { return cols_[static_cast<size_t>(c)]; }
    const std::map<int, Integer>& col(int c) const { return cols_[static_cast<size_t>(c)]; }

    Integer trace() const;
    ActionMatrix operator*(const ActionMatrix& o) const;
    bool operator==(const ActionMatrix& o) const;

    std::vector<std::vector<Integer>> to_dense() const;

private:
    int n_, k_, dim_;
    Parity parity_;
    ActionView view_;
    std::vector<std::map<int, Integer>> cols_;
};

/// Coordinates of x (homogeneous of degree k) in the admissible basis.
std::map<int, Integer> coordinates(const AlgebraElement& x, int k);

/// Matrix of g on the degree-k piece. Ground set {1..n} gives the canonical
/// action; {0..n} the extended one (parity odd only).
ActionMatrix action_matrix(const Permutation& g, int n, int k, Parity parity);

/// Trace of one class representative per cycle type: the character of the
/// canonical action on the degree-k piece.
ClassFunction canonical_degree_character(int n, int k, Parity parity,
                                         int max_n = kDefaultMaxPointsForCharacters);

/// Character of the extended S_{n+1} action on the degree-k piece, computed
/// from action matrices (parity odd only).
ClassFunction extended_degree_character_matrix(int n, int k,
                                               int max_n = kDefaultMaxPointsForCharacters);

/// The signed sum over S_n of products of disjoint-pair generators; the
/// explicit generator of the sign isotypic component at k = floor(n/2)
/// (parity odd). Normal-formed, with coefficients +-(k! 2^k).
AlgebraElement antisymmetrizer(int n, Parity parity = Parity::odd);

/// Structural checks of the extended action: s_0 involution on degree one,
/// braid and commutation matrix identities on every graded piece, and
/// invariance of the relation ideal under (0,1) split into the three index
/// cases. Parity even runs the same checks as an experimental probe.
CheckReport verify_extended_relations(int n, Parity parity = Parity::odd);

}  // namespace cohomlab
