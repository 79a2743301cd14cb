#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cohomlab/ints.hpp"

namespace cohomlab {

/// The algebra depends on d only through its parity: even d behaves like the
/// d = 2 presentation (symmetric generators, anticommuting), odd d gives
/// antisymmetric generators that commute. Internal degrees are the integers
/// k; callers multiply by (d-1) at presentation time.
enum class Parity { even, odd };

Parity parity_from_string(const std::string& s);
const char* to_string(Parity p);

/// Hard ceiling on the number of points the packed monomial storage admits.
inline constexpr int kMaxPoints = 12;

struct CanonicalGen {
    bool zero = false;
    int i = 0, j = 0;  // canonical: i < j
    int sign = 1;
};

/// Canonical form of A_{i,j}: A_{i,i} = 0, and A_{j,i} folds into A_{i,j}
/// with a sign for odd parity (antisymmetric) and no sign for even.
CanonicalGen canonical_generator(int i, int j, int n, Parity parity);

/// Product of canonical generators with strictly increasing top indices;
/// the basis elements of the graded pieces. Factors are packed two indices
/// per byte, so copies and comparisons stay cheap on hot paths.
class Monomial {
public:
    Monomial() = default;

    int degree() const { return len_; }
    int bottom(int h) const { return f_[static_cast<size_t>(h)] >> 4; }
    int top(int h) const { return f_[static_cast<size_t>(h)] & 0xf; }

    /// Append a factor; callers must keep tops strictly increasing.
    void push_factor(int i, int j);
    void pop_factor() { f_[--len_] = 0; }

    bool is_admissible_for(int n) const;
    std::vector<std::pair<int, int>> factors() const;

    /// "A[1,2]A[2,3]", or "1" for the unit.
    std::string text() const;

    bool operator==(const Monomial& o) const = default;
    std::strong_ordering operator<=>(const Monomial& o) const;

private:
    std::uint8_t len_ = 0;
    std::array<std::uint8_t, kMaxPoints> f_{};
};

/// Finite integer combination of admissible monomials with fixed ambient
/// data; the working representation of elements of the cohomology algebra.
class AlgebraElement {
public:
    AlgebraElement(int n, Parity parity) : n_(n), parity_(parity) {}
    static AlgebraElement unit(int n, Parity parity);
    /// Canonicalized single generator (zero when i = j).
    static AlgebraElement generator(int n, Parity parity, int i, int j);

    int points() const { return n_; }
    Parity parity() const { return parity_; }
    const std::map<Monomial, Integer>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// True when every stored monomial has the same degree; degree_out is set
    /// to it (0 for the zero element).
    bool is_homogeneous(int* degree_out = nullptr) const;

    void add_term(const Monomial& mono, const Integer& coeff);
    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& operator*=(const Integer& scalar);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    bool operator==(const AlgebraElement& o) const = default;

    /// Right-multiply by the canonical generator A_{a,c} and straighten onto
    /// the admissible basis.
    AlgebraElement times_generator(int a, int c) const;

    /// Signed integer-coefficient sum, e.g. "8*A[1,2]A[3,4] - 8*A[1,3]A[2,4]".
    std::string text() const;

private:
    int n_;
    Parity parity_;
    std::map<Monomial, Integer> terms_;
};

/// Presentation form of a monomial: factors sorted by (bottom, top), with
/// the sign of the reordering (relevant for even parity, where degree-(d-1)
/// factors anticommute). Storage stays in admissible top-sorted order.
std::pair<std::vector<std::pair<int, int>>, int> display_factors(const Monomial& m, Parity parity);

/// Bilinear product; distributes, concatenates factor words, straightens.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

/// Image of a free word in the quotient algebra: an integer combination of
/// admissible monomials. Indices may appear in any order, including i >= j.
AlgebraElement normal_form(const std::vector<std::pair<int, int>>& word, int n, Parity parity);

/// All admissible monomials of degree k on n points, in the fixed
/// lexicographic order ((j_1,i_1,j_2,i_2,...) keys). Cached per (n,k).
const std::vector<Monomial>& admissible_basis(int n, int k);

/// Position of an admissible monomial within admissible_basis(n, k).
int basis_index(int n, const Monomial& mono);

/// e_k(1,...,n-1) computed by expanding prod_{i=1}^{n-1}(1 + i t),
/// independent of the basis enumeration. Out-of-range k gives 0.
Integer graded_dimension(int n, int k);

/// Partition of {1..n} into the connected components of the monomial's index
/// graph, as a canonical label array (entry v-1 holds the least vertex of the
/// block containing v). Straightening never leaves this flat.
std::array<std::uint8_t, kMaxPoints> flat_partition(const Monomial& mono, int n);

}  // namespace cohomlab
