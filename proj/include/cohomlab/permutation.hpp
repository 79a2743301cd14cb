#pragma once

#include <random>
#include <vector>

#include "cohomlab/partition.hpp"

namespace cohomlab {

/// A bijection of an explicit integer interval. The canonical S_n lives on
/// {1..n}; the extended S_{n+1} lives on {0..n}, so point 0 is first-class.
class Permutation {
public:
    Permutation() = default;
    Permutation(int lo, std::vector<int> images);

    static Permutation identity(int lo, int hi);
    static Permutation transposition(int lo, int hi, int a, int b);
    /// Cycles given as point lists; points not mentioned are fixed.
    static Permutation from_cycles(int lo, int hi, const std::vector<std::vector<int>>& cycles);
    static Permutation random(int lo, int hi, std::mt19937_64& rng);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(images_.size()) - 1; }
    int ground_size() const { return static_cast<int>(images_.size()); }

    int operator()(int x) const { return images_[static_cast<size_t>(x - lo_)]; }

    /// (this o other)(x) = this(other(x)).
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;
    bool is_identity() const;

    bool operator==(const Permutation& o) const = default;

private:
    int lo_ = 1;
    std::vector<int> images_;
};

/// Cycle lengths sorted decreasing, fixed points included as parts 1.
Partition cycle_type(const Permutation& p);

/// Indices w such that p = s_{w[0]} o s_{w[1]} o ... o s_{w[r-1]} with
/// s_j = (j, j+1); the rightmost letter acts first. Not necessarily reduced.
std::vector<int> coxeter_word(const Permutation& p);

/// Canonical class representative: cycles on consecutive points starting at
/// lo, largest cycle first.
Permutation class_representative(int lo, const Partition& type);

}  // namespace cohomlab
