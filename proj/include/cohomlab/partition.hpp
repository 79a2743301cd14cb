#pragma once

#include <compare>
#include <string>
#include <vector>

#include "cohomlab/ints.hpp"

namespace cohomlab {

/// A partition of m: weakly decreasing positive parts. Labels both the
/// irreducible V_lambda and the conjugacy class (cycle type) of S_m.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int sum() const { return sum_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }

    /// Number of parts equal to v (v >= 1).
    int multiplicity(int v) const;

    /// Partition with one part 1 appended (cycle type of the same element
    /// seen one point up).
    Partition with_fixed_point() const;
    /// Inverse of the above; requires at least one part equal to 1.
    Partition without_fixed_point() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    std::strong_ordering operator<=>(const Partition& o) const;

    /// "[3,1,1]" — also the JSON wire form.
    std::string to_string() const;
    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
    int sum_ = 0;
};

/// All partitions of m in reverse lexicographic order, (m) first,
/// (1,...,1) last. Throws std::domain_error for m < 1.
const std::vector<Partition>& partitions_of(int m);

/// Index of lambda within partitions_of(lambda.sum()).
int partition_index(const Partition& lambda);

/// Size of the conjugacy class with cycle type lambda in S_m: m!/z_lambda.
Integer class_size(const Partition& lambda);

/// z_lambda = prod_i i^{m_i} m_i!, the centralizer order.
Integer centralizer_order(const Partition& lambda);

/// dim V_lambda by the hook length formula.
Integer irreducible_dimension(const Partition& lambda);

/// Partitions obtained from lambda by adding (resp. removing) one box.
std::vector<Partition> add_one_box(const Partition& lambda);
std::vector<Partition> remove_one_box(const Partition& lambda);

}  // namespace cohomlab
