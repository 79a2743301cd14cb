#pragma once

#include <string>
#include <vector>

#include "cohomlab/partition.hpp"

namespace cohomlab {

/// Exact-rational-valued function on the conjugacy classes of a fixed S_m,
/// stored as a vector aligned with the canonical partition order.
class ClassFunction {
public:
    explicit ClassFunction(int m);

    int group_degree() const { return m_; }
    size_t num_classes() const { return values_.size(); }

    const Rational& at(const Partition& mu) const;
    Rational& at(const Partition& mu);
    const Rational& at_index(size_t idx) const { return values_[idx]; }
    Rational& at_index(size_t idx) { return values_[idx]; }

    /// Value at the identity class (1^m).
    Rational dimension() const;

    bool is_zero() const;
    bool is_integral() const;

    ClassFunction& operator+=(const ClassFunction& o);
    ClassFunction& operator-=(const ClassFunction& o);
    ClassFunction& operator*=(const Rational& s);
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
    friend ClassFunction operator*(ClassFunction a, const Rational& s) { return a *= s; }
    bool operator==(const ClassFunction& o) const = default;

private:
    int m_ = 0;
    std::vector<Rational> values_;
};

/// (1/m!) sum_mu |C_mu| f(mu) g(mu).
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

/// Pointwise product (character of the tensor product).
ClassFunction tensor(const ClassFunction& f, const ClassFunction& g);

/// Restriction along the point stabilizer S_{m-1} < S_m: append a fixed
/// point to the cycle type.
ClassFunction restrict_character(const ClassFunction& f);

/// Induction from the point stabilizer: Ind f(mu) = m_1(mu) f(mu minus one 1).
ClassFunction induce_character(const ClassFunction& f);

/// Ind_{S_2}^{S_m} 1 for the order-2 subgroup generated by one transposition:
/// m!/2 at the identity, (m-2)! on transpositions, 0 elsewhere.
ClassFunction induce_trivial_from_transposition(int m);

enum class NamedRep { trivial, sign, standard, regular };
NamedRep named_rep_from_string(const std::string& name);

ClassFunction named_character(int m, NamedRep which);

}  // namespace cohomlab
