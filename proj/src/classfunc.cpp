#include "cohomlab/classfunc.hpp"

#include <stdexcept>

namespace cohomlab {

ClassFunction::ClassFunction(int m) : m_(m) {
    values_.resize(partitions_of(m).size());
}

const Rational& ClassFunction::at(const Partition& mu) const {
    if (mu.sum() != m_) throw std::domain_error("cycle type belongs to a different S_m");
    return values_[static_cast<size_t>(partition_index(mu))];
}

Rational& ClassFunction::at(const Partition& mu) {
    if (mu.sum() != m_) throw std::domain_error("cycle type belongs to a different S_m");
    return values_[static_cast<size_t>(partition_index(mu))];
}

Rational ClassFunction::dimension() const {
    return values_.back();  // (1,...,1) is last in reverse-lex order
}

bool ClassFunction::is_zero() const {
    for (const auto& v : values_)
        if (v != 0) return false;
    return true;
}

bool ClassFunction::is_integral() const {
    for (const auto& v : values_)
        if (!cohomlab::is_integral(v)) return false;
    return true;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
    if (m_ != o.m_) throw std::domain_error("class functions over different groups");
    for (size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
    if (m_ != o.m_) throw std::domain_error("class functions over different groups");
    for (size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& s) {
    for (auto& v : values_) v *= s;
    return *this;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
    if (f.group_degree() != g.group_degree())
        throw std::domain_error("class functions over different groups");
    const int m = f.group_degree();
    const auto& classes = partitions_of(m);
    Rational acc = 0;
    for (size_t i = 0; i < classes.size(); ++i)
        acc += Rational(class_size(classes[i])) * f.at_index(i) * g.at_index(i);
    return acc / Rational(factorial(m));
}

ClassFunction tensor(const ClassFunction& f, const ClassFunction& g) {
    if (f.group_degree() != g.group_degree())
        throw std::domain_error("class functions over different groups");
    ClassFunction out(f.group_degree());
    for (size_t i = 0; i < out.num_classes(); ++i)
        out.at_index(i) = f.at_index(i) * g.at_index(i);
    return out;
}

ClassFunction restrict_character(const ClassFunction& f) {
    const int m = f.group_degree();
    if (m < 2) throw std::domain_error("cannot restrict below S_1");
    ClassFunction out(m - 1);
    for (const auto& mu : partitions_of(m - 1))
        out.at(mu) = f.at(mu.with_fixed_point());
    return out;
}

ClassFunction induce_character(const ClassFunction& f) {
    const int m = f.group_degree() + 1;
    ClassFunction out(m);
    for (const auto& mu : partitions_of(m)) {
        int fixed = mu.multiplicity(1);
        if (fixed == 0) continue;
        out.at(mu) = Rational(fixed) * f.at(mu.without_fixed_point());
    }
    return out;
}

ClassFunction induce_trivial_from_transposition(int m) {
    if (m < 2) throw std::domain_error("requires m >= 2");
    ClassFunction out(m);
    for (const auto& mu : partitions_of(m)) {
        if (mu.multiplicity(1) == m) {
            out.at(mu) = Rational(factorial(m)) / 2;
        } else if (mu.multiplicity(2) == 1 && mu.multiplicity(1) == m - 2) {
            out.at(mu) = Rational(factorial(m - 2));
        }
    }
    return out;
}

NamedRep named_rep_from_string(const std::string& name) {
    if (name == "trivial") return NamedRep::trivial;
    if (name == "sign") return NamedRep::sign;
    if (name == "standard") return NamedRep::standard;
    if (name == "regular") return NamedRep::regular;
    throw std::domain_error("unknown named representation: " + name);
}

ClassFunction named_character(int m, NamedRep which) {
    if (m < 1) throw std::domain_error("named_character requires m >= 1");
    if (which == NamedRep::standard && m < 2)
        throw std::domain_error("standard representation requires m >= 2");
    ClassFunction out(m);
    const auto& classes = partitions_of(m);
    for (size_t i = 0; i < classes.size(); ++i) {
        const Partition& mu = classes[i];
        switch (which) {
            case NamedRep::trivial: out.at_index(i) = 1; break;
            case NamedRep::sign:
                out.at_index(i) = ((m - mu.num_parts()) % 2 == 0) ? 1 : -1;
                break;
            case NamedRep::standard: out.at_index(i) = mu.multiplicity(1) - 1; break;
            case NamedRep::regular:
                out.at_index(i) = (mu.multiplicity(1) == m) ? Rational(factorial(m)) : Rational(0);
                break;
        }
    }
    return out;
}

}  // namespace cohomlab
