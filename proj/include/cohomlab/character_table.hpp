#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "cohomlab/classfunc.hpp"

namespace cohomlab {

/// S_m character tables above this size are refused unless the caller raises
/// the guard explicitly (S_9 covers the extended action at n = 8).
inline constexpr int kDefaultMaxCharacterTableM = 9;

class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a class function fails the integrality/nonnegativity test of
/// a genuine character; carries the offending highest-weight label. The
/// recursion engine treats this error as a correctness probe.
class NotGenuineCharacterError : public std::runtime_error {
public:
    NotGenuineCharacterError(Partition offender, const std::string& what)
        : std::runtime_error(what), offender_(std::move(offender)) {}
    const Partition& offender() const { return offender_; }

private:
    Partition offender_;
};

/// Full table of irreducible characters of S_m, rows and columns in the
/// canonical partition order (Murnaghan-Nakayama, exact integers).
class CharacterTable {
public:
    /// Cached, thread-safe accessor.
    static const CharacterTable& get(int m, int max_m = kDefaultMaxCharacterTableM);

    int group_degree() const { return m_; }
    const Integer& value(const Partition& lambda, const Partition& mu) const;
    const Integer& value_by_index(size_t li, size_t mi) const { return chi_[li][mi]; }
    ClassFunction irreducible(const Partition& lambda) const;

    /// Serialized rows in canonical order, for the on-disk cache.
    const std::vector<std::vector<Integer>>& rows() const { return chi_; }

    explicit CharacterTable(int m);  // direct construction (cache bypass)
    CharacterTable(int m, std::vector<std::vector<Integer>> rows);  // from cache

private:
    int m_;
    std::vector<std::vector<Integer>> chi_;
};

struct IrreducibleMultiplicity {
    Partition lambda;
    Integer multiplicity;
};

struct DecomposeResult {
    bool genuine = false;
    Partition offender;  // set when !genuine
    std::vector<IrreducibleMultiplicity> parts;  // zero entries omitted
};

/// Multiplicities <f, chi^lambda>; never throws on non-characters.
DecomposeResult try_decompose(const ClassFunction& f);

/// As try_decompose but throws NotGenuineCharacterError on failure.
std::vector<IrreducibleMultiplicity> decompose(const ClassFunction& f);

/// Rebuild sum m_lambda chi^lambda as a class function.
ClassFunction reconstruct(int m, const std::vector<IrreducibleMultiplicity>& parts);

/// Seed the in-process table cache (used by the on-disk cache loader).
void adopt_character_table(CharacterTable table);

}  // namespace cohomlab
