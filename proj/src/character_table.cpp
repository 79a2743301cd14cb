#include "cohomlab/character_table.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace cohomlab {

namespace {

using MnKey = std::pair<std::vector<int>, size_t>;

// Murnaghan-Nakayama: chi^lambda(mu) = sum over border strips of length
// mu[idx] removable from lambda of (-1)^height chi^{lambda'}(mu[idx+1..]).
// Strips are enumerated through the beta-set (first-column hook lengths).
Integer mn_value(const std::vector<int>& lam, const std::vector<int>& mu, size_t idx,
                 std::map<MnKey, Integer>& memo) {
    if (idx == mu.size()) return 1;  // sums match, so lam is exhausted too
    MnKey key{lam, idx};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int t = mu[idx];
    const int L = static_cast<int>(lam.size());
    std::vector<int> beta(static_cast<size_t>(L));
    for (int i = 0; i < L; ++i) beta[static_cast<size_t>(i)] = lam[static_cast<size_t>(i)] + (L - 1 - i);

    Integer total = 0;
    for (int i = 0; i < L; ++i) {
        const int b = beta[static_cast<size_t>(i)];
        const int nb = b - t;
        if (nb < 0) continue;
        if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
        int height = 0;
        for (int v : beta)
            if (v > nb && v < b) ++height;
        std::vector<int> nbeta = beta;
        nbeta[static_cast<size_t>(i)] = nb;
        std::sort(nbeta.rbegin(), nbeta.rend());
        std::vector<int> nlam;
        for (int j = 0; j < L; ++j) {
            int part = nbeta[static_cast<size_t>(j)] - (L - 1 - j);
            if (part > 0) nlam.push_back(part);
        }
        Integer sub = mn_value(nlam, mu, idx + 1, memo);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

std::mutex g_table_mutex;
std::map<int, CharacterTable> g_table_cache;

}  // namespace

CharacterTable::CharacterTable(int m) : m_(m) {
    const auto& classes = partitions_of(m);
    chi_.resize(classes.size());
    for (size_t li = 0; li < classes.size(); ++li) {
        chi_[li].resize(classes.size());
        for (size_t mi = 0; mi < classes.size(); ++mi) {
            std::map<MnKey, Integer> memo;  // valid for one mu only: keys omit it
            chi_[li][mi] = mn_value(classes[li].parts(), classes[mi].parts(), 0, memo);
        }
    }
}

CharacterTable::CharacterTable(int m, std::vector<std::vector<Integer>> rows)
    : m_(m), chi_(std::move(rows)) {
    const size_t nc = partitions_of(m).size();
    if (chi_.size() != nc) throw std::domain_error("character table has wrong row count");
    for (const auto& row : chi_)
        if (row.size() != nc) throw std::domain_error("character table has wrong column count");
}

const CharacterTable& CharacterTable::get(int m, int max_m) {
    if (m < 1) throw std::domain_error("character table requires m >= 1");
    if (m > max_m) {
        std::ostringstream os;
        os << "character table for S_" << m << " exceeds the configured maximum " << max_m;
        throw ResourceLimitError(os.str());
    }
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto it = g_table_cache.find(m);
    if (it == g_table_cache.end()) it = g_table_cache.emplace(m, CharacterTable(m)).first;
    return it->second;
}

void adopt_character_table(CharacterTable table) {
    // Reject rows whose identity column disagrees with the hook length
    // formula; a corrupt cache is recomputed, never trusted.
    const auto& classes = partitions_of(table.group_degree());
    const size_t id_col = classes.size() - 1;
    for (size_t li = 0; li < classes.size(); ++li)
        if (table.value_by_index(li, id_col) != irreducible_dimension(classes[li])) return;
    std::lock_guard<std::mutex> lock(g_table_mutex);
    g_table_cache.emplace(table.group_degree(), std::move(table));
}

const Integer& CharacterTable::value(const Partition& lambda, const Partition& mu) const {
    return chi_[static_cast<size_t>(partition_index(lambda))]
               [static_cast<size_t>(partition_index(mu))];
}

ClassFunction CharacterTable::irreducible(const Partition& lambda) const {
    ClassFunction f(m_);
    const auto& row = chi_[static_cast<size_t>(partition_index(lambda))];
    for (size_t i = 0; i < row.size(); ++i) f.at_index(i) = Rational(row[i]);
    return f;
}

DecomposeResult try_decompose(const ClassFunction& f) {
    const int m = f.group_degree();
    const auto& table = CharacterTable::get(m);
    const auto& classes = partitions_of(m);
    const Integer mfact = factorial(m);
    DecomposeResult out;
    out.genuine = true;
    for (size_t li = 0; li < classes.size(); ++li) {
        Rational acc = 0;
        for (size_t mi = 0; mi < classes.size(); ++mi)
            acc += Rational(class_size(classes[mi])) * f.at_index(mi) *
                   Rational(table.value_by_index(li, mi));
        acc /= Rational(mfact);
        if (!is_integral(acc) || acc < 0) {
            out.genuine = false;
            out.offender = classes[li];
            out.parts.clear();
            return out;
        }
        if (acc != 0) out.parts.push_back({classes[li], to_integer(acc)});
    }
    return out;
}

std::vector<IrreducibleMultiplicity> decompose(const ClassFunction& f) {
    DecomposeResult r = try_decompose(f);
    if (!r.genuine)
        throw NotGenuineCharacterError(
            r.offender, "not a genuine character: multiplicity of " + r.offender.to_string() +
                            " is negative or non-integral");
    return std::move(r.parts);
}

ClassFunction reconstruct(int m, const std::vector<IrreducibleMultiplicity>& parts) {
    const auto& table = CharacterTable::get(m);
    ClassFunction f(m);
    for (const auto& p : parts) {
        const auto& row = table.rows()[static_cast<size_t>(partition_index(p.lambda))];
        for (size_t i = 0; i < row.size(); ++i) f.at_index(i) += Rational(p.multiplicity * row[i]);
    }
    return f;
}

}  // namespace cohomlab
