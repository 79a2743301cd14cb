#include "cohomlab/recursion.hpp"

#include <algorithm>
#include <sstream>

namespace cohomlab {

View view_from_string(const std::string& s) {
    if (s == "canonical") return View::canonical;
    if (s == "extended") return View::extended;
    if (s == "deconed") return View::deconed;
    if (s == "deconed-extended" || s == "deconed_extended") return View::deconed_extended;
    throw std::domain_error("unknown view: " + s);
}

const char* to_string(View v) {
    switch (v) {
        case View::canonical: return "canonical";
        case View::extended: return "extended";
        case View::deconed: return "deconed";
        case View::deconed_extended: return "deconed-extended";
    }
    return "?";
}

bool view_is_extended(View v) { return v == View::extended || v == View::deconed_extended; }

int top_degree(int n, View view) {
    switch (view) {
        case View::canonical:
        case View::extended: return n - 1;
        case View::deconed:
        case View::deconed_extended: return n - 2;
    }
    return -1;
}

namespace {

ClassFunction standard_char(int m) { return named_character(m, NamedRep::standard); }

void check_genuine(const ClassFunction& f) { decompose(f); }

}  // namespace

template <typename Compute>
static const ClassFunction& lookup(std::mutex& mu,
                                   std::map<std::tuple<int, int, int>, ClassFunction>& cache,
                                   int n, Parity parity, int k, Compute&& compute) {
    auto key = std::make_tuple(n, static_cast<int>(parity), k);
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    ClassFunction f = compute();
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::move(key), std::move(f)).first->second;
}

const ClassFunction& CharacterLab::canonical(int n, Parity parity, int k) {
    return lookup(mu_, canonical_cache_, n, parity, k,
                  [&] { return compute_canonical(n, parity, k); });
}

const ClassFunction& CharacterLab::extended(int n, Parity parity, int k) {
    return lookup(mu_, extended_cache_, n, parity, k,
                  [&] { return compute_extended(n, parity, k); });
}

const ClassFunction& CharacterLab::extended_by_matrices(int n, int k) {
    return lookup(mu_, extended_matrix_cache_, n, Parity::odd, k,
                  [&] { return compute_extended_matrices(n, Parity::odd, k); });
}

const ClassFunction& CharacterLab::deconed(int n, int k) {
    return lookup(mu_, deconed_cache_, n, Parity::even, k,
                  [&] { return compute_deconed(n, Parity::even, k); });
}

const ClassFunction& CharacterLab::deconed_extended(int n, int k) {
    return lookup(mu_, deconed_extended_cache_, n, Parity::even, k,
                  [&] { return compute_deconed_extended(n, Parity::even, k); });
}

ClassFunction CharacterLab::compute_canonical(int n, Parity parity, int k) {
    if (k < 0 || k > n - 1) return ClassFunction(n);
    return canonical_degree_character(n, k, parity, max_n_);
}

ClassFunction CharacterLab::compute_extended(int n, Parity parity, int k) {
    const int m = n + 1;
    if (k < 0 || k > n - 1) return ClassFunction(m);
    if (k == 0) return named_character(m, NamedRep::trivial);
    ClassFunction f = canonical(m, parity, k) - tensor(standard_char(m), extended(n, parity, k - 1));
    check_genuine(f);
    return f;
}

ClassFunction CharacterLab::compute_extended_matrices(int n, Parity, int k) {
    if (k < 0 || k > n - 1) return ClassFunction(n + 1);
    return extended_degree_character_matrix(n, k, max_n_);
}

ClassFunction CharacterLab::compute_deconed(int n, Parity, int k) {
    if (k < 0) return ClassFunction(n);
    if (k == 0) return named_character(n, NamedRep::trivial);
    if (k > n - 1) return ClassFunction(n);
    ClassFunction f = canonical(n, Parity::even, k) - deconed(n, k - 1);
    check_genuine(f);
    return f;
}

ClassFunction CharacterLab::compute_deconed_extended(int n, Parity, int k) {
    const int m = n + 1;
    if (k < 0 || k > n - 2) return ClassFunction(m);
    if (k == 0) return named_character(m, NamedRep::trivial);
    ClassFunction f = deconed(m, k) - tensor(standard_char(m), deconed_extended(n, k - 1));
    check_genuine(f);
    return f;
}

ClassFunction CharacterLab::canonical_by_recursion(int n, Parity parity, int k) {
    if (n < 2) throw std::domain_error("recursion needs n >= 2");
    ClassFunction f = extended(n - 1, parity, k);
    f += tensor(standard_char(n), extended(n - 1, parity, k - 1));
    return f;
}

GradedCharacter CharacterLab::graded(int n, Parity parity, View view, int max_k) {
    GradedCharacter gc;
    gc.n = n;
    gc.view = view;
    gc.parity = (view == View::deconed || view == View::deconed_extended) ? Parity::even : parity;
    gc.group_degree = view_is_extended(view) ? n + 1 : n;
    int top = top_degree(n, view);
    gc.max_degree = (max_k < 0) ? top : std::min(max_k, top);
    for (int k = 0; k <= gc.max_degree; ++k) {
        switch (view) {
            case View::canonical: gc.degrees.emplace(k, canonical(n, gc.parity, k)); break;
            case View::extended: gc.degrees.emplace(k, extended(n, gc.parity, k)); break;
            case View::deconed: gc.degrees.emplace(k, deconed(n, k)); break;
            case View::deconed_extended: gc.degrees.emplace(k, deconed_extended(n, k)); break;
        }
    }
    return gc;
}

std::map<int, Integer> CharacterLab::locate_multiplicities(const Partition& lambda,
                                                           const GradedCharacter& gc) {
    if (lambda.sum() != gc.group_degree)
        throw std::domain_error("partition size does not match the acting group");
    ClassFunction chi = CharacterTable::get(gc.group_degree).irreducible(lambda);
    std::map<int, Integer> out;
    for (const auto& [k, f] : gc.degrees) {
        Rational mult = inner_product(f, chi);
        if (!is_integral(mult))
            throw NotGenuineCharacterError(lambda, "non-integral multiplicity in degree " +
                                                       std::to_string(k));
        out[k] = to_integer(mult);
    }
    return out;
}

CheckReport CharacterLab::verify_global_identities(int n, Parity parity) {
    CheckReport report;
    const std::string ns = std::to_string(n);

    ClassFunction total(n);
    for (int k = 0; k <= n - 1; ++k) total += canonical(n, parity, k);

    if (parity == Parity::odd) {
        report.add("total character = regular (n=" + ns + ", odd)",
                   total == named_character(n, NamedRep::regular));
    } else {
        ClassFunction twice_ind = induce_trivial_from_transposition(n) * Rational(2);
        report.add("total character = 2 Ind_{S_2} 1 (n=" + ns + ", even)", total == twice_ind);

        ClassFunction deconed_total(n);
        for (int k = 0; k <= n - 2; ++k) deconed_total += deconed(n, k);
        report.add("deconed total = Ind_{S_2} 1 (n=" + ns + ")",
                   deconed_total == induce_trivial_from_transposition(n));
    }

    if (n >= 2) {
        ClassFunction prev_total(n - 1);
        for (int k = 0; k <= n - 2; ++k) prev_total += canonical(n - 1, parity, k);
        report.add(std::string("total = Ind of (n-1) total (n=") + ns + ", " + to_string(parity) + ")",
                   total == induce_character(prev_total));
    }
    return report;
}

std::vector<Integer> CharacterLab::invariant_dimensions(int n, Parity parity) {
    std::vector<Integer> dims;
    ClassFunction triv = named_character(n - 1, NamedRep::trivial);
    for (int k = 0; k <= n - 1; ++k) {
        Rational ip = inner_product(restrict_character(canonical(n, parity, k)), triv);
        dims.push_back(to_integer(ip));
    }
    return dims;
}

namespace {

// Build an expected decomposition from (parts, multiplicity) templates,
// dropping terms whose part lists are not valid partitions (the closed
// forms shed exactly those terms at the small-n boundary).
std::vector<IrreducibleMultiplicity> expected_terms(
    const std::vector<std::pair<std::vector<int>, int>>& entries) {
    std::vector<IrreducibleMultiplicity> out;
    for (const auto& [parts, mult] : entries) {
        bool valid = !parts.empty();
        for (size_t i = 0; i < parts.size() && valid; ++i) {
            if (parts[i] < 1) valid = false;
            if (i > 0 && parts[i] > parts[i - 1]) valid = false;
        }
        if (valid) out.push_back({Partition(parts), Integer(mult)});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.lambda < b.lambda; });
    return out;
}

bool same_decomposition(const std::vector<IrreducibleMultiplicity>& a,
                        const std::vector<IrreducibleMultiplicity>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i].lambda == b[i].lambda) || a[i].multiplicity != b[i].multiplicity) return false;
    return true;
}

std::string render_decomposition(const std::vector<IrreducibleMultiplicity>& d) {
    std::ostringstream os;
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) os << " + ";
        if (d[i].multiplicity != 1) os << d[i].multiplicity << "*";
        os << d[i].lambda.to_string();
    }
    return os.str();
}

}  // namespace

CheckReport CharacterLab::verify_lowdegree_theorems(int n) {
    CheckReport report;
    const std::string ns = std::to_string(n);
    auto check = [&](const std::string& name, const ClassFunction& actual,
                     const std::vector<std::pair<std::vector<int>, int>>& expected) {
        auto got = decompose(actual);
        auto want = expected_terms(expected);
        bool ok = same_decomposition(got, want);
        report.add(name, ok, ok ? "" : "got " + render_decomposition(got) + ", want " +
                                           render_decomposition(want));
    };

    if (n >= 2)
        check("odd extended degree 1 = (n-1,1,1) (n=" + ns + ")", extended(n, Parity::odd, 1),
              {{{n - 1, 1, 1}, 1}});
    if (n >= 5)
        check("odd extended degree 2 (n=" + ns + ")", extended(n, Parity::odd, 2),
              {{{n - 3, 1, 1, 1, 1}, 1}, {{n - 2, 2, 1}, 1}, {{n - 3, 2, 2}, 1}, {{n - 1, 2}, 1}});
    if (n >= 3)
        check("deconed extended degree 1 = (n-1,2) (n=" + ns + ")", deconed_extended(n, 1),
              {{{n - 1, 2}, 1}});
    if (n >= 6)
        check("deconed extended degree 2 (n=" + ns + ")", deconed_extended(n, 2),
              {{{n - 1, 1, 1}, 1}, {{n - 3, 3, 1}, 1}, {{n - 2, 2, 1}, 1}});

    // Stated S_n restrictions.
    if (n >= 3)
        check("odd canonical degree 1 (n=" + ns + ")", canonical(n, Parity::odd, 1),
              {{{n - 1, 1}, 1}, {{n - 2, 1, 1}, 1}});
    if (n >= 3)
        check("deconed degree 1 (n=" + ns + ")", deconed(n, 1),
              {{{n - 1, 1}, 1}, {{n - 2, 2}, 1}});
    if (n >= 6)
        check("odd canonical degree 2 (n=" + ns + ")", canonical(n, Parity::odd, 2),
              {{{n - 4, 1, 1, 1, 1}, 1},
               {{n - 3, 1, 1, 1}, 1},
               {{n - 3, 2, 1}, 2},
               {{n - 2, 1, 1}, 1},
               {{n - 2, 2}, 2},
               {{n - 4, 2, 2}, 1},
               {{n - 1, 1}, 1}});
    if (n >= 7)
        check("deconed degree 2 (n=" + ns + ")", deconed(n, 2),
              {{{n - 1, 1}, 1},
               {{n - 2, 1, 1}, 2},
               {{n - 3, 3}, 1},
               {{n - 3, 2, 1}, 2},
               {{n - 4, 3, 1}, 1},
               {{n - 2, 2}, 1}});
    return report;
}

CharacterLab& shared_lab() {
    static CharacterLab lab;
    return lab;
}

}  // namespace cohomlab
