#include "cohomlab/suites.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "cohomlab/json_io.hpp"
#include "golden_data.hpp"

namespace cohomlab {

namespace {

std::string fmt_decomposition(const std::vector<IrreducibleMultiplicity>& d) {
    std::ostringstream os;
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) os << " + ";
        if (d[i].multiplicity != 1) os << d[i].multiplicity << "*";
        os << d[i].lambda.to_string();
    }
    return os.str();
}

}  // namespace

CheckReport suite_tables(CharacterLab& lab, int max_n) {
    CheckReport report;
    json doc = json::parse(detail::kGoldenTablesJson);
    for (const auto& entry : doc.at("tables")) {
        const int n = entry.at("n").get<int>();
        if (n > max_n) continue;
        const std::string space = entry.at("space").get<std::string>();
        const std::string view_name = entry.at("view").get<std::string>();
        Parity parity = Parity::even;
        std::string label = space + " n=" + std::to_string(n) + " " + view_name;
        View view;
        if (space == "deconed") {
            view = view_name == "extended" ? View::deconed_extended : View::deconed;
        } else {
            parity = parity_from_string(entry.at("parity").get<std::string>());
            view = view_name == "extended" ? View::extended : View::canonical;
            label += std::string(" (") + to_string(parity) + ")";
        }
        GradedCharacter gc = lab.graded(n, parity, view);
        for (const auto& row : entry.at("degrees")) {
            const int k = row.at("k").get<int>();
            std::vector<IrreducibleMultiplicity> want;
            for (const auto& pair : row.at("irreducibles"))
                want.push_back({partition_from_json(pair.at(0)), integer_from_json(pair.at(1))});
            std::sort(want.begin(), want.end(),
                      [](const auto& a, const auto& b) { return a.lambda < b.lambda; });
            auto got = decompose(gc.at(k));
            bool ok = got.size() == want.size();
            for (size_t i = 0; ok && i < got.size(); ++i)
                ok = got[i].lambda == want[i].lambda && got[i].multiplicity == want[i].multiplicity;
            report.add("table " + label + " k=" + std::to_string(k), ok,
                       ok ? "" : "got " + fmt_decomposition(got) + ", want " + fmt_decomposition(want));
        }
    }
    return report;
}

CheckReport suite_global(CharacterLab& lab, int max_n) {
    CheckReport report;
    for (int n = 2; n <= max_n; ++n) report.merge(lab.verify_global_identities(n, Parity::odd));
    for (int n = 3; n <= max_n; ++n) report.merge(lab.verify_global_identities(n, Parity::even));

    // Character-engine self-tests.
    const int m_cap = std::min(8, kDefaultMaxCharacterTableM);
    {
        bool ok = true;
        for (int m = 1; m <= m_cap && ok; ++m) {
            const auto& classes = partitions_of(m);
            const auto& table = CharacterTable::get(m);
            for (size_t a = 0; a < classes.size() && ok; ++a)
                for (size_t b = a; b < classes.size() && ok; ++b) {
                    Rational ip = inner_product(table.irreducible(classes[a]),
                                                table.irreducible(classes[b]));
                    ok = (a == b) ? (ip == 1) : (ip == 0);
                }
        }
        report.add("irreducible characters orthonormal (m<=8)", ok);
    }
    {
        bool ok = true;
        for (int m = 2; m <= std::min(6, m_cap) && ok; ++m) {
            const auto& classes = partitions_of(m);
            const auto& table = CharacterTable::get(m);
            for (size_t mi = 0; mi < classes.size() && ok; ++mi) {
                Integer acc = 0;
                for (size_t li = 0; li < classes.size(); ++li) {
                    const Integer& v = table.value_by_index(li, mi);
                    acc += v * v;
                }
                ok = acc * class_size(classes[mi]) == factorial(m);
            }
        }
        report.add("column orthogonality (m<=6)", ok);
    }
    {
        bool ok = true;
        std::mt19937_64 rng(20240811);
        for (int m = 3; m <= m_cap && ok; ++m) {
            for (int trial = 0; trial < 3 && ok; ++trial) {
                auto random_char = [&](int mm) {
                    ClassFunction f(mm);
                    const auto& classes = partitions_of(mm);
                    const auto& table = CharacterTable::get(mm);
                    for (const auto& lam : classes) {
                        int mult = static_cast<int>(rng() % 3);
                        if (mult == 0) continue;
                        ClassFunction chi = table.irreducible(lam);
                        chi *= Rational(mult);
                        f += chi;
                    }
                    return f;
                };
                ClassFunction f = random_char(m - 1);
                ClassFunction g = random_char(m);
                ok = inner_product(induce_character(f), g) == inner_product(f, restrict_character(g));
            }
        }
        report.add("Frobenius reciprocity on random characters (m<=8)", ok);
    }
    {
        bool ok = true;
        for (int m = 2; m <= m_cap && ok; ++m) {
            const auto& table = CharacterTable::get(m);
            for (const auto& lam : partitions_of(m)) {
                auto up = decompose(induce_character(table.irreducible(lam)));
                auto up_boxes = add_one_box(lam);
                ok = ok && up.size() == up_boxes.size();
                for (size_t i = 0; ok && i < up.size(); ++i)
                    ok = up[i].lambda == up_boxes[i] && up[i].multiplicity == 1;
                if (m >= 2) {
                    auto down = decompose(restrict_character(table.irreducible(lam)));
                    auto down_boxes = remove_one_box(lam);
                    ok = ok && down.size() == down_boxes.size();
                    for (size_t i = 0; ok && i < down.size(); ++i)
                        ok = down[i].lambda == down_boxes[i] && down[i].multiplicity == 1;
                }
                if (!ok) break;
            }
        }
        report.add("one-box branching matches induce/restrict (m<=8)", ok);
    }
    {
        bool ok = true;
        for (int m = 2; m <= m_cap && ok; ++m) {
            ClassFunction lhs = named_character(m, NamedRep::standard);
            ClassFunction rhs =
                induce_character(named_character(m - 1, NamedRep::trivial)) -
                named_character(m, NamedRep::trivial);
            ok = lhs == rhs;
        }
        report.add("standard = Ind(trivial) - trivial (m<=8)", ok);
    }

    // Deconing bookkeeping: the degree past the top collapses to zero, the
    // extended recursion closes at its own top degree, and the identity-class
    // values follow prod_{i=2}^{n-1} (1 + i t).
    for (int n = 3; n <= max_n; ++n) {
        bool ok = lab.deconed(n, n - 1).is_zero();
        std::vector<Integer> co{1};
        for (int i = 2; i <= n - 1; ++i) {
            co.push_back(0);
            for (size_t d = co.size() - 1; d >= 1; --d) co[d] += Integer(i) * co[d - 1];
        }
        for (int k = 0; k <= n - 2 && ok; ++k)
            ok = lab.deconed(n, k).dimension() == Rational(co[static_cast<size_t>(k)]);
        report.add("deconed dimensions and top-degree collapse (n=" + std::to_string(n) + ")", ok);
    }
    for (int n = 3; n <= max_n - 1; ++n) {
        ClassFunction tail = lab.deconed(n + 1, n - 1) -
                             tensor(named_character(n + 1, NamedRep::standard),
                                    lab.deconed_extended(n, n - 2));
        report.add("deconed extended recursion closes at the top (n=" + std::to_string(n) + ")",
                   tail.is_zero());
    }
    return report;
}

CheckReport suite_extended(CharacterLab& lab, int max_n) {
    CheckReport report;

    for (int n = 3; n <= std::min(6, max_n); ++n) report.merge(verify_extended_relations(n));

    // chi(n,k) = ext(n-1,k) + p_n ext(n-1,k-1), trace route on the left.
    for (Parity parity : {Parity::odd, Parity::even}) {
        for (int n = 3; n <= max_n; ++n) {
            bool ok = true;
            for (int k = 0; k <= n - 1 && ok; ++k)
                ok = lab.canonical(n, parity, k) == lab.canonical_by_recursion(n, parity, k);
            report.add(std::string("recursion rebuilds traces (n=") + std::to_string(n) + ", " +
                           to_string(parity) + ")",
                       ok);
        }
    }

    // Matrix route vs inversion route for the odd extended characters.
    for (int n = 2; n <= std::min(6, max_n - 1); ++n) {
        bool ok = true;
        for (int k = 0; k <= n - 1 && ok; ++k)
            ok = lab.extended(n, Parity::odd, k) == lab.extended_by_matrices(n, k);
        report.add("extended character: matrices = inversion (n=" + std::to_string(n) + ")", ok);
    }

    // Appending a fixed point restricts the extended to the canonical action.
    for (Parity parity : {Parity::odd, Parity::even}) {
        for (int n = 2; n <= max_n - 1; ++n) {
            bool ok = true;
            for (int k = 0; k <= n - 1 && ok; ++k)
                ok = restrict_character(lab.extended(n, parity, k)) == lab.canonical(n, parity, k);
            report.add(std::string("extended restricts to canonical (n=") + std::to_string(n) + ", " +
                           to_string(parity) + ")",
                       ok);
        }
    }
    return report;
}

CheckReport suite_rewriting(int max_n) {
    CheckReport report;
    {
        bool ok = true;
        for (int n = 1; n <= 8 && ok; ++n) {
            Integer total = 0;
            for (int k = 0; k <= n - 1; ++k) {
                Integer dim = graded_dimension(n, k);
                total += dim;
                ok = ok && Integer(admissible_basis(n, k).size()) == dim;
            }
            ok = ok && total == factorial(n);
        }
        report.add("basis counts match the Poincare coefficients (n<=8)", ok);
    }
    {
        bool ok = true;
        for (int n = 2; n <= std::min(5, max_n) && ok; ++n) {
            std::vector<std::pair<int, int>> alphabet;
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) alphabet.emplace_back(i, j);
            for (Parity parity : {Parity::odd, Parity::even}) {
                for (size_t len = 0; len <= 3 && ok; ++len) {
                    std::vector<size_t> idx(len, 0);
                    while (true) {
                        std::vector<std::pair<int, int>> word;
                        for (size_t p = 0; p < len; ++p) word.push_back(alphabet[idx[p]]);
                        AlgebraElement nf = normal_form(word, n, parity);
                        int deg = 0;
                        ok = ok && nf.is_homogeneous(&deg) &&
                             (nf.is_zero() || deg == static_cast<int>(len));
                        for (const auto& [mono, c] : nf.terms())
                            ok = ok && mono.is_admissible_for(n) && c != 0;
                        if (!ok) break;
                        size_t p = 0;
                        while (p < len && ++idx[p] == alphabet.size()) idx[p++] = 0;
                        if (p == len) break;
                    }
                }
            }
        }
        report.add("all words of length <= 3 land in the admissible span (n<=5)", ok);
    }
    {
        bool ok = true;
        for (int n = 2; n <= std::min(6, max_n) && ok; ++n)
            for (Parity parity : {Parity::odd, Parity::even})
                for (int i = 1; i <= n && ok; ++i)
                    for (int j = 1; j <= n && ok; ++j)
                        for (int k = j; k <= n && ok; ++k) {
                            AlgebraElement lhs = normal_form({{i, j}, {i, k}}, n, parity);
                            AlgebraElement rhs = normal_form({{k, j}, {i, k}}, n, parity) -
                                                 normal_form({{k, j}, {i, j}}, n, parity);
                            ok = lhs == rhs;
                        }
        report.add("rel3 instances rewrite to zero (n<=6, both parities)", ok);
    }
    return report;
}

CheckReport suite_location(CharacterLab& lab, int max_n) {
    CheckReport report;

    for (int n = 3; n <= max_n; ++n) {
        auto mult = lab.locate_multiplicities(Partition({n - 1, 1}),
                                              lab.graded(n, Parity::even, View::deconed));
        bool ok = true;
        for (const auto& [k, m] : mult) ok = ok && m == ((k > 0 && k < n - 1) ? 1 : 0);
        report.add("standard in deconed: once per interior degree (n=" + std::to_string(n) + ")", ok);
    }
    for (int n = 3; n <= max_n; ++n) {
        auto mult = lab.locate_multiplicities(Partition({n - 1, 1}),
                                              lab.graded(n, Parity::odd, View::canonical));
        bool ok = true;
        for (const auto& [k, m] : mult) ok = ok && m == ((k >= 1) ? 1 : 0);
        report.add("standard in odd: once per degree 1..n-1 (n=" + std::to_string(n) + ")", ok);
    }
    for (int n = 2; n <= max_n; ++n) {
        auto mult = lab.locate_multiplicities(Partition(std::vector<int>(static_cast<size_t>(n), 1)),
                                              lab.graded(n, Parity::odd, View::canonical));
        bool ok = true;
        for (const auto& [k, m] : mult) ok = ok && m == ((k == n / 2) ? 1 : 0);
        report.add("sign in odd exactly at k=floor(n/2) (n=" + std::to_string(n) + ")", ok);
    }
    for (int n = 2; n <= max_n; ++n) {
        auto mult = lab.locate_multiplicities(Partition(std::vector<int>(static_cast<size_t>(n), 1)),
                                              lab.graded(n, Parity::even, View::canonical));
        bool ok = true;
        for (const auto& [k, m] : mult) ok = ok && m == 0;
        report.add("no sign for even parity (n=" + std::to_string(n) + ")", ok);
    }

    for (int n = 2; n <= std::min(8, max_n); ++n) {
        const int half = n / 2;
        AlgebraElement x = antisymmetrizer(n);
        bool ok = !x.is_zero();
        const Integer expected_mag = factorial(half) * (Integer(1) << half);
        size_t count = 0;
        for (const auto& [mono, c] : x.terms()) {
            ++count;
            ok = ok && mono.degree() == half && (c == expected_mag || c == -expected_mag);
        }
        // number of ways to pick floor(n/2) disjoint pairs from {1..n}
        Integer configs = factorial(n) / (factorial(half) * (Integer(1) << half) * factorial(n - 2 * half));
        ok = ok && Integer(count) == configs;
        if (n <= 6) {
            for (int j = 1; j <= n - 1 && ok; ++j) {
                AlgebraElement img =
                    act_permutation(Permutation::transposition(1, n, j, j + 1), x);
                AlgebraElement neg = x;
                neg *= Integer(-1);
                ok = img == neg;
            }
        }
        report.add("antisymmetrizer coefficients +-k!2^k and sign-equivariance (n=" +
                       std::to_string(n) + ")",
                   ok);
    }

    for (int n = 4; n <= max_n; ++n) {
        std::vector<int> parts{2};
        for (int i = 0; i < n - 2; ++i) parts.push_back(1);
        auto mult = lab.locate_multiplicities(Partition(parts),
                                              lab.graded(n, Parity::odd, View::canonical));
        const int half = n / 2;
        bool ok = true;
        for (const auto& [k, m] : mult) {
            Integer want = 0;
            if (n % 2 == 0) {
                if (k == half - 1 || k == half || k == n - 1) want = 1;
                else if (k > half && k < n - 1) want = 2;
            } else {
                if (k == half || k == n - 1) want = 1;
                else if (k > half && k < n - 1) want = 2;
            }
            ok = ok && m == want;
        }
        report.add("standard(x)sign profile (n=" + std::to_string(n) + ")", ok);
    }

    for (int n = 3; n <= max_n; ++n) {
        auto dims = lab.invariant_dimensions(n, Parity::even);
        bool ok = true;
        for (int k = 0; k <= n - 1; ++k)
            ok = ok && dims[static_cast<size_t>(k)] == ((k == 0 || k == n - 1) ? 1 : 2);
        report.add("quotient dimensions 1,2,...,2,1 (even, n=" + std::to_string(n) + ")", ok);
    }
    for (int n = 3; n <= max_n; ++n) {
        auto dims = lab.invariant_dimensions(n, Parity::odd);
        bool ok = true;
        for (int k = 0; k <= n - 1; ++k) ok = ok && dims[static_cast<size_t>(k)] == 1;
        report.add("quotient dimensions all one (odd, n=" + std::to_string(n) + ")", ok);
    }
    return report;
}

CheckReport suite_lowdegree(CharacterLab& lab, int max_n) {
    CheckReport report;
    for (int n = 2; n <= max_n; ++n) report.merge(lab.verify_lowdegree_theorems(n));
    return report;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"tables",   "global",   "extended",
                                                "rewriting", "location", "lowdegree"};
    return names;
}

CheckReport run_suite(const std::string& name, CharacterLab& lab, int max_n) {
    if (name == "tables") return suite_tables(lab, max_n);
    if (name == "global") return suite_global(lab, max_n);
    if (name == "extended") return suite_extended(lab, max_n);
    if (name == "rewriting") return suite_rewriting(max_n);
    if (name == "location") return suite_location(lab, max_n);
    if (name == "lowdegree") return suite_lowdegree(lab, max_n);
    if (name == "all") {
        CheckReport all;
        for (const auto& s : suite_names()) all.merge(run_suite(s, lab, max_n));
        return all;
    }
    throw std::domain_error("unknown suite: " + name);
}

}  // namespace cohomlab
