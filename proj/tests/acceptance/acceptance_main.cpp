// Acceptance gate: one pass/fail line per criterion, exact comparisons
// throughout, nonzero exit on any failure.

#include <chrono>
#include <iostream>

#include "cohomlab/suites.hpp"

using namespace cohomlab;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, bool pass, const std::string& detail = {}) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << name;
    if (!pass && !detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!pass) ++g_failures;
}

std::string first_failure(const CheckReport& r) {
    for (const auto& c : r.checks)
        if (!c.pass) return c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
    return {};
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    CharacterLab lab(8);

    // 1. Golden decomposition tables reproduced structurally for n = 2..5.
    {
        CheckReport r = suite_tables(lab, 5);
        criterion(1, "golden decomposition tables reproduced (n=2..5)", r.all_pass(),
                  first_failure(r));
    }

    // 2. Odd total character is the regular representation, n = 2..7.
    {
        bool ok = true;
        std::string detail;
        for (int n = 2; n <= 7 && ok; ++n) {
            ClassFunction total(n);
            for (int k = 0; k <= n - 1; ++k) total += lab.canonical(n, Parity::odd, k);
            ok = total == named_character(n, NamedRep::regular);
            if (!ok) detail = "n=" + std::to_string(n);
        }
        criterion(2, "odd total = regular character (n=2..7)", ok, detail);
    }

    // 3. Even total = 2 Ind_{S_2}^{S_n} 1 and deconed total = Ind_{S_2}^{S_n} 1, n = 3..7.
    {
        bool ok = true;
        std::string detail;
        for (int n = 3; n <= 7 && ok; ++n) {
            ClassFunction total(n);
            for (int k = 0; k <= n - 1; ++k) total += lab.canonical(n, Parity::even, k);
            ClassFunction ind = induce_trivial_from_transposition(n);
            ok = total == ind * Rational(2);
            ClassFunction dec_total(n);
            for (int k = 0; k <= n - 2; ++k) dec_total += lab.deconed(n, k);
            ok = ok && dec_total == ind;
            if (!ok) detail = "n=" + std::to_string(n);
        }
        criterion(3, "even total = 2 Ind 1; deconed total = Ind 1 (n=3..7)", ok, detail);
    }

    // 4. Total character is induced from one point down, both parities, n = 3..7.
    {
        bool ok = true;
        std::string detail;
        for (Parity p : {Parity::odd, Parity::even})
            for (int n = 3; n <= 7 && ok; ++n) {
                ClassFunction total(n), prev(n - 1);
                for (int k = 0; k <= n - 1; ++k) total += lab.canonical(n, p, k);
                for (int k = 0; k <= n - 2; ++k) prev += lab.canonical(n - 1, p, k);
                ok = total == induce_character(prev);
                if (!ok) detail = std::string("n=") + std::to_string(n) + " " + to_string(p);
            }
        criterion(4, "total = Ind of the (n-1) total (n=3..7, both parities)", ok, detail);
    }

    // 5. Recursive formula against traces (n=3..7 both parities); the two
    //    extended routes agree for odd parity (n=2..6).
    {
        bool ok = true;
        std::string detail;
        for (Parity p : {Parity::odd, Parity::even})
            for (int n = 3; n <= 7 && ok; ++n)
                for (int k = 0; k <= n - 1 && ok; ++k) {
                    ok = lab.canonical(n, p, k) == lab.canonical_by_recursion(n, p, k);
                    if (!ok) detail = "recursion n=" + std::to_string(n) + " k=" + std::to_string(k);
                }
        for (int n = 2; n <= 6 && ok; ++n)
            for (int k = 0; k <= n - 1 && ok; ++k) {
                ok = lab.extended(n, Parity::odd, k) == lab.extended_by_matrices(n, k);
                if (!ok) detail = "routes n=" + std::to_string(n) + " k=" + std::to_string(k);
            }
        criterion(5, "recursive formula (n=3..7); matrix route = inversion (n=2..6)", ok, detail);
    }

    // 6. Basis/dimension oracle and rewriting identities.
    {
        CheckReport r = suite_rewriting(7);
        criterion(6, "basis counts (n<=8); words land admissibly (n<=5); rel3 = 0 (n<=6)",
                  r.all_pass(), first_failure(r));
    }

    // 7. Extended-action structural checks, n = 3..6.
    {
        bool ok = true;
        std::string detail;
        for (int n = 3; n <= 6 && ok; ++n) {
            CheckReport r = verify_extended_relations(n);
            ok = r.all_pass();
            if (!ok) detail = first_failure(r);
        }
        criterion(7, "involution/braid/commutation + ideal invariance (n=3..6)", ok, detail);
    }

    // 8. Locations of the distinguished irreducibles.
    {
        bool ok = true;
        std::string detail;
        for (int n = 3; n <= 7 && ok; ++n) {
            auto dec = lab.locate_multiplicities(Partition({n - 1, 1}),
                                                 lab.graded(n, Parity::even, View::deconed));
            for (const auto& [k, m] : dec) ok = ok && m == ((k > 0 && k < n - 1) ? 1 : 0);
            auto odd = lab.locate_multiplicities(Partition({n - 1, 1}),
                                                 lab.graded(n, Parity::odd, View::canonical));
            for (const auto& [k, m] : odd) ok = ok && m == ((k >= 1) ? 1 : 0);
            if (!ok) detail = "standard n=" + std::to_string(n);
        }
        for (int n = 2; n <= 7 && ok; ++n) {
            auto sgn = lab.locate_multiplicities(Partition(std::vector<int>(static_cast<size_t>(n), 1)),
                                                 lab.graded(n, Parity::odd, View::canonical));
            for (const auto& [k, m] : sgn) ok = ok && m == ((k == n / 2) ? 1 : 0);
            AlgebraElement x = antisymmetrizer(n);
            ok = ok && !x.is_zero();
            const Integer mag = factorial(n / 2) * (Integer(1) << (n / 2));
            for (const auto& [mono, c] : x.terms()) ok = ok && (c == mag || c == -mag);
            if (!ok) detail = "sign n=" + std::to_string(n);
        }
        for (int n = 4; n <= 7 && ok; ++n) {
            std::vector<int> parts{2};
            for (int i = 0; i < n - 2; ++i) parts.push_back(1);
            auto ss = lab.locate_multiplicities(Partition(parts),
                                                lab.graded(n, Parity::odd, View::canonical));
            const int half = n / 2;
            for (const auto& [k, m] : ss) {
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
            if (!ok) detail = "standard(x)sign n=" + std::to_string(n);
        }
        criterion(8, "standard/sign/standard(x)sign located; antisymmetrizer +-k!2^k", ok, detail);
    }

    // 9. Degree 1 and 2 closed forms plus the stated restrictions, n up to 7.
    {
        bool ok = true;
        std::string detail;
        for (int n = 2; n <= 7 && ok; ++n) {
            CheckReport r = lab.verify_lowdegree_theorems(n);
            ok = r.all_pass();
            if (!ok) detail = first_failure(r);
        }
        criterion(9, "degree-1/2 closed forms and restrictions (n up to 7)", ok, detail);
    }

    // 10. Quotient dimensions.
    {
        bool ok = true;
        std::string detail;
        for (int n = 4; n <= 7 && ok; ++n) {
            auto even = lab.invariant_dimensions(n, Parity::even);
            for (int k = 0; k <= n - 1; ++k)
                ok = ok && even[static_cast<size_t>(k)] == ((k == 0 || k == n - 1) ? 1 : 2);
            if (!ok) detail = "even n=" + std::to_string(n);
        }
        for (int n = 3; n <= 7 && ok; ++n) {
            auto odd = lab.invariant_dimensions(n, Parity::odd);
            for (int k = 0; k <= n - 1; ++k) ok = ok && odd[static_cast<size_t>(k)] == 1;
            if (!ok) detail = "odd n=" + std::to_string(n);
        }
        criterion(10, "quotient dimensions 1,2,..,2,1 (even) and all 1 (odd)", ok, detail);
    }

    // 11. The full verify suite at max-n 7 inside the time budget, with the
    //     character-engine self-tests included (global suite, m <= 8).
    {
        CheckReport all = run_suite("all", lab, 7);
        const auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count();
        bool ok = all.all_pass() && elapsed < 300;
        std::string detail = first_failure(all);
        if (detail.empty() && elapsed >= 300)
            detail = "took " + std::to_string(elapsed) + "s";
        criterion(11,
                  "full verify suite at max-n 7 in " + std::to_string(elapsed) +
                      "s (< 300s), " + std::to_string(all.checks.size()) + " checks",
                  ok, detail);
    }

    if (g_failures == 0) {
        std::cout << "acceptance: all criteria passed" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criterion(s) FAILED" << std::endl;
    return 1;
}
