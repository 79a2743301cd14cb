// cohomlab: compute and verify the symmetric-group structure of the
// cohomology of configuration spaces from its presentation.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cohomlab/cache.hpp"
#include "cohomlab/json_io.hpp"
#include "cohomlab/suites.hpp"

namespace {

using namespace cohomlab;

constexpr int kHardMaxN = 8;

struct RunConfig {
    int n = 0;
    int max_n = 7;
    std::string parity = "odd";
    std::string space = "conf";
    std::string view = "canonical";
    std::string format = "text";
    std::string rep;
    std::string suite = "all";
    std::string cache_path;
    bool quotient = false;
};

std::string degree_label(const RunConfig& cfg, int k) {
    if (cfg.space == "deconed") return std::to_string(k);
    if (k == 0) return "0";
    if (k == 1) return "d-1";
    return std::to_string(k) + "(d-1)";
}

View resolve_view(const RunConfig& cfg) {
    if (cfg.space == "deconed")
        return cfg.view == "extended" ? View::deconed_extended : View::deconed;
    return cfg.view == "extended" ? View::extended : View::canonical;
}

std::string render_parts(const std::vector<IrreducibleMultiplicity>& parts, bool latex) {
    if (parts.empty()) return latex ? "0" : "0";
    std::ostringstream os;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << (latex ? " \\oplus " : " + ");
        if (parts[i].multiplicity != 1) os << parts[i].multiplicity << (latex ? "\\," : "*");
        if (latex) {
            os << "V_{(";
            const auto& p = parts[i].lambda.parts();
            for (size_t t = 0; t < p.size(); ++t) {
                if (t) os << ",";
                os << p[t];
            }
            os << ")}";
        } else {
            os << parts[i].lambda.to_string();
        }
    }
    return os.str();
}

int cmd_table(const RunConfig& cfg) {
    CharacterLab& lab = shared_lab();
    View view = resolve_view(cfg);
    GradedCharacter gc = lab.graded(cfg.n, parity_from_string(cfg.parity), view);
    if (cfg.format == "json") {
        std::cout << graded_character_to_json(gc).dump(1) << "\n";
        return 0;
    }
    const bool latex = cfg.format == "latex";
    if (!latex) {
        if (cfg.space == "deconed")
            std::cout << "H^k(M(dA_" << cfg.n - 1 << ")), " << to_string(gc.view) << " S_"
                      << gc.group_degree << " action\n";
        else
            std::cout << "H^{k(d-1)}(C_" << cfg.n << "(d)), d " << to_string(gc.parity) << ", "
                      << to_string(gc.view) << " S_" << gc.group_degree << " action\n";
    }
    for (const auto& [k, f] : gc.degrees) {
        auto parts = decompose(f);
        if (latex)
            std::cout << "H^{" << degree_label(cfg, k) << "} &\\cong " << render_parts(parts, true)
                      << " \\\\\n";
        else
            std::cout << "k=" << k << " (deg " << degree_label(cfg, k)
                      << "): " << render_parts(parts, false) << "\n";
    }
    return 0;
}

int cmd_character(const RunConfig& cfg) {
    CharacterLab& lab = shared_lab();
    GradedCharacter gc = lab.graded(cfg.n, parity_from_string(cfg.parity), resolve_view(cfg));
    if (cfg.format == "json") {
        std::cout << graded_character_values_to_json(gc).dump(1) << "\n";
        return 0;
    }
    const auto& classes = partitions_of(gc.group_degree);
    std::cout << "traces of the " << to_string(gc.view) << " S_" << gc.group_degree
              << " action, n=" << gc.n << ", parity " << to_string(gc.parity) << "\n";
    for (const auto& [k, f] : gc.degrees) {
        std::cout << "k=" << k << ":";
        for (size_t i = 0; i < classes.size(); ++i)
            std::cout << " " << classes[i].to_string() << "=" << rational_to_json(f.at_index(i)).dump();
        std::cout << "\n";
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    CharacterLab lab(cfg.max_n + 1);
    CheckReport report = run_suite(cfg.suite, lab, cfg.max_n);
    if (cfg.format == "json") {
        std::cout << report_to_json(report).dump(1) << "\n";
    } else {
        for (const auto& c : report.checks) {
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
            if (!c.pass && !c.detail.empty()) std::cout << " -- " << c.detail;
            std::cout << "\n";
        }
        std::cout << (report.all_pass() ? "all checks passed" : "some checks FAILED") << " ("
                  << report.checks.size() << " checks, suite=" << cfg.suite
                  << ", max-n=" << cfg.max_n << ")\n";
    }
    return report.all_pass() ? 0 : 1;
}

int cmd_locate(const RunConfig& cfg) {
    CharacterLab& lab = shared_lab();
    GradedCharacter gc = lab.graded(cfg.n, parity_from_string(cfg.parity), resolve_view(cfg));
    const int m = gc.group_degree;
    Partition lambda;
    if (cfg.rep == "standard") {
        lambda = Partition({m - 1, 1});
    } else if (cfg.rep == "sign") {
        lambda = Partition(std::vector<int>(static_cast<size_t>(m), 1));
    } else if (cfg.rep == "standard-sign") {
        std::vector<int> parts{2};
        for (int i = 0; i < m - 2; ++i) parts.push_back(1);
        lambda = Partition(parts);
    } else {
        throw CLI::ValidationError("--rep must be standard|sign|standard-sign");
    }
    auto mult = lab.locate_multiplicities(lambda, gc);
    std::string note;
    if (cfg.rep == "sign" && gc.parity == Parity::even)
        note = "no copies of the sign representation exist for even parity";
    if (cfg.format == "json") {
        json degrees = json::array();
        for (const auto& [k, v] : mult)
            degrees.push_back({{"k", k}, {"multiplicity", integer_to_json(v)}});
        json doc{{"rep", cfg.rep}, {"partition", partition_to_json(lambda)}, {"degrees", degrees}};
        if (!note.empty()) doc["note"] = note;
        std::cout << doc.dump(1) << "\n";
        return 0;
    }
    std::cout << "multiplicity of V_" << lambda.to_string() << " in the " << to_string(gc.view)
              << " S_" << m << " action (n=" << cfg.n << ", " << to_string(gc.parity) << ")\n";
    for (const auto& [k, v] : mult) std::cout << "k=" << k << ": " << v << "\n";
    if (!note.empty()) std::cout << "note: " << note << "\n";
    return 0;
}

int cmd_antisym(const RunConfig& cfg) {
    if (parity_from_string(cfg.parity) == Parity::even) {
        std::cerr << "antisym: no copy of the sign representation exists for even parity; "
                     "the antisymmetrizer is defined for --parity odd only\n";
        return 2;
    }
    const int n = cfg.n;
    AlgebraElement x = antisymmetrizer(n);
    const int half = n / 2;
    const Integer mag = factorial(half) * (Integer(1) << half);
    bool coeffs_ok = !x.is_zero();
    for (const auto& [mono, c] : x.terms())
        coeffs_ok = coeffs_ok && (c == mag || c == -mag) && mono.degree() == half;
    bool equivariant = true;
    for (int j = 1; j <= n - 1 && equivariant; ++j) {
        AlgebraElement neg = x;
        neg *= Integer(-1);
        equivariant = act_permutation(Permutation::transposition(1, n, j, j + 1), x) == neg;
    }
    if (cfg.format == "json") {
        json doc = element_to_json(x);
        doc["nonzero"] = !x.is_zero();
        doc["coefficient_magnitude"] = integer_to_json(mag);
        doc["coefficients_ok"] = coeffs_ok;
        doc["sign_equivariant"] = equivariant;
        std::cout << doc.dump(1) << "\n";
    } else {
        std::cout << x.text() << "\n";
        std::cout << "monomials: " << x.terms().size() << ", degree: " << half
                  << ", coefficient magnitude k!*2^k = " << mag << "\n";
        std::cout << "nonzero: " << (x.is_zero() ? "no" : "yes")
                  << ", coefficients +-k!2^k: " << (coeffs_ok ? "yes" : "no")
                  << ", sign-equivariant under Coxeter generators: " << (equivariant ? "yes" : "no")
                  << "\n";
    }
    return (coeffs_ok && equivariant) ? 0 : 1;
}

int cmd_dims(const RunConfig& cfg) {
    CharacterLab& lab = shared_lab();
    std::vector<Integer> graded;
    for (int k = 0; k <= cfg.n - 1; ++k) graded.push_back(graded_dimension(cfg.n, k));
    std::vector<Integer> quotient;
    if (cfg.quotient) quotient = lab.invariant_dimensions(cfg.n, parity_from_string(cfg.parity));
    if (cfg.format == "json") {
        json doc{{"n", cfg.n}};
        json g = json::array();
        for (const auto& v : graded) g.push_back(integer_to_json(v));
        doc["graded"] = g;
        if (cfg.quotient) {
            json q = json::array();
            for (const auto& v : quotient) q.push_back(integer_to_json(v));
            doc["quotient"] = q;
            doc["parity"] = cfg.parity;
        }
        std::cout << doc.dump(1) << "\n";
        return 0;
    }
    std::cout << "graded dimensions (n=" << cfg.n << "):";
    for (size_t i = 0; i < graded.size(); ++i) std::cout << (i ? ", " : " ") << graded[i];
    std::cout << "\n";
    if (cfg.quotient) {
        std::cout << "quotient dimensions (n=" << cfg.n << ", " << cfg.parity << "):";
        for (size_t i = 0; i < quotient.size(); ++i) std::cout << (i ? ", " : " ") << quotient[i];
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symmetric-group decompositions of configuration space cohomology"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--cache", cfg.cache_path, "character-table cache file (JSON)");

    auto add_common = [&](CLI::App* sub, bool needs_n) {
        if (needs_n) sub->add_option("--n", cfg.n, "number of points")->required()->check(CLI::Range(2, kHardMaxN));
        sub->add_option("--parity", cfg.parity, "parity of d: even|odd")
            ->check(CLI::IsMember({"even", "odd"}));
        sub->add_option("--format", cfg.format, "text|json|latex")
            ->check(CLI::IsMember({"text", "json", "latex"}));
    };

    CLI::App* table = app.add_subcommand("table", "degree-by-degree irreducible decompositions");
    add_common(table, true);
    table->add_option("--space", cfg.space, "conf|deconed")->check(CLI::IsMember({"conf", "deconed"}));
    table->add_option("--view", cfg.view, "canonical|extended")
        ->check(CLI::IsMember({"canonical", "extended"}));

    CLI::App* character = app.add_subcommand("character", "trace values per degree and cycle type");
    add_common(character, true);
    character->add_option("--space", cfg.space, "conf|deconed")
        ->check(CLI::IsMember({"conf", "deconed"}));
    character->add_option("--view", cfg.view, "canonical|extended")
        ->check(CLI::IsMember({"canonical", "extended"}));

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", cfg.suite, "tables|global|extended|rewriting|location|lowdegree|all")
        ->check(CLI::IsMember({"tables", "global", "extended", "rewriting", "location", "lowdegree",
                               "all"}));
    verify->add_option("--max-n", cfg.max_n, "largest n exercised")->check(CLI::Range(2, kHardMaxN));
    verify->add_option("--format", cfg.format, "text|json")->check(CLI::IsMember({"text", "json"}));

    CLI::App* locate = app.add_subcommand("locate", "degrees carrying a chosen irreducible");
    add_common(locate, true);
    locate->add_option("--rep", cfg.rep, "standard|sign|standard-sign")
        ->required()
        ->check(CLI::IsMember({"standard", "sign", "standard-sign"}));
    locate->add_option("--space", cfg.space, "conf|deconed")->check(CLI::IsMember({"conf", "deconed"}));
    locate->add_option("--view", cfg.view, "canonical|extended")
        ->check(CLI::IsMember({"canonical", "extended"}));

    CLI::App* antisym = app.add_subcommand("antisym", "explicit sign-isotypic antisymmetrizer");
    add_common(antisym, true);

    CLI::App* dims = app.add_subcommand("dims", "graded and quotient-invariant dimensions");
    add_common(dims, true);
    dims->add_flag("--quotient", cfg.quotient, "also print S_{n-1}-invariant dimensions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (!cfg.cache_path.empty()) load_table_cache(cfg.cache_path);
        int rc = 1;
        if (table->parsed()) rc = cmd_table(cfg);
        else if (character->parsed()) rc = cmd_character(cfg);
        else if (verify->parsed()) rc = cmd_verify(cfg);
        else if (locate->parsed()) rc = cmd_locate(cfg);
        else if (antisym->parsed()) rc = cmd_antisym(cfg);
        else if (dims->parsed()) rc = cmd_dims(cfg);
        if (!cfg.cache_path.empty()) save_table_cache(cfg.cache_path, kDefaultMaxCharacterTableM);
        return rc;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
