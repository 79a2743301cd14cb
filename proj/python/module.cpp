#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>

#include "cohomlab/cache.hpp"
#include "cohomlab/json_io.hpp"
#include "cohomlab/suites.hpp"

namespace py = pybind11;
using namespace cohomlab;

namespace {

py::int_ to_py(const Integer& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return py::int_(static_cast<long long>(v));
    return py::int_(py::str(v.str()));  // arbitrary precision via int(str)
}

py::object to_py(const Rational& v) {
    if (is_integral(v)) return to_py(to_integer(v));
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(boost::multiprecision::numerator(v).str(),
                    boost::multiprecision::denominator(v).str());
}

py::tuple partition_tuple(const Partition& p) {
    py::tuple t(p.num_parts());
    for (int i = 0; i < p.num_parts(); ++i) t[static_cast<size_t>(i)] = p.part(i);
    return t;
}

Partition partition_from_obj(const py::object& obj) {
    return Partition(obj.cast<std::vector<int>>());
}

py::dict class_function_dict(const ClassFunction& f) {
    py::dict out;
    const auto& classes = partitions_of(f.group_degree());
    for (size_t i = 0; i < classes.size(); ++i)
        out[partition_tuple(classes[i])] = to_py(f.at_index(i));
    return out;
}

ClassFunction class_function_from_dict(int m, const py::dict& values) {
    ClassFunction f(m);
    for (auto item : values) {
        Partition mu = partition_from_obj(py::reinterpret_borrow<py::object>(item.first));
        f.at(mu) = Rational(Integer(py::str(item.second).cast<std::string>()));
    }
    return f;
}

py::list decomposition_list(const std::vector<IrreducibleMultiplicity>& parts) {
    py::list out;
    for (const auto& p : parts) out.append(py::make_tuple(partition_tuple(p.lambda), to_py(p.multiplicity)));
    return out;
}

py::list element_terms(const AlgebraElement& x) {
    py::list out;
    for (const auto& [mono, coeff] : x.terms()) {
        py::list factors;
        for (auto [i, j] : mono.factors()) factors.append(py::make_tuple(i, j));
        out.append(py::make_tuple(to_py(coeff), factors));
    }
    return out;
}

View resolve_view(const std::string& space, const std::string& view) {
    if (space == "deconed") return view == "extended" ? View::deconed_extended : View::deconed;
    if (space != "conf") throw std::domain_error("space must be conf|deconed");
    return view == "extended" ? View::extended : View::canonical;
}

py::list report_list(const CheckReport& report) {
    py::list out;
    for (const auto& c : report.checks) out.append(py::make_tuple(c.name, c.pass, c.detail));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact symmetric-group decompositions of configuration space cohomology";

    m.def("partitions_of", [](int n) {
        py::list out;
        for (const auto& p : partitions_of(n)) out.append(partition_tuple(p));
        return out;
    });
    m.def("class_size", [](const py::object& p) { return to_py(class_size(partition_from_obj(p))); });
    m.def("irreducible_dimension",
          [](const py::object& p) { return to_py(irreducible_dimension(partition_from_obj(p))); });
    m.def("character_table", [](int m_) {
        const auto& table = CharacterTable::get(m_);
        const auto& classes = partitions_of(m_);
        py::dict out;
        for (size_t li = 0; li < classes.size(); ++li) {
            py::dict row;
            for (size_t mi = 0; mi < classes.size(); ++mi)
                row[partition_tuple(classes[mi])] = to_py(table.value_by_index(li, mi));
            out[partition_tuple(classes[li])] = row;
        }
        return out;
    });
    m.def("irreducible_character", [](const py::object& lam) {
        Partition p = partition_from_obj(lam);
        return class_function_dict(CharacterTable::get(p.sum()).irreducible(p));
    });
    m.def("named_character", [](int m_, const std::string& name) {
        return class_function_dict(named_character(m_, named_rep_from_string(name)));
    });
    m.def("induce_trivial_from_transposition",
          [](int m_) { return class_function_dict(induce_trivial_from_transposition(m_)); });
    m.def("decompose", [](int m_, const py::dict& values) {
        return decomposition_list(decompose(class_function_from_dict(m_, values)));
    });
    m.def("inner_product", [](int m_, const py::dict& f, const py::dict& g) {
        return to_py(inner_product(class_function_from_dict(m_, f), class_function_from_dict(m_, g)));
    });
    m.def("tensor", [](int m_, const py::dict& f, const py::dict& g) {
        return class_function_dict(tensor(class_function_from_dict(m_, f), class_function_from_dict(m_, g)));
    });
    m.def("restrict_character", [](int m_, const py::dict& f) {
        return class_function_dict(restrict_character(class_function_from_dict(m_, f)));
    });
    m.def("induce_character", [](int m_, const py::dict& f) {
        return class_function_dict(induce_character(class_function_from_dict(m_, f)));
    });
    m.def("branching_boxes", [](const py::object& lam, const std::string& direction) {
        Partition p = partition_from_obj(lam);
        auto boxes = direction == "add" ? add_one_box(p) : remove_one_box(p);
        py::list out;
        for (const auto& b : boxes) out.append(partition_tuple(b));
        return out;
    });

    m.def("graded_dimension", [](int n, int k) { return to_py(graded_dimension(n, k)); });
    m.def("admissible_basis", [](int n, int k) {
        py::list out;
        for (const auto& mono : admissible_basis(n, k)) {
            py::list factors;
            for (auto [i, j] : mono.factors()) factors.append(py::make_tuple(i, j));
            out.append(factors);
        }
        return out;
    });
    m.def("normal_form", [](const std::vector<std::pair<int, int>>& word, int n,
                            const std::string& parity) {
        return element_terms(normal_form(word, n, parity_from_string(parity)));
    });
    m.def("element_text", [](const std::vector<std::pair<int, int>>& word, int n,
                             const std::string& parity) {
        return normal_form(word, n, parity_from_string(parity)).text();
    });
    m.def("antisymmetrizer", [](int n) {
        AlgebraElement x = antisymmetrizer(n);
        return py::make_tuple(element_terms(x), x.text());
    });
    m.def("action_matrix", [](const std::vector<int>& images, int lo, int n, int k,
                              const std::string& parity) {
        Permutation g(lo, images);
        ActionMatrix mat = action_matrix(g, n, k, parity_from_string(parity));
        py::list rows;
        for (const auto& row : mat.to_dense()) {
            py::list r;
            for (const auto& v : row) r.append(to_py(v));
            rows.append(r);
        }
        return rows;
    });

    m.def(
        "graded_character",
        [](int n, const std::string& parity, const std::string& space, const std::string& view) {
            GradedCharacter gc =
                shared_lab().graded(n, parity_from_string(parity), resolve_view(space, view));
            py::dict out;
            for (const auto& [k, f] : gc.degrees)
                out[py::int_(k)] = decomposition_list(decompose(f));
            return out;
        },
        py::arg("n"), py::arg("parity") = "odd", py::arg("space") = "conf",
        py::arg("view") = "canonical");
    m.def(
        "graded_character_values",
        [](int n, const std::string& parity, const std::string& space, const std::string& view) {
            GradedCharacter gc =
                shared_lab().graded(n, parity_from_string(parity), resolve_view(space, view));
            py::dict out;
            for (const auto& [k, f] : gc.degrees) out[py::int_(k)] = class_function_dict(f);
            return out;
        },
        py::arg("n"), py::arg("parity") = "odd", py::arg("space") = "conf",
        py::arg("view") = "canonical");
    m.def(
        "locate_multiplicities",
        [](const py::object& lam, int n, const std::string& parity, const std::string& space,
           const std::string& view) {
            CharacterLab& lab = shared_lab();
            GradedCharacter gc = lab.graded(n, parity_from_string(parity), resolve_view(space, view));
            py::dict out;
            for (const auto& [k, v] : lab.locate_multiplicities(partition_from_obj(lam), gc))
                out[py::int_(k)] = to_py(v);
            return out;
        },
        py::arg("partition"), py::arg("n"), py::arg("parity") = "odd", py::arg("space") = "conf",
        py::arg("view") = "canonical");
    m.def("invariant_dimensions", [](int n, const std::string& parity) {
        py::list out;
        for (const auto& v : shared_lab().invariant_dimensions(n, parity_from_string(parity)))
            out.append(to_py(v));
        return out;
    });
    m.def(
        "verify",
        [](const std::string& suite, int max_n) {
            CharacterLab lab(max_n + 1);
            return report_list(run_suite(suite, lab, max_n));
        },
        py::arg("suite") = "all", py::arg("max_n") = 5);
    m.def("verify_extended_relations", [](int n, const std::string& parity) {
        return report_list(verify_extended_relations(n, parity_from_string(parity)));
    });

#ifdef VERSION_INFO
#define COHOMLAB_STR_(x) #x
#define COHOMLAB_STR(x) COHOMLAB_STR_(x)
    m.attr("__version__") = COHOMLAB_STR(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
