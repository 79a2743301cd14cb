#include "cohomlab/json_io.hpp"

#include <limits>

namespace cohomlab {

json integer_to_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Integer integer_from_json(const json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    return Integer(j.get<std::int64_t>());
}

json rational_to_json(const Rational& v) {
    if (is_integral(v)) return integer_to_json(to_integer(v));
    return boost::multiprecision::numerator(v).str() + "/" +
           boost::multiprecision::denominator(v).str();
}

json partition_to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

json class_function_to_json(const ClassFunction& f) {
    json values = json::object();
    const auto& classes = partitions_of(f.group_degree());
    for (size_t i = 0; i < classes.size(); ++i)
        values[classes[i].to_string()] = rational_to_json(f.at_index(i));
    return json{{"m", f.group_degree()}, {"values", values}};
}

ClassFunction class_function_from_json(const json& j) {
    ClassFunction f(j.at("m").get<int>());
    for (const auto& [key, val] : j.at("values").items()) {
        if (val.is_string()) {
            std::string s = val.get<std::string>();
            auto slash = s.find('/');
            if (slash == std::string::npos)
                f.at(Partition::parse(key)) = Rational(Integer(s));
            else
                f.at(Partition::parse(key)) =
                    Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
        } else {
            f.at(Partition::parse(key)) = Rational(val.get<std::int64_t>());
        }
    }
    return f;
}

json graded_character_to_json(const GradedCharacter& gc) {
    json degrees = json::array();
    for (const auto& [k, f] : gc.degrees) {
        json irr = json::array();
        for (const auto& part : decompose(f))
            irr.push_back({{"partition", partition_to_json(part.lambda)},
                           {"multiplicity", integer_to_json(part.multiplicity)}});
        degrees.push_back({{"k", k}, {"irreducibles", irr}});
    }
    return json{{"n", gc.n},
                {"parity", to_string(gc.parity)},
                {"view", to_string(gc.view)},
                {"degrees", degrees}};
}

json graded_character_values_to_json(const GradedCharacter& gc) {
    json degrees = json::array();
    for (const auto& [k, f] : gc.degrees)
        degrees.push_back({{"k", k}, {"values", class_function_to_json(f).at("values")}});
    return json{{"n", gc.n},
                {"parity", to_string(gc.parity)},
                {"view", to_string(gc.view)},
                {"group", gc.group_degree},
                {"degrees", degrees}};
}

json element_to_json(const AlgebraElement& x) {
    json terms = json::array();
    for (const auto& [mono, coeff] : x.terms()) {
        auto [display, sign] = display_factors(mono, x.parity());
        json factors = json::array();
        for (auto [i, j] : display) factors.push_back({i, j});
        terms.push_back({{"coefficient", integer_to_json(coeff * sign)}, {"monomial", factors}});
    }
    return json{{"n", x.points()}, {"parity", to_string(x.parity())}, {"terms", terms}};
}

json matrix_to_json(const ActionMatrix& m) {
    json rows = json::array();
    for (const auto& row : m.to_dense()) {
        json r = json::array();
        for (const auto& v : row) r.push_back(integer_to_json(v));
        rows.push_back(r);
    }
    return rows;
}

json report_to_json(const CheckReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        json entry{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) entry["detail"] = c.detail;
        checks.push_back(entry);
    }
    return json{{"pass", report.all_pass()}, {"checks", checks}};
}

}  // namespace cohomlab
