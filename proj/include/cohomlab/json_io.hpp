#pragma once

#include <nlohmann/json.hpp>

#include "cohomlab/actions.hpp"
#include "cohomlab/recursion.hpp"

namespace cohomlab {

using json = nlohmann::json;

/// Integers that fit in 64 bits serialize as numbers, anything larger as a
/// decimal string.
json integer_to_json(const Integer& v);
Integer integer_from_json(const json& j);

/// Rationals serialize as numbers when integral, "p/q" strings otherwise.
json rational_to_json(const Rational& v);

json partition_to_json(const Partition& p);
Partition partition_from_json(const json& j);

/// {"m":4,"values":{"[1,1,1,1]":3,"[2,1,1]":1,...}}
json class_function_to_json(const ClassFunction& f);
ClassFunction class_function_from_json(const json& j);

/// {"n":5,"parity":"odd","view":"canonical","degrees":[{"k":2,
///   "irreducibles":[{"partition":[3,2],"multiplicity":2},...]},...]}
json graded_character_to_json(const GradedCharacter& gc);

/// Same shape but with raw class-function values per degree.
json graded_character_values_to_json(const GradedCharacter& gc);

/// {"n":4,"parity":"odd","terms":[{"coefficient":8,"monomial":[[1,2],[3,4]]},...]}
json element_to_json(const AlgebraElement& x);

/// Dense arrays-of-arrays of integers.
json matrix_to_json(const ActionMatrix& m);

json report_to_json(const CheckReport& report);

}  // namespace cohomlab
