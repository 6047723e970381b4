#pragma once

#include <nlohmann/json.hpp>

#include "shirshov/graded_words.hpp"
#include "shirshov/group.hpp"
#include "shirshov/intervals.hpp"
#include "shirshov/span.hpp"

// JSON schemas used by the command-line tool. All parsers throw InputError
// on malformed input; elements are referenced by index, intervals and
// segment spans are 1-based inclusive [start, end].
namespace shirshov::json_io {

using nlohmann::json;

/// {"cyclic": n} | {"dihedral": n} | {"symmetric": n} | {"product": [A, B]}
/// | {"table": {"order": m, "table": [[...]], "names": [...]}}
GroupSpec group_spec(const json& j);
json to_json(const GroupSpec& spec);

/// {"group": <GroupSpec>, "elems": [indices]}
GradeSequence sequence(const json& j);
json to_json(const GradeSequence& seq, const GroupSpec& spec);

/// {"intervals": [[start,end],...], "uncovered": [...], "coverage": k}
json to_json(const Decomposition& d);
Decomposition decomposition(const json& j);

/// {"group": <GroupSpec>, "generators": [{"sym": "x", "grade": 1}, ...]}
GradedAlphabet alphabet(const json& j);
/// ["x", "x", "y"]
Word word(const GradedAlphabet& alphabet, const json& j);
json to_json(const GradedAlphabet& alphabet, const Word& w);

/// [{"tag": "Y", "span": [1,1]}, {"tag": "A", "span": [2,4]}]
json to_json(const Factorization& f);
Factorization factorization(const json& j);

/// {"alphabet": ..., "rules": [{"lhs": [...], "rhs": [{"coef": "1", "word": [...]}]}],
///  "field": {"prime": p} | {"rationals": true}}. A missing field means F_1000003.
AlgebraSpec algebra(const json& j);
json to_json(const AlgebraSpec& spec);

Field field(const json& j);
json to_json(const Field& field);

/// [{"coef": "p/q", "word": [...]}, ...]
json to_json(const GradedAlphabet& alphabet, const LinComb& c);
LinComb lincomb(const GradedAlphabet& alphabet, const Field& field, const json& j);

json to_json(const GradedAlphabet& alphabet, const SpanReport& r);
json to_json(const GradedAlphabet& alphabet, const GradedTheoremReport& r);

}  // namespace shirshov::json_io
