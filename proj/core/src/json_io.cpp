#include "shirshov/json_io.hpp"

#include "shirshov/error.hpp"

namespace shirshov::json_io {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed ") + what + ": " + e.what());
    }
}

const json& field_of(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string("malformed ") + what + ": missing \"" + key + "\"");
    return j.at(key);
}

std::uint32_t index_of(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0 ||
        j.get<std::int64_t>() > std::numeric_limits<std::uint32_t>::max())
        throw InputError(std::string("malformed ") + what + ": expected a non-negative index, got " +
                         j.dump());
    return j.get<std::uint32_t>();
}

std::size_t position_of(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
        throw InputError(std::string("malformed ") + what + ": expected a position, got " + j.dump());
    return j.get<std::size_t>();
}

json span_json(const Interval& iv) { return json::array({iv.start, iv.end}); }

Interval span_of(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2)
        throw InputError(std::string("malformed ") + what + ": expected [start, end]");
    return {position_of(j[0], what), position_of(j[1], what)};
}

}  // namespace

GroupSpec group_spec(const json& j) {
    return guarded("group spec", [&]() -> GroupSpec {
        if (!j.is_object() || j.size() != 1)
            throw InputError("malformed group spec: expected a single-key object, got " + j.dump());
        const auto& [key, value] = *j.items().begin();
        if (key == "cyclic") return GroupSpec::cyclic(index_of(value, "group spec"));
        if (key == "dihedral") return GroupSpec::dihedral(index_of(value, "group spec"));
        if (key == "symmetric") return GroupSpec::symmetric(index_of(value, "group spec"));
        if (key == "product") {
            if (!value.is_array() || value.size() != 2)
                throw InputError("malformed group spec: product needs [left, right]");
            return GroupSpec::product(group_spec(value[0]), group_spec(value[1]));
        }
        if (key == "table") {
            const json& rows_json = field_of(value, "table", "group spec");
            std::vector<std::vector<std::uint32_t>> rows;
            for (const auto& row : rows_json) {
                rows.emplace_back();
                for (const auto& entry : row) rows.back().push_back(index_of(entry, "group table"));
            }
            std::vector<std::string> names;
            if (value.contains("names")) names = value.at("names").get<std::vector<std::string>>();
            const std::uint32_t order =
                value.contains("order") ? index_of(value.at("order"), "group spec")
                                        : static_cast<std::uint32_t>(rows.size());
            return {TableSpec{order, std::move(rows), std::move(names)}};
        }
        throw InputError("malformed group spec: unknown kind \"" + key + "\"");
    });
}

json to_json(const GroupSpec& spec) {
    struct Visitor {
        json operator()(const CyclicSpec& s) const { return {{"cyclic", s.n}}; }
        json operator()(const DihedralSpec& s) const { return {{"dihedral", s.n}}; }
        json operator()(const SymmetricSpec& s) const { return {{"symmetric", s.n}}; }
        json operator()(const ProductSpec& s) const {
            return {{"product", json::array({to_json(*s.left), to_json(*s.right)})}};
        }
        json operator()(const TableSpec& s) const {
            json t = {{"order", s.order}, {"table", s.table}};
            if (!s.names.empty()) t["names"] = s.names;
            return {{"table", t}};
        }
    };
    return std::visit(Visitor{}, spec.kind);
}

GradeSequence sequence(const json& j) {
    return guarded("sequence", [&] {
        const GroupSpec spec = group_spec(field_of(j, "group", "sequence"));
        GradeSequence seq{std::make_shared<const FiniteGroup>(build_group(spec)), {}};
        const json& elems = field_of(j, "elems", "sequence");
        if (!elems.is_array()) throw InputError("malformed sequence: \"elems\" must be a list");
        for (const auto& e : elems)
            seq.elems.push_back(Element{index_of(e, "sequence")});
        seq.validate();
        return seq;
    });
}

json to_json(const GradeSequence& seq, const GroupSpec& spec) {
    json elems = json::array();
    for (const Element e : seq.elems) elems.push_back(e.index);
    return {{"group", to_json(spec)}, {"elems", elems}};
}

json to_json(const Decomposition& d) {
    json intervals = json::array();
    for (const Interval& iv : d.intervals) intervals.push_back(span_json(iv));
    return {{"intervals", intervals}, {"uncovered", d.uncovered}, {"coverage", d.coverage}};
}

Decomposition decomposition(const json& j) {
    return guarded("decomposition", [&] {
        Decomposition d;
        for (const auto& iv : field_of(j, "intervals", "decomposition"))
            d.intervals.push_back(span_of(iv, "decomposition"));
        if (j.contains("uncovered"))
            for (const auto& p : j.at("uncovered"))
                d.uncovered.push_back(position_of(p, "decomposition"));
        d.coverage = position_of(field_of(j, "coverage", "decomposition"), "decomposition");
        return d;
    });
}

GradedAlphabet alphabet(const json& j) {
    return guarded("alphabet", [&] {
        const GroupSpec spec =
            j.is_object() && j.contains("group") ? group_spec(j.at("group")) : GroupSpec::cyclic(1);
        auto group = std::make_shared<const FiniteGroup>(build_group(spec));
        std::vector<Generator> gens;
        for (const auto& g : field_of(j, "generators", "alphabet")) {
            const Element grade{g.contains("grade") ? index_of(g.at("grade"), "alphabet") : 0u};
            gens.push_back({field_of(g, "sym", "alphabet").get<std::string>(), grade});
        }
        return GradedAlphabet(std::move(group), std::move(gens));
    });
}

Word word(const GradedAlphabet& alphabet, const json& j) {
    return guarded("word", [&] {
        if (!j.is_array()) throw InputError("malformed word: expected a list of symbols");
        return alphabet.parse(j.get<std::vector<std::string>>());
    });
}

json to_json(const GradedAlphabet& alphabet, const Word& w) { return alphabet.symbols(w); }

json to_json(const Factorization& f) {
    json out = json::array();
    for (const Segment& s : f.segments)
        out.push_back({{"tag", s.tag == SegmentTag::A ? "A" : "Y"}, {"span", span_json(s.span)}});
    return out;
}

Factorization factorization(const json& j) {
    return guarded("factorization", [&] {
        Factorization f;
        for (const auto& s : j) {
            const auto tag = field_of(s, "tag", "factorization").get<std::string>();
            if (tag != "A" && tag != "Y")
                throw InputError("malformed factorization: unknown tag \"" + tag + "\"");
            const SegmentTag t = tag == "A" ? SegmentTag::A : SegmentTag::Y;
            f.segments.push_back({t, span_of(field_of(s, "span", "factorization"), "factorization")});
            if (t == SegmentTag::A) ++f.k;
        }
        return f;
    });
}

Field field(const json& j) {
    return guarded("field", [&] {
        if (j.is_object() && j.contains("prime")) return Field::prime(j.at("prime").get<std::uint64_t>());
        if (j.is_object() && j.contains("rationals") && j.at("rationals").get<bool>())
            return Field::rationals();
        throw InputError("malformed field: expected {\"prime\": p} or {\"rationals\": true}");
    });
}

json to_json(const Field& field) {
    if (field.is_prime()) return {{"prime", field.modulus()}};
    return {{"rationals", true}};
}

LinComb lincomb(const GradedAlphabet& alphabet, const Field& field, const json& j) {
    return guarded("linear combination", [&] {
        LinComb c;
        for (const auto& term : j) {
            const json& coef = field_of(term, "coef", "linear combination");
            const Rational q = coef.is_string() ? parse_rational(coef.get<std::string>())
                                                : Rational(coef.get<std::int64_t>());
            c.add(field, word(alphabet, field_of(term, "word", "linear combination")), q);
        }
        return c;
    });
}

json to_json(const GradedAlphabet& alphabet, const LinComb& c) {
    json out = json::array();
    for (const auto& [w, q] : c.terms())
        out.push_back({{"coef", format_rational(q)}, {"word", alphabet.symbols(w)}});
    return out;
}

AlgebraSpec algebra(const json& j) {
    return guarded("algebra", [&] {
        GradedAlphabet alpha = alphabet(field_of(j, "alphabet", "algebra"));
        const Field f = j.contains("field") ? field(j.at("field")) : Field::prime(Field::kDefaultPrime);
        std::vector<RewriteRule> rules;
        if (j.contains("rules"))
            for (const auto& r : j.at("rules"))
                rules.push_back({word(alpha, field_of(r, "lhs", "rule")),
                                 lincomb(alpha, Field::rationals(), field_of(r, "rhs", "rule"))});
        return AlgebraSpec(std::move(alpha), std::move(rules), f);
    });
}

json to_json(const AlgebraSpec& spec) {
    const GradedAlphabet& alpha = spec.alphabet();
    json gens = json::array();
    for (const Generator& g : alpha.generators())
        gens.push_back({{"sym", g.symbol}, {"grade", g.grade.index}});
    json rules = json::array();
    for (const RewriteRule& r : spec.rules())
        rules.push_back({{"lhs", alpha.symbols(r.lhs)}, {"rhs", to_json(alpha, r.rhs)}});
    // The group is emitted as its table, which round-trips any spec.
    return {{"alphabet",
             {{"group", {{"table", {{"order", alpha.group().order()},
                                    {"table", alpha.group().table()},
                                    {"names", alpha.group().names()}}}}},
              {"generators", gens}}},
            {"rules", rules},
            {"field", to_json(spec.field())}};
}

json to_json(const GradedAlphabet& alphabet, const SpanReport& r) {
    json missing = json::array();
    for (const LinComb& c : r.missing) missing.push_back(to_json(alphabet, c));
    return {{"verdict", to_string(r.verdict)},
            {"height", r.height},
            {"degree_cap", r.degree_cap},
            {"expansion_cap", r.expansion_cap},
            {"words_checked", r.words_checked},
            {"products_enumerated", r.products_enumerated},
            {"rank_words", r.rank_words},
            {"rank_products", r.rank_products},
            {"rank_joint", r.rank_joint},
            {"missing", missing}};
}

json to_json(const GradedAlphabet& alphabet, const GradedTheoremReport& r) {
    return {{"verdict", to_string(r.verdict)},
            {"height_bound", r.height_bound},
            {"neutral", to_json(alphabet, r.neutral)},
            {"whole", to_json(alphabet, r.whole)},
            {"consistency_violations", r.consistency_violations}};
}

}  // namespace shirshov::json_io
