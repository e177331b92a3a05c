#include "vpa/json_io.hpp"

#include <nlohmann/json.hpp>

namespace vpa {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
    throw Error(Errc::schema_error, path + ": " + what);
}

FieldSpec parse_field(const ordered_json& j) {
    if (!j.is_object()) schema_fail("field", "expected an object");
    if (!j.contains("kind") || !j["kind"].is_string()) schema_fail("field.kind", "expected a string");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "Q") {
        if (j.size() != 1) schema_fail("field", "unexpected keys next to kind \"Q\"");
        return FieldSpec::rationals();
    }
    if (kind == "Fp") {
        if (!j.contains("p") || !j["p"].is_number_unsigned())
            schema_fail("field.p", "expected a positive integer");
        if (j.size() != 2) schema_fail("field", "unexpected keys next to kind \"Fp\"");
        try {
            return FieldSpec::prime(j["p"].get<std::uint64_t>());
        } catch (const Error& e) {
            if (e.code() == Errc::char_two_rejected) throw;
            schema_fail("field.p", e.what());
        }
    }
    schema_fail("field.kind", "expected \"Q\" or \"Fp\", got \"" + kind + "\"");
}

Scalar parse_scalar_at(const FieldSpec& f, const ordered_json& j, const std::string& path) {
    if (!j.is_string()) schema_fail(path, "scalars are encoded as strings");
    try {
        return Scalar::parse(f, j.get<std::string>());
    } catch (const Error& e) {
        throw Error(Errc::bad_scalar, path + ": " + e.what());
    }
}

std::string idx(const std::string& name, std::initializer_list<std::size_t> is) {
    std::string s = name;
    for (auto i : is) s += "[" + std::to_string(i) + "]";
    return s;
}

} // namespace

ParsedAlgebra parse_algebra(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::schema_error, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) schema_fail("$", "expected a JSON object");
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "schema" && key != "field" && key != "dim" && key != "gram" &&
            key != "structure" && key != "identity_index")
            schema_fail(key, "unexpected key");
    }
    if (!doc.contains("schema") || !doc["schema"].is_string() ||
        doc["schema"].get<std::string>() != "vpa-1")
        schema_fail("schema", "expected the literal \"vpa-1\"");
    if (!doc.contains("field")) schema_fail("field", "missing");
    FieldSpec field = parse_field(doc["field"]);
    if (!doc.contains("dim") || !doc["dim"].is_number_unsigned())
        schema_fail("dim", "expected a non-negative integer");
    const std::size_t n = doc["dim"].get<std::size_t>();

    if (!doc.contains("gram") || !doc["gram"].is_array() || doc["gram"].size() != n)
        throw Error(Errc::shape_error, "gram: expected an array of " + std::to_string(n) + " rows");
    Matrix gram(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = doc["gram"][i];
        if (!row.is_array() || row.size() != n)
            throw Error(Errc::shape_error, idx("gram", {i}) + ": expected " + std::to_string(n) + " entries");
        for (std::size_t j = 0; j < n; ++j)
            gram.at(i, j) = parse_scalar_at(field, row[j], idx("gram", {i, j}));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!(gram.at(i, j) == gram.at(j, i)))
                schema_fail(idx("gram", {i, j}), "not symmetric: differs from " + idx("gram", {j, i}));

    if (!doc.contains("structure") || !doc["structure"].is_array() || doc["structure"].size() != n)
        throw Error(Errc::shape_error, "structure: expected an array of " + std::to_string(n) + " rows");
    std::vector<Scalar> c(n * n * n, Scalar::zero(field));
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = doc["structure"][i];
        if (!row.is_array() || row.size() != n)
            throw Error(Errc::shape_error,
                        idx("structure", {i}) + ": expected " + std::to_string(n) + " entries");
        for (std::size_t j = 0; j < n; ++j) {
            const auto& coeffs = row[j];
            if (!coeffs.is_array() || coeffs.size() != n)
                throw Error(Errc::shape_error,
                            idx("structure", {i, j}) + ": expected " + std::to_string(n) + " coefficients");
            for (std::size_t k = 0; k < n; ++k)
                c[(i * n + j) * n + k] = parse_scalar_at(field, coeffs[k], idx("structure", {i, j, k}));
        }
    }

    if (doc.contains("identity_index")) {
        if (!doc["identity_index"].is_number_unsigned())
            schema_fail("identity_index", "expected a non-negative integer");
        std::size_t id = doc["identity_index"].get<std::size_t>();
        if (id >= n) schema_fail("identity_index", "out of range for dimension " + std::to_string(n));
        return UnitalCompositionAlgebra(GramForm(std::move(gram)), std::move(c), id);
    }

    // vector product documents must carry an anti-symmetric table
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!(c[(i * n + j) * n + k] == -c[(j * n + i) * n + k]))
                    schema_fail(idx("structure", {i, j, k}), "structure constants are not anti-symmetric");
    return VectorProductAlgebra(GramForm(std::move(gram)), std::move(c));
}

namespace {

ordered_json field_json(const FieldSpec& f) {
    ordered_json j;
    if (f.is_rationals()) {
        j["kind"] = "Q";
    } else {
        j["kind"] = "Fp";
        j["p"] = f.p();
    }
    return j;
}

ordered_json gram_json(const GramForm& g) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < g.dim(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < g.dim(); ++j) row.push_back(g.entries().at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

template <typename Algebra>
ordered_json structure_json(const Algebra& a) {
    const std::size_t n = a.dim();
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < n; ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < n; ++j) {
            ordered_json coeffs = ordered_json::array();
            for (std::size_t k = 0; k < n; ++k) coeffs.push_back(a.structure(i, j, k).str());
            row.push_back(std::move(coeffs));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::string emit_algebra(const VectorProductAlgebra& v) {
    ordered_json doc;
    doc["schema"] = "vpa-1";
    doc["field"] = field_json(v.field());
    doc["dim"] = v.dim();
    doc["gram"] = gram_json(v.gram());
    doc["structure"] = structure_json(v);
    return doc.dump();
}

std::string emit_algebra(const UnitalCompositionAlgebra& a) {
    ordered_json doc;
    doc["schema"] = "vpa-1";
    doc["field"] = field_json(a.field());
    doc["dim"] = a.dim();
    doc["gram"] = gram_json(a.gram());
    doc["structure"] = structure_json(a);
    doc["identity_index"] = a.identity_index();
    return doc.dump();
}

std::string emit_algebra(const ParsedAlgebra& p) {
    return std::visit([](const auto& a) { return emit_algebra(a); }, p);
}

} // namespace vpa
