// vpa -- construct, verify and classify vector product algebras and their
// unital composition algebras, exactly, over Q and F_p.
//
// Exit codes: 0 success / all checks pass; 1 verification failure or a
// negative verdict; 2 usage, parse or IO errors; 3 inconclusive search.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "vpa/classify.hpp"
#include "vpa/json_io.hpp"

using nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw vpa::Error(vpa::Errc::io_error, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw vpa::Error(vpa::Errc::io_error, "cannot write " + out_path);
    out << text << "\n";
}

vpa::FieldSpec parse_field_arg(const std::string& s) {
    if (s == "Q")
        return vpa::FieldSpec::rationals();
    if (s.rfind("Fp:", 0) == 0) {
        const std::string num = s.substr(3);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw vpa::Error(vpa::Errc::bad_field, "expected Fp:<p> with a decimal p, got \"" + s + "\"");
        return vpa::FieldSpec::prime(std::strtoull(num.c_str(), nullptr, 10));
    }
    throw vpa::Error(vpa::Errc::bad_field, "expected Q or Fp:<p>, got \"" + s + "\"");
}

std::vector<vpa::Scalar> parse_scalar_csv(const vpa::FieldSpec& f, const std::string& csv) {
    std::vector<vpa::Scalar> out;
    if (csv.empty()) return out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(vpa::Scalar::parse(f, item));
    return out;
}

vpa::ParsedAlgebra load(const std::string& path) { return vpa::parse_algebra(read_file(path)); }

vpa::VectorProductAlgebra load_vpa(const std::string& path) {
    auto parsed = load(path);
    if (!std::holds_alternative<vpa::VectorProductAlgebra>(parsed))
        throw vpa::Error(vpa::Errc::schema_error,
                         path + " holds a unital composition algebra, expected a vector product algebra");
    return std::get<vpa::VectorProductAlgebra>(std::move(parsed));
}

int default_height_bound() {
    if (const char* env = std::getenv("VPA_HEIGHT_BOUND")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return vpa::kDefaultHeightBound;
}

std::string csv_str(const vpa::Vec& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s;
}

// Linear combination rendering for tables: "0", "b2", "-b2 + 2*b4", ...
std::string combo_str(const vpa::Vec& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        vpa::Scalar coeff = v[k];
        bool negative = false;
        if (coeff.field().is_rationals() && coeff.sign() < 0) {
            negative = true;
            coeff = -coeff;
        }
        s += s.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
        if (!coeff.is_one()) s += coeff.str() + "*";
        s += "b" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

void print_violations(const std::vector<vpa::Violation>& violations, std::size_t limit = 10) {
    for (std::size_t i = 0; i < violations.size() && i < limit; ++i) {
        const auto& v = violations[i];
        std::string at;
        for (auto ix : v.indices) at += (at.empty() ? "" : ",") + std::to_string(ix);
        std::cout << "  " << v.identity << " at (" << at << "): " << v.lhs << " != " << v.rhs << "\n";
    }
    if (violations.size() > limit)
        std::cout << "  ... and " << (violations.size() - limit) << " more\n";
}

ordered_json violations_json(const std::vector<vpa::Violation>& violations) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : violations) {
        ordered_json j;
        j["identity"] = v.identity;
        j["indices"] = v.indices;
        j["lhs"] = v.lhs;
        j["rhs"] = v.rhs;
        arr.push_back(std::move(j));
    }
    return arr;
}

void print_matrix(const vpa::Matrix& m) {
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            width[j] = std::max(width[j], m.at(i, j).str().size());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::cout << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::string s = m.at(i, j).str();
            std::cout << (j ? " " : "") << std::string(width[j] - s.size(), ' ') << s;
        }
        std::cout << "]\n";
    }
}

int run_verify(const std::string& path, bool as_json) {
    auto parsed = load(path);
    if (std::holds_alternative<vpa::VectorProductAlgebra>(parsed)) {
        const auto& algebra = std::get<vpa::VectorProductAlgebra>(parsed);
        vpa::AxiomReport rep = vpa::check_axioms(algebra);
        if (as_json) {
            ordered_json j;
            j["kind"] = "vector_product";
            j["field"] = algebra.field().name();
            j["dim"] = algebra.dim();
            j["antisymmetry_ok"] = rep.antisymmetry_ok;
            j["nondegenerate_ok"] = rep.nondegenerate_ok;
            j["d1_ok"] = rep.d1_ok;
            j["d2_ok"] = rep.d2_ok;
            j["violations"] = violations_json(rep.violations);
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "vector product algebra over " << algebra.field().name() << ", dim "
                      << algebra.dim() << "\n";
            std::cout << "antisymmetry:   " << (rep.antisymmetry_ok ? "ok" : "FAIL") << "\n";
            std::cout << "non-degeneracy: " << (rep.nondegenerate_ok ? "ok" : "FAIL") << "\n";
            std::cout << "axiom d1:       " << (rep.d1_ok ? "ok" : "FAIL") << "\n";
            std::cout << "axiom d2:       " << (rep.d2_ok ? "ok" : "FAIL") << "\n";
            if (!rep.violations.empty()) {
                std::cout << rep.violations.size() << " violation(s):\n";
                print_violations(rep.violations);
            }
        }
        return rep.all_ok() ? 0 : 1;
    }
    const auto& algebra = std::get<vpa::UnitalCompositionAlgebra>(parsed);
    vpa::CompositionReport rep = vpa::check_composition(algebra, 100);
    if (as_json) {
        ordered_json j;
        j["kind"] = "unital_composition";
        j["field"] = algebra.field().name();
        j["dim"] = algebra.dim();
        j["unit_ok"] = rep.unit_ok;
        j["composition_ok"] = rep.composition_ok;
        j["quadruple_checks"] = rep.quadruple_checks;
        j["pair_checks"] = rep.pair_checks;
        j["random_checks"] = rep.random_checks;
        j["violations"] = violations_json(rep.violations);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "unital composition algebra over " << algebra.field().name() << ", dim "
                  << algebra.dim() << "\n";
        std::cout << "unit law:        " << (rep.unit_ok ? "ok" : "FAIL") << "\n";
        std::cout << "composition law: " << (rep.composition_ok ? "ok" : "FAIL") << " ("
                  << rep.quadruple_checks << " quadruples, " << rep.pair_checks << " pairs, "
                  << rep.random_checks << " random)\n";
        if (!rep.violations.empty()) {
            std::cout << rep.violations.size() << " violation(s):\n";
            print_violations(rep.violations);
        }
    }
    return rep.all_ok() ? 0 : 1;
}

int run_iso(const std::string& path_a, const std::string& path_b, int height_bound) {
    vpa::VectorProductAlgebra a = load_vpa(path_a);
    vpa::VectorProductAlgebra b = load_vpa(path_b);
    vpa::IsoResult result = vpa::build_isomorphism(a, b, height_bound);
    switch (result.verdict) {
    case vpa::IsoResult::Verdict::Isomorphic:
        std::cout << "Isomorphic (" << result.reason << ")\n";
        print_matrix(result.morphism->map);
        return 0;
    case vpa::IsoResult::Verdict::NotIsomorphic:
        std::cout << "NotIsomorphic: " << result.reason << "\n";
        return 1;
    case vpa::IsoResult::Verdict::Inconclusive:
        std::cout << "Inconclusive: " << result.reason << "\n";
        return 3;
    }
    return 2;
}

int run_forms_equiv(const std::string& path_a, const std::string& path_b, int height_bound) {
    auto gram_of = [](const vpa::ParsedAlgebra& p) {
        return std::visit([](const auto& a) { return a.gram(); }, p);
    };
    vpa::GramForm a = gram_of(load(path_a));
    vpa::GramForm b = gram_of(load(path_b));
    vpa::FormEquivalence result = vpa::equivalent_forms(a, b, height_bound);
    switch (result.verdict) {
    case vpa::FormEquivalence::Verdict::Equivalent:
        std::cout << "Equivalent (" << result.reason << ")\n";
        print_matrix(*result.witness);
        return 0;
    case vpa::FormEquivalence::Verdict::NotEquivalent:
        std::cout << "NotEquivalent: " << result.reason << "\n";
        return 1;
    case vpa::FormEquivalence::Verdict::Inconclusive:
        std::cout << "Inconclusive: " << result.reason << "\n";
        return 3;
    }
    return 2;
}

int run_obstruct(const std::string& path) {
    vpa::VectorProductAlgebra algebra = load_vpa(path);
    vpa::ObstructionReport rep = vpa::obstruction_report(algebra);
    std::cout << "doubling the 7-dim algebra with mu = 1 gives a 15-dim candidate\n";
    std::cout << "d2 violations in the candidate: " << rep.d2_violation_count << "\n";
    if (rep.first_d2) {
        std::string at;
        for (auto ix : rep.first_d2->indices) at += (at.empty() ? "" : ",") + std::to_string(ix);
        std::cout << "first d2 violation at (" << at << "): " << rep.first_d2->lhs
                  << " != " << rep.first_d2->rhs << "\n";
    }
    std::cout << "\nwith (u, v, w) a multiplicative base and z the adjoined doubler,\n"
              << "the two rewritings of u(v(wz)) evaluate to:\n";
    std::cout << "  u((wv)z) -> -((vw)u)z = " << vpa::vec_str(rep.route_left) << "\n";
    std::cout << "  (vu)(wz) -> +((vw)u)z = " << vpa::vec_str(rep.route_right) << "\n";
    std::cout << "  sum        = " << vpa::vec_str(rep.routes_sum) << "\n";
    std::cout << "  difference = " << vpa::vec_str(rep.routes_diff) << "\n";
    std::cout << (rep.bracketing_contradiction
                      ? "both would equal u(v(wz)) in an honest algebra, forcing it to vanish;\n"
                        "the difference is nonzero, so no such algebra exists\n"
                      : "NO contradiction detected\n");
    std::cout << "\nextension scan over the canonical basis:\n";
    for (const auto& [i, reason] : rep.extension_failures)
        std::cout << "  base + b" << i << ": " << reason << "\n";
    std::cout << (rep.no_extension ? "no basis vector extends the size-3 base\n"
                                   : "UNEXPECTED: an extension was found\n");
    std::cout << "\nobstruction " << (rep.demonstrated() ? "demonstrated" : "NOT demonstrated") << "\n";
    return rep.demonstrated() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact vector product algebras over Q and F_p"};
    app.require_subcommand(1);

    std::string field_arg = "Q", norms_arg, out_path;
    auto* construct = app.add_subcommand("construct", "build a standard algebra from base norms");
    construct->add_option("--field", field_arg, "ground field: Q or Fp:<p>")->capture_default_str();
    construct->add_option("--base-norms", norms_arg, "comma-separated norms of the doublers (0-3)");
    construct->add_option("-o,--output", out_path, "write the document here instead of stdout");

    std::string verify_path;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "check the defining axioms of a document");
    verify->add_option("file", verify_path)->required();
    verify->add_flag("--json", verify_json, "machine-readable report");

    std::string mul_path, mul_u, mul_v;
    auto* mul = app.add_subcommand("multiply", "multiply two vectors in a documented algebra");
    mul->add_option("file", mul_path)->required();
    mul->add_option("--u", mul_u, "left factor, comma-separated scalars")->required();
    mul->add_option("--v", mul_v, "right factor, comma-separated scalars")->required();

    std::string table_path;
    bool table_json = false;
    auto* table = app.add_subcommand("table", "print the basis multiplication table");
    table->add_option("file", table_path)->required();
    table->add_flag("--json", table_json);

    std::string hur_path, hur_out;
    bool hur_inverse = false;
    auto* hur = app.add_subcommand("hurwitz", "H(V), or its inverse with --inverse");
    hur->add_option("file", hur_path)->required();
    hur->add_option("-o,--output", hur_out);
    hur->add_flag("--inverse", hur_inverse, "take the imaginary part of a unital document");

    std::string base_path;
    auto* base_cmd = app.add_subcommand("base", "find a multiplicative base");
    base_cmd->add_option("file", base_path)->required();

    std::string iso_a, iso_b;
    int height_bound = default_height_bound();
    auto* iso = app.add_subcommand("iso", "decide isomorphism of two algebra documents");
    iso->add_option("fileA", iso_a)->required();
    iso->add_option("fileB", iso_b)->required();
    iso->add_option("--height-bound", height_bound, "rational witness search bound")
        ->check(CLI::PositiveNumber);

    auto* forms = app.add_subcommand("forms", "bilinear form utilities");
    forms->require_subcommand(1);
    std::string feq_a, feq_b;
    int feq_height_bound = default_height_bound();
    auto* feq = forms->add_subcommand("equiv", "decide equivalence of the Gram forms of two documents");
    feq->add_option("fileA", feq_a)->required();
    feq->add_option("fileB", feq_b)->required();
    feq->add_option("--height-bound", feq_height_bound, "rational witness search bound")
        ->check(CLI::PositiveNumber);

    std::string obs_path;
    auto* obs = app.add_subcommand("obstruct", "demonstrate the 15-dim doubling obstruction");
    obs->add_option("file", obs_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        if (construct->parsed()) {
            vpa::FieldSpec f = parse_field_arg(field_arg);
            auto norms = parse_scalar_csv(f, norms_arg);
            auto built = vpa::construct_standard(f, norms);
            write_output(vpa::emit_algebra(built.algebra), out_path);
            return 0;
        }
        if (verify->parsed()) return run_verify(verify_path, verify_json);
        if (mul->parsed()) {
            vpa::ParsedAlgebra parsed = load(mul_path);
            const vpa::FieldSpec f = std::visit([](const auto& a) { return a.field(); }, parsed);
            vpa::Vec u = parse_scalar_csv(f, mul_u);
            vpa::Vec v = parse_scalar_csv(f, mul_v);
            vpa::Vec product = std::visit(
                [&](const auto& a) -> vpa::Vec {
                    using T = std::decay_t<decltype(a)>;
                    if constexpr (std::is_same_v<T, vpa::VectorProductAlgebra>)
                        return vpa::multiply(a, u, v);
                    else
                        return vpa::comp_multiply(a, u, v);
                },
                parsed);
            std::cout << csv_str(product) << "\n";
            return 0;
        }
        if (table->parsed()) {
            vpa::ParsedAlgebra parsed = load(table_path);
            auto dim = std::visit([](const auto& a) { return a.dim(); }, parsed);
            auto product = [&](std::size_t i, std::size_t j) {
                return std::visit([&](const auto& a) { return a.basis_product(i, j); }, parsed);
            };
            if (table_json) {
                ordered_json rows = ordered_json::array();
                for (std::size_t i = 0; i < dim; ++i) {
                    ordered_json row = ordered_json::array();
                    for (std::size_t j = 0; j < dim; ++j) {
                        ordered_json coeffs = ordered_json::array();
                        for (const auto& c : product(i, j)) coeffs.push_back(c.str());
                        row.push_back(std::move(coeffs));
                    }
                    rows.push_back(std::move(row));
                }
                ordered_json j;
                j["dim"] = dim;
                j["products"] = std::move(rows);
                std::cout << j.dump() << "\n";
                return 0;
            }
            std::vector<std::vector<std::string>> cells(dim);
            std::vector<std::size_t> width(dim, 0);
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) {
                    cells[i].push_back(combo_str(product(i, j)));
                    width[j] = std::max(width[j], cells[i][j].size());
                }
            for (std::size_t i = 0; i < dim; ++i) {
                std::cout << "b" << i << " |";
                for (std::size_t j = 0; j < dim; ++j)
                    std::cout << " " << cells[i][j] << std::string(width[j] - cells[i][j].size(), ' ');
                std::cout << "\n";
            }
            return 0;
        }
        if (hur->parsed()) {
            vpa::ParsedAlgebra parsed = load(hur_path);
            if (hur_inverse) {
                if (!std::holds_alternative<vpa::UnitalCompositionAlgebra>(parsed))
                    throw vpa::Error(vpa::Errc::schema_error,
                                     "--inverse expects a unital composition document");
                auto v = vpa::imaginary_vpa(std::get<vpa::UnitalCompositionAlgebra>(parsed));
                write_output(vpa::emit_algebra(v), hur_out);
            } else {
                if (!std::holds_alternative<vpa::VectorProductAlgebra>(parsed))
                    throw vpa::Error(vpa::Errc::schema_error,
                                     "hurwitz expects a vector product document (use --inverse otherwise)");
                auto h = vpa::hurwitz(std::get<vpa::VectorProductAlgebra>(parsed));
                write_output(vpa::emit_algebra(h), hur_out);
            }
            return 0;
        }
        if (base_cmd->parsed()) {
            vpa::VectorProductAlgebra algebra = load_vpa(base_path);
            vpa::AxiomReport rep = vpa::check_axioms(algebra);
            if (!rep.all_ok()) {
                std::cout << "no multiplicative base: the document fails the axioms ("
                          << rep.violations.size() << " violation(s))\n";
                print_violations(rep.violations, 5);
                return 1;
            }
            vpa::MultiplicativeBase base = vpa::find_multiplicative_base(algebra);
            std::cout << "multiplicative base of size " << base.size() << ":\n";
            for (std::size_t i = 0; i < base.size(); ++i)
                std::cout << "  e" << (i + 1) << " = " << vpa::vec_str(base.elements[i])
                          << "   N = " << base.norms[i].str() << "\n";
            return 0;
        }
        if (iso->parsed()) return run_iso(iso_a, iso_b, height_bound);
        if (feq->parsed()) return run_forms_equiv(feq_a, feq_b, feq_height_bound);
        if (obs->parsed()) return run_obstruct(obs_path);
    } catch (const vpa::Error& e) {
        std::cerr << "vpa: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "vpa: internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
