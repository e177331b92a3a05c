#include <doctest.h>

#include "test_util.hpp"

using namespace vpa;
using testutil::classical_cross;
using testutil::F;
using testutil::Q;
using testutil::S;
using testutil::scalars;
using testutil::V;

TEST_CASE("extend_base_morphism") {
    auto cross = classical_cross(Q());
    auto e = [&](std::size_t i) { return vec_unit(Q(), 3, i); };
    MultiplicativeBase base{{e(0), e(1)}, scalars(Q(), {"1", "1"})};

    // identity images extend to the identity matrix
    Morphism ident = extend_base_morphism(cross, base, cross, {e(0), e(1)});
    CHECK(ident.map == Matrix::identity(Q(), 3));

    // (e0, e1) -> (e1, e2) extends to the cyclic rotation
    Morphism rot = extend_base_morphism(cross, base, cross, {e(1), e(2)});
    CHECK(rot.map.col(0) == e(1));
    CHECK(rot.map.col(1) == e(2));
    CHECK(rot.map.col(2) == e(0)); // e0 e1 = e2 maps to e1 e2 = e0
    CHECK(verify_morphism(rot).all_ok());

    // composing verified morphisms stays a verified morphism
    Morphism twice{cross, cross, rot.map * rot.map};
    CHECK(verify_morphism(twice).all_ok());

    // norm mismatch and dependent images are rejected
    CHECK_THROWS_AS(extend_base_morphism(cross, base, cross, {vec_scaled(S(Q(), "2"), e(0)), e(1)}),
                    Error);
    CHECK_THROWS_AS(extend_base_morphism(cross, base, cross, {e(1), e(1)}), Error);
}

TEST_CASE("extend_base_morphism into a larger algebra") {
    // a size-2 base of the cross product maps onto two doublers of the
    // 7-dim algebra; the extension is a non-square orthogonal embedding
    auto cross = classical_cross(Q());
    auto seven = construct_standard(Q(), scalars(Q(), {"1", "1", "1"}));
    MultiplicativeBase base{{vec_unit(Q(), 3, 0), vec_unit(Q(), 3, 1)}, scalars(Q(), {"1", "1"})};
    Morphism embed = extend_base_morphism(cross, base, seven.algebra,
                                          {seven.base.elements[0], seven.base.elements[1]});
    CHECK(embed.map.rows() == 7);
    CHECK(embed.map.cols() == 3);
    CHECK(verify_morphism(embed).all_ok());
}

TEST_CASE("extend_base_morphism preserves subset norms") {
    auto built = construct_standard(F(7), scalars(F(7), {"1", "2", "3"}));
    auto base = find_multiplicative_base(built.algebra);
    Morphism m = extend_base_morphism(built.algebra, base, built.algebra, base.elements);
    for (std::size_t mask = 1; mask < (std::size_t{1} << base.size()); ++mask) {
        std::vector<Vec> subset;
        for (std::size_t i = 0; i < base.size(); ++i)
            if (mask & (std::size_t{1} << i)) subset.push_back(base.elements[i]);
        Vec pi = pi_product(built.algebra, subset);
        CHECK(built.algebra.gram().quad(m.map * pi) == built.algebra.gram().quad(pi));
    }
}

TEST_CASE("verify_morphism catches non-morphisms") {
    auto cross = classical_cross(Q());
    CHECK(verify_morphism({cross, cross, Matrix::identity(Q(), 3)}).all_ok());

    // negation is orthogonal but not multiplicative: (-u)(-v) = uv != -(uv)
    Matrix neg(Q(), 3, 3);
    for (std::size_t i = 0; i < 3; ++i) neg.at(i, i) = S(Q(), "-1");
    MorphismCheck check = verify_morphism({cross, cross, std::move(neg)});
    CHECK(check.orthogonal_ok);
    CHECK_FALSE(check.multiplicative_ok);
    CHECK_FALSE(check.violations.empty());
}

TEST_CASE("build_isomorphism on identical and scaled algebras") {
    auto cross = classical_cross(Q());
    IsoResult self = build_isomorphism(cross, cross);
    REQUIRE(self.verdict == IsoResult::Verdict::Isomorphic);
    CHECK(verify_morphism(*self.morphism).all_ok());

    // trivial algebras
    auto t = VectorProductAlgebra::trivial(F(5));
    CHECK(build_isomorphism(t, t).verdict == IsoResult::Verdict::Isomorphic);

    // F_7, norms (1,1) vs (2,2): gram diag(1,1,1) vs diag(2,2,4), both
    // discriminants are squares mod 7, tandem construction succeeds
    auto a = construct_standard(F(7), scalars(F(7), {"1", "1"})).algebra;
    auto b = construct_standard(F(7), scalars(F(7), {"2", "2"})).algebra;
    CHECK(b.gram() == GramForm::diagonal(F(7), scalars(F(7), {"2", "2", "4"})));
    IsoResult iso = build_isomorphism(a, b);
    REQUIRE(iso.verdict == IsoResult::Verdict::Isomorphic);
    CHECK(verify_morphism(*iso.morphism).all_ok());
}

TEST_CASE("build_isomorphism negatives and inconclusives") {
    // dimension mismatch
    auto cross = classical_cross(Q());
    auto one = construct_standard(Q(), scalars(Q(), {"1"})).algebra;
    CHECK(build_isomorphism(cross, one).verdict == IsoResult::Verdict::NotIsomorphic);

    // dim-1 over F_5 with norms 1 vs 2: discriminant square classes differ
    auto a5 = construct_standard(F(5), scalars(F(5), {"1"})).algebra;
    auto b5 = construct_standard(F(5), scalars(F(5), {"2"})).algebra;
    IsoResult no = build_isomorphism(a5, b5);
    CHECK(no.verdict == IsoResult::Verdict::NotIsomorphic);

    // over Q, definite vs indefinite dim-1 algebras separate by signature
    auto pos = construct_standard(Q(), scalars(Q(), {"1"})).algebra;
    auto negv = construct_standard(Q(), scalars(Q(), {"-1"})).algebra;
    CHECK(build_isomorphism(pos, negv).verdict == IsoResult::Verdict::NotIsomorphic);

    // norms (1,1) vs (2,2) over Q: isomorphic, found within the default bound
    auto q1 = construct_standard(Q(), scalars(Q(), {"1", "1"})).algebra;
    auto q2 = construct_standard(Q(), scalars(Q(), {"2", "2"})).algebra;
    IsoResult qiso = build_isomorphism(q1, q2);
    REQUIRE(qiso.verdict == IsoResult::Verdict::Isomorphic);
    CHECK(verify_morphism(*qiso.morphism).all_ok());

    // norms (1,1) vs (3,3) over Q: invariants agree but 3x^2 + 3y^2 = 1 has
    // no rational point, so the bounded search is honestly inconclusive
    auto q3 = construct_standard(Q(), scalars(Q(), {"3", "3"})).algebra;
    CHECK(build_isomorphism(q1, q3).verdict == IsoResult::Verdict::Inconclusive);

    // non-algebras are rejected up front
    auto tampered = classical_cross(Q());
    tampered.set_structure(0, 1, 2, S(Q(), "2"));
    CHECK_THROWS_AS(build_isomorphism(tampered, cross), Error);
}

TEST_CASE("three-way agreement over F_3, dims 1 and 3") {
    // build_isomorphism <=> equivalent_forms <=> brute force witness, over
    // every pair of constructible algebras
    auto f3 = F(3);
    std::vector<VectorProductAlgebra> algebras;
    for (const auto& texts : std::vector<std::vector<std::string>>{{"1"}, {"2"}})
        algebras.push_back(construct_standard(f3, scalars(f3, texts)).algebra);
    for (const auto& texts :
         std::vector<std::vector<std::string>>{{"1", "1"}, {"1", "2"}, {"2", "1"}, {"2", "2"}})
        algebras.push_back(construct_standard(f3, scalars(f3, texts)).algebra);

    for (const auto& a : algebras)
        for (const auto& b : algebras) {
            if (a.dim() != b.dim()) continue;
            IsoResult iso = build_isomorphism(a, b);
            bool is_iso = iso.verdict == IsoResult::Verdict::Isomorphic;
            bool forms_eq = equivalent_forms(a.gram(), b.gram()).verdict ==
                            FormEquivalence::Verdict::Equivalent;
            bool oracle = brute_force_isometry(a.gram(), b.gram()).has_value();
            CHECK(is_iso == forms_eq);
            CHECK(is_iso == oracle);
            if (is_iso) CHECK(verify_morphism(*iso.morphism).all_ok());
        }
}

TEST_CASE("obstruction report") {
    auto seven = construct_standard(F(7), scalars(F(7), {"1", "1", "1"})).algebra;
    ObstructionReport rep = obstruction_report(seven);
    CHECK(rep.d2_violation_count > 0);
    REQUIRE(rep.first_d2.has_value());
    CHECK(rep.first_d2->identity == "d2");
    CHECK(vec_is_zero(rep.routes_sum));
    CHECK(rep.bracketing_contradiction);
    CHECK(rep.route_left == vec_neg(rep.route_right));
    CHECK(rep.no_extension);
    CHECK(rep.extension_failures.size() == 7);
    CHECK(rep.demonstrated());

    CHECK_THROWS_AS(obstruction_report(classical_cross(Q())), Error); // wrong dimension
    try {
        obstruction_report(classical_cross(Q()));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::bad_dimension);
    }
}
