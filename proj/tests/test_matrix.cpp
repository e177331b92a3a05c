#include <doctest.h>

#include "test_util.hpp"

using namespace vpa;
using testutil::F;
using testutil::Q;
using testutil::S;
using testutil::V;

TEST_CASE("determinant") {
    Matrix m(Q(), 2, 2);
    m.at(0, 0) = S(Q(), "1");
    m.at(0, 1) = S(Q(), "2");
    m.at(1, 0) = S(Q(), "3");
    m.at(1, 1) = S(Q(), "4");
    CHECK(m.determinant() == S(Q(), "-2"));
    CHECK(Matrix(Q(), 0, 0).determinant() == Scalar::one(Q())); // empty product
    CHECK(Matrix::identity(F(5), 3).determinant() == Scalar::one(F(5)));
    Matrix sing(F(5), 2, 2);
    sing.at(0, 0) = S(F(5), "2");
    sing.at(0, 1) = S(F(5), "4");
    sing.at(1, 0) = S(F(5), "1");
    sing.at(1, 1) = S(F(5), "2");
    CHECK(sing.determinant().is_zero());
}

TEST_CASE("inverse round trip on random matrices") {
    std::mt19937_64 rng(99);
    for (auto f : {Q(), F(7)}) {
        for (int iter = 0; iter < 30; ++iter) {
            const std::size_t n = 1 + rng() % 4;
            Matrix m(f, n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_scalar(f, rng);
            auto inv = m.inverse();
            if (m.determinant().is_zero()) {
                CHECK_FALSE(inv.has_value());
            } else {
                REQUIRE(inv.has_value());
                CHECK(m * *inv == Matrix::identity(f, n));
                CHECK(*inv * m == Matrix::identity(f, n));
            }
        }
    }
}

TEST_CASE("kernel") {
    Matrix m = Matrix::from_rows(Q(), {V(Q(), {"1", "1", "0"})}, 3);
    auto basis = m.kernel();
    Subspace got(Q(), 3, basis);
    Subspace expect(Q(), 3, {V(Q(), {"1", "-1", "0"}), V(Q(), {"0", "0", "1"})});
    CHECK(got == expect);
    CHECK(Matrix::identity(Q(), 3).kernel().empty());
}

TEST_CASE("rref span") {
    auto rows = rref_basis(Q(), {V(Q(), {"2", "4", "0"}), V(Q(), {"1", "2", "0"}),
                                 V(Q(), {"0", "0", "3"})},
                           3);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == V(Q(), {"1", "2", "0"}));
    CHECK(rows[1] == V(Q(), {"0", "0", "1"}));
    CHECK(in_rref_span(rows, V(Q(), {"3", "6", "-5"})));
    CHECK_FALSE(in_rref_span(rows, V(Q(), {"0", "1", "0"})));
}
