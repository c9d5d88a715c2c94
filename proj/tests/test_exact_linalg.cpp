#include <catch2/catch_amalgamated.hpp>

#include "prg/exact_matrix.hpp"
#include "prg/pauli.hpp"

using namespace prg;

namespace {

StateVector vec(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return {{GaussianInt{a}, GaussianInt{b}, GaussianInt{c}, GaussianInt{d}}};
}

}  // namespace

TEST_CASE("matrix shape errors", "[linalg]") {
    const ExactMatrix a(2, 3), b(2, 3);
    CHECK_THROWS_AS(matmul(a, b), std::invalid_argument);
    CHECK_THROWS_AS(a + ExactMatrix(3, 2), std::invalid_argument);
}

TEST_CASE("identity is neutral for matmul", "[linalg]") {
    ExactMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            m.at(i, j) = GaussianRational{GaussianInt{static_cast<std::int64_t>(i + 2 * j), 1}};
    CHECK(matmul(ExactMatrix::identity(4), m) == m);
    CHECK(matmul(m, ExactMatrix::identity(4)) == m);
}

TEST_CASE("tensor product blocks", "[linalg]") {
    ExactMatrix a(2, 2), b(2, 2);
    a.at(0, 1) = GaussianRational{1};  // X-like
    a.at(1, 0) = GaussianRational{1};
    b.at(0, 0) = GaussianRational{1};
    b.at(1, 1) = GaussianRational{-1};
    const ExactMatrix t = tensor(a, b);
    REQUIRE(t.rows() == 4);
    // left factor indexes coarse blocks: t[(0,1),(2,3)] block = b
    CHECK(t.at(0, 2) == GaussianRational{1});
    CHECK(t.at(1, 3) == GaussianRational{-1});
    CHECK(t.at(0, 0).is_zero());
    CHECK(t.trace().is_zero());
}

TEST_CASE("inner product is conjugate-linear on the left", "[linalg]") {
    const StateVector u = {{GaussianInt{1, 1}, GaussianInt{0}, GaussianInt{2}, GaussianInt{0, -1}}};
    const StateVector v = {{GaussianInt{0, 1}, GaussianInt{3}, GaussianInt{1}, GaussianInt{1, 1}}};
    CHECK(inner(u, v) == inner(v, u).conj());
    CHECK(inner(u, u) == GaussianInt{u.norm2()});
}

TEST_CASE("schmidt rank distinguishes product from entangled states", "[linalg]") {
    CHECK(schmidt_rank(vec(1, 0, 0, 0)) == 1);
    CHECK(schmidt_rank(vec(1, 1, 1, 1)) == 1);   // (|0>+|1>) x (|0>+|1>)
    CHECK(schmidt_rank(vec(1, 0, 0, 1)) == 2);   // Bell state
    CHECK(schmidt_rank(vec(0, 1, -1, 0)) == 2);
    CHECK_THROWS_AS(schmidt_rank(vec(0, 0, 0, 0)), std::invalid_argument);
}

TEST_CASE("canonical vector is primitive and unit-orbit stable", "[linalg]") {
    CHECK(canonical_vector(vec(2, 0, 0, 2)) == vec(1, 0, 0, 1));
    CHECK(canonical_vector(vec(-1, 0, 0, -1)) == vec(1, 0, 0, 1));
    // multiplying by any unit must not change the canonical form
    const StateVector base = {{GaussianInt{0}, GaussianInt{1}, GaussianInt{0, -1}, GaussianInt{0}}};
    const StateVector canon = canonical_vector(base);
    for (const auto& u : kUnits) {
        StateVector scaled = base;
        for (auto& x : scaled.e) x = x * u;
        CHECK(canonical_vector(scaled) == canon);
    }
    // the common gaussian factor (1+i) divides out
    StateVector mixed = base;
    for (auto& x : mixed.e) x = x * GaussianInt{1, 1};
    CHECK(canonical_vector(mixed) == canon);
    CHECK_THROWS_AS(canonical_vector(vec(0, 0, 0, 0)), std::invalid_argument);
}

TEST_CASE("joint eigenbasis of a commuting pair", "[linalg]") {
    // diagonal pair: eigenvectors are the computational basis states
    const auto basis = joint_eigenbasis(op_matrix(1), op_matrix(2), op_matrix(3));
    REQUIRE(basis.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            CHECK(inner(basis[i].first, basis[j].first).is_zero());
    // signature order is (++), (+-), (-+), (--) in the first two slots
    CHECK(basis[0].second == SignSignature{{+1, +1, +1}});
    CHECK(basis[3].second == SignSignature{{-1, -1, +1}});
    CHECK(basis[0].first == vec(1, 0, 0, 0));
    CHECK(basis[3].first == vec(0, 0, 0, 1));
}

TEST_CASE("joint eigenbasis rejects non-commuting inputs", "[linalg]") {
    // labels 1 and 4 commute, 1 and 5 do not
    CHECK_THROWS_AS(joint_eigenbasis(op_matrix(1), op_matrix(5), op_matrix(3)),
                    std::invalid_argument);
}

TEST_CASE("unbiasedness check", "[linalg]") {
    const std::vector<StateVector> computational = {vec(1, 0, 0, 0), vec(0, 1, 0, 0),
                                                    vec(0, 0, 1, 0), vec(0, 0, 0, 1)};
    const std::vector<StateVector> hadamard = {vec(1, 1, 1, 1), vec(1, -1, 1, -1),
                                               vec(1, 1, -1, -1), vec(1, -1, -1, 1)};
    CHECK(is_unbiased_pair(computational, hadamard));
    // a basis is never unbiased with respect to itself
    CHECK_FALSE(is_unbiased_pair(computational, computational));
    // non-orthogonal input is a usage error, not a "false"
    const std::vector<StateVector> skew = {vec(1, 0, 0, 0), vec(1, 1, 0, 0),
                                           vec(0, 0, 1, 0), vec(0, 0, 0, 1)};
    CHECK_THROWS_AS(is_unbiased_pair(skew, hadamard), std::invalid_argument);
    CHECK_THROWS_AS(is_unbiased_pair({vec(1, 0, 0, 0)}, hadamard), std::invalid_argument);
}
