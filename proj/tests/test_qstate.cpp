#include "qclone/qstate.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace qclone;

TEST_CASE("kron follows the most-significant-left convention") {
    Vec a(2), b(2);
    a << 1.0, 2.0;
    b << 3.0, 4.0;
    const Vec k = kron(a, b);
    REQUIRE(k.size() == 4);
    CHECK(k(0) == Complex(3.0));
    CHECK(k(1) == Complex(4.0));
    CHECK(k(2) == Complex(6.0));
    CHECK(k(3) == Complex(8.0));
}

TEST_CASE("ket construction enforces normalization") {
    Vec bad(2);
    bad << 1.0, 1.0;
    CHECK_THROWS_AS(Ket{bad}, StateError);
    CHECK_THROWS_AS(Ket{Vec{}}, DimensionError);
    CHECK_NOTHROW(Ket::basis(4, 3));
    CHECK_THROWS_AS(Ket::basis(4, 4), DimensionError);
}

TEST_CASE("input_state amplitudes") {
    const double beta = 0.6;
    const Ket psi = Ket::input_state(beta, 0.25);
    CHECK(std::abs(psi[0] - Complex(0.8)) < 1e-15);
    CHECK(std::abs(psi[1] - std::polar(0.6, 0.25)) < 1e-15);
    CHECK_THROWS_AS(Ket::input_state(1.5), StateError);
    CHECK_THROWS_AS(Ket::input_state(-0.1), StateError);
}

TEST_CASE("density matrix invariants are enforced") {
    Mat not_hermitian = Mat::Zero(2, 2);
    not_hermitian(0, 0) = 0.5;
    not_hermitian(1, 1) = 0.5;
    not_hermitian(0, 1) = 0.3;
    CHECK_THROWS_AS(DensityMatrix{not_hermitian}, StateError);

    Mat bad_trace = 0.5 * Mat::Identity(2, 2);
    bad_trace(1, 1) = 0.4;
    CHECK_THROWS_AS(DensityMatrix{bad_trace}, StateError);

    Mat not_psd = Mat::Identity(2, 2);
    not_psd(0, 0) = 1.2;
    not_psd(1, 1) = -0.2;
    CHECK_THROWS_AS(DensityMatrix{not_psd}, StateError);

    CHECK_NOTHROW(DensityMatrix{0.25 * Mat::Identity(4, 4)});
}

TEST_CASE("partial trace of a product state recovers the factors") {
    auto rng = test_helpers::make_rng(11);
    const Ket a{test_helpers::random_unit(rng, 2)};
    const Ket b{test_helpers::random_unit(rng, 3)};
    const DensityMatrix rho = tensor(DensityMatrix::pure(a), DensityMatrix::pure(b));
    const DensityMatrix ra = partial_trace(rho, 0, {2, 3});
    const DensityMatrix rb = partial_trace(rho, 1, {2, 3});
    CHECK((ra.entries() - DensityMatrix::pure(a).entries()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((rb.entries() - DensityMatrix::pure(b).entries()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("partial trace composes across factorizations") {
    auto rng = test_helpers::make_rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const Ket psi{test_helpers::random_unit(rng, 12)};
        const DensityMatrix rho = DensityMatrix::pure(psi);
        // Tracing to {0,1} then to {0} must match tracing straight to {0}.
        const DensityMatrix two = partial_trace(rho, {0, 1}, {2, 2, 3});
        const DensityMatrix one_via_two = partial_trace(two, 0, {2, 2});
        const DensityMatrix one = partial_trace(rho, 0, {2, 2, 3});
        CHECK((one_via_two.entries() - one.entries()).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("partial trace rejects malformed subsystem specs") {
    const DensityMatrix rho{0.25 * Mat::Identity(4, 4)};
    CHECK_THROWS_AS(partial_trace(rho, 0, {2, 3}), DimensionError);
    CHECK_THROWS_AS(partial_trace(rho, {1, 0}, {2, 2}), DimensionError);
    CHECK_THROWS_AS(partial_trace(rho, 2, {2, 2}), DimensionError);
}

TEST_CASE("overlap of pure states is the squared inner product") {
    auto rng = test_helpers::make_rng(13);
    const Ket a{test_helpers::random_unit(rng, 4)};
    const Ket b{test_helpers::random_unit(rng, 4)};
    const double got = overlap(DensityMatrix::pure(a), DensityMatrix::pure(b));
    const double expected = std::norm(a.amplitudes().dot(b.amplitudes()));
    CHECK(std::abs(got - expected) < 1e-12);
}

TEST_CASE("bloch vector of the parameterized input state") {
    const double beta = 0.6;
    const double phase = 1.1;
    const double alpha = 0.8;
    const auto s = bloch_vector(DensityMatrix::pure(Ket::input_state(beta, phase)));
    CHECK(std::abs(s(0) - 2.0 * alpha * beta * std::cos(phase)) < 1e-12);
    CHECK(std::abs(s(1) - 2.0 * alpha * beta * std::sin(phase)) < 1e-12);
    CHECK(std::abs(s(2) - (alpha * alpha - beta * beta)) < 1e-12);
    CHECK(std::abs(s.norm() - 1.0) < 1e-12);
}

TEST_CASE("bloch decomposition round-trips random two-qubit states") {
    auto rng = test_helpers::make_rng(14);
    for (int trial = 0; trial < 50; ++trial) {
        const DensityMatrix rho = test_helpers::random_two_qubit_mixed(rng);
        const Mat back = bloch_reconstruct(bloch_decompose(rho));
        CHECK((back - rho.entries()).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("bloch helpers reject wrong dimensions") {
    const DensityMatrix qubit{0.5 * Mat::Identity(2, 2)};
    const DensityMatrix two{0.25 * Mat::Identity(4, 4)};
    CHECK_THROWS_AS(bloch_vector(two), DimensionError);
    CHECK_THROWS_AS(bloch_decompose(qubit), DimensionError);
}
