#include "fisherwit/error.hpp"
#include "fisherwit/operators.hpp"
#include "fisherwit/states.hpp"
#include "fisherwit/witness.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fisherwit;

namespace {
double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }
const Complex I(0.0, 1.0);
}  // namespace

TEST(Pauli, StandardMatrices) {
    EXPECT_LT(max_abs(pauli(Axis::Z) - oracle::pauli_z()), 1e-15);
    EXPECT_LT(max_abs(pauli(Axis::X) - oracle::pauli_x()), 1e-15);
    EXPECT_LT(max_abs(pauli(Axis::Y) - oracle::pauli_y()), 1e-15);
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
        const SpectralDecomposition s = hermitian_eig(pauli(a));
        EXPECT_NEAR(s.eigenvalues(0), 1.0, 1e-15);
        EXPECT_NEAR(s.eigenvalues(1), -1.0, 1e-15);
        EXPECT_NEAR(std::abs(pauli(a).trace()), 0.0, 1e-15);
    }
}

TEST(Pauli, ParseAxis) {
    EXPECT_EQ(parse_axis("x"), Axis::X);
    EXPECT_EQ(parse_axis("Y"), Axis::Y);
    EXPECT_EQ(parse_axis("z"), Axis::Z);
    EXPECT_THROW(parse_axis("w"), ValidationError);
}

TEST(Annihilation, LadderElements) {
    ComplexMatrix two(2, 2);
    two << 0, 1, 0, 0;
    EXPECT_LT(max_abs(annihilation(2) - two), 1e-15);
    const ComplexMatrix a = annihilation(4);
    ComplexMatrix n = ComplexMatrix::Zero(4, 4);
    n.diagonal() << 0, 1, 2, 3;
    EXPECT_LT(max_abs(a.adjoint() * a - n), 1e-14);
    EXPECT_NEAR(a(2, 3).real(), std::sqrt(3.0), 1e-15);
    EXPECT_THROW(annihilation(1), ValidationError);
}

TEST(Quadratures, CanonicalCommutatorOnInterior) {
    const int d = 20;
    const ComplexMatrix x = position(d), p = momentum(d);
    const ComplexMatrix comm = x * p - p * x;
    // [x, p] = i, so -i [x, p] is the identity away from the truncation edge.
    const ComplexMatrix lhs = (-I * comm).topLeftCorner(d - 1, d - 1);
    EXPECT_LT(max_abs(lhs - ComplexMatrix::Identity(d - 1, d - 1)), 1e-12);
    EXPECT_GT(std::abs(comm(d - 1, d - 1) - I), 1.0);
}

TEST(Quadratures, MatchExplicitLadderFormulas) {
    EXPECT_LT(max_abs(position(7) - oracle::quad_x(7)), 1e-15);
    EXPECT_LT(max_abs(momentum(7) - oracle::quad_p(7)), 1e-15);
}

TEST(Quadratures, VacuumVariance) {
    const DensityMatrix vac = fock(0, 8).density();
    EXPECT_NEAR(variance(vac, position(8)), 0.5, 1e-15);
    EXPECT_NEAR(variance(vac, momentum(8)), 0.5, 1e-15);
}

TEST(Quadratures, NumberSpectrumAndErrors) {
    const SpectralDecomposition s = hermitian_eig(number(6));
    for (int k = 0; k < 6; ++k) EXPECT_NEAR(s.eigenvalues(k), 5 - k, 1e-14);
    EXPECT_THROW(position(1), ValidationError);
    EXPECT_THROW(momentum(0), ValidationError);
    EXPECT_THROW(number(1), ValidationError);
}

TEST(Factories, AllHermitian) {
    for (const ComplexMatrix& m : {pauli(Axis::X), pauli(Axis::Y), pauli(Axis::Z), position(9), momentum(9), number(9)}) {
        EXPECT_LT(hermitian_residual(m), 1e-12);
    }
}

TEST(SpinSet, Structure) {
    const LocalOperatorSet s = spin_set(3);
    EXPECT_EQ(s.parties(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
        ASSERT_EQ(s.party(i).size(), 3u);
        for (const auto& op : s.party(i)) {
            EXPECT_NEAR(std::abs(op.trace()), 0.0, 1e-15);
            EXPECT_LT(max_abs(op * op - ComplexMatrix::Identity(2, 2) / 4.0), 1e-15);
        }
    }
    EXPECT_EQ(s.layout().total(), 9);
    EXPECT_THROW(spin_set(0), ValidationError);
}

TEST(SpinSet, SuAlgebra) {
    const LocalOperatorSet s = spin_set(1);
    const ComplexMatrix& sx = s.op(0, 0);
    const ComplexMatrix& sy = s.op(0, 1);
    const ComplexMatrix& sz = s.op(0, 2);
    EXPECT_LT(max_abs(sx * sy - sy * sx - I * sz), 1e-15);
}

TEST(QuadratureSet, Structure) {
    const LocalOperatorSet r = quadrature_set({5, 7});
    EXPECT_EQ(r.layout().sizes, (std::vector<int>{2, 2}));
    EXPECT_EQ(r.structure(), (HilbertStructure{5, 7}));
    for (std::size_t i = 0; i < 2; ++i)
        for (const auto& op : r.party(i)) EXPECT_LT(hermitian_residual(op), 1e-15);
    const DensityMatrix vac = fock(0, 5).density();
    const LocalOperatorSet one = quadrature_set({5});
    EXPECT_NEAR(variance(vac, one.op(0, 0)), 0.5, 1e-15);
    EXPECT_NEAR(variance(vac, one.op(0, 1)), 0.5, 1e-15);
    EXPECT_THROW(quadrature_set({1, 4}), ValidationError);
    EXPECT_THROW(quadrature_set({}), ValidationError);
}

TEST(CustomSet, HybridAcceptedAndValidated) {
    const LocalOperatorSet h = custom_set(HilbertStructure{2, 10}, {{pauli(Axis::X)}, {position(10)}});
    EXPECT_EQ(h.layout().total(), 2);
    EXPECT_EQ(h.label(1, 0), "A1_0");

    ComplexMatrix bad(2, 2);
    bad << 0, 1, 0, 0;
    EXPECT_THROW(custom_set(HilbertStructure{2, 10}, {{bad}, {position(10)}}), ValidationError);
    EXPECT_THROW(custom_set(HilbertStructure{2, 10}, {{pauli(Axis::X)}, {}}), ValidationError);
    EXPECT_THROW(custom_set(HilbertStructure{2, 10}, {{pauli(Axis::X)}, {position(9)}}), ValidationError);
    EXPECT_THROW(custom_set(HilbertStructure{2, 10}, {{pauli(Axis::X)}}), ValidationError);
}

TEST(CoefficientVector, Validation) {
    EXPECT_THROW(CoefficientVector({{0.0, 0.0}, {0.0}}), ValidationError);
    EXPECT_THROW(CoefficientVector({}), ValidationError);
    EXPECT_THROW(CoefficientVector({{1.0}, {}}), ValidationError);
    const CoefficientVector c({{1.0, 2.0}, {3.0}});
    EXPECT_EQ(c.flat().size(), 3);
    EXPECT_THROW(c.check_conformal(quadrature_set({3, 3})), ValidationError);
    EXPECT_NO_THROW(CoefficientVector({{1.0, 2.0}, {3.0, 0.0}}).check_conformal(quadrature_set({3, 3})));
}

TEST(CollectiveGenerator, CollectiveSpinZ) {
    const LocalOperatorSet s = spin_set(2);
    const ComplexMatrix jz = collective_generator(s, CoefficientVector({{0, 0, 1}, {0, 0, 1}}));
    const ComplexMatrix z = oracle::pauli_z();
    const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    const ComplexMatrix expected = (oracle::kron(z, id) + oracle::kron(id, z)) / 2.0;
    EXPECT_LT(max_abs(jz - expected), 1e-15);
    ComplexMatrix diag = ComplexMatrix::Zero(4, 4);
    diag.diagonal() << 1, 0, 0, -1;
    EXPECT_LT(max_abs(jz - diag), 1e-15);
}

TEST(CollectiveGenerator, SumOfPositions) {
    const LocalOperatorSet r = quadrature_set({4, 5});
    const ComplexMatrix x = collective_generator(r, CoefficientVector({{1, 0}, {1, 0}}));
    const ComplexMatrix expected = oracle::kron(position(4), ComplexMatrix::Identity(5, 5)) +
                                   oracle::kron(ComplexMatrix::Identity(4, 4), position(5));
    EXPECT_LT(max_abs(x - expected), 1e-14);
}

TEST(CollectiveGenerator, SingleSite) {
    const LocalOperatorSet s = spin_set(3);
    const ComplexMatrix g = collective_generator(s, CoefficientVector({{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
    EXPECT_LT(max_abs(g - oracle::embed(pauli(Axis::Y) / 2.0, 1, {2, 2, 2})), 1e-15);
    EXPECT_THROW(collective_generator(s, CoefficientVector({{1, 0, 0}, {0, 1, 0}})), ValidationError);
}

TEST(CollectiveGenerator, Linearity) {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> n;
    const LocalOperatorSet s = custom_set(HilbertStructure{2, 3},
                                          {{pauli(Axis::X), pauli(Axis::Z)}, {position(3), momentum(3), number(3)}});
    for (int trial = 0; trial < 20; ++trial) {
        const CoefficientVector a({{n(rng), n(rng)}, {n(rng), n(rng), n(rng)}});
        const CoefficientVector b({{n(rng), n(rng)}, {n(rng), n(rng), n(rng)}});
        const CoefficientVector sum = CoefficientVector::from_flat(s.layout(), a.flat() + b.flat());
        EXPECT_LT(max_abs(collective_generator(s, sum) - collective_generator(s, a) - collective_generator(s, b)),
                  1e-12);
    }
}
