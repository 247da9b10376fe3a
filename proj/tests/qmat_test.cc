// Copyright 2026 The transmon-grover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "test_util.h"
#include "tgrover/errors.h"
#include "tgrover/qmat.h"
#include "tgrover/tolerances.h"

using namespace tgrover;
using namespace tgrover::testing;

namespace {

ComplexMatrix projector(std::size_t k) {
    ComplexMatrix m(4);
    m(k, k) = 1.0;
    return m;
}

}  // namespace

TEST(qmat, tensor_product_examples) {
    EXPECT_EQ(tensor_product(pauli_matrix(Pauli::I), pauli_matrix(Pauli::I)), ComplexMatrix::identity(4));

    const ComplexMatrix zi = tensor_product(pauli_matrix(Pauli::Z), pauli_matrix(Pauli::I));
    const Complex diag[] = {1.0, 1.0, -1.0, -1.0};
    EXPECT_EQ(zi, ComplexMatrix::diagonal(diag));

    // sigma_y (x) sigma_y is real: anti-diagonal (-1, 1, 1, -1).
    const ComplexMatrix yy = tensor_product(pauli_matrix(Pauli::Y), pauli_matrix(Pauli::Y));
    ComplexMatrix expected(4);
    expected(0, 3) = -1.0;
    expected(1, 2) = 1.0;
    expected(2, 1) = 1.0;
    expected(3, 0) = -1.0;
    expect_matrix_near(yy, expected, 0.0);
}

TEST(qmat, tensor_product_rejects_bad_dimensions) {
    EXPECT_THROW(tensor_product(ComplexMatrix(4), ComplexMatrix(2)), std::invalid_argument);
    EXPECT_THROW(tensor_product(ComplexMatrix(2), ComplexMatrix(4)), std::invalid_argument);
    EXPECT_THROW(ComplexMatrix(3), std::invalid_argument);
}

TEST(qmat, tensor_product_matches_index_formula) {
    for (int trial = 0; trial < 50; ++trial) {
        const ComplexMatrix a = random_complex(2);
        const ComplexMatrix b = random_complex(2);
        expect_matrix_near(tensor_product(a, b), kron_oracle(a, b), 1e-15);
    }
}

TEST(qmat, embed_places_operator_on_target) {
    const ComplexMatrix x = pauli_matrix(Pauli::X);
    EXPECT_EQ(embed(x, Qubit::I), pauli_operator({Pauli::X, Pauli::I}));
    EXPECT_EQ(embed(x, Qubit::II), pauli_operator({Pauli::I, Pauli::X}));
}

TEST(qmat, pauli_operators_square_to_identity_and_are_traceless) {
    for (const PauliLabel &label : all_pauli_labels()) {
        const ComplexMatrix p = pauli_operator(label);
        EXPECT_LE((p * p).max_abs_diff(ComplexMatrix::identity(4)), 1e-15) << label.str();
        EXPECT_TRUE(p.is_hermitian(0.0)) << label.str();
        EXPECT_NEAR(std::abs(p.trace()), label.is_identity() ? 4.0 : 0.0, 1e-15) << label.str();
    }
}

TEST(qmat, pauli_operators_are_orthogonal) {
    for (const PauliLabel &a : all_pauli_labels()) {
        for (const PauliLabel &b : all_pauli_labels()) {
            const Complex ip = (pauli_operator(a) * pauli_operator(b)).trace();
            EXPECT_NEAR(std::abs(ip), a == b ? 4.0 : 0.0, 1e-15);
        }
    }
}

TEST(qmat, pauli_label_parse_and_sets) {
    for (const PauliLabel &label : all_pauli_labels()) {
        EXPECT_EQ(PauliLabel::parse(label.str()), label);
    }
    EXPECT_EQ(PauliLabel::parse("XY"), (PauliLabel{Pauli::X, Pauli::Y}));
    EXPECT_THROW(PauliLabel::parse("XQ"), std::invalid_argument);
    EXPECT_THROW(PauliLabel::parse("X"), std::invalid_argument);

    std::set<PauliLabel> distinct(extended_pauli_set().begin(), extended_pauli_set().end());
    EXPECT_EQ(distinct.size(), 15u);
    EXPECT_EQ(distinct.count(PauliLabel{}), 0u);
}

TEST(qmat, pauli_completeness_reconstructs_random_states) {
    for (int trial = 0; trial < 100; ++trial) {
        const DensityMatrix rho = random_density_matrix();
        ComplexMatrix rebuilt = ComplexMatrix::identity(4) * Complex{0.25};
        for (const PauliLabel &label : extended_pauli_set()) {
            rebuilt += pauli_operator(label) * Complex{expectation(rho, label) / 4.0};
        }
        EXPECT_LE(rebuilt.max_abs_diff(rho.matrix()), 1e-12);
    }
}

TEST(qmat, apply_unitary_examples) {
    const ComplexMatrix xi = pauli_operator({Pauli::X, Pauli::I});
    const DensityMatrix out = apply_unitary(DensityMatrix::basis(0), xi);
    EXPECT_EQ(out.matrix(), projector(2));

    EXPECT_THROW(apply_unitary(DensityMatrix::basis(0), ComplexMatrix::identity(4) * Complex{2.0}),
                 std::invalid_argument);
    EXPECT_THROW(apply_unitary(DensityMatrix::basis(0), ComplexMatrix::identity(2)), std::invalid_argument);
}

TEST(qmat, apply_unitary_preserves_spectrum) {
    for (int trial = 0; trial < 100; ++trial) {
        const DensityMatrix rho = random_density_matrix();
        const ComplexMatrix u = random_unitary();
        const DensityMatrix out = apply_unitary(rho, u);
        EXPECT_NEAR(out.matrix().trace().real(), 1.0, 1e-12);
        const auto before = hermitian_eigen(rho.matrix()).values;
        const auto after = hermitian_eigen(out.matrix()).values;
        for (std::size_t k = 0; k < 4; ++k) {
            EXPECT_NEAR(before[k], after[k], 1e-12);
        }
    }
}

TEST(qmat, expectation_examples) {
    EXPECT_EQ(expectation(DensityMatrix::basis(0), {Pauli::Z, Pauli::Z}), 1.0);
    EXPECT_EQ(expectation(DensityMatrix::basis(1), {Pauli::Z, Pauli::Z}), -1.0);
    EXPECT_EQ(expectation(DensityMatrix::basis(1), {Pauli::Z, Pauli::I}), 1.0);
    EXPECT_EQ(expectation(DensityMatrix::basis(1), {Pauli::I, Pauli::Z}), -1.0);
    EXPECT_NEAR(expectation(DensityMatrix::maximally_mixed(), {Pauli::X, Pauli::Y}), 0.0, 1e-16);

    // |phi> = uniform superposition: <XX> = <XI> = <IX> = 1.
    const DensityMatrix phi = DensityMatrix::from_pure(PureState::normalized({1.0, 1.0, 1.0, 1.0}));
    EXPECT_NEAR(expectation(phi, {Pauli::X, Pauli::X}), 1.0, 1e-15);
    EXPECT_NEAR(expectation(phi, {Pauli::X, Pauli::I}), 1.0, 1e-15);
    EXPECT_NEAR(expectation(phi, {Pauli::Z, Pauli::I}), 0.0, 1e-15);
}

TEST(qmat, expectation_bounded_by_one) {
    for (int trial = 0; trial < 100; ++trial) {
        const DensityMatrix rho = random_density_matrix();
        for (const PauliLabel &label : all_pauli_labels()) {
            EXPECT_LE(std::abs(expectation(rho, label)), 1.0 + 1e-12);
        }
    }
}

TEST(qmat, fidelity_and_trace_distance_examples) {
    const PureState zero = PureState::basis(4, 0);
    EXPECT_NEAR(state_fidelity(DensityMatrix::basis(0), zero), 1.0, 1e-15);
    EXPECT_NEAR(state_fidelity(DensityMatrix::basis(3), zero), 0.0, 1e-15);
    EXPECT_NEAR(state_fidelity(DensityMatrix::maximally_mixed(), zero), 0.25, 1e-15);

    EXPECT_NEAR(trace_distance(DensityMatrix::basis(0), DensityMatrix::basis(0)), 0.0, 1e-15);
    EXPECT_NEAR(trace_distance(DensityMatrix::basis(0), DensityMatrix::basis(1)), 1.0, 1e-12);
    // Eigenvalues of |00><00| - I/4 are 3/4, -1/4 (x3); half the absolute sum is 3/4.
    EXPECT_NEAR(trace_distance(DensityMatrix::basis(0), DensityMatrix::maximally_mixed()), 0.75, 1e-12);
}

TEST(qmat, trace_distance_is_a_bounded_symmetric_metric) {
    for (int trial = 0; trial < 50; ++trial) {
        const DensityMatrix a = random_density_matrix();
        const DensityMatrix b = random_density_matrix(1);
        const DensityMatrix c = random_density_matrix(2);
        const double ab = trace_distance(a, b);
        EXPECT_NEAR(ab, trace_distance(b, a), 1e-12);
        EXPECT_GE(ab, 0.0);
        EXPECT_LE(ab, 1.0 + 1e-12);
        EXPECT_LE(ab, trace_distance(a, c) + trace_distance(c, b) + 1e-12);
    }
}

TEST(qmat, density_matrix_validation) {
    ComplexMatrix not_hermitian = projector(0);
    not_hermitian(0, 1) = 0.1;
    EXPECT_THROW(DensityMatrix{not_hermitian}, std::invalid_argument);

    EXPECT_THROW(DensityMatrix{projector(0) * Complex{2.0}}, std::invalid_argument);

    ComplexMatrix negative = projector(0) * Complex{1.1};
    negative(1, 1) = -0.1;
    EXPECT_THROW(DensityMatrix{negative}, std::invalid_argument);

    EXPECT_THROW(PureState({1.0, 1.0}), std::invalid_argument);
    EXPECT_THROW(PureState::normalized({0.0, 0.0}), std::invalid_argument);
    EXPECT_NO_THROW(DensityMatrix{ComplexMatrix::identity(4) * Complex{0.25}});
}

TEST(qmat, eigen_examples) {
    const Complex d[] = {0.4, -0.1, 0.5, 0.2};
    const EigenDecomposition e = hermitian_eigen(ComplexMatrix::diagonal(d));
    const std::vector<double> expected = {-0.1, 0.2, 0.4, 0.5};
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_NEAR(e.values[k], expected[k], 1e-15);
    }

    // sigma_y eigenvalues are -1, +1.
    const EigenDecomposition y = hermitian_eigen(pauli_matrix(Pauli::Y));
    EXPECT_NEAR(y.values[0], -1.0, 1e-14);
    EXPECT_NEAR(y.values[1], 1.0, 1e-14);

    // Degenerate spectrum.
    const EigenDecomposition id = hermitian_eigen(ComplexMatrix::identity(4));
    for (double v : id.values) {
        EXPECT_NEAR(v, 1.0, 1e-15);
    }
    EXPECT_TRUE(id.vectors.is_unitary(1e-14));
}

TEST(qmat, eigen_decomposition_of_random_hermitian) {
    for (int trial = 0; trial < 200; ++trial) {
        const ComplexMatrix h = random_hermitian(4);
        const EigenDecomposition e = hermitian_eigen(h);
        EXPECT_TRUE(e.vectors.is_unitary(1e-12));
        EXPECT_LE(from_eigen(e.vectors, e.values).max_abs_diff(h), 1e-12);
        for (std::size_t k = 0; k + 1 < 4; ++k) {
            EXPECT_LE(e.values[k], e.values[k + 1]);
        }
        // Each eigenvalue is a root of det(h - lambda I), checked without the eigensolver.
        const double scale = h.frobenius_norm();
        for (double lambda : e.values) {
            const ComplexMatrix shifted = h - ComplexMatrix::identity(4) * Complex{lambda};
            EXPECT_LE(std::abs(determinant(shifted)), 1e-10 * std::pow(scale, 4));
        }
    }
}

TEST(qmat, hermitian_exponential_matches_series) {
    for (int trial = 0; trial < 50; ++trial) {
        const ComplexMatrix h = random_hermitian(4, 0.5);
        const double t = uniform(0.0, 2.0);
        const ComplexMatrix expected = series_exp(h * Complex{0.0, -t}, 60);
        EXPECT_LE(hermitian_exp_neg_i(h, t).max_abs_diff(expected), 1e-12);
    }
}

TEST(qmat, matrix_text_golden) {
    ComplexMatrix m(2);
    m(0, 0) = 0.5;
    m(0, 1) = Complex{0.0, -0.25};
    m(1, 0) = Complex{-0.0, 0.25};
    m(1, 1) = Complex{1.0 / 3.0, -0.0};
    EXPECT_EQ(format_matrix_text(m), "0.5+0i 0-0.25i\n0+0.25i 0.333333333333+0i\n");
}

TEST(qmat, matrix_text_round_trip) {
    for (int trial = 0; trial < 100; ++trial) {
        const ComplexMatrix m = random_complex(4);
        std::istringstream in(format_matrix_text(m));
        const ComplexMatrix back = parse_matrix_text(in, 4);
        EXPECT_LE(back.max_abs_diff(m), 1e-11 * std::max(1.0, m.frobenius_norm()));
        // Formatting the parsed matrix reproduces the same text.
        EXPECT_EQ(format_matrix_text(back), format_matrix_text(m));
    }
    std::istringstream bad("1+0i 2\n");
    EXPECT_THROW(parse_matrix_text(bad, 2), std::invalid_argument);
}
