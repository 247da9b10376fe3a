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

#ifndef TGROVER_QMAT_H
#define TGROVER_QMAT_H

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace tgrover {

using Complex = std::complex<double>;

inline constexpr Complex kImag{0.0, 1.0};

/// The two register qubits. Qubit I is the left (most significant) tensor factor,
/// so the basis order is |00>, |01>, |10>, |11> written as |u>_I |v>_II.
enum class Qubit { I, II };

/// Dense square complex matrix of dimension 2 or 4, stored row-major.
class ComplexMatrix {
   public:
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::initializer_list<Complex> row_major);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const Complex> diag);

    std::size_t dim() const {
        return dim_;
    }
    Complex &operator()(std::size_t row, std::size_t col) {
        return entries_[row * dim_ + col];
    }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    std::span<const Complex> entries() const {
        return entries_;
    }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    /// Largest entrywise modulus of (this - other).
    double max_abs_diff(const ComplexMatrix &other) const;
    double frobenius_norm() const;
    bool is_hermitian(double tol) const;
    bool is_unitary(double tol) const;

    ComplexMatrix &operator+=(const ComplexMatrix &rhs);
    ComplexMatrix &operator-=(const ComplexMatrix &rhs);
    ComplexMatrix &operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs) {
        return lhs += rhs;
    }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs) {
        return lhs -= rhs;
    }
    friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) {
        return lhs *= scale;
    }
    friend ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) {
        return rhs *= scale;
    }
    friend ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs);
    friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

   private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

/// Normalized state vector.
class PureState {
   public:
    /// Throws std::invalid_argument unless the norm is 1 within tol::kNorm.
    explicit PureState(std::vector<Complex> amplitudes);

    static PureState basis(std::size_t dim, std::size_t index);
    /// Rescales `amplitudes` to unit norm; throws on a zero vector.
    static PureState normalized(std::vector<Complex> amplitudes);

    std::size_t dim() const {
        return amplitudes_.size();
    }
    std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    Complex operator[](std::size_t i) const {
        return amplitudes_[i];
    }
    ComplexMatrix projector() const;
    Complex inner(const PureState &other) const;

   private:
    std::vector<Complex> amplitudes_;
};

/// Physical two-qubit state: 4x4 Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
   public:
    /// Validates every physicality invariant; throws std::invalid_argument otherwise.
    explicit DensityMatrix(const ComplexMatrix &m);

    static DensityMatrix from_pure(const PureState &psi);
    static DensityMatrix basis(std::size_t index);
    static DensityMatrix maximally_mixed();

    const ComplexMatrix &matrix() const {
        return m_;
    }
    Complex operator()(std::size_t row, std::size_t col) const {
        return m_(row, col);
    }
    /// Computational-basis populations.
    std::array<double, 4> populations() const;

    /// Skips the eigenvalue check for maps that preserve positivity by construction.
    /// The result is still made exactly Hermitian.
    static DensityMatrix trusted(ComplexMatrix m);

   private:
    struct TrustedTag {};
    DensityMatrix(ComplexMatrix m, TrustedTag);
    ComplexMatrix m_;
};

enum class Pauli { I, X, Y, Z };

struct PauliLabel {
    Pauli first = Pauli::I;
    Pauli second = Pauli::I;

    bool is_identity() const {
        return first == Pauli::I && second == Pauli::I;
    }
    std::string str() const;
    static PauliLabel parse(const std::string &text);

    friend auto operator<=>(const PauliLabel &, const PauliLabel &) = default;
};

/// All 16 two-qubit labels, (I,I) first, in lexicographic I < X < Y < Z order.
const std::array<PauliLabel, 16> &all_pauli_labels();
/// The 15 labels other than (I,I), same order.
const std::array<PauliLabel, 15> &extended_pauli_set();

ComplexMatrix pauli_matrix(Pauli p);
ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix pauli_operator(PauliLabel label);
/// Places a single-qubit operator on `target`, identity on the other qubit.
ComplexMatrix embed(const ComplexMatrix &op, Qubit target);

/// u rho u^dagger. Throws std::invalid_argument if u is not unitary within tol::kUnitary.
DensityMatrix apply_unitary(const DensityMatrix &rho, const ComplexMatrix &u);
/// Tr(rho P). Throws ConsistencyError if the imaginary part exceeds tol::kImaginary.
double expectation(const DensityMatrix &rho, PauliLabel label);
double state_fidelity(const DensityMatrix &rho, const PureState &psi);
double trace_distance(const DensityMatrix &a, const DensityMatrix &b);

struct EigenDecomposition {
    /// Ascending.
    std::vector<double> values;
    /// Column k is the eigenvector of values[k].
    ComplexMatrix vectors;
};

/// Cyclic complex Jacobi sweeps. Input must be Hermitian within tol::kProjectionInput.
EigenDecomposition hermitian_eigen(const ComplexMatrix &h);
/// V diag(values) V^dagger.
ComplexMatrix from_eigen(const ComplexMatrix &vectors, std::span<const double> values);
/// exp(-i * scale * h) for Hermitian h.
ComplexMatrix hermitian_exp_neg_i(const ComplexMatrix &h, double scale);

/// Text dump: one row per line, entries "re+imi" with 12 significant digits.
void write_matrix_text(std::ostream &out, const ComplexMatrix &m);
std::string format_matrix_text(const ComplexMatrix &m);
ComplexMatrix parse_matrix_text(std::istream &in, std::size_t dim);

}  // namespace tgrover

#endif
