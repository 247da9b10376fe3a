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

#include "tgrover/qmat.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "tgrover/errors.h"
#include "tgrover/tolerances.h"

namespace tgrover {

namespace {

void require_dim(std::size_t dim) {
    if (dim != 2 && dim != 4) {
        throw_invalid_argument("matrix dimension must be 2 or 4, got " + std::to_string(dim));
    }
}

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.dim() != b.dim()) {
        throw_invalid_argument(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                               std::to_string(b.dim()) + ")");
    }
}

ComplexMatrix hermitian_part(const ComplexMatrix &m) {
    ComplexMatrix h = m;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        h(r, r) = m(r, r).real();
        for (std::size_t c = r + 1; c < m.dim(); ++c) {
            Complex avg = 0.5 * (m(r, c) + std::conj(m(c, r)));
            h(r, c) = avg;
            h(c, r) = std::conj(avg);
        }
    }
    return h;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    require_dim(dim);
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::initializer_list<Complex> row_major) : ComplexMatrix(dim) {
    if (row_major.size() != dim * dim) {
        throw_invalid_argument("expected " + std::to_string(dim * dim) + " entries, got " +
                               std::to_string(row_major.size()));
    }
    std::copy(row_major.begin(), row_major.end(), entries_.begin());
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        m(k, k) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size());
    for (std::size_t k = 0; k < diag.size(); ++k) {
        m(k, k) = diag[k];
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t k = 0; k < dim_; ++k) {
        t += (*this)(k, k);
    }
    return t;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix &other) const {
    require_same_dim(*this, other, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        worst = std::max(worst, std::abs(entries_[k] - other.entries_[k]));
    }
    return worst;
}

double ComplexMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const Complex &z : entries_) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

bool ComplexMatrix::is_hermitian(double tol) const {
    return max_abs_diff(adjoint()) <= tol;
}

bool ComplexMatrix::is_unitary(double tol) const {
    return (adjoint() * *this).max_abs_diff(identity(dim_)) <= tol;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &rhs) {
    require_same_dim(*this, rhs, "operator+");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += rhs.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &rhs) {
    require_same_dim(*this, rhs, "operator-");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] -= rhs.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (Complex &z : entries_) {
        z *= scale;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs) {
    require_same_dim(lhs, rhs, "operator*");
    const std::size_t n = lhs.dim();
    ComplexMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex a = lhs(r, k);
            if (a == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += a * rhs(k, c);
            }
        }
    }
    return out;
}

PureState::PureState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    require_dim(amplitudes_.size());
    double norm_sq = 0.0;
    for (const Complex &a : amplitudes_) {
        norm_sq += std::norm(a);
    }
    if (std::abs(std::sqrt(norm_sq) - 1.0) > tol::kNorm) {
        throw_invalid_argument("state vector is not normalized");
    }
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw_invalid_argument("basis index out of range");
    }
    std::vector<Complex> amps(dim);
    amps[index] = 1.0;
    return PureState(std::move(amps));
}

PureState PureState::normalized(std::vector<Complex> amplitudes) {
    double norm_sq = 0.0;
    for (const Complex &a : amplitudes) {
        norm_sq += std::norm(a);
    }
    if (norm_sq == 0.0) {
        throw_invalid_argument("cannot normalize the zero vector");
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (Complex &a : amplitudes) {
        a *= inv;
    }
    return PureState(std::move(amplitudes));
}

ComplexMatrix PureState::projector() const {
    ComplexMatrix m(dim());
    for (std::size_t r = 0; r < dim(); ++r) {
        for (std::size_t c = 0; c < dim(); ++c) {
            m(r, c) = amplitudes_[r] * std::conj(amplitudes_[c]);
        }
    }
    return m;
}

Complex PureState::inner(const PureState &other) const {
    if (other.dim() != dim()) {
        throw_invalid_argument("inner: dimension mismatch");
    }
    Complex sum = 0.0;
    for (std::size_t k = 0; k < dim(); ++k) {
        sum += std::conj(amplitudes_[k]) * other.amplitudes_[k];
    }
    return sum;
}

DensityMatrix::DensityMatrix(const ComplexMatrix &m) : m_(m) {
    if (m.dim() != 4) {
        throw_invalid_argument("density matrix must be 4x4");
    }
    if (!m.is_hermitian(tol::kHermitian)) {
        throw_invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(m.trace() - Complex{1.0}) > tol::kTrace) {
        throw_invalid_argument("density matrix trace is not 1");
    }
    m_ = hermitian_part(m);
    if (hermitian_eigen(m_).values.front() < -tol::kPositivity) {
        throw_invalid_argument("density matrix has a negative eigenvalue");
    }
}

DensityMatrix::DensityMatrix(ComplexMatrix m, TrustedTag) : m_(hermitian_part(m)) {
}

DensityMatrix DensityMatrix::trusted(ComplexMatrix m) {
    return DensityMatrix(std::move(m), TrustedTag{});
}

DensityMatrix DensityMatrix::from_pure(const PureState &psi) {
    if (psi.dim() != 4) {
        throw_invalid_argument("density matrix needs a 4-dimensional state");
    }
    return DensityMatrix(psi.projector(), TrustedTag{});
}

DensityMatrix DensityMatrix::basis(std::size_t index) {
    return from_pure(PureState::basis(4, index));
}

DensityMatrix DensityMatrix::maximally_mixed() {
    return DensityMatrix(ComplexMatrix::identity(4) * Complex{0.25}, TrustedTag{});
}

std::array<double, 4> DensityMatrix::populations() const {
    return {m_(0, 0).real(), m_(1, 1).real(), m_(2, 2).real(), m_(3, 3).real()};
}

std::string PauliLabel::str() const {
    static constexpr char kNames[] = {'I', 'X', 'Y', 'Z'};
    return {kNames[static_cast<int>(first)], kNames[static_cast<int>(second)]};
}

PauliLabel PauliLabel::parse(const std::string &text) {
    auto one = [&](char c) {
        switch (c) {
            case 'I':
                return Pauli::I;
            case 'X':
                return Pauli::X;
            case 'Y':
                return Pauli::Y;
            case 'Z':
                return Pauli::Z;
            default:
                throw_invalid_argument("bad Pauli label '" + text + "'");
        }
    };
    if (text.size() != 2) {
        throw_invalid_argument("bad Pauli label '" + text + "'");
    }
    return {one(text[0]), one(text[1])};
}

const std::array<PauliLabel, 16> &all_pauli_labels() {
    static const std::array<PauliLabel, 16> labels = [] {
        std::array<PauliLabel, 16> out{};
        constexpr Pauli kOrder[] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
        std::size_t k = 0;
        for (Pauli a : kOrder) {
            for (Pauli b : kOrder) {
                out[k++] = {a, b};
            }
        }
        return out;
    }();
    return labels;
}

const std::array<PauliLabel, 15> &extended_pauli_set() {
    static const std::array<PauliLabel, 15> labels = [] {
        std::array<PauliLabel, 15> out{};
        std::copy(all_pauli_labels().begin() + 1, all_pauli_labels().end(), out.begin());
        return out;
    }();
    return labels;
}

ComplexMatrix pauli_matrix(Pauli p) {
    switch (p) {
        case Pauli::I:
            return ComplexMatrix::identity(2);
        case Pauli::X:
            return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0});
        case Pauli::Y:
            return ComplexMatrix(2, {0.0, -kImag, kImag, 0.0});
        case Pauli::Z:
            return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0});
    }
    throw_invalid_argument("unknown Pauli");
}

ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != 2 || b.dim() != 2) {
        throw_invalid_argument("tensor_product expects two 2x2 factors");
    }
    ComplexMatrix out(4);
    for (std::size_t ar = 0; ar < 2; ++ar) {
        for (std::size_t ac = 0; ac < 2; ++ac) {
            for (std::size_t br = 0; br < 2; ++br) {
                for (std::size_t bc = 0; bc < 2; ++bc) {
                    out(2 * ar + br, 2 * ac + bc) = a(ar, ac) * b(br, bc);
                }
            }
        }
    }
    return out;
}

ComplexMatrix pauli_operator(PauliLabel label) {
    return tensor_product(pauli_matrix(label.first), pauli_matrix(label.second));
}

ComplexMatrix embed(const ComplexMatrix &op, Qubit target) {
    const ComplexMatrix id = ComplexMatrix::identity(2);
    return target == Qubit::I ? tensor_product(op, id) : tensor_product(id, op);
}

DensityMatrix apply_unitary(const DensityMatrix &rho, const ComplexMatrix &u) {
    if (u.dim() != 4 || !u.is_unitary(tol::kUnitary)) {
        throw_invalid_argument("apply_unitary: operator is not a 4x4 unitary");
    }
    return DensityMatrix::trusted(u * rho.matrix() * u.adjoint());
}

double expectation(const DensityMatrix &rho, PauliLabel label) {
    const Complex value = (rho.matrix() * pauli_operator(label)).trace();
    if (std::abs(value.imag()) > tol::kImaginary) {
        throw ConsistencyError("expectation of " + label.str() + " has imaginary part " +
                               std::to_string(value.imag()));
    }
    return value.real();
}

double state_fidelity(const DensityMatrix &rho, const PureState &psi) {
    if (psi.dim() != 4) {
        throw_invalid_argument("state_fidelity: dimension mismatch");
    }
    Complex sum = 0.0;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            sum += std::conj(psi[r]) * rho(r, c) * psi[c];
        }
    }
    if (std::abs(sum.imag()) > tol::kImaginary) {
        throw ConsistencyError("state fidelity has an imaginary part");
    }
    return sum.real();
}

double trace_distance(const DensityMatrix &a, const DensityMatrix &b) {
    const auto eig = hermitian_eigen(a.matrix() - b.matrix());
    double sum = 0.0;
    for (double v : eig.values) {
        sum += std::abs(v);
    }
    return 0.5 * sum;
}

EigenDecomposition hermitian_eigen(const ComplexMatrix &h) {
    if (!h.is_hermitian(tol::kProjectionInput)) {
        throw_invalid_argument("hermitian_eigen: matrix is not Hermitian");
    }
    const std::size_t n = h.dim();
    ComplexMatrix a = hermitian_part(h);
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double scale = std::max(1.0, a.frobenius_norm());

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off += std::norm(a(p, q));
            }
        }
        if (std::sqrt(off) <= 1e-17 * scale) {
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double mag = std::abs(a(p, q));
                if (mag <= 1e-300) {
                    continue;
                }
                // Phase the (p, q) element real, then apply the real symmetric rotation.
                const Complex phase = std::conj(a(p, q)) / mag;
                const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                ComplexMatrix j = ComplexMatrix::identity(n);
                j(p, p) = c;
                j(p, q) = s;
                j(q, p) = -s * phase;
                j(q, q) = c * phase;
                a = j.adjoint() * a * j;
                v = v * j;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

    EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

ComplexMatrix from_eigen(const ComplexMatrix &vectors, std::span<const double> values) {
    const std::size_t n = vectors.dim();
    if (values.size() != n) {
        throw_invalid_argument("from_eigen: eigenvalue count mismatch");
    }
    ComplexMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t r = 0; r < n; ++r) {
            const Complex vr = vectors(r, k) * values[k];
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += vr * std::conj(vectors(c, k));
            }
        }
    }
    return out;
}

ComplexMatrix hermitian_exp_neg_i(const ComplexMatrix &h, double scale) {
    const auto eig = hermitian_eigen(h);
    const std::size_t n = h.dim();
    ComplexMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex phase = std::exp(-kImag * scale * eig.values[k]);
        for (std::size_t r = 0; r < n; ++r) {
            const Complex vr = eig.vectors(r, k) * phase;
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += vr * std::conj(eig.vectors(c, k));
            }
        }
    }
    return out;
}

namespace {

std::string format_entry(Complex z) {
    // Adding 0.0 folds -0 into +0 so dumps are stable.
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g%+.12gi", z.real() + 0.0, z.imag() + 0.0);
    return buf;
}

Complex parse_entry(const std::string &token) {
    if (token.empty() || token.back() != 'i') {
        throw_invalid_argument("bad matrix entry '" + token + "'");
    }
    std::size_t split = std::string::npos;
    for (std::size_t k = token.size() - 1; k > 0; --k) {
        const char c = token[k];
        if ((c == '+' || c == '-') && token[k - 1] != 'e' && token[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) {
        throw_invalid_argument("bad matrix entry '" + token + "'");
    }
    try {
        return {std::stod(token.substr(0, split)), std::stod(token.substr(split, token.size() - split - 1))};
    } catch (const std::logic_error &) {
        throw_invalid_argument("bad matrix entry '" + token + "'");
    }
}

}  // namespace

void write_matrix_text(std::ostream &out, const ComplexMatrix &m) {
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            if (c > 0) {
                out << ' ';
            }
            out << format_entry(m(r, c));
        }
        out << '\n';
    }
}

std::string format_matrix_text(const ComplexMatrix &m) {
    std::ostringstream out;
    write_matrix_text(out, m);
    return out.str();
}

ComplexMatrix parse_matrix_text(std::istream &in, std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t k = 0; k < dim * dim; ++k) {
        std::string token;
        if (!(in >> token)) {
            throw_invalid_argument("matrix text ended early");
        }
        m(k / dim, k % dim) = parse_entry(token);
    }
    return m;
}

}  // namespace tgrover
