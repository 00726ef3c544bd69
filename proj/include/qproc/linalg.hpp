// Copyright 2026 The qproc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "qproc/errors.hpp"

#include <Eigen/Dense>
#include <complex>

namespace qproc::linalg {

using ComplexMatrix = Eigen::MatrixXcd;

/// Per-dimension tolerance scales. Absolute tolerances are these values
/// multiplied by the matrix dimension, so they stay meaningful as n^k grows.
inline constexpr double kHermitianTolPerDim = 1e-10;
inline constexpr double kUnitaryTolPerDim = 1e-9;

bool all_finite(const ComplexMatrix& m);
double frobenius_norm(const ComplexMatrix& m);

/// A Hamiltonian: a square complex matrix that is Hermitian within
/// kHermitianTolPerDim * dim in Frobenius norm. Immutable after construction.
class HermitianOperator {
  public:
    /// Validates squareness, finiteness and Hermiticity; throws
    /// InvalidInputError on violation.
    explicit HermitianOperator(ComplexMatrix m);

    /// Replaces m by (m + m†)/2 before constructing. Used after operations
    /// whose result is Hermitian in exact arithmetic only, so roundoff does
    /// not accumulate through nested brackets.
    static HermitianOperator symmetrized(const ComplexMatrix& m);

    const ComplexMatrix& matrix() const noexcept { return m_; }
    Eigen::Index dim() const noexcept { return m_.rows(); }

  private:
    ComplexMatrix m_;
};

/// A gate: a square complex matrix with ‖M†M − I‖_F within
/// kUnitaryTolPerDim * dim. Immutable after construction.
class UnitaryOperator {
  public:
    explicit UnitaryOperator(ComplexMatrix m);

    const ComplexMatrix& matrix() const noexcept { return m_; }
    Eigen::Index dim() const noexcept { return m_.rows(); }

  private:
    ComplexMatrix m_;
};

/// exp(i·H·t), computed by unitary eigendecomposition of H: diagonalize,
/// exponentiate the phases, reassemble.
UnitaryOperator expm_hermitian(const HermitianOperator& h, double t);

/// Principal Hermitian logarithm: returns H with exp(i·H) = U and all
/// eigenphases in (−π, π]; an eigenvalue of exactly −1 maps to phase +π.
///
/// U is normal, so its Schur form is diagonal; we diagonalize via the Schur
/// decomposition, which stays well behaved for degenerate eigenvalues, take
/// the principal argument of each eigenvalue and reassemble. The result is
/// symmetrized before it is returned.
HermitianOperator logm_unitary(const UnitaryOperator& u);

/// i(AB − BA), symmetrized. Hermitian for Hermitian inputs.
HermitianOperator commutator_h(const HermitianOperator& a, const HermitianOperator& b);

/// Global-phase-invariant distance min_φ ‖U − e^{iφ}V‖_F, evaluated in
/// closed form as sqrt(max(0, 2N − 2|tr(V†U)|)).
double operator_distance(const UnitaryOperator& u, const UnitaryOperator& v);

/// True iff m is square and ‖M†M − I‖_F ≤ tol.
bool check_unitary(const ComplexMatrix& m, double tol);

} // namespace qproc::linalg
