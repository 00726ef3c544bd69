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

#include "qproc/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <sstream>

namespace qproc::linalg {

namespace {

void require_square(const ComplexMatrix& m, const char* who) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        std::ostringstream os;
        os << who << ": matrix must be square with dim >= 1, got " << m.rows() << "x" << m.cols();
        throw InvalidInputError(os.str());
    }
}

void require_same_dim(Eigen::Index a, Eigen::Index b, const char* who) {
    if (a != b) {
        std::ostringstream os;
        os << who << ": dimension mismatch (" << a << " vs " << b << ")";
        throw InvalidInputError(os.str());
    }
}

} // namespace

bool all_finite(const ComplexMatrix& m) {
    return m.allFinite();
}

double frobenius_norm(const ComplexMatrix& m) {
    return m.norm();
}

HermitianOperator::HermitianOperator(ComplexMatrix m) : m_(std::move(m)) {
    require_square(m_, "HermitianOperator");
    if (!all_finite(m_)) {
        throw InvalidInputError("HermitianOperator: entries must be finite");
    }
    const double defect = (m_ - m_.adjoint()).norm();
    const double tol = kHermitianTolPerDim * static_cast<double>(m_.rows());
    if (defect > tol) {
        std::ostringstream os;
        os << "HermitianOperator: Hermiticity defect " << defect << " exceeds tolerance " << tol;
        throw InvalidInputError(os.str());
    }
}

HermitianOperator HermitianOperator::symmetrized(const ComplexMatrix& m) {
    require_square(m, "HermitianOperator::symmetrized");
    return HermitianOperator(0.5 * (m + m.adjoint().eval()));
}

UnitaryOperator::UnitaryOperator(ComplexMatrix m) : m_(std::move(m)) {
    require_square(m_, "UnitaryOperator");
    if (!all_finite(m_)) {
        throw InvalidInputError("UnitaryOperator: entries must be finite");
    }
    const double tol = kUnitaryTolPerDim * static_cast<double>(m_.rows());
    if (!check_unitary(m_, tol)) {
        const double defect =
            (m_.adjoint() * m_ - ComplexMatrix::Identity(m_.rows(), m_.cols())).norm();
        std::ostringstream os;
        os << "UnitaryOperator: unitarity defect " << defect << " exceeds tolerance " << tol;
        throw InvalidInputError(os.str());
    }
}

UnitaryOperator expm_hermitian(const HermitianOperator& h, double t) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h.matrix());
    if (es.info() != Eigen::Success) {
        throw NumericError("expm_hermitian: eigendecomposition did not converge");
    }
    const Eigen::VectorXd& lambda = es.eigenvalues();
    Eigen::VectorXcd phases(lambda.size());
    for (Eigen::Index j = 0; j < lambda.size(); ++j) {
        phases(j) = std::polar(1.0, lambda(j) * t);
    }
    ComplexMatrix u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    return UnitaryOperator(std::move(u));
}

HermitianOperator logm_unitary(const UnitaryOperator& u) {
    const Eigen::Index n = u.dim();
    Eigen::ComplexSchur<ComplexMatrix> schur(u.matrix(), /*computeU=*/true);
    if (schur.info() != Eigen::Success) {
        throw NumericError("logm_unitary: Schur decomposition did not converge");
    }
    // U is normal, so T is diagonal up to roundoff; only the diagonal is used.
    const double modulus_tol = 1e-8 * static_cast<double>(n);
    Eigen::VectorXd theta(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const std::complex<double> lambda = schur.matrixT()(j, j);
        if (std::abs(std::abs(lambda) - 1.0) > modulus_tol) {
            std::ostringstream os;
            os << "logm_unitary: eigenvalue modulus " << std::abs(lambda)
               << " is off the unit circle beyond tolerance " << modulus_tol;
            throw InvalidInputError(os.str());
        }
        double phase = std::arg(lambda);
        if (phase <= -std::numbers::pi) {
            phase += 2.0 * std::numbers::pi; // principal branch (−π, π]
        }
        theta(j) = phase;
    }
    ComplexMatrix h =
        schur.matrixU() * theta.cast<std::complex<double>>().asDiagonal() * schur.matrixU().adjoint();
    return HermitianOperator::symmetrized(h);
}

HermitianOperator commutator_h(const HermitianOperator& a, const HermitianOperator& b) {
    require_same_dim(a.dim(), b.dim(), "commutator_h");
    const std::complex<double> i(0.0, 1.0);
    ComplexMatrix c = i * (a.matrix() * b.matrix() - b.matrix() * a.matrix());
    return HermitianOperator::symmetrized(c);
}

double operator_distance(const UnitaryOperator& u, const UnitaryOperator& v) {
    require_same_dim(u.dim(), v.dim(), "operator_distance");
    const double n = static_cast<double>(u.dim());
    const double overlap = std::abs((v.matrix().adjoint() * u.matrix()).trace());
    return std::sqrt(std::max(0.0, 2.0 * n - 2.0 * overlap));
}

bool check_unitary(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        return false;
    }
    const double defect =
        (m.adjoint() * m - ComplexMatrix::Identity(m.rows(), m.cols())).norm();
    return defect <= tol;
}

} // namespace qproc::linalg
