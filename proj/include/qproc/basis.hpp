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

#include "qproc/linalg.hpp"

#include <vector>

namespace qproc::basis {

/// Default cap on the full-space dimension n^k. Anything above this is desk
/// scale no more and is rejected with a ResourceLimitError.
inline constexpr long long kDefaultDimCap = 64;

/// k elementary systems of radix n; the joint Hilbert space has dimension
/// n^k. Digit convention: qunit position 0 is the most significant digit of
/// the computational index.
class QunitSpace {
  public:
    QunitSpace(int radix, int count);

    int radix() const noexcept { return radix_; }
    int count() const noexcept { return count_; }
    long long dim() const noexcept { return dim_; }        // n^k
    long long basis_size() const noexcept { return dim_ * dim_; } // n^{2k}

  private:
    int radix_;
    int count_;
    long long dim_;
};

/// The tensor-product operator basis: per qunit one generator index in
/// [0, n²) — 0 is the identity, the rest are the generalized Gell-Mann
/// matrices — and the element is the Kronecker product across positions.
struct HermitianBasis {
    QunitSpace space;
    std::vector<linalg::HermitianOperator> elements; // n^{2k} of them
    std::vector<std::vector<int>> labels;            // one index per qunit position
};

/// Real coefficients of a Hamiltonian on a frame, plus the Frobenius norm of
/// whatever the frame could not explain.
struct FrameDecomposition {
    std::vector<double> coefficients;
    double residual_norm = 0.0;
};

/// The n² single-qunit generators for radix n, in the fixed order: identity,
/// then symmetric pair matrices E_jk + E_kj (j < k, lexicographic), then
/// antisymmetric −i·E_jk + i·E_kj (same order), then the diagonal traceless
/// generators. Traceless generators carry tr(λ_a λ_b) = 2δ_ab.
std::vector<linalg::ComplexMatrix> gellmann_generators(int radix);

/// Full k-qunit basis of n^{2k} elements, labels in lexicographic order
/// (position 0 varies slowest).
HermitianBasis build_basis(const QunitSpace& space, long long dim_cap = kDefaultDimCap);

/// Lifts an operator on |targets| qunits to the full space: acts as h_local
/// on the listed positions (in the given order) and as identity elsewhere.
linalg::HermitianOperator embed_local(const linalg::HermitianOperator& h_local,
                                      const std::vector<int>& targets,
                                      const QunitSpace& space);

/// Minimum-norm least-squares coefficients minimizing ‖H − Σ_M c_M F_M‖_F.
/// Hermitians are vectorized over the real trace inner product ⟨A,B⟩ = tr(AB)
/// and the system is solved by SVD with singular values below
/// 1e-10 × σ_max treated as zero, so rank-deficient frames degrade to an
/// explicit residual instead of failing.
FrameDecomposition decompose_on_frame(const linalg::HermitianOperator& h,
                                      const std::vector<linalg::HermitianOperator>& frame);

/// Σ_M c_M F_M.
linalg::HermitianOperator reconstruct(const FrameDecomposition& dec,
                                      const std::vector<linalg::HermitianOperator>& frame);

/// Isometry from Hermitian d×d matrices to R^{d²} preserving the trace inner
/// product: diagonal entries, then (√2·Re, √2·Im) of each above-diagonal
/// entry.
Eigen::VectorXd vectorize_hermitian(const linalg::ComplexMatrix& h);

} // namespace qproc::basis
