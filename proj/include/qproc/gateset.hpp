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

#include "qproc/basis.hpp"
#include "qproc/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qproc {

/// Raw description of one primitive gate, prior to validation/embedding.
struct GateSpec {
    int id = 0;                           // unique, dense from 1
    std::string name;
    linalg::ComplexMatrix local_generator; // Hermitian, dim n^|targets|
    std::vector<int> targets;              // qunit positions, position 0 = MSD
    double tau0 = 0.0;                      // base pulse duration τ₀
    bool has_inverse = false;
    std::optional<double> period_t0;        // U(t₀) = identity, if known
};

/// A validated primitive gate with its generator embedded into the full
/// k-qunit space.
class Gate {
  public:
    Gate(GateSpec spec, linalg::HermitianOperator embedded);

    int id() const noexcept { return spec_.id; }
    const std::string& name() const noexcept { return spec_.name; }
    const linalg::HermitianOperator& embedded_generator() const noexcept { return embedded_; }
    const linalg::ComplexMatrix& local_generator() const noexcept { return spec_.local_generator; }
    const std::vector<int>& targets() const noexcept { return spec_.targets; }
    double tau0() const noexcept { return spec_.tau0; }
    bool has_inverse() const noexcept { return spec_.has_inverse; }
    const std::optional<double>& period_t0() const noexcept { return spec_.period_t0; }

    /// Whether a negative power of this gate is realizable at all, either
    /// via an inverse pulse or via the periodic trick U^{-s} = U^{t₀-s}.
    bool admits_negative_powers() const noexcept {
        return spec_.has_inverse || spec_.period_t0.has_value();
    }

  private:
    GateSpec spec_;
    linalg::HermitianOperator embedded_;
};

/// The primitive gate set {U_k}. Construction validates ids (unique, dense
/// from 1), embeds every local generator, and checks the period invariant
/// ‖exp(i·H_k·t₀) − I‖_F ≤ 1e-8 × dim for gates that declare one.
///
/// Negative-power capability (inverse or period) is NOT required here; it is
/// checked lazily when synthesis actually needs a negative power, so gate
/// sets without it remain loadable and simulatable.
class GateSet {
  public:
    GateSet(basis::QunitSpace space, const std::vector<GateSpec>& specs);

    const basis::QunitSpace& space() const noexcept { return space_; }
    const std::vector<Gate>& gates() const noexcept { return gates_; }
    std::size_t size() const noexcept { return gates_.size(); }

    bool has_gate(int id) const noexcept;
    const Gate& gate(int id) const; // 1-based id; throws InvalidInputError

    /// Embedded generators in id order (index i ↔ gate id i+1).
    std::vector<linalg::HermitianOperator> embedded_generators() const;

    /// Copy with every gate's τ₀ replaced.
    GateSet with_tau0(double tau0) const;

  private:
    basis::QunitSpace space_;
    std::vector<Gate> gates_; // sorted by id, gates_[i].id() == i+1
};

} // namespace qproc
