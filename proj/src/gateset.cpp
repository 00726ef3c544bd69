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

#include "qproc/gateset.hpp"

#include <algorithm>
#include <sstream>

namespace qproc {

Gate::Gate(GateSpec spec, linalg::HermitianOperator embedded)
    : spec_(std::move(spec)), embedded_(std::move(embedded)) {}

GateSet::GateSet(basis::QunitSpace space, const std::vector<GateSpec>& specs) : space_(space) {
    if (specs.empty()) {
        throw InvalidInputError("GateSet: gate list must be nonempty");
    }
    std::vector<GateSpec> sorted = specs;
    std::sort(sorted.begin(), sorted.end(),
              [](const GateSpec& a, const GateSpec& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i].id != static_cast<int>(i) + 1) {
            std::ostringstream os;
            os << "GateSet: ids must be unique and dense from 1; got id " << sorted[i].id
               << " at rank " << i + 1;
            throw InvalidInputError(os.str());
        }
    }

    gates_.reserve(sorted.size());
    for (auto& spec : sorted) {
        if (!(spec.tau0 > 0.0)) {
            std::ostringstream os;
            os << "GateSet: gate " << spec.id << " needs a positive tau0";
            throw InvalidInputError(os.str());
        }
        if (spec.period_t0 && !(*spec.period_t0 > 0.0)) {
            std::ostringstream os;
            os << "GateSet: gate " << spec.id << " has a non-positive period_t0";
            throw InvalidInputError(os.str());
        }
        linalg::HermitianOperator local(spec.local_generator);
        linalg::HermitianOperator embedded = embed_local(local, spec.targets, space_);
        if (spec.period_t0) {
            const auto u = linalg::expm_hermitian(embedded, *spec.period_t0);
            const double defect =
                (u.matrix() - linalg::ComplexMatrix::Identity(u.dim(), u.dim())).norm();
            const double tol = 1e-8 * static_cast<double>(space_.dim());
            if (defect > tol) {
                std::ostringstream os;
                os << "GateSet: gate " << spec.id << " ('" << spec.name << "') declares period_t0 = "
                   << *spec.period_t0 << " but exp(i H t0) differs from identity by " << defect;
                throw InvalidInputError(os.str());
            }
        }
        gates_.emplace_back(std::move(spec), std::move(embedded));
    }
}

bool GateSet::has_gate(int id) const noexcept {
    return id >= 1 && id <= static_cast<int>(gates_.size());
}

const Gate& GateSet::gate(int id) const {
    if (!has_gate(id)) {
        std::ostringstream os;
        os << "GateSet: unknown gate id " << id;
        throw InvalidInputError(os.str());
    }
    return gates_[static_cast<std::size_t>(id) - 1];
}

std::vector<linalg::HermitianOperator> GateSet::embedded_generators() const {
    std::vector<linalg::HermitianOperator> out;
    out.reserve(gates_.size());
    for (const auto& g : gates_) {
        out.push_back(g.embedded_generator());
    }
    return out;
}

GateSet GateSet::with_tau0(double tau0) const {
    if (!(tau0 > 0.0)) {
        throw InvalidInputError("GateSet::with_tau0: tau0 must be positive");
    }
    std::vector<GateSpec> specs;
    specs.reserve(gates_.size());
    for (const auto& g : gates_) {
        GateSpec s;
        s.id = g.id();
        s.name = g.name();
        s.local_generator = g.local_generator();
        s.targets = g.targets();
        s.tau0 = tau0;
        s.has_inverse = g.has_inverse();
        s.period_t0 = g.period_t0();
        specs.push_back(std::move(s));
    }
    return GateSet(space_, specs);
}

} // namespace qproc
