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

#include "qproc/basis.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace qproc::basis {

QunitSpace::QunitSpace(int radix, int count) : radix_(radix), count_(count), dim_(1) {
    if (radix < 2) {
        throw InvalidInputError("QunitSpace: radix must be >= 2");
    }
    if (count < 1) {
        throw InvalidInputError("QunitSpace: qunit count must be >= 1");
    }
    for (int i = 0; i < count; ++i) {
        if (dim_ > (1LL << 40) / radix) {
            throw InvalidInputError("QunitSpace: dimension n^k overflows");
        }
        dim_ *= radix;
    }
}

std::vector<linalg::ComplexMatrix> gellmann_generators(int radix) {
    if (radix < 2) {
        throw InvalidInputError("gellmann_generators: radix must be >= 2");
    }
    const int n = radix;
    std::vector<linalg::ComplexMatrix> gens;
    gens.reserve(static_cast<std::size_t>(n) * n);

    gens.push_back(linalg::ComplexMatrix::Identity(n, n));

    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            linalg::ComplexMatrix s = linalg::ComplexMatrix::Zero(n, n);
            s(j, k) = 1.0;
            s(k, j) = 1.0;
            gens.push_back(std::move(s));
        }
    }
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            linalg::ComplexMatrix a = linalg::ComplexMatrix::Zero(n, n);
            a(j, k) = std::complex<double>(0.0, -1.0);
            a(k, j) = std::complex<double>(0.0, 1.0);
            gens.push_back(std::move(a));
        }
    }
    for (int l = 1; l < n; ++l) {
        linalg::ComplexMatrix d = linalg::ComplexMatrix::Zero(n, n);
        const double scale = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
        for (int m = 0; m < l; ++m) {
            d(m, m) = scale;
        }
        d(l, l) = -scale * static_cast<double>(l);
        gens.push_back(std::move(d));
    }
    return gens;
}

HermitianBasis build_basis(const QunitSpace& space, long long dim_cap) {
    if (space.dim() > dim_cap) {
        std::ostringstream os;
        os << "build_basis: dimension " << space.dim() << " exceeds cap " << dim_cap;
        throw ResourceLimitError(os.str());
    }
    const auto gens = gellmann_generators(space.radix());
    const long long per_qunit = static_cast<long long>(gens.size()); // n²
    const int k = space.count();

    HermitianBasis out{space, {}, {}};
    out.elements.reserve(static_cast<std::size_t>(space.basis_size()));
    out.labels.reserve(static_cast<std::size_t>(space.basis_size()));

    std::vector<int> label(static_cast<std::size_t>(k), 0);
    for (long long idx = 0; idx < space.basis_size(); ++idx) {
        long long rem = idx;
        for (int p = k - 1; p >= 0; --p) {
            label[static_cast<std::size_t>(p)] = static_cast<int>(rem % per_qunit);
            rem /= per_qunit;
        }
        linalg::ComplexMatrix m = gens[static_cast<std::size_t>(label[0])];
        for (int p = 1; p < k; ++p) {
            m = Eigen::kroneckerProduct(m, gens[static_cast<std::size_t>(label[static_cast<std::size_t>(p)])]).eval();
        }
        out.elements.emplace_back(std::move(m));
        out.labels.push_back(label);
    }
    return out;
}

linalg::HermitianOperator embed_local(const linalg::HermitianOperator& h_local,
                                      const std::vector<int>& targets,
                                      const QunitSpace& space) {
    const int n = space.radix();
    const int k = space.count();
    const int m = static_cast<int>(targets.size());

    if (m < 1 || m > k) {
        throw InvalidInputError("embed_local: target count must be in [1, k]");
    }
    std::set<int> distinct(targets.begin(), targets.end());
    if (static_cast<int>(distinct.size()) != m) {
        throw InvalidInputError("embed_local: repeated target positions");
    }
    for (int t : targets) {
        if (t < 0 || t >= k) {
            std::ostringstream os;
            os << "embed_local: target position " << t << " out of range [0, " << k << ")";
            throw InvalidInputError(os.str());
        }
    }
    long long local_dim = 1;
    for (int i = 0; i < m; ++i) {
        local_dim *= n;
    }
    if (h_local.dim() != local_dim) {
        std::ostringstream os;
        os << "embed_local: local operator has dim " << h_local.dim() << ", expected n^m = "
           << local_dim;
        throw InvalidInputError(os.str());
    }

    const long long d = space.dim();
    // Digit p of a computational index (position 0 most significant).
    std::vector<long long> place(static_cast<std::size_t>(k));
    long long w = 1;
    for (int p = k - 1; p >= 0; --p) {
        place[static_cast<std::size_t>(p)] = w;
        w *= n;
    }

    linalg::ComplexMatrix full = linalg::ComplexMatrix::Zero(d, d);
    std::vector<int> rdig(static_cast<std::size_t>(k)), cdig(static_cast<std::size_t>(k));
    for (long long r = 0; r < d; ++r) {
        for (int p = 0; p < k; ++p) {
            rdig[static_cast<std::size_t>(p)] =
                static_cast<int>((r / place[static_cast<std::size_t>(p)]) % n);
        }
        for (long long c = 0; c < d; ++c) {
            for (int p = 0; p < k; ++p) {
                cdig[static_cast<std::size_t>(p)] =
                    static_cast<int>((c / place[static_cast<std::size_t>(p)]) % n);
            }
            bool off_target_match = true;
            for (int p = 0; p < k && off_target_match; ++p) {
                if (distinct.count(p) == 0 &&
                    rdig[static_cast<std::size_t>(p)] != cdig[static_cast<std::size_t>(p)]) {
                    off_target_match = false;
                }
            }
            if (!off_target_match) {
                continue;
            }
            long long rl = 0;
            long long cl = 0;
            for (int t = 0; t < m; ++t) {
                rl = rl * n + rdig[static_cast<std::size_t>(targets[static_cast<std::size_t>(t)])];
                cl = cl * n + cdig[static_cast<std::size_t>(targets[static_cast<std::size_t>(t)])];
            }
            full(r, c) = h_local.matrix()(rl, cl);
        }
    }
    return linalg::HermitianOperator(std::move(full));
}

Eigen::VectorXd vectorize_hermitian(const linalg::ComplexMatrix& h) {
    const Eigen::Index d = h.rows();
    Eigen::VectorXd v(d * d);
    Eigen::Index at = 0;
    const double sqrt2 = std::sqrt(2.0);
    for (Eigen::Index i = 0; i < d; ++i) {
        v(at++) = h(i, i).real();
    }
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = i + 1; j < d; ++j) {
            v(at++) = sqrt2 * h(i, j).real();
            v(at++) = sqrt2 * h(i, j).imag();
        }
    }
    return v;
}

FrameDecomposition decompose_on_frame(const linalg::HermitianOperator& h,
                                      const std::vector<linalg::HermitianOperator>& frame) {
    if (frame.empty()) {
        throw InvalidInputError("decompose_on_frame: frame must be nonempty");
    }
    const Eigen::Index d = h.dim();
    for (const auto& f : frame) {
        if (f.dim() != d) {
            throw InvalidInputError("decompose_on_frame: frame element dimension mismatch");
        }
    }
    const Eigen::Index cols = static_cast<Eigen::Index>(frame.size());
    Eigen::MatrixXd a(d * d, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        a.col(j) = vectorize_hermitian(frame[static_cast<std::size_t>(j)].matrix());
    }
    Eigen::VectorXd b = vectorize_hermitian(h.matrix());

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-10);
    Eigen::VectorXd c = svd.solve(b);

    FrameDecomposition dec;
    dec.coefficients.assign(c.data(), c.data() + c.size());
    dec.residual_norm = (a * c - b).norm();
    return dec;
}

linalg::HermitianOperator reconstruct(const FrameDecomposition& dec,
                                      const std::vector<linalg::HermitianOperator>& frame) {
    if (dec.coefficients.size() != frame.size()) {
        throw InvalidInputError("reconstruct: coefficient count does not match frame length");
    }
    if (frame.empty()) {
        throw InvalidInputError("reconstruct: frame must be nonempty");
    }
    const Eigen::Index d = frame.front().dim();
    linalg::ComplexMatrix sum = linalg::ComplexMatrix::Zero(d, d);
    for (std::size_t m = 0; m < frame.size(); ++m) {
        sum += dec.coefficients[m] * frame[m].matrix();
    }
    return linalg::HermitianOperator::symmetrized(sum);
}

} // namespace qproc::basis
