// Copyright 2026 The purecav Authors
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


// Independent constructions used as test oracles. Built directly from kets with plain
// Eigen operations, without the library's state or channel code.

#ifndef PURECAV_TESTS_ORACLES_HPP
#define PURECAV_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>

#include <Eigen/Dense>

namespace oracle {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Vec ket2(double a00, double a01, double a10, double a11) {
    Vec v(4);
    v << a00, a01, a10, a11;
    return v;
}

inline Vec phi_plus() {
    return ket2(1, 0, 0, 1) / std::sqrt(2.0);
}
inline Vec phi_minus() {
    return ket2(1, 0, 0, -1) / std::sqrt(2.0);
}
inline Vec psi_plus() {
    return ket2(0, 1, 1, 0) / std::sqrt(2.0);
}
inline Vec psi_minus() {
    return ket2(0, 1, -1, 0) / std::sqrt(2.0);
}

inline Mat proj(const Vec &v) {
    return v * v.adjoint();
}

inline Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline Mat pair(double f) {
    return f * proj(phi_plus()) + (1.0 - f) * proj(phi_minus());
}

// Qubit bit q (0 = most significant) of a 4-qubit index.
inline int bit(int index, int q) {
    return (index >> (3 - q)) & 1;
}

// Reorders a 4-qubit matrix from (1A,1B,2A,2B) to (1A,2A,1B,2B).
inline Mat cross_to_node_order(const Mat &m) {
    auto map = [](int i) {
        const int a1 = bit(i, 0), b1 = bit(i, 1), a2 = bit(i, 2), b2 = bit(i, 3);
        return (a1 << 3) | (a2 << 2) | (b1 << 1) | b2;
    };
    Mat out(16, 16);
    for (int i = 0; i < 16; ++i) {
        for (int j = 0; j < 16; ++j) {
            out(map(i), map(j)) = m(i, j);
        }
    }
    return out;
}

// Columns |++>, |-->, |+->, |-+> of one node; u = 1, -1, 0, 0.
inline Mat node_u_basis() {
    const double h = 0.5;
    Mat b(4, 4);
    b << h, h, h, h,     //
        h, -h, -h, h,    //
        h, -h, h, -h,    //
        h, h, -h, -h;
    return b;
}

inline constexpr int kU[4] = {1, -1, 0, 0};

// Both cavities conditioned on vacuum at amplitude |alpha|^2, unnormalized, in (1A,2A,1B,2B).
// alpha_sq < 0 stands for the |alpha| -> infinity limit.
inline Mat conditioned_fusion(double f, double alpha_sq) {
    const Mat rho = cross_to_node_order(kron(pair(f), pair(f)));
    const Mat u = kron(node_u_basis(), node_u_basis());
    Mat r = u.adjoint() * rho * u;
    for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 4; ++k) {
            for (int j = 0; j < 4; ++j) {
                for (int l = 0; l < 4; ++l) {
                    const bool keep = kU[i] == kU[j] && kU[k] == kU[l];
                    const int theta = kU[i] * kU[j] + kU[k] * kU[l];
                    double w = 0.0;
                    if (keep) {
                        w = alpha_sq < 0.0 ? (theta == 0 ? 1.0 : 0.0) : std::exp(-alpha_sq * theta);
                    }
                    r(i * 4 + k, j * 4 + l) *= w;
                }
            }
        }
    }
    return u * r * u.adjoint();
}

}  // namespace oracle

#endif
