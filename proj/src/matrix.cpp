// Copyright 2026 The qfalu developers
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

#include "qfalu/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace qfalu {

CMatrix CMatrix::identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m.at(i, i) = 1.0;
    }
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            m.at(c, r) = std::conj(at(r, c));
        }
    }
    return m;
}

CMatrix CMatrix::operator*(const CMatrix &rhs) const {
    if (dim_ != rhs.dim_) {
        throw std::invalid_argument("matrix dimensions differ");
    }
    CMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const Complex a = at(r, k);
            if (a == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < dim_; ++c) {
                out.at(r, c) += a * rhs.at(k, c);
            }
        }
    }
    return out;
}

double CMatrix::max_abs_diff(const CMatrix &other) const {
    if (dim_ != other.dim_) {
        throw std::invalid_argument("matrix dimensions differ");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
    }
    return worst;
}

double CMatrix::deviation_from_identity() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            const Complex expect = (r == c) ? Complex{1.0, 0.0} : Complex{};
            worst = std::max(worst, std::abs(at(r, c) - expect));
        }
    }
    return worst;
}

} // namespace qfalu
