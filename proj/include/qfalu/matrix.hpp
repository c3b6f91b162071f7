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

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qfalu {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
class CMatrix {
  public:
    CMatrix() = default;
    explicit CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    static CMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    Complex &at(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const Complex &at(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }
    const std::vector<Complex> &data() const { return data_; }

    CMatrix adjoint() const;
    CMatrix operator*(const CMatrix &rhs) const;

    /// Largest entrywise |a - b| over the two matrices.
    double max_abs_diff(const CMatrix &other) const;
    /// Largest entry magnitude of (this - I).
    double deviation_from_identity() const;

  private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

} // namespace qfalu
