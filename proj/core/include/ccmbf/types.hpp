// SPDX-License-Identifier: Apache-2.0
//
// ccmbf: reduced-rank constrained constant modulus adaptive beamforming
// Copyright (C) 2026 The ccmbf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef CCMBF_TYPES_HPP
#define CCMBF_TYPES_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccmbf
{
    using cx = std::complex<double>;
    using CVec = Eigen::VectorXcd;
    using CMat = Eigen::MatrixXcd;

    // Argument outside the mathematical domain of an operation (angles, zero weights, ...)
    class DomainError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // Matrix could not be inverted even after diagonal loading
    class SingularMatrixError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // The signal of interest is invisible in the current subspace (zero projected steering)
    class DegenerateSubspaceError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Column `column()` of a matrix is (numerically) a combination of the previous ones
    class RankDeficiencyError : public std::runtime_error
    {
    public:
        RankDeficiencyError(std::size_t column, const std::string &what)
            : std::runtime_error(what), column_(column) {}
        std::size_t column() const noexcept { return column_; }

    private:
        std::size_t column_;
    };

    // An adaptive run produced non-finite weights or failed inside a Monte-Carlo loop
    class NumericalError : public std::runtime_error
    {
    public:
        NumericalError(std::size_t run_index, const std::string &what)
            : std::runtime_error(what), run_index_(run_index) {}
        std::size_t run_index() const noexcept { return run_index_; }

    private:
        std::size_t run_index_;
    };

    inline bool all_finite(const CVec &v) { return v.allFinite(); }
    inline bool all_finite(const CMat &m) { return m.allFinite(); }

} // namespace ccmbf

#endif
