// Copyright 2026 The qic Authors
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

#pragma once

#include <cstddef>
#include <cstdlib>
#include <span>
#include <string>
#include <vector>

#include "qic/amplitude.hpp"
#include "qic/error.hpp"

namespace qic {

/// Caps on dense object sizes. Checks fail fast with DimensionCapExceeded
/// instead of exhausting memory.
struct DimensionLimits {
    std::size_t max_state_dim = std::size_t{1} << 14;
    std::size_t max_unitary_dim = std::size_t{1} << 12;

    /// Defaults, with QIC_DIM_CAP (amplitudes per state) overriding the state cap.
    static DimensionLimits from_env() {
        DimensionLimits lim;
        if (const char* env = std::getenv("QIC_DIM_CAP"); env != nullptr && *env != '\0') {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end != nullptr && *end == '\0' && v > 0) lim = with_state_cap(v);
        }
        return lim;
    }

    static DimensionLimits with_state_cap(std::size_t cap) {
        DimensionLimits lim;
        lim.max_state_dim = cap;
        if (lim.max_unitary_dim > cap) lim.max_unitary_dim = cap;
        return lim;
    }
};

inline std::size_t checked_dim(std::size_t num_qubits, std::size_t cap, const char* what) {
    if (num_qubits >= 48 || (std::size_t{1} << num_qubits) > cap) {
        throw Error(ErrorKind::DimensionCapExceeded,
                    std::string(what) + " on " + std::to_string(num_qubits) +
                        " qubits exceeds the dimension cap of " + std::to_string(cap));
    }
    return std::size_t{1} << num_qubits;
}

/// Dense matrix stored column by column: column j is the image of basis
/// state j when the matrix is an operator.
template <Amplitude T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, AmplitudeTraits<T>::zero()) {}

    static DenseMatrix identity(std::size_t dim) {
        DenseMatrix m(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = AmplitudeTraits<T>::one();
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[c * rows_ + r]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[c * rows_ + r]; }

    std::span<T> column(std::size_t c) { return {data_.data() + c * rows_, rows_}; }
    std::span<const T> column(std::size_t c) const { return {data_.data() + c * rows_, rows_}; }

    DenseMatrix adjoint() const {
        DenseMatrix out(cols_, rows_);
        for (std::size_t c = 0; c < cols_; ++c) {
            for (std::size_t r = 0; r < rows_; ++r) out(c, r) = AmplitudeTraits<T>::conj((*this)(r, c));
        }
        return out;
    }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shapes");
        DenseMatrix out(a.rows_, b.cols_);
        for (std::size_t j = 0; j < b.cols_; ++j) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& bkj = b(k, j);
                if (AmplitudeTraits<T>::is_zero(bkj)) continue;
                for (std::size_t i = 0; i < a.rows_; ++i) {
                    const T& aik = a(i, k);
                    if (AmplitudeTraits<T>::is_zero(aik)) continue;
                    out(i, j) += aik * bkj;
                }
            }
        }
        return out;
    }

    /// Entrywise comparison within tol (exact equality on the ring backend).
    bool near(const DenseMatrix& other, Tolerance tol = {}) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) return false;
        for (std::size_t i = 0; i < data_.size(); ++i) {
            if (!AmplitudeTraits<T>::near(data_[i], other.data_[i], tol)) return false;
        }
        return true;
    }

    DenseMatrix<Complex> to_complex() const {
        DenseMatrix<Complex> out(rows_, cols_);
        for (std::size_t c = 0; c < cols_; ++c) {
            for (std::size_t r = 0; r < rows_; ++r) out(r, c) = AmplitudeTraits<T>::to_complex((*this)(r, c));
        }
        return out;
    }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <Amplitude T>
using UnitaryMatrix = DenseMatrix<T>;

/// Amplitudes over 2^q basis states. Qubit 0 is the most significant bit of
/// the basis index.
template <Amplitude T>
class StateVector {
public:
    StateVector() = default;
    StateVector(std::size_t num_qubits, std::vector<T> amps)
        : num_qubits_(num_qubits), amps_(std::move(amps)) {
        if (num_qubits_ >= 48 || amps_.size() != (std::size_t{1} << num_qubits_)) {
            throw Error(ErrorKind::DimensionMismatch,
                        "state on " + std::to_string(num_qubits_) + " qubits needs 2^q amplitudes");
        }
    }

    std::size_t num_qubits() const noexcept { return num_qubits_; }
    std::size_t dim() const noexcept { return amps_.size(); }
    const std::vector<T>& amplitudes() const noexcept { return amps_; }
    std::vector<T>& amplitudes() noexcept { return amps_; }
    const T& operator[](std::size_t i) const { return amps_[i]; }
    T& operator[](std::size_t i) { return amps_[i]; }

    /// Sum of |amp|^2 as a backend value.
    T norm2() const {
        T acc = AmplitudeTraits<T>::zero();
        for (const T& a : amps_) {
            if (!AmplitudeTraits<T>::is_zero(a)) acc += AmplitudeTraits<T>::abs2(a);
        }
        return acc;
    }

    StateVector<Complex> to_complex() const {
        std::vector<Complex> out;
        out.reserve(amps_.size());
        for (const T& a : amps_) out.push_back(AmplitudeTraits<T>::to_complex(a));
        return {num_qubits_, std::move(out)};
    }

    friend bool operator==(const StateVector&, const StateVector&) = default;

private:
    std::size_t num_qubits_ = 0;
    std::vector<T> amps_;
};

/// <a|b>
template <Amplitude T>
T inner_product(std::span<const T> a, std::span<const T> b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "inner product sizes");
    T acc = AmplitudeTraits<T>::zero();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (AmplitudeTraits<T>::is_zero(a[i]) || AmplitudeTraits<T>::is_zero(b[i])) continue;
        acc += AmplitudeTraits<T>::conj(a[i]) * b[i];
    }
    return acc;
}

template <Amplitude T>
T inner_product(const StateVector<T>& a, const StateVector<T>& b) {
    return inner_product<T>(std::span<const T>(a.amplitudes()), std::span<const T>(b.amplitudes()));
}

}  // namespace qic
