// Copyright 2026 The planar-memory Authors
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

#ifndef PLANAR_PAULI_HPP
#define PLANAR_PAULI_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace planar {

/// Fixed-length packed bit vector.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(std::size_t num_bits) : size_(num_bits), words_((num_bits + 63) / 64, 0) {
    }

    std::size_t size() const {
        return size_;
    }
    bool operator[](std::size_t k) const {
        return (words_[k >> 6] >> (k & 63)) & 1u;
    }
    void set(std::size_t k, bool value = true) {
        uint64_t mask = uint64_t{1} << (k & 63);
        if (value) {
            words_[k >> 6] |= mask;
        } else {
            words_[k >> 6] &= ~mask;
        }
    }
    void flip(std::size_t k) {
        words_[k >> 6] ^= uint64_t{1} << (k & 63);
    }
    void clear() {
        for (auto &w : words_) {
            w = 0;
        }
    }
    BitVector &operator^=(const BitVector &other) {
        check_same_size(other);
        for (std::size_t k = 0; k < words_.size(); k++) {
            words_[k] ^= other.words_[k];
        }
        return *this;
    }
    bool any() const {
        for (auto w : words_) {
            if (w) {
                return true;
            }
        }
        return false;
    }
    std::size_t popcount() const {
        std::size_t total = 0;
        for (auto w : words_) {
            total += (std::size_t)std::popcount(w);
        }
        return total;
    }
    /// Parity of the bitwise AND with another vector.
    bool and_parity(const BitVector &other) const {
        check_same_size(other);
        uint64_t acc = 0;
        for (std::size_t k = 0; k < words_.size(); k++) {
            acc ^= words_[k] & other.words_[k];
        }
        return std::popcount(acc) & 1;
    }
    std::vector<std::size_t> ones() const {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < size_; k++) {
            if ((*this)[k]) {
                out.push_back(k);
            }
        }
        return out;
    }
    std::span<const uint64_t> words() const {
        return words_;
    }
    std::span<uint64_t> words() {
        return words_;
    }
    bool operator==(const BitVector &other) const = default;

   private:
    void check_same_size(const BitVector &other) const {
        if (other.size_ != size_) {
            throw std::invalid_argument("bit vector length mismatch");
        }
    }

    std::size_t size_ = 0;
    std::vector<uint64_t> words_;
};

/// Signed tensor product of single-qubit Paulis on a fixed register.
///
/// A qubit with both the x and z bit set carries Y, so the operator is Hermitian
/// and the sign is always +1 or -1.
class PauliOperator {
   public:
    PauliOperator() = default;
    explicit PauliOperator(std::size_t num_qubits) : xs_(num_qubits), zs_(num_qubits) {
    }

    static PauliOperator x_on(std::size_t num_qubits, std::span<const std::size_t> qubits) {
        PauliOperator out(num_qubits);
        for (auto q : qubits) {
            out.check_index(q);
            out.xs_.flip(q);
        }
        return out;
    }
    static PauliOperator z_on(std::size_t num_qubits, std::span<const std::size_t> qubits) {
        PauliOperator out(num_qubits);
        for (auto q : qubits) {
            out.check_index(q);
            out.zs_.flip(q);
        }
        return out;
    }

    /// Parses text such as "-X_ZY" where '_' or 'I' is the identity.
    static PauliOperator from_string(std::string_view text) {
        bool negative = false;
        if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
            negative = text[0] == '-';
            text.remove_prefix(1);
        }
        PauliOperator out(text.size());
        out.negative_ = negative;
        for (std::size_t q = 0; q < text.size(); q++) {
            switch (text[q]) {
                case '_':
                case 'I':
                    break;
                case 'X':
                    out.xs_.set(q);
                    break;
                case 'Z':
                    out.zs_.set(q);
                    break;
                case 'Y':
                    out.xs_.set(q);
                    out.zs_.set(q);
                    break;
                default:
                    throw std::invalid_argument("unrecognized Pauli character in '" + std::string(text) + "'");
            }
        }
        return out;
    }

    std::size_t num_qubits() const {
        return xs_.size();
    }
    bool negative() const {
        return negative_;
    }
    void set_negative(bool negative) {
        negative_ = negative;
    }
    int sign() const {
        return negative_ ? -1 : +1;
    }
    const BitVector &xs() const {
        return xs_;
    }
    const BitVector &zs() const {
        return zs_;
    }
    BitVector &xs() {
        return xs_;
    }
    BitVector &zs() {
        return zs_;
    }

    char pauli_at(std::size_t q) const {
        return "_XZY"[xs_[q] + 2 * zs_[q]];
    }
    bool is_identity() const {
        return !xs_.any() && !zs_.any();
    }
    std::vector<std::size_t> x_support() const {
        return xs_.ones();
    }
    std::vector<std::size_t> z_support() const {
        return zs_.ones();
    }
    std::size_t weight() const {
        std::size_t w = 0;
        for (std::size_t q = 0; q < num_qubits(); q++) {
            w += xs_[q] || zs_[q];
        }
        return w;
    }

    bool commutes_with(const PauliOperator &other) const {
        return xs_.and_parity(other.zs_) == zs_.and_parity(other.xs_);
    }

    /// Right-multiplies by a commuting operator, tracking the sign exactly.
    PauliOperator &operator*=(const PauliOperator &rhs) {
        if (rhs.num_qubits() != num_qubits()) {
            throw std::invalid_argument("Pauli operators act on different registers");
        }
        // Exponent of i picked up by each single-qubit product, summed mod 4.
        int phase = 2 * (negative_ + rhs.negative_);
        for (std::size_t q = 0; q < num_qubits(); q++) {
            phase += product_phase(xs_[q], zs_[q], rhs.xs_[q], rhs.zs_[q]);
        }
        phase = ((phase % 4) + 4) % 4;
        if (phase & 1) {
            throw std::invalid_argument("product of anticommuting Pauli operators is not Hermitian");
        }
        xs_ ^= rhs.xs_;
        zs_ ^= rhs.zs_;
        negative_ = phase == 2;
        return *this;
    }

    /// Operator with the same support and the opposite sign.
    PauliOperator operator-() const {
        PauliOperator out = *this;
        out.negative_ = !negative_;
        return out;
    }

    bool operator==(const PauliOperator &other) const = default;

    std::string str() const {
        std::string out(1, negative_ ? '-' : '+');
        for (std::size_t q = 0; q < num_qubits(); q++) {
            out.push_back(pauli_at(q));
        }
        return out;
    }

   private:
    // Power of i in sigma(x1,z1) * sigma(x2,z2) = i^g sigma(x1^x2, z1^z2).
    static int product_phase(bool x1, bool z1, bool x2, bool z2) {
        if (x1 && z1) {
            return (int)z2 - (int)x2;
        }
        if (x1) {
            return z2 * (2 * (int)x2 - 1);
        }
        if (z1) {
            return x2 * (1 - 2 * (int)z2);
        }
        return 0;
    }
    void check_index(std::size_t q) const {
        if (q >= num_qubits()) {
            throw std::out_of_range("qubit index " + std::to_string(q) + " outside register");
        }
    }

    BitVector xs_;
    BitVector zs_;
    bool negative_ = false;
};

}  // namespace planar

#endif
