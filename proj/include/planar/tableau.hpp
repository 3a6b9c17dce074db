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

#ifndef PLANAR_TABLEAU_HPP
#define PLANAR_TABLEAU_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "planar/pauli.hpp"

namespace planar {

enum class BasisState : uint8_t { Zero, One, Plus, Minus };

inline PauliOperator basis_observable(std::size_t num_qubits, std::size_t q, BasisState s) {
    std::size_t target[]{q};
    bool z = s == BasisState::Zero || s == BasisState::One;
    auto op = z ? PauliOperator::z_on(num_qubits, target) : PauliOperator::x_on(num_qubits, target);
    op.set_negative(s == BasisState::One || s == BasisState::Minus);
    return op;
}

struct MeasurementResult {
    int outcome;  // +1 or -1
    bool deterministic;
};

/// Stabilizer state of n qubits stored as n stabilizer and n destabilizer rows.
///
/// Stabilizer k anticommutes with destabilizer k and commutes with every other
/// row of the opposite kind. Measurements use the standard update: a random
/// outcome replaces one anticommuting stabilizer, a deterministic one is read off
/// by multiplying the stabilizers selected by the destabilizers.
class Tableau {
   public:
    /// The all-|0> state.
    explicit Tableau(std::size_t num_qubits) : n_(num_qubits) {
        for (std::size_t q = 0; q < n_; q++) {
            std::size_t target[]{q};
            stabilizers_.push_back(PauliOperator::z_on(n_, target));
            destabilizers_.push_back(PauliOperator::x_on(n_, target));
        }
    }

    static Tableau prepare_product(std::span<const BasisState> states) {
        Tableau t(states.size());
        for (std::size_t q = 0; q < states.size(); q++) {
            t.stabilizers_[q] = basis_observable(t.n_, q, states[q]);
            std::size_t target[]{q};
            bool z = states[q] == BasisState::Zero || states[q] == BasisState::One;
            t.destabilizers_[q] = z ? PauliOperator::x_on(t.n_, target) : PauliOperator::z_on(t.n_, target);
        }
        return t;
    }

    std::size_t num_qubits() const {
        return n_;
    }
    const std::vector<PauliOperator> &stabilizers() const {
        return stabilizers_;
    }
    const std::vector<PauliOperator> &destabilizers() const {
        return destabilizers_;
    }

    template <typename Rng>
    MeasurementResult measure_pauli(const PauliOperator &observable, Rng &rng) {
        check_register(observable);
        std::size_t pivot = n_;
        for (std::size_t k = 0; k < n_; k++) {
            if (!stabilizers_[k].commutes_with(observable)) {
                pivot = k;
                break;
            }
        }
        if (pivot == n_) {
            return {decompose_sign(observable), true};
        }
        for (std::size_t k = 0; k < n_; k++) {
            if (k != pivot && !stabilizers_[k].commutes_with(observable)) {
                stabilizers_[k] *= stabilizers_[pivot];
            }
            if (k != pivot && !destabilizers_[k].commutes_with(observable)) {
                destabilizers_[k] *= stabilizers_[pivot];
            }
        }
        destabilizers_[pivot] = stabilizers_[pivot];
        bool minus = rng() & 1;
        stabilizers_[pivot] = observable;
        stabilizers_[pivot].set_negative(observable.negative() != minus);
        return {minus ? -1 : +1, false};
    }

    /// Conjugates the state by a Pauli: every row that anticommutes flips sign.
    void apply_pauli(const PauliOperator &op) {
        check_register(op);
        for (auto *rows : {&stabilizers_, &destabilizers_}) {
            for (auto &row : *rows) {
                if (!row.commutes_with(op)) {
                    row.set_negative(!row.negative());
                }
            }
        }
    }

    /// Resets one qubit into a basis state by measuring and fixing the outcome.
    template <typename Rng>
    void prepare(std::size_t q, BasisState state, Rng &rng) {
        auto target = basis_observable(n_, q, state);
        if (measure_pauli(target, rng).outcome < 0) {
            std::size_t qs[]{q};
            bool z = state == BasisState::Zero || state == BasisState::One;
            apply_pauli(z ? PauliOperator::x_on(n_, qs) : PauliOperator::z_on(n_, qs));
        }
    }

    /// +1 or -1 if the operator (with its sign) lies in the stabilizer group up
    /// to sign, nullopt otherwise. The returned value is the eigenvalue.
    std::optional<int> contains(const PauliOperator &op) const {
        check_register(op);
        for (const auto &s : stabilizers_) {
            if (!s.commutes_with(op)) {
                return std::nullopt;
            }
        }
        return decompose_sign(op);
    }

    /// Checks the symplectic pairing between stabilizers and destabilizers.
    bool invariants_hold(std::string *why = nullptr) const {
        auto fail = [&](const std::string &msg) {
            if (why) {
                *why = msg;
            }
            return false;
        };
        if (stabilizers_.size() != n_ || destabilizers_.size() != n_) {
            return fail("row count mismatch");
        }
        for (std::size_t a = 0; a < n_; a++) {
            for (std::size_t b = 0; b < n_; b++) {
                if (!stabilizers_[a].commutes_with(stabilizers_[b])) {
                    return fail("stabilizers " + std::to_string(a) + " and " + std::to_string(b) + " anticommute");
                }
                bool anti = !stabilizers_[a].commutes_with(destabilizers_[b]);
                if (anti != (a == b)) {
                    return fail("pairing broken between stabilizer " + std::to_string(a) + " and destabilizer " +
                                std::to_string(b));
                }
            }
        }
        return true;
    }

   private:
    int decompose_sign(const PauliOperator &op) const {
        PauliOperator acc(n_);
        for (std::size_t k = 0; k < n_; k++) {
            if (!destabilizers_[k].commutes_with(op)) {
                acc *= stabilizers_[k];
            }
        }
        if (acc.xs() != op.xs() || acc.zs() != op.zs()) {
            throw std::logic_error("tableau lost a generator: operator commutes with the group but is not in it");
        }
        return acc.negative() == op.negative() ? +1 : -1;
    }
    void check_register(const PauliOperator &op) const {
        if (op.num_qubits() != n_) {
            throw std::invalid_argument("operator acts on " + std::to_string(op.num_qubits()) +
                                        " qubits but the tableau holds " + std::to_string(n_));
        }
    }

    std::size_t n_;
    std::vector<PauliOperator> stabilizers_;
    std::vector<PauliOperator> destabilizers_;
};

}  // namespace planar

#endif
