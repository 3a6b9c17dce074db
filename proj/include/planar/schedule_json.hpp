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

#ifndef PLANAR_SCHEDULE_JSON_HPP
#define PLANAR_SCHEDULE_JSON_HPP

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "planar/protocols.hpp"

namespace planar {

// A Pauli becomes {"sign": "+" or "-", "x": [qubits], "z": [qubits]}; a Y on
// qubit q appears in both lists.

inline nlohmann::json pauli_to_json(const PauliOperator &op) {
    return {{"sign", op.negative() ? "-" : "+"}, {"x", op.x_support()}, {"z", op.z_support()}};
}

inline PauliOperator pauli_from_json(const nlohmann::json &j, std::size_t num_qubits) {
    PauliOperator op(num_qubits);
    for (std::size_t q : j.at("x").get<std::vector<std::size_t>>()) {
        if (q >= num_qubits) {
            throw std::invalid_argument("Pauli support outside the register");
        }
        op.xs().set(q);
    }
    for (std::size_t q : j.at("z").get<std::vector<std::size_t>>()) {
        if (q >= num_qubits) {
            throw std::invalid_argument("Pauli support outside the register");
        }
        op.zs().set(q);
    }
    const auto sign = j.at("sign").get<std::string>();
    if (sign != "+" && sign != "-") {
        throw std::invalid_argument("Pauli sign must be + or -");
    }
    op.set_negative(sign == "-");
    return op;
}

inline const char *basis_key(BasisState s) {
    switch (s) {
        case BasisState::Zero:
            return "zero";
        case BasisState::One:
            return "one";
        case BasisState::Plus:
            return "plus";
        default:
            return "minus";
    }
}

inline BasisState basis_from_key(const std::string &key) {
    for (auto s : {BasisState::Zero, BasisState::One, BasisState::Plus, BasisState::Minus}) {
        if (key == basis_key(s)) {
            return s;
        }
    }
    throw std::invalid_argument("unknown basis state: " + key);
}

inline nlohmann::json schedule_to_json(const ProtocolSchedule &s) {
    nlohmann::json phases = nlohmann::json::array();
    for (const auto &phase : s.phases) {
        if (auto *p = std::get_if<PreparePhase>(&phase)) {
            phases.push_back({{"kind", "prepare"}, {"state", basis_key(p->state)}, {"qubits", p->qubits}});
        } else if (auto *m = std::get_if<MeasurePhase>(&phase)) {
            nlohmann::json obs = nlohmann::json::array();
            for (std::size_t k = 0; k < m->observables.size(); k++) {
                obs.push_back({{"label", m->labels[k]}, {"pauli", pauli_to_json(m->observables[k])}});
            }
            phases.push_back({{"kind", "measure"}, {"observables", obs}});
        } else {
            const auto &c = std::get<CorrectPhase>(phase);
            nlohmann::json fixes = nlohmann::json::array();
            for (const auto &fix : c.corrections) {
                fixes.push_back({{"condition", fix.condition}, {"correction", pauli_to_json(fix.correction)}});
            }
            phases.push_back({{"kind", "correct"}, {"corrections", fixes}});
        }
    }
    return {
        {"name", s.name},
        {"num_qubits", s.num_qubits},
        {"before", {s.rows_before, s.cols_before}},
        {"after", {s.rows_after, s.cols_after}},
        {"phases", phases},
    };
}

inline ProtocolSchedule schedule_from_json(const nlohmann::json &j) {
    ProtocolSchedule s;
    s.name = j.at("name").get<std::string>();
    s.num_qubits = j.at("num_qubits").get<std::size_t>();
    s.rows_before = j.at("before").at(0).get<int>();
    s.cols_before = j.at("before").at(1).get<int>();
    s.rows_after = j.at("after").at(0).get<int>();
    s.cols_after = j.at("after").at(1).get<int>();
    for (const auto &ph : j.at("phases")) {
        const auto kind = ph.at("kind").get<std::string>();
        if (kind == "prepare") {
            s.phases.push_back(PreparePhase{ph.at("qubits").get<std::vector<std::size_t>>(),
                                            basis_from_key(ph.at("state").get<std::string>())});
        } else if (kind == "measure") {
            MeasurePhase m;
            for (const auto &o : ph.at("observables")) {
                m.labels.push_back(o.at("label").get<std::string>());
                m.observables.push_back(pauli_from_json(o.at("pauli"), s.num_qubits));
            }
            s.phases.push_back(std::move(m));
        } else if (kind == "correct") {
            CorrectPhase c;
            for (const auto &f : ph.at("corrections")) {
                c.corrections.push_back({f.at("condition").get<std::vector<std::size_t>>(),
                                         pauli_from_json(f.at("correction"), s.num_qubits)});
            }
            s.phases.push_back(std::move(c));
        } else {
            throw std::invalid_argument("unknown phase kind: " + kind);
        }
    }
    return s;
}

}  // namespace planar

#endif
