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

#ifndef PLANAR_PROTOCOLS_HPP
#define PLANAR_PROTOCOLS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "planar/lattice.hpp"
#include "planar/pauli.hpp"
#include "planar/tableau.hpp"

namespace planar {

// Protocols are schedules of phases that act on a fixed register (the
// "canvas"). A canvas is the qubit register of the largest lattice a protocol
// sequence will need; a smaller lattice occupies its upper-left corner, so a
// coordinate names the same register slot before and after growing or
// shrinking on the right and bottom edges.

class Canvas {
   public:
    Canvas(int rows, int cols) : full_(rows, cols) {
    }
    std::size_t num_qubits() const {
        return full_.num_qubits();
    }
    const LatticeGeometry &geometry() const {
        return full_;
    }
    bool fits(const LatticeGeometry &g) const {
        return g.rows() <= full_.rows() && g.cols() <= full_.cols();
    }
    std::size_t slot(const LatticeGeometry &g, std::size_t q) const {
        return full_.index_of(g.coord(q));
    }
    std::vector<std::size_t> slots(const LatticeGeometry &g, const std::vector<std::size_t> &qs) const {
        std::vector<std::size_t> out;
        for (auto q : qs) {
            out.push_back(slot(g, q));
        }
        return out;
    }
    PauliOperator lift(const LatticeGeometry &g, const PauliOperator &op) const {
        PauliOperator out(num_qubits());
        for (std::size_t q = 0; q < g.num_qubits(); q++) {
            out.xs().set(slot(g, q), op.xs()[q]);
            out.zs().set(slot(g, q), op.zs()[q]);
        }
        out.set_negative(op.negative());
        return out;
    }

   private:
    LatticeGeometry full_;
};

struct PreparePhase {
    std::vector<std::size_t> qubits;
    BasisState state;
};

struct MeasurePhase {
    std::vector<std::string> labels;
    std::vector<PauliOperator> observables;
};

/// Applies `correction` when the outcomes listed in `condition` (global
/// measurement ids) multiply to -1.
struct ConditionalPauli {
    std::vector<std::size_t> condition;
    PauliOperator correction;
};

struct CorrectPhase {
    std::vector<ConditionalPauli> corrections;
};

using Phase = std::variant<PreparePhase, MeasurePhase, CorrectPhase>;

struct ProtocolSchedule {
    std::string name;
    std::size_t num_qubits = 0;
    int rows_before = 0;
    int cols_before = 0;
    int rows_after = 0;
    int cols_after = 0;
    std::vector<Phase> phases;

    std::size_t num_measurements() const {
        std::size_t n = 0;
        for (const auto &ph : phases) {
            if (auto *m = std::get_if<MeasurePhase>(&ph)) {
                n += m->observables.size();
            }
        }
        return n;
    }
};

enum class CorrectionMode : uint8_t {
    Apply,  // corrections are applied to the state
    Frame,  // corrections accumulate in a classical Pauli frame
};

struct ExecutionRecord {
    std::vector<int> outcomes;
    std::vector<bool> deterministic;
    /// Pending Pauli correction in frame mode; identity in apply mode.
    PauliOperator frame;
};

/// Runs a schedule. In frame mode reported outcomes already account for the
/// pending frame, so both modes yield the same outcome statistics.
template <typename Rng>
ExecutionRecord run_schedule(
    const ProtocolSchedule &schedule, Tableau &state, Rng &rng, CorrectionMode mode = CorrectionMode::Frame,
    ExecutionRecord record = {}) {
    if (state.num_qubits() != schedule.num_qubits) {
        throw std::invalid_argument("schedule '" + schedule.name + "' does not match the register size");
    }
    if (record.frame.num_qubits() != state.num_qubits()) {
        record.frame = PauliOperator(state.num_qubits());
    }
    const std::size_t base = record.outcomes.size();
    for (const auto &phase : schedule.phases) {
        if (auto *prep = std::get_if<PreparePhase>(&phase)) {
            for (auto q : prep->qubits) {
                state.prepare(q, prep->state, rng);
                record.frame.xs().set(q, false);
                record.frame.zs().set(q, false);
            }
        } else if (auto *meas = std::get_if<MeasurePhase>(&phase)) {
            for (const auto &obs : meas->observables) {
                auto r = state.measure_pauli(obs, rng);
                if (!record.frame.commutes_with(obs)) {
                    r.outcome = -r.outcome;
                }
                record.outcomes.push_back(r.outcome);
                record.deterministic.push_back(r.deterministic);
            }
        } else {
            for (const auto &c : std::get<CorrectPhase>(phase).corrections) {
                bool fire = false;
                for (auto id : c.condition) {
                    if (base + id >= record.outcomes.size()) {
                        throw std::logic_error("correction depends on a measurement that has not happened");
                    }
                    fire ^= record.outcomes[base + id] < 0;
                }
                if (!fire) {
                    continue;
                }
                if (mode == CorrectionMode::Apply) {
                    state.apply_pauli(c.correction);
                } else {
                    record.frame.xs() ^= c.correction.xs();
                    record.frame.zs() ^= c.correction.zs();
                }
            }
        }
    }
    return record;
}

/// Eigenvalue of an operator on the frame-corrected state, nullopt if random.
inline std::optional<int> eigenvalue(const Tableau &state, const PauliOperator &frame, const PauliOperator &op) {
    auto v = state.contains(op);
    if (v && !frame.commutes_with(op)) {
        *v = -*v;
    }
    return v;
}

/// Incrementally assembles a schedule with global measurement ids.
class ScheduleBuilder {
   public:
    ScheduleBuilder(std::string name, const Canvas &canvas, const LatticeGeometry &before, const LatticeGeometry &after)
        : canvas_(canvas) {
        if (!canvas.fits(before) || !canvas.fits(after)) {
            throw std::invalid_argument("lattice does not fit on the canvas");
        }
        s_.name = std::move(name);
        s_.num_qubits = canvas.num_qubits();
        s_.rows_before = before.rows();
        s_.cols_before = before.cols();
        s_.rows_after = after.rows();
        s_.cols_after = after.cols();
    }

    void prepare(std::vector<std::size_t> slots, BasisState state) {
        if (!slots.empty()) {
            s_.phases.push_back(PreparePhase{std::move(slots), state});
        }
    }
    /// Starts a measurement phase; returns nothing, ids come from `measure`.
    void begin_measure() {
        s_.phases.push_back(MeasurePhase{});
    }
    std::size_t measure(std::string label, PauliOperator op) {
        auto &m = std::get<MeasurePhase>(s_.phases.back());
        m.labels.push_back(std::move(label));
        m.observables.push_back(std::move(op));
        return next_id_++;
    }
    void begin_correct() {
        s_.phases.push_back(CorrectPhase{});
    }
    void correct(std::vector<std::size_t> condition, PauliOperator op) {
        std::get<CorrectPhase>(s_.phases.back()).corrections.push_back({std::move(condition), std::move(op)});
    }
    ProtocolSchedule build() && {
        return std::move(s_);
    }

    const Canvas &canvas() const {
        return canvas_;
    }

   private:
    const Canvas &canvas_;
    ProtocolSchedule s_;
    std::size_t next_id_ = 0;
};

namespace detail {

inline std::string coord_label(const char *kind, int i, int j) {
    std::ostringstream out;
    out << kind << "(" << i << "," << j << ")";
    return out.str();
}

inline PauliOperator lifted_x(const Canvas &c, const LatticeGeometry &g, const std::vector<std::size_t> &qs) {
    return PauliOperator::x_on(c.num_qubits(), c.slots(g, qs));
}
inline PauliOperator lifted_z(const Canvas &c, const LatticeGeometry &g, const std::vector<std::size_t> &qs) {
    return PauliOperator::z_on(c.num_qubits(), c.slots(g, qs));
}

}  // namespace detail

/// Grows (N,M) to (N,M+1). New qubits start in |+>, the new plaquettes are
/// measured and a -1 is fixed by X on the new east-edge vertical qubit.
inline ProtocolSchedule append_column(const LatticeGeometry &g, const Canvas &canvas) {
    LatticeGeometry next(g.rows(), g.cols() + 1);
    ScheduleBuilder b("append_column", canvas, g, next);
    const int m = g.cols();
    std::vector<std::size_t> fresh;
    for (int i = 1; i <= g.rows(); i++) {
        fresh.push_back(next.vertical(i, m + 1));
        if (i < g.rows()) {
            fresh.push_back(next.horizontal(i, m));
        }
    }
    b.prepare(canvas.slots(next, fresh), BasisState::Plus);
    b.begin_measure();
    std::vector<std::size_t> ids;
    for (int i = 1; i <= g.rows(); i++) {
        ids.push_back(b.measure(detail::coord_label("p", i, m), detail::lifted_z(canvas, next, next.plaquette_support({i, m}))));
    }
    b.begin_correct();
    for (int i = 1; i <= g.rows(); i++) {
        b.correct({ids[i - 1]}, detail::lifted_x(canvas, next, {next.vertical(i, m + 1)}));
    }
    return std::move(b).build();
}

/// Grows (N,M) to (N+1,M). New qubits start in |0>, the new stars are measured
/// and a -1 is fixed by Z on the new bottom-edge vertical qubit.
inline ProtocolSchedule append_row(const LatticeGeometry &g, const Canvas &canvas) {
    LatticeGeometry next(g.rows() + 1, g.cols());
    ScheduleBuilder b("append_row", canvas, g, next);
    const int n = g.rows();
    std::vector<std::size_t> fresh;
    for (int j = 1; j <= g.cols(); j++) {
        fresh.push_back(next.vertical(n + 1, j));
        if (j < g.cols()) {
            fresh.push_back(next.horizontal(n, j));
        }
    }
    b.prepare(canvas.slots(next, fresh), BasisState::Zero);
    b.begin_measure();
    std::vector<std::size_t> ids;
    for (int j = 1; j <= g.cols(); j++) {
        ids.push_back(b.measure(detail::coord_label("s", n, j), detail::lifted_x(canvas, next, next.star_support({n, j}))));
    }
    b.begin_correct();
    for (int j = 1; j <= g.cols(); j++) {
        b.correct({ids[j - 1]}, detail::lifted_z(canvas, next, {next.vertical(n + 1, j)}));
    }
    return std::move(b).build();
}

/// Shrinks (N,M) to (N,M-1) by measuring the last column in the X basis. A -1
/// on v(i,M) is fixed by Z on v(i,M-1).
inline ProtocolSchedule remove_column(const LatticeGeometry &g, const Canvas &canvas) {
    if (g.cols() < 2) {
        throw std::invalid_argument("cannot remove the only column");
    }
    LatticeGeometry next(g.rows(), g.cols() - 1);
    ScheduleBuilder b("remove_column", canvas, g, next);
    const int m = g.cols();
    b.begin_measure();
    std::vector<std::size_t> vertical_ids;
    for (int i = 1; i <= g.rows(); i++) {
        vertical_ids.push_back(b.measure(detail::coord_label("v", i, m), detail::lifted_x(canvas, g, {g.vertical(i, m)})));
        if (i < g.rows()) {
            b.measure(detail::coord_label("h", i, m - 1), detail::lifted_x(canvas, g, {g.horizontal(i, m - 1)}));
        }
    }
    b.begin_correct();
    for (int i = 1; i <= g.rows(); i++) {
        b.correct({vertical_ids[i - 1]}, detail::lifted_z(canvas, g, {g.vertical(i, m - 1)}));
    }
    return std::move(b).build();
}

/// Shrinks (N,M) to (N-1,M) by measuring the last row in the Z basis. A -1 on
/// v(N,j) is fixed by X on v(N-1,j).
inline ProtocolSchedule remove_row(const LatticeGeometry &g, const Canvas &canvas) {
    if (g.rows() < 2) {
        throw std::invalid_argument("cannot remove the only row");
    }
    LatticeGeometry next(g.rows() - 1, g.cols());
    ScheduleBuilder b("remove_row", canvas, g, next);
    const int n = g.rows();
    b.begin_measure();
    std::vector<std::size_t> vertical_ids;
    for (int j = 1; j <= g.cols(); j++) {
        vertical_ids.push_back(b.measure(detail::coord_label("v", n, j), detail::lifted_z(canvas, g, {g.vertical(n, j)})));
        if (j < g.cols()) {
            b.measure(detail::coord_label("h", n - 1, j), detail::lifted_z(canvas, g, {g.horizontal(n - 1, j)}));
        }
    }
    b.begin_correct();
    for (int j = 1; j <= g.cols(); j++) {
        b.correct({vertical_ids[j - 1]}, detail::lifted_x(canvas, g, {g.vertical(n - 1, j)}));
    }
    return std::move(b).build();
}

namespace detail {

inline bool touches(const std::vector<std::size_t> &support, const TriangleSplit &split, Region r) {
    for (auto q : support) {
        if (split.region[q] == r) {
            return true;
        }
    }
    return false;
}

/// Preparation and syndrome extraction shared by both encoders. With
/// `skip_black_checks` the two checks holding black are left to the caller.
inline void encode_bulk(
    ScheduleBuilder &b, const LatticeGeometry &g, const TriangleSplit &split, bool skip_black_checks) {
    const Canvas &canvas = b.canvas();
    b.prepare(canvas.slots(g, split.members(Region::Green)), BasisState::Plus);
    b.prepare(canvas.slots(g, split.members(Region::Red)), BasisState::Zero);

    auto stars = sector_graph(g, Sector::X);
    auto plaquettes = sector_graph(g, Sector::Z);
    auto holds_black = [&](const std::vector<std::size_t> &support) {
        for (auto q : support) {
            if (q == split.black) {
                return true;
            }
        }
        return false;
    };

    std::vector<std::pair<std::size_t, PauliOperator>> fixes;
    b.begin_measure();
    for (std::size_t c = 0; c < stars.num_checks; c++) {
        const auto &support = stars.check_support[c];
        if (!touches(support, split, Region::Red) || (skip_black_checks && holds_black(support))) {
            continue;
        }
        Star s = g.star_at(c);
        auto id = b.measure(coord_label("s", s.row, s.col), lifted_x(canvas, g, support));
        fixes.emplace_back(id, lifted_z(canvas, g, region_path_to_boundary(stars, split, Region::Red, c)));
    }
    for (std::size_t c = 0; c < plaquettes.num_checks; c++) {
        const auto &support = plaquettes.check_support[c];
        if (!touches(support, split, Region::Green) || (skip_black_checks && holds_black(support))) {
            continue;
        }
        Plaquette p = g.plaquette_at(c);
        auto id = b.measure(coord_label("p", p.row, p.col), lifted_z(canvas, g, support));
        fixes.emplace_back(id, lifted_x(canvas, g, region_path_to_boundary(plaquettes, split, Region::Green, c)));
    }
    b.begin_correct();
    for (auto &[id, op] : fixes) {
        b.correct({id}, std::move(op));
    }
}

}  // namespace detail

/// One-shot encoding: the black qubit carries the input, green qubits start in
/// |+>, red qubits in |0>. Stars touching red and plaquettes touching green are
/// measured once; each -1 is fixed along a shortest path inside the
/// correspondingly prepared region.
inline ProtocolSchedule one_shot_encode(const LatticeGeometry &g, const TriangleSplit &split, const Canvas &canvas) {
    ScheduleBuilder b("one_shot_encode", canvas, g, g);
    detail::encode_bulk(b, g, split, false);
    return std::move(b).build();
}

/// Encoding by teleportation: the lattice minus the black qubit is encoded
/// first, then the two checks holding black are measured, which teleports the
/// black qubit's state into the code.
inline ProtocolSchedule teleport_encode(const LatticeGeometry &g, const TriangleSplit &split, const Canvas &canvas) {
    ScheduleBuilder b("teleport_encode", canvas, g, g);
    detail::encode_bulk(b, g, split, true);
    const int n = g.rows();
    const int m = g.cols();
    if (m >= 2) {
        b.begin_measure();
        auto id = b.measure("p(N,1)", detail::lifted_z(canvas, g, g.plaquette_support({n, 1})));
        std::vector<std::size_t> row;
        for (int j = 2; j <= m; j++) {
            row.push_back(g.vertical(n, j));
        }
        b.begin_correct();
        b.correct({id}, detail::lifted_x(canvas, g, row));
    }
    if (n >= 2) {
        b.begin_measure();
        auto id = b.measure("s(N-1,1)", detail::lifted_x(canvas, g, g.star_support({n - 1, 1})));
        std::vector<std::size_t> col;
        for (int i = 1; i < n; i++) {
            col.push_back(g.vertical(i, 1));
        }
        b.begin_correct();
        b.correct({id}, detail::lifted_z(canvas, g, col));
    }
    return std::move(b).build();
}

/// One-shot decoding back onto the black qubit. Row N minus black is read in
/// the X basis and an odd parity is fixed by Z on black; then column 1 minus
/// black is read in the Z basis and an odd parity is fixed by X on black.
/// `inject_fault` inverts the first condition (for exercising verification).
inline ProtocolSchedule one_shot_decode(const LatticeGeometry &g, const Canvas &canvas, bool inject_fault = false) {
    ScheduleBuilder b("one_shot_decode", canvas, g, g);
    const std::size_t black = canvas.slot(g, g.black_qubit());
    std::size_t black_only[]{black};

    b.begin_measure();
    std::vector<std::size_t> row_ids;
    for (int j = 2; j <= g.cols(); j++) {
        row_ids.push_back(b.measure(detail::coord_label("v", g.rows(), j), detail::lifted_x(canvas, g, {g.vertical(g.rows(), j)})));
    }
    b.begin_correct();
    if (inject_fault) {
        // An empty condition never fires, so the phase fix is silently dropped.
        b.correct({}, PauliOperator::z_on(canvas.num_qubits(), black_only));
    } else {
        b.correct(row_ids, PauliOperator::z_on(canvas.num_qubits(), black_only));
    }

    b.begin_measure();
    std::vector<std::size_t> col_ids;
    for (int i = 1; i < g.rows(); i++) {
        col_ids.push_back(b.measure(detail::coord_label("v", i, 1), detail::lifted_z(canvas, g, {g.vertical(i, 1)})));
    }
    b.begin_correct();
    b.correct(col_ids, PauliOperator::x_on(canvas.num_qubits(), black_only));
    return std::move(b).build();
}

/// Textbook three-qubit teleportation written as a stabilizer schedule: qubit 0
/// holds the input, qubits 1 and 2 start in a Bell pair, the output lands on 2.
inline ProtocolSchedule three_qubit_teleport() {
    ProtocolSchedule s;
    s.name = "three_qubit_teleport";
    s.num_qubits = 3;
    s.phases.push_back(PreparePhase{{1, 2}, BasisState::Zero});
    s.phases.push_back(MeasurePhase{{"X1X2"}, {PauliOperator::from_string("_XX")}});
    s.phases.push_back(CorrectPhase{{{{0}, PauliOperator::from_string("__Z")}}});
    s.phases.push_back(MeasurePhase{{"X0X1", "Z0Z1"}, {PauliOperator::from_string("XX_"), PauliOperator::from_string("ZZ_")}});
    s.phases.push_back(CorrectPhase{{{{1}, PauliOperator::from_string("_ZZ")}, {{2}, PauliOperator::from_string("_XX")}}});
    return s;
}

/// Code state checks for a lattice placed on a canvas.
struct CodeStateCheck {
    bool stabilizers_ok = true;
    std::optional<int> logical_z;
    std::optional<int> logical_x;
};

inline CodeStateCheck check_code_state(
    const Tableau &state, const PauliOperator &frame, const LatticeGeometry &g, const Canvas &canvas) {
    CodeStateCheck out;
    for (const auto &s : g.stabilizer_generators()) {
        if (eigenvalue(state, frame, canvas.lift(g, s)) != std::optional<int>{+1}) {
            out.stabilizers_ok = false;
        }
    }
    out.logical_z = eigenvalue(state, frame, canvas.lift(g, g.logical_z()));
    out.logical_x = eigenvalue(state, frame, canvas.lift(g, g.logical_x()));
    return out;
}

/// Eigenvalues the input state fixes: +1/-1 for the observable it is an
/// eigenstate of, nullopt for the other basis.
inline std::optional<int> expected_z(BasisState s) {
    if (s == BasisState::Zero) {
        return +1;
    }
    if (s == BasisState::One) {
        return -1;
    }
    return std::nullopt;
}
inline std::optional<int> expected_x(BasisState s) {
    if (s == BasisState::Plus) {
        return +1;
    }
    if (s == BasisState::Minus) {
        return -1;
    }
    return std::nullopt;
}

inline const char *basis_name(BasisState s) {
    switch (s) {
        case BasisState::Zero:
            return "|0>";
        case BasisState::One:
            return "|1>";
        case BasisState::Plus:
            return "|+>";
        default:
            return "|->";
    }
}

inline bool logical_matches(const CodeStateCheck &c, BasisState input) {
    if (!c.stabilizers_ok || c.logical_z != expected_z(input) || c.logical_x != expected_x(input)) {
        return false;
    }
    return true;
}

/// Encoded state produced by one of the encoders.
struct EncodedState {
    Tableau state;
    ExecutionRecord record;
};

/// Puts `input` on the black qubit of an empty canvas and runs the encoder.
template <typename Rng>
EncodedState encode_physical(
    BasisState input, const LatticeGeometry &g, const TriangleSplit &split, const Canvas &canvas, Rng &rng,
    bool teleport = false, CorrectionMode mode = CorrectionMode::Frame) {
    Tableau t(canvas.num_qubits());
    t.prepare(canvas.slot(g, g.black_qubit()), input, rng);
    auto schedule = teleport ? teleport_encode(g, split, canvas) : one_shot_encode(g, split, canvas);
    auto record = run_schedule(schedule, t, rng, mode);
    return {std::move(t), std::move(record)};
}

/// Result of an end-to-end protocol sweep on small lattices.
struct PropertyTally {
    std::string name;
    int64_t checks = 0;
    int64_t failures = 0;
};

struct VerificationReport {
    int64_t checks = 0;
    int64_t failures = 0;
    std::vector<PropertyTally> properties;  // in first-seen order
    std::vector<std::string> messages;

    bool ok() const {
        return failures == 0;
    }
    void record(bool passed, const std::string &property, const std::string &what) {
        auto it = std::find_if(properties.begin(), properties.end(), [&](const auto &t) { return t.name == property; });
        if (it == properties.end()) {
            properties.push_back({property});
            it = properties.end() - 1;
        }
        it->checks++;
        checks++;
        if (!passed) {
            it->failures++;
            failures++;
            if (messages.size() < 50) {
                messages.push_back(what);
            }
        }
    }
};

struct VerifyOptions {
    int max_size = 4;
    int seeds = 20;
    uint64_t seed = 1;
    bool inject_fault = false;
};

/// Encodes, grows, shrinks and decodes every basis input on every lattice up to
/// `max_size` on each side, checking logical eigenvalues after every step.
inline VerificationReport verify_protocols(const VerifyOptions &opt) {
    if (opt.max_size < 1 || opt.seeds < 1) {
        throw std::invalid_argument("verification needs a positive size and seed count");
    }
    VerificationReport report;
    const BasisState inputs[]{BasisState::Zero, BasisState::One, BasisState::Plus, BasisState::Minus};
    Canvas canvas(opt.max_size + 1, opt.max_size + 1);
    std::mt19937_64 rng(opt.seed);

    for (int n = 1; n <= opt.max_size; n++) {
        for (int m = 1; m <= opt.max_size; m++) {
            LatticeGeometry g(n, m);
            auto split = make_triangle_split(g);
            auto decode = one_shot_decode(g, canvas, opt.inject_fault);
            const std::size_t black = canvas.slot(g, g.black_qubit());
            for (auto input : inputs) {
                for (int s = 0; s < opt.seeds; s++) {
                    std::string where = std::to_string(n) + "x" + std::to_string(m) + " " + basis_name(input) +
                                        " seed " + std::to_string(s) + ": ";
                    for (bool teleport : {false, true}) {
                        auto enc = encode_physical(input, g, split, canvas, rng, teleport);
                        const char *what = teleport ? "teleport encode" : "one-shot encode";
                        report.record(
                            logical_matches(check_code_state(enc.state, enc.record.frame, g, canvas), input), what,
                            where + what + " gave the wrong code state");

                        // Grow by a column and a row, then shrink back.
                        auto rec = enc.record;
                        LatticeGeometry cur = g;
                        auto step = [&](const ProtocolSchedule &sch, const char *label) {
                            rec = run_schedule(sch, enc.state, rng, CorrectionMode::Frame, std::move(rec));
                            cur = LatticeGeometry(sch.rows_after, sch.cols_after);
                            report.record(
                                logical_matches(check_code_state(enc.state, rec.frame, cur, canvas), input), label,
                                where + label + " broke the logical state");
                        };
                        step(append_column(cur, canvas), "append_column");
                        step(append_row(cur, canvas), "append_row");
                        step(remove_row(cur, canvas), "remove_row");
                        step(remove_column(cur, canvas), "remove_column");

                        rec = run_schedule(decode, enc.state, rng, CorrectionMode::Frame, std::move(rec));
                        auto got = eigenvalue(enc.state, rec.frame, basis_observable(canvas.num_qubits(), black, input));
                        report.record(got == std::optional<int>{+1}, "one-shot decode", where + "decode did not return the input");
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace planar

#endif
