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

#ifndef PLANAR_DECODER_HPP
#define PLANAR_DECODER_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "planar/lattice.hpp"
#include "planar/matching.hpp"

namespace planar {

/// Check outcomes per round, one byte per check (1 means the check read -1).
struct SyndromeHistory {
    std::vector<std::vector<uint8_t>> rounds;
};

struct Defect {
    int round;
    int check;
    auto operator<=>(const Defect &) const = default;
};

using DefectSet = std::vector<Defect>;

/// Defects are changes between consecutive rounds; the round before the first
/// one reads all +1.
inline DefectSet extract_defects(const SyndromeHistory &history) {
    DefectSet out;
    const std::vector<uint8_t> *prev = nullptr;
    for (std::size_t t = 0; t < history.rounds.size(); t++) {
        const auto &cur = history.rounds[t];
        if (prev && prev->size() != cur.size()) {
            throw std::invalid_argument("syndrome rounds have different lengths");
        }
        for (std::size_t c = 0; c < cur.size(); c++) {
            if ((cur[c] & 1) != (prev ? (*prev)[c] & 1 : 0)) {
                out.push_back({(int)t, (int)c});
            }
        }
        prev = &cur;
    }
    return out;
}

inline constexpr int64_t kUnreachable = std::numeric_limits<int64_t>::max() / 8;

struct DecodingGraphOptions {
    /// Number of syndrome rounds in the history.
    int rounds = 1;
    /// Measurement errors are possible: consecutive rounds are joined by edges of
    /// weight one. Without them defects only pair within a round.
    bool time_edges = true;
    /// A defect in the last round may end on a measurement error after it.
    bool time_boundary = false;
    /// Round-0 edges through the black qubit are forbidden.
    bool protect_black = false;
    /// Round-0 edges through the sector's randomly prepared region cost zero.
    bool free_random_region = false;
};

namespace detail {

struct SpatialEdge {
    int a;
    int b;
    int64_t weight;
    int qubit;  // -1 for edges that cross no qubit
};

// Single-source shortest paths from every node; graphs here have at most a few
// hundred nodes, so repeated Dijkstra is cheap and done once per graph. The
// sink (the boundary) ends paths but is never passed through.
class AllPairs {
   public:
    AllPairs() = default;
    AllPairs(int num_nodes, const std::vector<SpatialEdge> &edges, int sink) : k_(num_nodes) {
        std::vector<std::vector<int>> incident(k_);
        for (int e = 0; e < (int)edges.size(); e++) {
            incident[edges[e].a].push_back(e);
            incident[edges[e].b].push_back(e);
        }
        dist_.assign((std::size_t)k_ * k_, kUnreachable);
        prev_.assign((std::size_t)k_ * k_, -1);
        using item = std::pair<int64_t, int>;
        for (int s = 0; s < k_; s++) {
            int64_t *dist = &dist_[(std::size_t)s * k_];
            int *prev = &prev_[(std::size_t)s * k_];
            std::priority_queue<item, std::vector<item>, std::greater<>> heap;
            dist[s] = 0;
            heap.push({0, s});
            while (!heap.empty()) {
                auto [d, u] = heap.top();
                heap.pop();
                if (d != dist[u] || (u == sink && u != s)) {
                    continue;
                }
                for (int e : incident[u]) {
                    const auto &edge = edges[e];
                    int v = edge.a == u ? edge.b : edge.a;
                    if (d + edge.weight < dist[v]) {
                        dist[v] = d + edge.weight;
                        prev[v] = e;
                        heap.push({dist[v], v});
                    }
                }
            }
        }
        edges_ = edges;
    }

    int64_t at(int s, int t) const {
        return dist_[(std::size_t)s * k_ + t];
    }

    /// Flips every qubit on the stored shortest path from s to t.
    void flip_path(int s, int t, BitVector &flips) const {
        int v = t;
        while (v != s) {
            int e = prev_[(std::size_t)s * k_ + v];
            if (e < 0) {
                throw std::logic_error("no stored path between decoding graph nodes");
            }
            if (edges_[e].qubit >= 0) {
                flips.flip((std::size_t)edges_[e].qubit);
            }
            v = edges_[e].a == v ? edges_[e].b : edges_[e].a;
        }
    }

   private:
    int k_ = 0;
    std::vector<int64_t> dist_;
    std::vector<int> prev_;
    std::vector<SpatialEdge> edges_;
};

inline int64_t sat_add(int64_t a, int64_t b) {
    if (a >= kUnreachable || b >= kUnreachable) {
        return kUnreachable;
    }
    return a + b;
}
inline int64_t sat_mul(int64_t steps, int64_t weight) {
    if (steps == 0) {
        return 0;
    }
    if (weight >= kUnreachable) {
        return kUnreachable;
    }
    return steps * weight;
}

}  // namespace detail

/// Space-time decoding graph of one sector.
///
/// Nodes are (round, check) pairs plus one boundary node. Space edges are the
/// sector's qubits, with weight one except in round 0, where the options may
/// make random-region qubits free and the black qubit unusable. Time edges of
/// weight one join the same check in consecutive rounds.
///
/// All rounds after the first have identical space edges, so exact shortest
/// paths reduce to two static tables: one for a single bulk layer, and one for
/// a two-layer graph (round 0 plus one bulk layer) that covers paths dipping
/// into round 0. Distances are then assembled in O(1).
class DecodingGraph {
   public:
    DecodingGraph(
        const LatticeGeometry &geom, const TriangleSplit &split, Sector sector, DecodingGraphOptions opt = {})
        : geom_(geom), sector_(sector), opt_(opt), graph_(sector_graph(geom, sector)) {
        if (opt.rounds < 1) {
            throw std::invalid_argument("decoding graph needs at least one round");
        }
        tau_ = opt.time_edges ? 1 : kUnreachable;
        if (opt.time_boundary && !opt.time_edges) {
            throw std::invalid_argument("a time boundary needs time edges");
        }
        c_ = (int)graph_.num_checks;
        const std::size_t n = geom.num_qubits();
        std::vector<int64_t> bulk(n, 1);
        std::vector<int64_t> first(n, 1);
        const Region random = random_region(sector);
        for (std::size_t q = 0; q < n; q++) {
            if (opt.free_random_region && split.region[q] == random) {
                first[q] = 0;
            }
            if (opt.protect_black && q == split.black) {
                first[q] = kUnreachable;
            }
        }
        special_ = first != bulk;
        bulk_weights_ = bulk;
        first_weights_ = first;

        auto layer_edges = [&](const std::vector<int64_t> &w, int offset, int boundary) {
            std::vector<detail::SpatialEdge> out;
            for (std::size_t q = 0; q < n; q++) {
                auto [a, b] = graph_.qubit_checks[q];
                if (a < 0 || w[q] >= kUnreachable) {
                    continue;
                }
                out.push_back({offset + a, b < 0 ? boundary : offset + b, w[q], (int)q});
            }
            return out;
        };
        bulk_ = detail::AllPairs(c_ + 1, layer_edges(bulk, 0, c_), c_);
        if (special_) {
            first_ = detail::AllPairs(c_ + 1, layer_edges(first, 0, c_), c_);
            if (opt.rounds >= 2) {
                auto edges = layer_edges(first, 0, 2 * c_);
                auto upper = layer_edges(bulk, c_, 2 * c_);
                edges.insert(edges.end(), upper.begin(), upper.end());
                if (opt.time_edges) {
                    for (int c = 0; c < c_; c++) {
                        edges.push_back({c, c_ + c, tau_, -1});
                    }
                }
                two_layer_ = detail::AllPairs(2 * c_ + 1, edges, 2 * c_);
            }
        }
    }

    const LatticeGeometry &geometry() const {
        return geom_;
    }
    Sector sector() const {
        return sector_;
    }
    const DecodingGraphOptions &options() const {
        return opt_;
    }
    int num_checks() const {
        return c_;
    }
    /// Weight of a qubit's space edge in round 0 and in later rounds.
    int64_t space_weight(std::size_t q, int round) const {
        return round == 0 ? first_weights_[q] : bulk_weights_[q];
    }

    int64_t distance(Defect a, Defect b) const {
        return route(a, b).first;
    }
    int64_t boundary_distance(Defect a) const {
        return boundary_route(a).first;
    }

    /// Flips the qubits of one shortest path between two defects.
    void flip_path(Defect a, Defect b, BitVector &flips) const {
        auto [d, how] = route(a, b);
        if (d >= kUnreachable) {
            throw std::invalid_argument("defects are not connected in the decoding graph");
        }
        if (a.round > b.round) {
            std::swap(a, b);
        }
        switch (how) {
            case Route::Bulk:
                bulk_.flip_path(a.check, b.check, flips);
                break;
            case Route::First:
                first_.flip_path(a.check, b.check, flips);
                break;
            case Route::TwoLayer:
                two_layer_.flip_path(layer_node(a), layer_node(b), flips);
                break;
            default:
                break;
        }
    }

    /// Flips the qubits of one shortest path from a defect to the boundary.
    void flip_boundary_path(Defect a, BitVector &flips) const {
        auto [d, how] = boundary_route(a);
        if (d >= kUnreachable) {
            throw std::invalid_argument("defect cannot reach the boundary");
        }
        switch (how) {
            case Route::Bulk:
                bulk_.flip_path(a.check, c_, flips);
                break;
            case Route::First:
                first_.flip_path(a.check, c_, flips);
                break;
            case Route::TwoLayer:
                two_layer_.flip_path(layer_node(a), 2 * c_, flips);
                break;
            default:
                break;
        }
    }

   private:
    enum class Route { Bulk, First, TwoLayer, Time };

    // Node of the two-layer table: round 0 maps to layer 0, later rounds to 1.
    int layer_node(Defect d) const {
        return d.round == 0 ? d.check : c_ + d.check;
    }

    std::pair<int64_t, Route> route(Defect a, Defect b) const {
        if (a.round > b.round) {
            std::swap(a, b);
        }
        check(a);
        check(b);
        const int64_t gap = b.round - a.round;
        if (!special_) {
            return {detail::sat_add(detail::sat_mul(gap, tau_), bulk_.at(a.check, b.check)), Route::Bulk};
        }
        if (opt_.rounds == 1) {
            return {first_.at(a.check, b.check), Route::First};
        }
        if (a.round == 0) {
            int64_t lift = b.round == 0 ? 0 : detail::sat_mul(b.round - 1, tau_);
            return {detail::sat_add(lift, two_layer_.at(layer_node(a), layer_node(b))), Route::TwoLayer};
        }
        int64_t direct = detail::sat_add(detail::sat_mul(gap, tau_), bulk_.at(a.check, b.check));
        int64_t dip = detail::sat_add(
            detail::sat_mul(a.round - 1 + b.round - 1, tau_), two_layer_.at(layer_node(a), layer_node(b)));
        if (dip < direct) {
            return {dip, Route::TwoLayer};
        }
        return {direct, Route::Bulk};
    }

    std::pair<int64_t, Route> boundary_route(Defect a) const {
        check(a);
        int64_t best = kUnreachable;
        Route how = Route::Time;
        auto offer = [&](int64_t d, Route r) {
            if (d < best) {
                best = d;
                how = r;
            }
        };
        if (!special_) {
            offer(bulk_.at(a.check, c_), Route::Bulk);
        } else if (opt_.rounds == 1) {
            offer(first_.at(a.check, c_), Route::First);
        } else if (a.round == 0) {
            offer(two_layer_.at(a.check, 2 * c_), Route::TwoLayer);
        } else {
            offer(bulk_.at(a.check, c_), Route::Bulk);
            offer(detail::sat_add(detail::sat_mul(a.round - 1, tau_), two_layer_.at(layer_node(a), 2 * c_)),
                  Route::TwoLayer);
        }
        if (opt_.time_boundary) {
            offer(detail::sat_mul(opt_.rounds - a.round, tau_), Route::Time);
        }
        return {best, how};
    }

    void check(Defect d) const {
        if (d.round < 0 || d.round >= opt_.rounds || d.check < 0 || d.check >= c_) {
            throw std::out_of_range("defect outside the decoding graph");
        }
    }

    LatticeGeometry geom_;
    Sector sector_;
    DecodingGraphOptions opt_;
    SectorGraph graph_;
    int c_ = 0;
    int64_t tau_ = 1;
    bool special_ = false;
    std::vector<int64_t> bulk_weights_;
    std::vector<int64_t> first_weights_;
    detail::AllPairs bulk_;
    detail::AllPairs first_;
    detail::AllPairs two_layer_;
};

/// Net correction: flips on every qubit plus the black qubit's bit.
struct Correction {
    BitVector flips;
    bool black = false;
};

struct MatchResult {
    Correction correction;
    std::vector<std::pair<int, int>> pairs;  // indices into the defect list
    std::vector<int> to_boundary;
    int64_t weight = 0;
};

/// Minimum-weight matching of defects, where any defect may instead be joined
/// to the boundary.
///
/// Leaving every defect on the boundary costs sum d(u,B). Pairing u with v saves
/// d(u,B)+d(v,B)-d(u,v), so the optimum is a maximum-weight matching on the
/// pairs with positive savings. Each connected component is solved separately.
inline MatchResult match_defects(const DecodingGraph &graph, const DefectSet &defects) {
    const int n = (int)defects.size();
    MatchResult out;
    out.correction.flips = BitVector(graph.geometry().num_qubits());
    std::vector<int64_t> to_b(n);
    for (int i = 0; i < n; i++) {
        to_b[i] = graph.boundary_distance(defects[i]);
        if (to_b[i] >= kUnreachable) {
            throw std::invalid_argument("defect cannot reach the boundary");
        }
    }

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    };
    // Any path between rounds t and t' costs at least |t - t'| time steps, so
    // pairs further apart in time than both boundary costs never save anything.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return defects[a].round < defects[b].round; });
    const int64_t max_to_b = n ? *std::max_element(to_b.begin(), to_b.end()) : 0;
    const bool time_edges = graph.options().time_edges;

    std::vector<WeightedEdge> edges;
    for (int oi = 0; oi < n; oi++) {
        const int i0 = order[oi];
        for (int oj = oi + 1; oj < n; oj++) {
            const int j0 = order[oj];
            const int64_t gap = defects[j0].round - defects[i0].round;
            if (gap > 0 && (!time_edges || gap >= to_b[i0] + max_to_b)) {
                break;
            }
            const int i = std::min(i0, j0);
            const int j = std::max(i0, j0);
            int64_t d = graph.distance(defects[i], defects[j]);
            if (d >= kUnreachable) {
                continue;
            }
            int64_t saving = to_b[i] + to_b[j] - d;
            if (saving > 0) {
                edges.push_back({i, j, saving});
                parent[find(i)] = find(j);
            }
        }
    }

    // Group vertices and edges by component, then solve each one.
    std::vector<int> comp_of(n), local(n), comp_size;
    std::vector<int> root_comp(n, -1);
    for (int i = 0; i < n; i++) {
        int r = find(i);
        if (root_comp[r] < 0) {
            root_comp[r] = (int)comp_size.size();
            comp_size.push_back(0);
        }
        comp_of[i] = root_comp[r];
        local[i] = comp_size[comp_of[i]]++;
    }
    std::vector<std::vector<WeightedEdge>> comp_edges(comp_size.size());
    for (const auto &e : edges) {
        comp_edges[comp_of[e.u]].push_back({local[e.u], local[e.v], e.weight});
    }
    std::vector<std::vector<int>> members(comp_size.size());
    for (int i = 0; i < n; i++) {
        members[comp_of[i]].push_back(i);
    }
    std::vector<int> mate(n, -1);
    for (std::size_t c = 0; c < comp_size.size(); c++) {
        if (comp_size[c] < 2) {
            continue;
        }
        auto local_mate = max_weight_matching(comp_size[c], comp_edges[c]);
        for (int k = 0; k < comp_size[c]; k++) {
            if (local_mate[k] >= 0) {
                mate[members[c][k]] = members[c][local_mate[k]];
            }
        }
    }

    for (int i = 0; i < n; i++) {
        if (mate[i] < 0) {
            out.to_boundary.push_back(i);
            out.weight += to_b[i];
            graph.flip_boundary_path(defects[i], out.correction.flips);
        } else if (i < mate[i]) {
            out.pairs.emplace_back(i, mate[i]);
            out.weight += graph.distance(defects[i], defects[mate[i]]);
            graph.flip_path(defects[i], defects[mate[i]], out.correction.flips);
        }
    }
    out.correction.black = out.correction.flips[graph.geometry().black_qubit()];
    return out;
}

/// Parity of the readout bits on the sector's logical line, black excluded.
inline int line_readout(const BitVector &bits, const LatticeGeometry &geom, Sector sector = Sector::X) {
    if (bits.size() != geom.num_qubits()) {
        throw std::invalid_argument("readout bits do not match the lattice");
    }
    int parity = 0;
    for (auto q : logical_support(geom, sector)) {
        if (q != geom.black_qubit()) {
            parity ^= (int)bits[q];
        }
    }
    return parity;
}

/// Majority vote over the parities of all readout paths, black excluded. A tie
/// means no flip.
inline int multiline_readout(
    const BitVector &bits, const std::vector<std::vector<std::size_t>> &paths, std::size_t black) {
    if (paths.empty()) {
        throw std::invalid_argument("no readout paths");
    }
    std::size_t odd = 0;
    for (const auto &path : paths) {
        int parity = 0;
        for (auto q : path) {
            if (q != black) {
                parity ^= (int)bits[q];
            }
        }
        odd += parity;
    }
    return 2 * odd > paths.size() ? 1 : 0;
}

}  // namespace planar

#endif
