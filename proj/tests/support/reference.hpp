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

// Stand-alone reference for the storage simulation. Everything here is built
// from coordinates with its own qubit numbering and shares no code with the
// library: an explicit space-time graph, Dijkstra from each defect and an exact
// pairing by dynamic programming over defect subsets. It is slow and only meant
// for small lattices.

#ifndef PLANAR_TESTS_REFERENCE_HPP
#define PLANAR_TESTS_REFERENCE_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ref {

constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

enum class Kind { Vertical, Horizontal };

struct Qubit {
    Kind kind;
    int i;
    int j;
};

enum class Zone { Noisy, Random, Black };

struct Options {
    int rounds = 1;
    bool time_edges = true;
    bool time_boundary = false;
    bool protect_black = false;
    bool free_random = false;
};

/// One error sector of an N x M lattice. `stars` selects the sector whose
/// checks are stars (phase errors, readout along the bottom row).
struct Model {
    int n = 0;
    int m = 0;
    bool stars = true;
    std::vector<Qubit> qubits;
    std::vector<std::vector<int>> qubit_checks;
    int num_checks = 0;
    std::vector<Zone> zone;
    int black = -1;
    std::vector<int> line;

    Model(int rows, int cols, bool star_sector) : n(rows), m(cols), stars(star_sector) {
        // Horizontal qubits first, then verticals column by column.
        for (int i = 1; i < n; i++) {
            for (int j = 1; j < m; j++) {
                qubits.push_back({Kind::Horizontal, i, j});
            }
        }
        for (int j = 1; j <= m; j++) {
            for (int i = 1; i <= n; i++) {
                qubits.push_back({Kind::Vertical, i, j});
            }
        }
        num_checks = stars ? (n - 1) * m : n * (m - 1);
        auto star_id = [&](int i, int j) { return (i - 1) * m + (j - 1); };
        auto plaq_id = [&](int i, int j) { return (i - 1) * (m - 1) + (j - 1); };
        for (int q = 0; q < (int)qubits.size(); q++) {
            const auto &c = qubits[q];
            std::vector<int> checks;
            if (stars) {
                if (c.kind == Kind::Vertical) {
                    if (c.i >= 2) checks.push_back(star_id(c.i - 1, c.j));
                    if (c.i <= n - 1) checks.push_back(star_id(c.i, c.j));
                } else {
                    checks.push_back(star_id(c.i, c.j));
                    checks.push_back(star_id(c.i, c.j + 1));
                }
            } else {
                if (c.kind == Kind::Vertical) {
                    if (c.j >= 2) checks.push_back(plaq_id(c.i, c.j - 1));
                    if (c.j <= m - 1) checks.push_back(plaq_id(c.i, c.j));
                } else {
                    checks.push_back(plaq_id(c.i, c.j));
                    checks.push_back(plaq_id(c.i + 1, c.j));
                }
            }
            qubit_checks.push_back(checks);

            double y = c.i + (c.kind == Kind::Horizontal ? 0.5 : 0.0);
            double x = c.j + (c.kind == Kind::Horizontal ? 0.5 : 0.0);
            double a = n == 1 ? 1.0 : (y - 1) / (n - 1);
            double b = m == 1 ? 0.0 : (x - 1) / (m - 1);
            bool is_black = c.kind == Kind::Vertical && c.i == n && c.j == 1;
            bool lower_right = a + b > 1 + 1e-9;
            if (is_black) {
                zone.push_back(Zone::Black);
                black = q;
            } else if (lower_right != stars) {
                // Stars: the upper-left part is random. Plaquettes: lower-right.
                zone.push_back(Zone::Random);
            } else {
                zone.push_back(Zone::Noisy);
            }
            bool on_line = stars ? (c.kind == Kind::Vertical && c.i == n) : (c.kind == Kind::Vertical && c.j == 1);
            if (on_line && !is_black) {
                line.push_back(q);
            }
        }
    }

    std::vector<uint8_t> measure(const std::vector<uint8_t> &frame) const {
        std::vector<uint8_t> out(num_checks, 0);
        for (int q = 0; q < (int)qubits.size(); q++) {
            if (frame[q]) {
                for (int c : qubit_checks[q]) {
                    out[c] ^= 1;
                }
            }
        }
        return out;
    }
};

struct Edge {
    int a;
    int b;
    int64_t w;
    int qubit;
};

/// Explicit space-time graph; the boundary node is last.
struct SpaceTime {
    int nodes = 0;
    int boundary = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> incident;

    SpaceTime(const Model &model, const Options &opt) {
        const int c = model.num_checks;
        boundary = opt.rounds * c;
        nodes = boundary + 1;
        for (int t = 0; t < opt.rounds; t++) {
            for (int q = 0; q < (int)model.qubits.size(); q++) {
                const auto &checks = model.qubit_checks[q];
                if (checks.empty()) {
                    continue;
                }
                int64_t w = 1;
                if (t == 0 && opt.free_random && model.zone[q] == Zone::Random) {
                    w = 0;
                }
                if (t == 0 && opt.protect_black && q == model.black) {
                    continue;
                }
                int a = t * c + checks[0];
                int b = checks.size() > 1 ? t * c + checks[1] : boundary;
                edges.push_back({a, b, w, q});
            }
            if (opt.time_edges) {
                for (int k = 0; k < c; k++) {
                    if (t + 1 < opt.rounds) {
                        edges.push_back({t * c + k, (t + 1) * c + k, 1, -1});
                    } else if (opt.time_boundary) {
                        edges.push_back({t * c + k, boundary, 1, -1});
                    }
                }
            }
        }
        incident.assign(nodes, {});
        for (int e = 0; e < (int)edges.size(); e++) {
            incident[edges[e].a].push_back(e);
            incident[edges[e].b].push_back(e);
        }
    }

    /// Distances and predecessor edges from one node, never passing through the
    /// boundary.
    std::pair<std::vector<int64_t>, std::vector<int>> dijkstra(int source) const {
        std::vector<int64_t> dist(nodes, kInf);
        std::vector<int> prev(nodes, -1);
        using item = std::pair<int64_t, int>;
        std::priority_queue<item, std::vector<item>, std::greater<>> heap;
        dist[source] = 0;
        heap.push({0, source});
        while (!heap.empty()) {
            auto [d, u] = heap.top();
            heap.pop();
            if (d > dist[u] || (u == boundary && u != source)) {
                continue;
            }
            for (int e : incident[u]) {
                int v = edges[e].a == u ? edges[e].b : edges[e].a;
                if (d + edges[e].w < dist[v]) {
                    dist[v] = d + edges[e].w;
                    prev[v] = e;
                    heap.push({dist[v], v});
                }
            }
        }
        return {dist, prev};
    }
};

struct Pairing {
    int64_t weight = 0;
    std::vector<int> partner;  // index of partner or -1 for boundary
};

/// Exact minimum over all ways to pair defects or send them to the boundary.
inline Pairing best_pairing(const std::vector<std::vector<int64_t>> &d, const std::vector<int64_t> &to_boundary) {
    const int n = (int)to_boundary.size();
    if (n > 26) {
        throw std::invalid_argument("too many defects for the exhaustive reference");
    }
    std::unordered_map<uint32_t, int64_t> memo;
    std::function<int64_t(uint32_t)> solve = [&](uint32_t mask) -> int64_t {
        if (mask == 0) {
            return 0;
        }
        auto it = memo.find(mask);
        if (it != memo.end()) {
            return it->second;
        }
        int i = __builtin_ctz(mask);
        uint32_t rest = mask & ~(1u << i);
        int64_t best = kInf;
        if (to_boundary[i] < kInf) {
            best = to_boundary[i] + solve(rest);
        }
        for (int j = i + 1; j < n; j++) {
            if ((rest >> j) & 1 && d[i][j] < kInf) {
                best = std::min(best, d[i][j] + solve(rest & ~(1u << j)));
            }
        }
        memo[mask] = best;
        return best;
    };
    uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
    Pairing out;
    out.weight = solve(full);
    out.partner.assign(n, -1);
    // Walk the optimal choices back.
    uint32_t mask = full;
    while (mask) {
        int i = __builtin_ctz(mask);
        uint32_t rest = mask & ~(1u << i);
        int64_t target = solve(mask);
        if (to_boundary[i] < kInf && to_boundary[i] + solve(rest) == target) {
            mask = rest;
            continue;
        }
        for (int j = i + 1; j < n; j++) {
            if ((rest >> j) & 1 && d[i][j] < kInf && d[i][j] + solve(rest & ~(1u << j)) == target) {
                out.partner[i] = j;
                out.partner[j] = i;
                mask = rest & ~(1u << j);
                break;
            }
        }
    }
    return out;
}

struct DecodeResult {
    int64_t weight = 0;
    std::vector<uint8_t> flips;  // per reference qubit
};

/// Defects are (round, check) pairs with library check numbering.
inline DecodeResult decode(const Model &model, const Options &opt, const std::vector<std::pair<int, int>> &defects) {
    SpaceTime st(model, opt);
    const int n = (int)defects.size();
    std::vector<std::vector<int64_t>> d(n, std::vector<int64_t>(n, kInf));
    std::vector<int64_t> to_b(n);
    std::vector<std::vector<int>> prevs;
    std::vector<int> node(n);
    for (int i = 0; i < n; i++) {
        node[i] = defects[i].first * model.num_checks + defects[i].second;
    }
    for (int i = 0; i < n; i++) {
        auto [dist, prev] = st.dijkstra(node[i]);
        for (int j = 0; j < n; j++) {
            d[i][j] = dist[node[j]];
        }
        to_b[i] = dist[st.boundary];
        prevs.push_back(prev);
    }
    auto pairing = best_pairing(d, to_b);
    DecodeResult out;
    out.weight = pairing.weight;
    out.flips.assign(model.qubits.size(), 0);
    auto trace = [&](int i, int target) {
        int v = target;
        while (v != node[i]) {
            int e = prevs[i][v];
            if (st.edges[e].qubit >= 0) {
                out.flips[st.edges[e].qubit] ^= 1;
            }
            v = st.edges[e].a == v ? st.edges[e].b : st.edges[e].a;
        }
    };
    for (int i = 0; i < n; i++) {
        if (pairing.partner[i] < 0) {
            trace(i, st.boundary);
        } else if (i < pairing.partner[i]) {
            trace(i, node[pairing.partner[i]]);
        }
    }
    return out;
}

struct TrialConfig {
    int rows = 3;
    int cols = 3;
    double p = 0.01;
    int steps = 5;
    bool encode = true;
    bool syndrome_noise = true;
    bool star_sector = true;
};

/// One storage experiment with line readout. Returns true on success.
inline bool run_trial(const TrialConfig &cfg, std::mt19937_64 &rng) {
    Model model(cfg.rows, cfg.cols, cfg.star_sector);
    std::bernoulli_distribution flip(cfg.p);
    std::bernoulli_distribution coin(0.5);
    const double q = cfg.syndrome_noise ? cfg.p : 0.0;
    std::bernoulli_distribution misread(q);
    std::vector<uint8_t> frame(model.qubits.size(), 0);
    std::vector<std::vector<uint8_t>> history;
    auto noisy_measure = [&]() {
        auto s = model.measure(frame);
        for (auto &b : s) {
            b ^= (uint8_t)misread(rng);
        }
        history.push_back(s);
    };
    Options opt;
    opt.rounds = cfg.steps + 1;
    opt.time_edges = cfg.syndrome_noise;
    if (cfg.encode) {
        for (int k = 0; k < (int)frame.size(); k++) {
            if (model.zone[k] == Zone::Random) {
                frame[k] ^= (uint8_t)coin(rng);
            } else if (model.zone[k] == Zone::Noisy) {
                frame[k] ^= (uint8_t)flip(rng);
            }
        }
        noisy_measure();
        opt.free_random = true;
        opt.protect_black = true;
        opt.time_boundary = cfg.syndrome_noise;
    }
    for (int t = 0; t < cfg.steps; t++) {
        for (auto &b : frame) {
            b ^= (uint8_t)flip(rng);
        }
        noisy_measure();
    }
    if (!cfg.encode) {
        history.push_back(model.measure(frame));
    }
    std::vector<std::pair<int, int>> defects;
    for (int t = 0; t < (int)history.size(); t++) {
        for (int c = 0; c < model.num_checks; c++) {
            uint8_t before = t == 0 ? 0 : history[t - 1][c];
            if (history[t][c] != before) {
                defects.push_back({t, c});
            }
        }
    }
    auto result = decode(model, opt, defects);
    for (int k = 0; k < (int)frame.size(); k++) {
        frame[k] ^= result.flips[k];
    }
    int decision = 0;
    for (int k : model.line) {
        decision ^= frame[k] ^ (cfg.encode ? (int)flip(rng) : 0);
    }
    return (frame[model.black] ^ decision) == 0;
}

}  // namespace ref

#endif
