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

#ifndef PLANAR_MONTECARLO_HPP
#define PLANAR_MONTECARLO_HPP

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "planar/decoder.hpp"
#include "planar/lattice.hpp"

namespace planar {

enum class DecoderKind { Line, Multiline };
enum class ExperimentMode { Encode, NoEncode };

inline const char *decoder_name(DecoderKind d) {
    return d == DecoderKind::Line ? "line" : "multiline";
}
inline const char *mode_name(ExperimentMode m) {
    return m == ExperimentMode::Encode ? "encode" : "no-encode";
}

/// One storage experiment: a sector of an N x M lattice under independent flips
/// with probability p per qubit per step, held for `steps` steps.
///
/// Encode mode starts from the one-shot encoding: round 0 sees the randomly
/// prepared region as coin flips and the rest with noise p, and ends with a
/// transversal readout whose bits are each wrong with probability p. NoEncode
/// mode starts from a perfect code state and ends with a perfect syndrome round
/// and a perfect readout. With syndrome noise every measured check is wrong with
/// probability p.
struct ExperimentConfig {
    int rows = 7;
    int cols = 8;
    double p = 0.01;
    int steps = 100;
    int64_t trials = 10000;
    DecoderKind decoder = DecoderKind::Line;
    ExperimentMode mode = ExperimentMode::Encode;
    bool syndrome_noise = true;
    uint64_t seed = 1;
    Sector sector = Sector::X;

    void validate() const {
        if (rows < 1 || cols < 1) {
            throw std::invalid_argument("lattice dimensions must be positive");
        }
        if (!(p >= 0 && p <= 1)) {
            throw std::invalid_argument("p must lie in [0, 1]");
        }
        if (steps < 0) {
            throw std::invalid_argument("steps must be non-negative");
        }
        if (trials < 1) {
            throw std::invalid_argument("trials must be positive");
        }
    }
};

struct RunResult {
    int64_t successes = 0;
    int64_t trials = 0;

    double p_hat() const {
        return trials ? double(successes) / double(trials) : 0.0;
    }
    /// Binomial standard error of p_hat.
    double standard_error() const {
        if (trials == 0) {
            return 0.0;
        }
        double p = p_hat();
        return std::sqrt(p * (1 - p) / double(trials));
    }
};

/// Everything one trial did, for diagnostics.
struct TrialRecord {
    DefectSet defects;
    MatchResult match;
    int decision = 0;
    bool black_bit = false;
    bool success = false;
};

/// Worker count from PLANAR_WORKERS, else the hardware concurrency.
inline int default_workers() {
    if (const char *env = std::getenv("PLANAR_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) {
            return w;
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? (int)hw : 1;
}

class Experiment {
   public:
    explicit Experiment(ExperimentConfig cfg)
        : cfg_((cfg.validate(), cfg)),
          geom_(build_lattice(cfg.rows, cfg.cols)),
          split_(make_triangle_split(geom_)),
          sector_graph_(sector_graph(geom_, cfg.sector)),
          graph_(geom_, split_, cfg.sector, graph_options(cfg)) {
        const Region random = random_region(cfg.sector);
        const Region readout = readout_region(cfg.sector);
        for (std::size_t q = 0; q < geom_.num_qubits(); q++) {
            if (split_.region[q] == random) {
                random_.push_back(q);
            } else if (split_.region[q] == readout) {
                noisy_.push_back(q);
            }
        }
        line_ = logical_support(geom_, cfg.sector);
        if (cfg.decoder == DecoderKind::Multiline) {
            paths_ = readout_paths(geom_, split_, cfg.sector);
        }
        // Only qubits the decision reads need readout noise.
        std::vector<uint8_t> seen(geom_.num_qubits(), 0);
        auto add = [&](std::size_t k) {
            if (k != geom_.black_qubit() && !seen[k]) {
                seen[k] = 1;
                readout_qubits_.push_back(k);
            }
        };
        for (auto k : line_) {
            add(k);
        }
        for (const auto &path : paths_) {
            for (auto k : path) {
                add(k);
            }
        }
    }

    const ExperimentConfig &config() const {
        return cfg_;
    }
    const DecodingGraph &graph() const {
        return graph_;
    }

    static DecodingGraphOptions graph_options(const ExperimentConfig &cfg) {
        DecodingGraphOptions opt;
        opt.rounds = cfg.steps + 1;
        opt.time_edges = cfg.syndrome_noise;
        if (cfg.mode == ExperimentMode::Encode) {
            opt.free_random_region = true;
            opt.protect_black = true;
            opt.time_boundary = cfg.syndrome_noise;
        }
        return opt;
    }

    /// Trial `index` draws from its own generator, so results do not depend on
    /// how trials are split between workers.
    bool run_trial(uint64_t index, TrialRecord *record = nullptr) const {
        std::seed_seq seq{(uint32_t)cfg_.seed, (uint32_t)(cfg_.seed >> 32), (uint32_t)index, (uint32_t)(index >> 32)};
        std::mt19937_64 rng(seq);
        auto bernoulli = [&](double p) { return (double)(rng() >> 11) * 0x1.0p-53 < p; };
        const double q = cfg_.syndrome_noise ? cfg_.p : 0.0;
        const std::size_t n = geom_.num_qubits();

        BitVector frame(n);
        SyndromeHistory history;
        history.rounds.reserve((std::size_t)cfg_.steps + 1);
        auto measure = [&](double flip) {
            auto s = sector_graph_.syndrome(frame);
            if (flip > 0) {
                for (auto &b : s) {
                    b ^= (uint8_t)bernoulli(flip);
                }
            }
            history.rounds.push_back(std::move(s));
        };

        const bool encode = cfg_.mode == ExperimentMode::Encode;
        if (encode) {
            for (auto k : random_) {
                if (rng() >> 63) {
                    frame.flip(k);
                }
            }
            for (auto k : noisy_) {
                if (bernoulli(cfg_.p)) {
                    frame.flip(k);
                }
            }
            measure(q);
        }
        for (int t = 0; t < cfg_.steps; t++) {
            for (std::size_t k = 0; k < n; k++) {
                if (bernoulli(cfg_.p)) {
                    frame.flip(k);
                }
            }
            measure(q);
        }
        if (!encode) {
            measure(0.0);
        }

        DefectSet defects = extract_defects(history);
        MatchResult match = match_defects(graph_, defects);
        frame ^= match.correction.flips;

        BitVector bits = frame;
        if (encode) {
            for (auto k : readout_qubits_) {
                if (bernoulli(cfg_.p)) {
                    bits.flip(k);
                }
            }
        }
        int decision = cfg_.decoder == DecoderKind::Line ? line_readout(bits, geom_, cfg_.sector)
                                                         : multiline_readout(bits, paths_, geom_.black_qubit());
        const bool black = frame[geom_.black_qubit()];
        const bool success = (int(black) ^ decision) == 0;
        if (record) {
            record->defects = std::move(defects);
            record->match = std::move(match);
            record->decision = decision;
            record->black_bit = black;
            record->success = success;
        }
        return success;
    }

    /// Runs all trials on `workers` threads (0 picks the default). Each worker
    /// takes one contiguous block of trial indices.
    RunResult run(int workers = 0) const {
        if (workers <= 0) {
            workers = default_workers();
        }
        const int64_t total = cfg_.trials;
        workers = (int)std::min<int64_t>(workers, total);
        std::vector<int64_t> wins(workers, 0);
        auto block = [&](int w) {
            int64_t lo = total * w / workers;
            int64_t hi = total * (w + 1) / workers;
            for (int64_t t = lo; t < hi; t++) {
                wins[w] += run_trial((uint64_t)t);
            }
        };
        if (workers == 1) {
            block(0);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; w++) {
                pool.emplace_back(block, w);
            }
            for (auto &th : pool) {
                th.join();
            }
        }
        RunResult out;
        out.trials = total;
        for (auto w : wins) {
            out.successes += w;
        }
        return out;
    }

   private:
    ExperimentConfig cfg_;
    LatticeGeometry geom_;
    TriangleSplit split_;
    SectorGraph sector_graph_;
    DecodingGraph graph_;
    std::vector<std::size_t> random_;
    std::vector<std::size_t> noisy_;
    std::vector<std::size_t> line_;
    std::vector<std::vector<std::size_t>> paths_;
    std::vector<std::size_t> readout_qubits_;
};

inline RunResult estimate_success(const ExperimentConfig &cfg, int workers = 0) {
    return Experiment(cfg).run(workers);
}

}  // namespace planar

#endif
