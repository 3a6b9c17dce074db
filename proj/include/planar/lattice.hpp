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

#ifndef PLANAR_LATTICE_HPP
#define PLANAR_LATTICE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "planar/pauli.hpp"

namespace planar {

// Geometry of the planar code.
//
// Qubits sit on edges of an N x M grid. Vertical edges v(i,j) cover 1<=i<=N,
// 1<=j<=M and horizontal edges h(i,j) cover 1<=i<N, 1<=j<M. Rows grow downward
// and columns grow to the right, so column 1 is the west edge and row N is the
// bottom edge. All coordinates in this header are 1-based.
//
// Plaquette p(i,j) (Z-type) holds v(i,j), v(i,j+1) and the horizontals directly
// above and below it. Star s(i,j) (X-type) holds v(i,j), v(i+1,j) and the
// horizontals directly left and right of it. The logical Z acts on column 1,
// the logical X acts on row N, and they overlap on the black qubit v(N,1).

enum class EdgeKind : uint8_t { Vertical, Horizontal };

struct QubitCoord {
    EdgeKind kind;
    int row;
    int col;
    bool operator==(const QubitCoord &) const = default;
};

struct Plaquette {
    int row;
    int col;
    bool operator==(const Plaquette &) const = default;
};

struct Star {
    int row;
    int col;
    bool operator==(const Star &) const = default;
};

/// Error sector. `Z` covers bit configurations: they are checked by
/// plaquettes and their logical parity is read on column 1. `X` covers phase
/// configurations: they are checked by stars and read on row N.
enum class Sector : uint8_t { Z, X };

inline const char *sector_name(Sector s) {
    return s == Sector::Z ? "z" : "x";
}

class LatticeGeometry {
   public:
    LatticeGeometry(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 1 || cols < 1) {
            throw std::invalid_argument(
                "lattice needs at least one row and one column, got " + std::to_string(rows) + "x" +
                std::to_string(cols));
        }
    }

    int rows() const {
        return rows_;
    }
    int cols() const {
        return cols_;
    }
    std::size_t num_vertical() const {
        return (std::size_t)rows_ * cols_;
    }
    std::size_t num_horizontal() const {
        return (std::size_t)(rows_ - 1) * (cols_ - 1);
    }
    std::size_t num_qubits() const {
        return num_vertical() + num_horizontal();
    }
    std::size_t num_plaquettes() const {
        return (std::size_t)rows_ * (cols_ - 1);
    }
    std::size_t num_stars() const {
        return (std::size_t)(rows_ - 1) * cols_;
    }

    std::size_t vertical(int i, int j) const {
        if (i < 1 || i > rows_ || j < 1 || j > cols_) {
            throw std::out_of_range("no vertical qubit at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
        return (std::size_t)(i - 1) * cols_ + (j - 1);
    }
    std::size_t horizontal(int i, int j) const {
        if (i < 1 || i >= rows_ || j < 1 || j >= cols_) {
            throw std::out_of_range("no horizontal qubit at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
        return num_vertical() + (std::size_t)(i - 1) * (cols_ - 1) + (j - 1);
    }
    std::size_t index_of(QubitCoord c) const {
        return c.kind == EdgeKind::Vertical ? vertical(c.row, c.col) : horizontal(c.row, c.col);
    }
    QubitCoord coord(std::size_t q) const {
        if (q < num_vertical()) {
            return {EdgeKind::Vertical, (int)(q / cols_) + 1, (int)(q % cols_) + 1};
        }
        q -= num_vertical();
        if (q >= num_horizontal()) {
            throw std::out_of_range("qubit index outside lattice");
        }
        return {EdgeKind::Horizontal, (int)(q / (cols_ - 1)) + 1, (int)(q % (cols_ - 1)) + 1};
    }

    std::size_t black_qubit() const {
        return vertical(rows_, 1);
    }

    std::size_t plaquette_index(Plaquette p) const {
        check(p);
        return (std::size_t)(p.row - 1) * (cols_ - 1) + (p.col - 1);
    }
    std::size_t star_index(Star s) const {
        check(s);
        return (std::size_t)(s.row - 1) * cols_ + (s.col - 1);
    }
    Plaquette plaquette_at(std::size_t k) const {
        return {(int)(k / (cols_ - 1)) + 1, (int)(k % (cols_ - 1)) + 1};
    }
    Star star_at(std::size_t k) const {
        return {(int)(k / cols_) + 1, (int)(k % cols_) + 1};
    }

    std::vector<std::size_t> plaquette_support(Plaquette p) const {
        check(p);
        std::vector<std::size_t> out{vertical(p.row, p.col), vertical(p.row, p.col + 1)};
        if (p.row > 1) {
            out.push_back(horizontal(p.row - 1, p.col));
        }
        if (p.row < rows_) {
            out.push_back(horizontal(p.row, p.col));
        }
        return out;
    }
    std::vector<std::size_t> star_support(Star s) const {
        check(s);
        std::vector<std::size_t> out{vertical(s.row, s.col), vertical(s.row + 1, s.col)};
        if (s.col > 1) {
            out.push_back(horizontal(s.row, s.col - 1));
        }
        if (s.col < cols_) {
            out.push_back(horizontal(s.row, s.col));
        }
        return out;
    }

    PauliOperator plaquette_operator(Plaquette p) const {
        return PauliOperator::z_on(num_qubits(), plaquette_support(p));
    }
    PauliOperator star_operator(Star s) const {
        return PauliOperator::x_on(num_qubits(), star_support(s));
    }

    std::vector<std::size_t> logical_z_support() const {
        std::vector<std::size_t> out;
        for (int i = 1; i <= rows_; i++) {
            out.push_back(vertical(i, 1));
        }
        return out;
    }
    std::vector<std::size_t> logical_x_support() const {
        std::vector<std::size_t> out;
        for (int j = 1; j <= cols_; j++) {
            out.push_back(vertical(rows_, j));
        }
        return out;
    }
    PauliOperator logical_z() const {
        return PauliOperator::z_on(num_qubits(), logical_z_support());
    }
    PauliOperator logical_x() const {
        return PauliOperator::x_on(num_qubits(), logical_x_support());
    }

    /// All stabilizer generators: plaquettes first, then stars.
    std::vector<PauliOperator> stabilizer_generators() const {
        std::vector<PauliOperator> out;
        for (std::size_t k = 0; k < num_plaquettes(); k++) {
            out.push_back(plaquette_operator(plaquette_at(k)));
        }
        for (std::size_t k = 0; k < num_stars(); k++) {
            out.push_back(star_operator(star_at(k)));
        }
        return out;
    }

    bool operator==(const LatticeGeometry &) const = default;

   private:
    void check(Plaquette p) const {
        if (p.row < 1 || p.row > rows_ || p.col < 1 || p.col >= cols_) {
            throw std::out_of_range("no plaquette at (" + std::to_string(p.row) + "," + std::to_string(p.col) + ")");
        }
    }
    void check(Star s) const {
        if (s.row < 1 || s.row >= rows_ || s.col < 1 || s.col > cols_) {
            throw std::out_of_range("no star at (" + std::to_string(s.row) + "," + std::to_string(s.col) + ")");
        }
    }

    int rows_;
    int cols_;
};

inline LatticeGeometry build_lattice(int rows, int cols) {
    return LatticeGeometry(rows, cols);
}

/// Checks of one sector viewed as a graph: every qubit is an edge between the
/// (at most two) checks containing it, or between one check and the boundary.
struct SectorGraph {
    Sector sector;
    std::size_t num_checks = 0;
    std::vector<std::vector<std::size_t>> check_support;
    /// Per qubit: the checks containing it, -1 for none.
    std::vector<std::array<int, 2>> qubit_checks;

    std::size_t boundary_node() const {
        return num_checks;
    }
    bool on_boundary(std::size_t q) const {
        return qubit_checks[q][0] >= 0 && qubit_checks[q][1] < 0;
    }

    /// Checks violated by a configuration, one byte per check.
    std::vector<uint8_t> syndrome(const BitVector &bits) const {
        std::vector<uint8_t> out(num_checks, 0);
        for (std::size_t c = 0; c < num_checks; c++) {
            uint8_t parity = 0;
            for (auto q : check_support[c]) {
                parity ^= (uint8_t)bits[q];
            }
            out[c] = parity;
        }
        return out;
    }
};

inline SectorGraph sector_graph(const LatticeGeometry &geom, Sector sector) {
    SectorGraph g;
    g.sector = sector;
    if (sector == Sector::Z) {
        g.num_checks = geom.num_plaquettes();
        for (std::size_t k = 0; k < g.num_checks; k++) {
            g.check_support.push_back(geom.plaquette_support(geom.plaquette_at(k)));
        }
    } else {
        g.num_checks = geom.num_stars();
        for (std::size_t k = 0; k < g.num_checks; k++) {
            g.check_support.push_back(geom.star_support(geom.star_at(k)));
        }
    }
    g.qubit_checks.assign(geom.num_qubits(), {-1, -1});
    for (std::size_t c = 0; c < g.num_checks; c++) {
        for (auto q : g.check_support[c]) {
            auto &slot = g.qubit_checks[q];
            (slot[0] < 0 ? slot[0] : slot[1]) = (int)c;
        }
    }
    return g;
}

inline std::vector<std::size_t> logical_support(const LatticeGeometry &geom, Sector sector) {
    return sector == Sector::Z ? geom.logical_z_support() : geom.logical_x_support();
}

/// Logical parity of a closed configuration: overlap with column 1 for the Z
/// sector and with row N for the X sector. Throws if the configuration
/// violates any check of its sector.
inline int homology_parity(const LatticeGeometry &geom, const BitVector &bits, Sector sector) {
    if (bits.size() != geom.num_qubits()) {
        throw std::invalid_argument("configuration length does not match the lattice");
    }
    auto graph = sector_graph(geom, sector);
    for (auto s : graph.syndrome(bits)) {
        if (s) {
            throw std::invalid_argument("configuration has a nontrivial syndrome in this sector");
        }
    }
    int parity = 0;
    for (auto q : logical_support(geom, sector)) {
        parity ^= (int)bits[q];
    }
    return parity;
}

// Triangle split.
//
// Each qubit gets normalized coordinates a = (y-1)/(N-1) down and b = (x-1)/(M-1)
// across, where vertical edges sit at (y,x) = (i,j) and horizontal edges at
// (i+1/2, j+1/2). Qubits with a+b > 1 form the green lower-right triangle that
// contains the bottom row; the rest form the red upper-left triangle that
// contains column 1. The black qubit is neither.

enum class Region : uint8_t { Green, Red, Black };

struct TriangleSplit {
    std::vector<Region> region;
    std::size_t black;

    bool is(std::size_t q, Region r) const {
        return region[q] == r;
    }
    std::vector<std::size_t> members(Region r) const {
        std::vector<std::size_t> out;
        for (std::size_t q = 0; q < region.size(); q++) {
            if (region[q] == r) {
                out.push_back(q);
            }
        }
        return out;
    }
};

inline TriangleSplit make_triangle_split(const LatticeGeometry &geom) {
    const int64_t n1 = geom.rows() - 1;
    const int64_t m1 = geom.cols() - 1;
    TriangleSplit split;
    split.black = geom.black_qubit();
    split.region.resize(geom.num_qubits());
    for (std::size_t q = 0; q < geom.num_qubits(); q++) {
        auto c = geom.coord(q);
        bool green;
        if (q == split.black) {
            split.region[q] = Region::Black;
            continue;
        } else if (n1 == 0) {
            green = true;
        } else if (m1 == 0) {
            green = false;
        } else if (c.kind == EdgeKind::Vertical) {
            green = (c.row - 1) * m1 + (c.col - 1) * n1 > n1 * m1;
        } else {
            green = (2 * c.row - 1) * m1 + (2 * c.col - 1) * n1 > 2 * n1 * m1;
        }
        split.region[q] = green ? Region::Green : Region::Red;
    }
    return split;
}

/// Region prepared in a random eigenstate for a sector during encoding: red for
/// the X sector, green for the Z sector.
inline Region random_region(Sector sector) {
    return sector == Sector::X ? Region::Red : Region::Green;
}
/// Region whose qubits are read out at the end of a one-shot decode.
inline Region readout_region(Sector sector) {
    return sector == Sector::X ? Region::Green : Region::Red;
}

/// Monotone readout paths of a sector, as ordered qubit lists ending at black.
///
/// X sector: dual paths entering at the east edge that only step left (crossing a
/// vertical edge) or down (crossing a horizontal edge), stay on green qubits and
/// leave through the black qubit. Z sector: primal paths entering at the top
/// edge that only step down or left, stay on red qubits and leave through black.
/// Each path overlaps the sector's logical operator on an odd set, so its parity
/// is a valid readout of the logical bit.
inline std::vector<std::vector<std::size_t>> readout_paths(
    const LatticeGeometry &geom, const TriangleSplit &split, Sector sector) {
    const int n = geom.rows();
    const int m = geom.cols();
    const Region allowed = readout_region(sector);
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> path;
    auto usable = [&](std::size_t q) {
        return split.region[q] == allowed;
    };

    if (sector == Sector::X) {
        // Position is the plaquette (i,j) the path currently sits in.
        std::function<void(int, int)> walk = [&](int i, int j) {
            std::size_t left = geom.vertical(i, j);
            if (j == 1) {
                if (left == split.black) {
                    path.push_back(left);
                    out.push_back(path);
                    path.pop_back();
                }
            } else if (usable(left)) {
                path.push_back(left);
                walk(i, j - 1);
                path.pop_back();
            }
            if (i < n && j < m) {
                std::size_t down = geom.horizontal(i, j);
                if (usable(down)) {
                    path.push_back(down);
                    walk(i + 1, j);
                    path.pop_back();
                }
            }
        };
        for (int r = 1; r <= n; r++) {
            std::size_t entry = geom.vertical(r, m);
            if (m == 1) {
                if (entry == split.black) {
                    out.push_back({entry});
                }
                continue;
            }
            if (usable(entry)) {
                path.push_back(entry);
                walk(r, m - 1);
                path.pop_back();
            }
        }
    } else {
        // Position is the star (i,j) the path currently sits in.
        std::function<void(int, int)> walk = [&](int i, int j) {
            std::size_t down = geom.vertical(i + 1, j);
            if (i + 1 == n) {
                if (down == split.black) {
                    path.push_back(down);
                    out.push_back(path);
                    path.pop_back();
                }
            } else if (usable(down)) {
                path.push_back(down);
                walk(i + 1, j);
                path.pop_back();
            }
            if (j > 1) {
                std::size_t left = geom.horizontal(i, j - 1);
                if (usable(left)) {
                    path.push_back(left);
                    walk(i, j - 1);
                    path.pop_back();
                }
            }
        };
        for (int c = 1; c <= m; c++) {
            std::size_t entry = geom.vertical(1, c);
            if (n == 1) {
                if (entry == split.black) {
                    out.push_back({entry});
                }
                continue;
            }
            if (usable(entry)) {
                path.push_back(entry);
                walk(1, c);
                path.pop_back();
            }
        }
    }
    return out;
}

/// Readout paths of the X sector (row-N readout through the green triangle).
inline std::vector<std::vector<std::size_t>> monotone_paths(const LatticeGeometry &geom, const TriangleSplit &split) {
    return readout_paths(geom, split, Sector::X);
}

/// Shortest path inside one region from a check to the boundary, as a qubit
/// list. Throws if the region does not connect them.
inline std::vector<std::size_t> region_path_to_boundary(
    const SectorGraph &graph, const TriangleSplit &split, Region region, std::size_t check) {
    const std::size_t none = (std::size_t)-1;
    std::vector<std::size_t> via(graph.num_checks, none);
    std::vector<std::size_t> prev(graph.num_checks, none);
    std::vector<bool> seen(graph.num_checks, false);
    // Incidence lists restricted to the region.
    std::vector<std::vector<std::size_t>> incident(graph.num_checks);
    for (std::size_t q = 0; q < graph.qubit_checks.size(); q++) {
        if (split.region[q] != region) {
            continue;
        }
        for (int c : graph.qubit_checks[q]) {
            if (c >= 0) {
                incident[c].push_back(q);
            }
        }
    }
    std::deque<std::size_t> queue{check};
    seen[check] = true;
    while (!queue.empty()) {
        std::size_t c = queue.front();
        queue.pop_front();
        for (auto q : incident[c]) {
            auto [a, b] = graph.qubit_checks[q];
            if (b < 0) {
                std::vector<std::size_t> out{q};
                for (std::size_t k = c; k != check; k = prev[k]) {
                    out.push_back(via[k]);
                }
                return out;
            }
            std::size_t other = (std::size_t)(a == (int)c ? b : a);
            if (!seen[other]) {
                seen[other] = true;
                prev[other] = c;
                via[other] = q;
                queue.push_back(other);
            }
        }
    }
    throw std::invalid_argument("region does not connect this check to the boundary");
}

}  // namespace planar

#endif
