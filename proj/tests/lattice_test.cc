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

#include "planar/lattice.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "support/gf2.hpp"

using namespace planar;

namespace {

std::vector<uint8_t> symplectic_row(const PauliOperator &p) {
    std::vector<uint8_t> row;
    for (std::size_t q = 0; q < p.num_qubits(); q++) {
        row.push_back(p.xs()[q]);
    }
    for (std::size_t q = 0; q < p.num_qubits(); q++) {
        row.push_back(p.zs()[q]);
    }
    return row;
}

std::size_t rank_of(const std::vector<PauliOperator> &ops) {
    std::vector<std::vector<uint8_t>> rows;
    for (const auto &p : ops) {
        rows.push_back(symplectic_row(p));
    }
    return oracle::gf2_rank(rows);
}

// Image of a qubit under transpose followed by a half turn, which maps an
// N x M lattice onto an M x N lattice.
std::size_t mirror(const LatticeGeometry &from, const LatticeGeometry &to, std::size_t q) {
    auto c = from.coord(q);
    if (c.kind == EdgeKind::Vertical) {
        return to.vertical(from.cols() + 1 - c.col, from.rows() + 1 - c.row);
    }
    return to.horizontal(from.cols() - c.col, from.rows() - c.row);
}

}  // namespace

TEST(lattice, counts_match_edge_enumeration) {
    for (int n = 1; n <= 7; n++) {
        for (int m = 1; m <= 7; m++) {
            auto g = build_lattice(n, m);
            std::size_t edges = 0;
            for (int i = 1; i <= n; i++) {
                for (int j = 1; j <= m; j++) {
                    edges += 1 + (i < n && j < m);
                }
            }
            EXPECT_EQ(g.num_qubits(), edges);
            EXPECT_EQ(g.num_plaquettes() + g.num_stars() + 1, g.num_qubits()) << n << "x" << m;
            std::set<std::size_t> seen;
            for (std::size_t q = 0; q < g.num_qubits(); q++) {
                EXPECT_EQ(g.index_of(g.coord(q)), q);
                seen.insert(q);
            }
            EXPECT_EQ(seen.size(), g.num_qubits());
        }
    }
}

TEST(lattice, single_qubit_and_three_by_three) {
    auto one = build_lattice(1, 1);
    EXPECT_EQ(one.num_qubits(), 1u);
    EXPECT_EQ(one.stabilizer_generators().size(), 0u);
    auto three = build_lattice(3, 3);
    EXPECT_EQ(three.num_qubits(), 13u);
    EXPECT_EQ(three.stabilizer_generators().size(), 12u);
}

TEST(lattice, rejects_bad_sizes_and_checks) {
    EXPECT_THROW(build_lattice(0, 3), std::invalid_argument);
    EXPECT_THROW(build_lattice(2, -1), std::invalid_argument);
    auto g = build_lattice(3, 3);
    EXPECT_THROW(g.plaquette_support({1, 3}), std::out_of_range);
    EXPECT_THROW(g.star_support({3, 1}), std::out_of_range);
    EXPECT_THROW(g.vertical(4, 1), std::out_of_range);
}

TEST(lattice, stabilizers_commute_and_are_independent) {
    for (int n = 1; n <= 6; n++) {
        for (int m = 1; m <= 6; m++) {
            auto g = build_lattice(n, m);
            auto gens = g.stabilizer_generators();
            for (const auto &a : gens) {
                for (const auto &b : gens) {
                    ASSERT_TRUE(a.commutes_with(b));
                }
            }
            EXPECT_EQ(rank_of(gens), g.num_qubits() - 1) << n << "x" << m;
        }
    }
}

TEST(lattice, logical_operators) {
    for (int n = 1; n <= 6; n++) {
        for (int m = 1; m <= 6; m++) {
            auto g = build_lattice(n, m);
            auto gens = g.stabilizer_generators();
            auto lz = g.logical_z();
            auto lx = g.logical_x();
            EXPECT_FALSE(lz.commutes_with(lx));
            for (const auto &s : gens) {
                EXPECT_TRUE(s.commutes_with(lz));
                EXPECT_TRUE(s.commutes_with(lx));
            }
            auto with_z = gens;
            with_z.push_back(lz);
            auto with_x = gens;
            with_x.push_back(lx);
            EXPECT_EQ(rank_of(with_z), gens.size() + 1);
            EXPECT_EQ(rank_of(with_x), gens.size() + 1);
            EXPECT_EQ(lz.x_support().size() + lz.z_support().size(), (std::size_t)n);
            EXPECT_EQ(lx.x_support().size(), (std::size_t)m);
        }
    }
}

TEST(lattice, homology_parity_examples) {
    auto g = build_lattice(4, 5);
    BitVector column(g.num_qubits());
    for (auto q : g.logical_z_support()) {
        column.set(q);
    }
    BitVector row(g.num_qubits());
    for (auto q : g.logical_x_support()) {
        row.set(q);
    }
    // Column 1 as a bit configuration violates every plaquette of column 1.
    EXPECT_THROW(homology_parity(g, column, Sector::Z), std::invalid_argument);
    // As a phase configuration it is closed and crosses row N once.
    EXPECT_EQ(homology_parity(g, column, Sector::X), 1);
    EXPECT_EQ(homology_parity(g, row, Sector::Z), 1);
    EXPECT_THROW(homology_parity(g, row, Sector::X), std::invalid_argument);
    BitVector empty(g.num_qubits());
    EXPECT_EQ(homology_parity(g, empty, Sector::Z), 0);
    // A single star's support is a trivial bit cycle.
    BitVector star(g.num_qubits());
    for (auto q : g.star_support({2, 1})) {
        star.set(q);
    }
    EXPECT_EQ(homology_parity(g, star, Sector::Z), 0);
}

TEST(triangle_split, matches_coordinate_rule) {
    for (int n = 1; n <= 9; n++) {
        for (int m = 1; m <= 9; m++) {
            auto g = build_lattice(n, m);
            auto split = make_triangle_split(g);
            for (std::size_t q = 0; q < g.num_qubits(); q++) {
                auto c = g.coord(q);
                double y = c.row + (c.kind == EdgeKind::Horizontal ? 0.5 : 0.0);
                double x = c.col + (c.kind == EdgeKind::Horizontal ? 0.5 : 0.0);
                double a = n == 1 ? 1.0 : (y - 1) / (n - 1);
                double b = m == 1 ? 0.0 : (x - 1) / (m - 1);
                Region want = q == g.black_qubit() ? Region::Black
                              : a + b > 1 + 1e-9   ? Region::Green
                                                   : Region::Red;
                EXPECT_EQ(split.region[q], want) << n << "x" << m << " qubit " << q;
            }
        }
    }
}

TEST(triangle_split, corners_and_edges) {
    for (int n = 2; n <= 9; n++) {
        for (int m = 2; m <= 9; m++) {
            auto g = build_lattice(n, m);
            auto split = make_triangle_split(g);
            for (int j = 2; j <= m; j++) {
                EXPECT_EQ(split.region[g.vertical(n, j)], Region::Green);
            }
            for (int i = 1; i < n; i++) {
                EXPECT_EQ(split.region[g.vertical(i, 1)], Region::Red);
            }
            EXPECT_EQ(split.members(Region::Black), (std::vector<std::size_t>{g.black_qubit()}));
        }
    }
}

TEST(triangle_split, mirror_swaps_colors) {
    for (int n = 2; n <= 8; n++) {
        for (int m = 2; m <= 8; m++) {
            auto g = build_lattice(n, m);
            auto t = build_lattice(m, n);
            auto sg = make_triangle_split(g);
            auto st = make_triangle_split(t);
            for (std::size_t q = 0; q < g.num_qubits(); q++) {
                Region r = sg.region[q];
                Region image = st.region[mirror(g, t, q)];
                if (r == Region::Black) {
                    EXPECT_EQ(image, Region::Black);
                } else {
                    // Ties on the anti-diagonal are red on both sides.
                    bool tie = image == Region::Red && r == Region::Red;
                    EXPECT_TRUE(tie || image != r) << n << "x" << m << " qubit " << q;
                }
            }
        }
    }
}

namespace {

// Brute force over every left/down move string for the X sector.
std::set<std::vector<std::size_t>> brute_x_paths(const LatticeGeometry &g, const TriangleSplit &split) {
    std::set<std::vector<std::size_t>> out;
    const int n = g.rows();
    const int m = g.cols();
    const int max_len = n + m;
    for (int start = 1; start <= n; start++) {
        for (int len = 0; len <= max_len; len++) {
            for (uint32_t code = 0; code < (1u << len); code++) {
                // Position is a plaquette column index j in 0..m-1 (0 means west
                // boundary) after entering through v(start, m).
                std::vector<std::size_t> path{g.vertical(start, m)};
                int i = start;
                int j = m - 1;
                bool ok = true;
                for (int s = 0; s < len && ok; s++) {
                    if (j == 0) {
                        ok = false;
                    } else if ((code >> s) & 1) {
                        if (i >= n) {
                            ok = false;
                        } else {
                            path.push_back(g.horizontal(i, j));
                            i++;
                        }
                    } else {
                        path.push_back(g.vertical(i, j));
                        j--;
                    }
                }
                if (!ok || j != 0) {
                    continue;
                }
                bool valid = path.back() == split.black;
                for (std::size_t k = 0; k + 1 < path.size(); k++) {
                    valid = valid && split.region[path[k]] == Region::Green;
                }
                if (valid) {
                    out.insert(path);
                }
            }
        }
    }
    return out;
}

}  // namespace

TEST(monotone_paths, two_by_two_has_one_path) {
    auto g = build_lattice(2, 2);
    auto paths = monotone_paths(g, make_triangle_split(g));
    ASSERT_EQ(paths.size(), 1u);
    EXPECT_EQ(paths[0], (std::vector<std::size_t>{g.vertical(2, 2), g.vertical(2, 1)}));
}

TEST(monotone_paths, match_brute_force) {
    for (int n = 1; n <= 6; n++) {
        for (int m = 1; m <= 7; m++) {
            auto g = build_lattice(n, m);
            auto split = make_triangle_split(g);
            auto paths = monotone_paths(g, split);
            std::set<std::vector<std::size_t>> got(paths.begin(), paths.end());
            EXPECT_EQ(got.size(), paths.size());
            EXPECT_EQ(got, brute_x_paths(g, split)) << n << "x" << m;
        }
    }
}

TEST(monotone_paths, every_path_reads_the_logical_bit) {
    for (int n = 1; n <= 7; n++) {
        for (int m = 1; m <= 7; m++) {
            auto g = build_lattice(n, m);
            auto split = make_triangle_split(g);
            for (Sector sector : {Sector::X, Sector::Z}) {
                auto paths = readout_paths(g, split, sector);
                EXPECT_FALSE(paths.empty());
                // Each path differs from the straight logical line by a closed
                // trivial configuration, so both read the same bit.
                auto graph = sector_graph(g, sector == Sector::X ? Sector::Z : Sector::X);
                for (const auto &path : paths) {
                    EXPECT_EQ(std::count(path.begin(), path.end(), split.black), 1);
                    BitVector diff(g.num_qubits());
                    for (auto q : path) {
                        diff.flip(q);
                    }
                    for (auto q : logical_support(g, sector)) {
                        diff.flip(q);
                    }
                    // Closed as a configuration detected by the opposite checks.
                    for (auto s : graph.syndrome(diff)) {
                        EXPECT_EQ(s, 0);
                    }
                    EXPECT_EQ(homology_parity(g, diff, sector == Sector::X ? Sector::Z : Sector::X), 0);
                }
            }
        }
    }
}

TEST(monotone_paths, sectors_are_mirror_images) {
    for (int n = 1; n <= 7; n++) {
        for (int m = 1; m <= 7; m++) {
            auto g = build_lattice(n, m);
            auto t = build_lattice(m, n);
            auto xs = readout_paths(g, make_triangle_split(g), Sector::X);
            auto zs = readout_paths(t, make_triangle_split(t), Sector::Z);
            std::set<std::vector<std::size_t>> mapped;
            for (const auto &p : xs) {
                std::vector<std::size_t> image;
                for (auto q : p) {
                    image.push_back(mirror(g, t, q));
                }
                mapped.insert(image);
            }
            // Anti-diagonal ties are red on both lattices, so Z-sector paths may
            // additionally pass through them; every other path must match.
            auto sg = make_triangle_split(g);
            auto st = make_triangle_split(t);
            std::set<std::size_t> ties;
            for (std::size_t q = 0; q < g.num_qubits(); q++) {
                if (sg.region[q] == Region::Red && st.region[mirror(g, t, q)] == Region::Red) {
                    ties.insert(mirror(g, t, q));
                }
            }
            std::set<std::vector<std::size_t>> untied;
            for (const auto &p : zs) {
                if (std::none_of(p.begin(), p.end(), [&](std::size_t q) { return ties.count(q) > 0; })) {
                    untied.insert(p);
                }
            }
            EXPECT_EQ(mapped, untied) << n << "x" << m;
        }
    }
}

TEST(region_paths, every_encoding_check_reaches_its_boundary) {
    for (int n = 1; n <= 9; n++) {
        for (int m = 1; m <= 9; m++) {
            auto g = build_lattice(n, m);
            auto split = make_triangle_split(g);
            for (Sector sector : {Sector::X, Sector::Z}) {
                auto graph = sector_graph(g, sector);
                Region r = random_region(sector);
                for (std::size_t c = 0; c < graph.num_checks; c++) {
                    bool touches = false;
                    for (auto q : graph.check_support[c]) {
                        touches = touches || split.region[q] == r;
                    }
                    if (!touches) {
                        continue;
                    }
                    auto path = region_path_to_boundary(graph, split, r, c);
                    BitVector bits(g.num_qubits());
                    for (auto q : path) {
                        EXPECT_EQ(split.region[q], r);
                        bits.flip(q);
                    }
                    auto syn = graph.syndrome(bits);
                    for (std::size_t k = 0; k < syn.size(); k++) {
                        EXPECT_EQ(syn[k], k == c ? 1 : 0) << n << "x" << m;
                    }
                }
            }
        }
    }
}
