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

#include "planar/pauli.hpp"

#include <random>
#include <string>

#include "gtest/gtest.h"
#include "support/state_vector.hpp"

using planar::BitVector;
using planar::PauliOperator;

TEST(bit_vector, set_flip_and_parity) {
    BitVector a(130);
    a.set(3);
    a.set(129);
    a.flip(64);
    EXPECT_EQ(a.popcount(), 3u);
    EXPECT_TRUE(a[64]);
    BitVector b(130);
    b.set(129);
    EXPECT_TRUE(a.and_parity(b));
    a ^= b;
    EXPECT_FALSE(a[129]);
    EXPECT_EQ(a.ones(), (std::vector<std::size_t>{3, 64}));
    EXPECT_THROW(a ^= BitVector(5), std::invalid_argument);
}

TEST(pauli_operator, parse_and_print) {
    auto p = PauliOperator::from_string("-X_ZY");
    EXPECT_EQ(p.str(), "-X_ZY");
    EXPECT_EQ(p.weight(), 3u);
    EXPECT_EQ(p.x_support(), (std::vector<std::size_t>{0, 3}));
    EXPECT_EQ(p.z_support(), (std::vector<std::size_t>{2, 3}));
    EXPECT_THROW(PauliOperator::from_string("XQ"), std::invalid_argument);
}

TEST(pauli_operator, commutation) {
    EXPECT_FALSE(PauliOperator::from_string("X").commutes_with(PauliOperator::from_string("Z")));
    EXPECT_TRUE(PauliOperator::from_string("XX").commutes_with(PauliOperator::from_string("ZZ")));
    EXPECT_FALSE(PauliOperator::from_string("XY").commutes_with(PauliOperator::from_string("_Z")));
}

TEST(pauli_operator, anticommuting_product_rejected) {
    auto a = PauliOperator::from_string("X");
    EXPECT_THROW(a *= PauliOperator::from_string("Z"), std::invalid_argument);
}

// Products of random commuting pairs must match the dense matrix product.
TEST(pauli_operator, product_sign_matches_dense_reference) {
    std::mt19937_64 rng(7);
    const char letters[] = "_XYZ";
    int checked = 0;
    while (checked < 500) {
        std::string a(1, rng() & 1 ? '-' : '+');
        std::string b(1, rng() & 1 ? '-' : '+');
        for (int q = 0; q < 3; q++) {
            a.push_back(letters[rng() % 4]);
            b.push_back(letters[rng() % 4]);
        }
        auto pa = PauliOperator::from_string(a);
        auto pb = PauliOperator::from_string(b);
        if (!pa.commutes_with(pb)) {
            continue;
        }
        auto prod = pa;
        prod *= pb;
        // Compare A(B|e>) against prod|e> on every computational basis state.
        for (int basis = 0; basis < 8; basis++) {
            oracle::StateVector e(3);
            std::string flip = "+";
            for (int q = 0; q < 3; q++) {
                flip.push_back((basis >> q) & 1 ? 'X' : '_');
            }
            e.apply_in_place(flip);
            oracle::StateVector tmp = e;
            tmp.apply_in_place(b);
            auto lhs = tmp.apply(a);
            auto rhs = e.apply(prod.str());
            for (std::size_t k = 0; k < lhs.size(); k++) {
                ASSERT_NEAR(std::abs(lhs[k] - rhs[k]), 0.0, 1e-12) << a << " * " << b << " = " << prod.str();
            }
        }
        checked++;
    }
}
