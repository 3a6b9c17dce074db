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

// Analytic fidelity bounds.
//
// Concatenated encoding: a circuit of v locations with c location pairs turns a
// per-location error rate p_k into p_{k+1} = c p_k^2 at the next level, and the
// encoder succeeds at every level with probability at least
// prod_{k=0}^{r} (1 - p_k)^v. The module evaluates that product in two ways,
// the claimed e^{-pv} bound, and a step-by-step numeric report of the argument
// that is meant to connect them.
//
// Planar storage: a union bound over error chains, 1 - N M k a^max(N,M)/(1-a)
// with a = 12 sqrt(p(1-p)). It is vacuous once a >= 1 or the value drops to 0.

#ifndef PLANAR_BOUNDS_HPP
#define PLANAR_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace planar {

struct ConcatParams {
    double p = 0;
    double v = 1;
    double c = 1;
    int r = 0;

    /// Parameters with the default pair count c = v(v-1)/2.
    static ConcatParams with_pairs(double p, double v, int r) {
        return {p, v, std::max(1.0, v * (v - 1) / 2), r};
    }

    void validate() const {
        if (!(p >= 0 && p <= 1) || !(v >= 1) || !(c >= 1) || r < 0) {
            throw std::invalid_argument("concatenation parameters out of range");
        }
    }
};

/// Error rates p_0..p_r from the recurrence p_{k+1} = c p_k^2.
inline std::vector<double> concat_error_rates(const ConcatParams &a) {
    a.validate();
    std::vector<double> out{a.p};
    for (int k = 0; k < a.r; k++) {
        out.push_back(a.c * out.back() * out.back());
    }
    return out;
}

/// prod_k (1 - p_k)^v with p_k from the recurrence.
inline double concat_success_product(const ConcatParams &a) {
    double log_sum = 0;
    for (double pk : concat_error_rates(a)) {
        if (pk >= 1) {
            return 0;
        }
        log_sum += a.v * std::log1p(-pk);
    }
    return std::exp(log_sum);
}

/// Same product with p_k = (cp)^(2^k) / c written out directly.
inline double concat_success_closed_form(const ConcatParams &a) {
    a.validate();
    double log_sum = 0;
    for (int k = 0; k <= a.r; k++) {
        double pk = a.p == 0 ? 0 : std::exp(std::ldexp(1.0, k) * std::log(a.c * a.p)) / a.c;
        if (pk >= 1) {
            return 0;
        }
        log_sum += a.v * std::log1p(-pk);
    }
    return std::exp(log_sum);
}

inline double concat_fidelity_lower_bound(double p, double v) {
    return std::exp(-p * v);
}

/// Every intermediate quantity of the argument from the product to e^{-pv},
/// each divided by v. Each `*_holds` flag says whether the step's inequality is
/// true at this point.
struct ConcatChainReport {
    double log_rate = 0;        // (1/v) ln of the product
    double sum_integral = 0;    // integral over x in [0, r+1] of ln(1 - (cp)^(2^x)/c)
    double tail_integral = 0;   // the same over [0, inf), after z = (cp)^(2^x)
    double endpoint = 0;        // -ln(1-p) / (ln2 ln(cp))
    double linearized = 0;      // p / (ln2 ln(cp))
    double target = 0;          // -p
    double corrected = 0;       // ln(1-p) (1 - 1/(ln2 ln(cp)))
    bool sum_holds = false;
    bool tail_holds = false;
    bool endpoint_holds = false;
    bool linearized_holds = false;
    bool target_holds = false;
    bool corrected_holds = false;
};

/// Requires 0 < cp < 1. Integrals use adaptive Gauss-Kronrod quadrature, and
/// comparisons allow a relative slack of 1e-9 for quadrature error.
inline ConcatChainReport concat_chain_report(const ConcatParams &a) {
    a.validate();
    const double beta = a.c * a.p;
    const double alpha = 1 / a.c;
    if (!(beta > 0 && beta < 1)) {
        throw std::invalid_argument("the chain needs 0 < cp < 1");
    }
    using boost::math::quadrature::gauss_kronrod;
    const double ln2 = std::log(2.0);
    auto g = [&](double x) { return std::log1p(-alpha * std::exp(std::exp2(x) * std::log(beta))); };
    // The z-integral of ln(1 - z/c) / (z ln z) over (0, cp], taken in
    // u = ln(cp / z) so the slow decay near z = 0 becomes an exponential tail.
    auto h = [&](double u) { return std::log1p(-alpha * beta * std::exp(-u)) / (std::log(beta) - u); };

    ConcatChainReport out;
    out.log_rate = std::log(concat_success_product(a)) / a.v;
    out.sum_integral = gauss_kronrod<double, 61>::integrate(g, 0.0, a.r + 1.0, 15, 1e-13);
    out.tail_integral =
        -gauss_kronrod<double, 61>::integrate(h, 0.0, std::numeric_limits<double>::infinity(), 15, 1e-13) / ln2;
    out.endpoint = -std::log1p(-a.p) / (ln2 * std::log(beta));
    out.linearized = a.p / (ln2 * std::log(beta));
    out.target = -a.p;
    out.corrected = std::log1p(-a.p) * (1 - 1 / (ln2 * std::log(beta)));

    auto geq = [](double lhs, double rhs) { return lhs >= rhs - 1e-9 * std::max(std::abs(lhs), std::abs(rhs)); };
    out.sum_holds = geq(out.log_rate, out.sum_integral);
    out.tail_holds = geq(out.sum_integral, out.tail_integral);
    out.endpoint_holds = geq(out.tail_integral, out.endpoint);
    out.linearized_holds = geq(out.endpoint, out.linearized);
    out.target_holds = geq(out.log_rate, out.target);
    out.corrected_holds = geq(out.log_rate, out.corrected);
    return out;
}

struct ChainCheckSummary {
    int points = 0;
    int sum_failures = 0;
    int tail_failures = 0;
    int endpoint_failures = 0;
    int linearized_failures = 0;
    int target_failures = 0;
    int corrected_failures = 0;
};

/// Random points with v in [2, 1000] (log-uniform), c = v(v-1)/2 and cp
/// log-uniform in [1e-6/e, 1/e].
inline ChainCheckSummary concat_chain_check(int points = 200, int r = 30, uint64_t seed = 1) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    ChainCheckSummary s;
    for (int i = 0; i < points; i++) {
        double v = std::round(std::exp(std::log(2.0) + unit(rng) * std::log(500.0)));
        double c = v * (v - 1) / 2;
        double cp = std::exp(-1.0 - unit(rng) * 6 * std::log(10.0));
        auto rep = concat_chain_report({cp / c, v, c, r});
        s.points++;
        s.sum_failures += !rep.sum_holds;
        s.tail_failures += !rep.tail_holds;
        s.endpoint_failures += !rep.endpoint_holds;
        s.linearized_failures += !rep.linearized_holds;
        s.target_failures += !rep.target_holds;
        s.corrected_failures += !rep.corrected_holds;
    }
    return s;
}

struct StorageParams {
    int rows = 7;
    int cols = 8;
    int steps = 100;
    double p = 0;

    void validate() const {
        if (rows < 1 || cols < 1 || steps < 0 || !(p >= 0 && p <= 1)) {
            throw std::invalid_argument("storage parameters out of range");
        }
    }
};

inline double storage_alpha(double p) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("p must lie in [0, 1]");
    }
    return 12 * std::sqrt(p * (1 - p));
}

struct StorageBound {
    double value = 0;  // NaN when alpha >= 1
    double alpha = 0;
    bool vacuous = false;
};

inline StorageBound storage_success_bound(const StorageParams &s) {
    s.validate();
    StorageBound out;
    out.alpha = storage_alpha(s.p);
    if (out.alpha >= 1) {
        out.value = std::numeric_limits<double>::quiet_NaN();
        out.vacuous = true;
        return out;
    }
    const double nm = double(s.rows) * double(s.cols);
    out.value = 1 - nm * s.steps * std::pow(out.alpha, std::max(s.rows, s.cols)) / (1 - out.alpha);
    out.vacuous = out.value <= 0;
    return out;
}

/// Average fidelity from the fidelities of the two conjugate basis pairs.
inline double hofmann_bound(double fx, double fz) {
    if (!(fx >= 0 && fx <= 1 && fz >= 0 && fz <= 1)) {
        throw std::invalid_argument("fidelities must lie in [0, 1]");
    }
    return fx + fz - 1;
}

}  // namespace planar

#endif
