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

// Command line front end: storage experiments as CSV, protocol verification and
// bound evaluation. Exit codes are 0 on success, 1 on usage errors and 2 when
// a verification fails.

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "planar/bounds.hpp"
#include "planar/montecarlo.hpp"
#include "planar/protocols.hpp"

using namespace planar;
using nlohmann::json;

namespace {

constexpr int kUsageError = 1;
constexpr int kVerifyFailed = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shortest round-trip text, independent of the locale.
std::string num(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}
std::string num(int64_t x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}
std::string num(int x) {
    return num((int64_t)x);
}

const char *on_off(bool b) {
    return b ? "on" : "off";
}

// ---- experiment descriptions ------------------------------------------------

struct Curve {
    std::string label;
    ExperimentConfig config;
    std::vector<double> ps;
};

struct BoundCurve {
    std::string label;
    int rows = 7;
    int cols = 8;
    int steps = 100;
    std::vector<double> ps;
};

struct Recipe {
    std::string name;
    std::string figure;
    std::vector<Curve> curves;
    std::vector<BoundCurve> bounds;
};

const std::vector<double> kDefaultGrid{0.001, 0.002, 0.003, 0.005, 0.0075, 0.01, 0.015, 0.02, 0.025, 0.03};

Curve make_curve(std::string label, int rows, int cols, ExperimentMode mode, DecoderKind decoder, bool noise) {
    Curve c;
    c.label = std::move(label);
    c.config.rows = rows;
    c.config.cols = cols;
    c.config.mode = mode;
    c.config.decoder = decoder;
    c.config.syndrome_noise = noise;
    c.ps = kDefaultGrid;
    return c;
}

std::string size_label(int n, int m) {
    return num(n) + "x" + num(m);
}

const std::vector<std::pair<int, int>> kSizes{{5, 6}, {7, 8}, {9, 10}, {11, 12}};

std::map<std::string, std::string> recipe_aliases() {
    return {
        {"fig6", "enc-vs-no-enc"},
        {"fig7", "syndrome-vs-no-syndrome"},
        {"fig8", "errsyndr"},
        {"fig9", "enc-cmp-code-sizes"},
        {"fig10", "line-vs-multiline"},
    };
}

std::optional<Recipe> builtin_recipe(std::string name) {
    if (name.rfind("fig:", 0) == 0) {
        name = name.substr(4);
    }
    if (auto alias = recipe_aliases(); alias.count(name)) {
        name = alias[name];
    }
    const auto E = ExperimentMode::Encode;
    const auto P = ExperimentMode::NoEncode;
    const auto L = DecoderKind::Line;
    Recipe r;
    r.name = name;
    if (name == "enc-vs-no-enc") {
        r.figure = "encoding and line decoding vs no encoding and perfect decoding";
        r.curves = {make_curve("encode-line", 7, 8, E, L, true), make_curve("no-encode", 7, 8, P, L, true)};
    } else if (name == "syndrome-vs-no-syndrome") {
        r.figure = "errors on qubits and syndrome vs errors on qubits only";
        r.curves = {make_curve("syndrome-noise", 7, 8, E, L, true), make_curve("qubit-noise-only", 7, 8, E, L, false)};
    } else if (name == "errsyndr") {
        r.figure = "no encoding and perfect decoding for several code sizes, with the storage bound";
        for (auto [n, m] : kSizes) {
            r.curves.push_back(make_curve("no-encode-" + size_label(n, m), n, m, P, L, true));
            r.bounds.push_back({"bound-" + size_label(n, m), n, m, 100, kDefaultGrid});
        }
    } else if (name == "enc-cmp-code-sizes") {
        r.figure = "encoding and line decoding for several code sizes";
        for (auto [n, m] : kSizes) {
            r.curves.push_back(make_curve("encode-line-" + size_label(n, m), n, m, E, L, true));
        }
    } else if (name == "line-vs-multiline") {
        r.figure = "line decoding vs multiline decoding";
        r.curves = {make_curve("line", 7, 8, E, L, true), make_curve("multiline", 7, 8, E, DecoderKind::Multiline, true)};
    } else {
        return std::nullopt;
    }
    return r;
}

ExperimentMode parse_mode(const std::string &s) {
    if (s == "encode") return ExperimentMode::Encode;
    if (s == "no-encode") return ExperimentMode::NoEncode;
    throw UsageError("mode must be encode or no-encode, got " + s);
}
DecoderKind parse_decoder(const std::string &s) {
    if (s == "line") return DecoderKind::Line;
    if (s == "multiline") return DecoderKind::Multiline;
    throw UsageError("decoder must be line or multiline, got " + s);
}
bool parse_on_off(const std::string &s) {
    if (s == "on") return true;
    if (s == "off") return false;
    throw UsageError("syndrome noise must be on or off, got " + s);
}
Sector parse_sector(const std::string &s) {
    if (s == "x" || s == "X") return Sector::X;
    if (s == "z" || s == "Z") return Sector::Z;
    throw UsageError("sector must be x or z, got " + s);
}

std::vector<double> json_grid(const json &j) {
    if (j.is_number()) {
        return {j.get<double>()};
    }
    return j.get<std::vector<double>>();
}

// Applies the keys present in `j` to a curve.
void apply_json(const json &j, Curve &c) {
    auto &cfg = c.config;
    if (j.contains("label")) c.label = j["label"].get<std::string>();
    if (j.contains("rows")) cfg.rows = j["rows"].get<int>();
    if (j.contains("cols")) cfg.cols = j["cols"].get<int>();
    if (j.contains("p")) c.ps = json_grid(j["p"]);
    if (j.contains("steps")) cfg.steps = j["steps"].get<int>();
    if (j.contains("runs")) cfg.trials = j["runs"].get<int64_t>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<uint64_t>();
    if (j.contains("decoder")) cfg.decoder = parse_decoder(j["decoder"].get<std::string>());
    if (j.contains("mode")) cfg.mode = parse_mode(j["mode"].get<std::string>());
    if (j.contains("sector")) cfg.sector = parse_sector(j["sector"].get<std::string>());
    if (j.contains("syndrome_noise")) {
        const auto &v = j["syndrome_noise"];
        cfg.syndrome_noise = v.is_boolean() ? v.get<bool>() : parse_on_off(v.get<std::string>());
    }
}

Recipe recipe_from_json(const json &j) {
    Recipe r;
    if (j.contains("recipe")) {
        auto base = builtin_recipe(j["recipe"].get<std::string>());
        if (!base) {
            throw UsageError("unknown recipe in config: " + j["recipe"].get<std::string>());
        }
        r = *base;
    }
    if (j.contains("name")) r.name = j["name"].get<std::string>();
    if (r.name.empty()) r.name = "config";
    if (j.contains("curves")) {
        r.curves.clear();
        int k = 0;
        for (const auto &cj : j["curves"]) {
            Curve c;
            c.label = "curve" + num(k++);
            c.ps = kDefaultGrid;
            apply_json(cj, c);
            r.curves.push_back(c);
        }
    }
    if (j.contains("bounds")) {
        r.bounds.clear();
        for (const auto &bj : j["bounds"]) {
            BoundCurve b;
            b.rows = bj.value("rows", 7);
            b.cols = bj.value("cols", 8);
            b.steps = bj.value("steps", 100);
            b.ps = bj.contains("p") ? json_grid(bj["p"]) : kDefaultGrid;
            b.label = bj.value("label", "bound-" + size_label(b.rows, b.cols));
            r.bounds.push_back(b);
        }
    }
    if (j.contains("defaults")) {
        for (auto &c : r.curves) {
            apply_json(j["defaults"], c);
        }
    }
    return r;
}

// ---- output -----------------------------------------------------------------

const char *kSimHeader = "N,M,p,k,n,mode,decoder,syndrome_noise,seed,successes,p_hat,stderr";
const char *kStorageHeader = "N,M,k,p,alpha,bound,vacuous";

std::string sim_row(const ExperimentConfig &c, const RunResult &r) {
    std::ostringstream o;
    o << c.rows << ',' << c.cols << ',' << num(c.p) << ',' << c.steps << ',' << num(c.trials) << ','
      << mode_name(c.mode) << ',' << decoder_name(c.decoder) << ',' << on_off(c.syndrome_noise) << ','
      << num((int64_t)c.seed) << ',' << num(r.successes) << ',' << num(r.p_hat()) << ',' << num(r.standard_error());
    return o.str();
}

std::string storage_row(int n, int m, int k, double p) {
    auto b = storage_success_bound({n, m, k, p});
    std::ostringstream o;
    o << n << ',' << m << ',' << k << ',' << num(p) << ',' << num(b.alpha) << ',' << num(b.value) << ','
      << (b.vacuous ? "true" : "false");
    return o.str();
}

void dump_trials(std::ostream &out, const Experiment &e, int64_t limit) {
    const auto &c = e.config();
    for (int64_t t = 0; t < std::min(limit, c.trials); t++) {
        TrialRecord rec;
        e.run_trial((uint64_t)t, &rec);
        json defects = json::array();
        for (auto d : rec.defects) {
            defects.push_back({d.round, d.check});
        }
        json pairs = json::array();
        for (auto [i, j] : rec.match.pairs) {
            pairs.push_back({{"a", i}, {"b", j}, {"weight", e.graph().distance(rec.defects[i], rec.defects[j])}});
        }
        json boundary = json::array();
        for (int i : rec.match.to_boundary) {
            boundary.push_back({{"a", i}, {"weight", e.graph().boundary_distance(rec.defects[i])}});
        }
        json line = {
            {"N", c.rows},         {"M", c.cols},      {"p", c.p},
            {"k", c.steps},        {"trial", t},       {"defects", defects},
            {"pairs", pairs},      {"boundary", boundary}, {"weight", rec.match.weight},
            {"decision", rec.decision}, {"black", rec.black_bit}, {"success", rec.success},
        };
        out << line.dump() << '\n';
    }
}

// ---- subcommands ------------------------------------------------------------

struct SimulateFlags {
    int rows = 7;
    int cols = 8;
    std::vector<double> ps{0.01};
    int steps = 100;
    int64_t runs = 10000;
    uint64_t seed = 1;
    std::string decoder = "line";
    std::string mode = "encode";
    std::string syndrome_noise = "on";
    std::string sector = "x";
    int workers = 0;
    std::string recipe;
    std::string config;
    std::string out_dir;
    std::string dump_matching;
    int64_t dump_limit = 100;
    bool list_recipes = false;
};

int cmd_simulate(const SimulateFlags &f, const CLI::App &app) {
    if (f.list_recipes) {
        for (auto [alias, name] : recipe_aliases()) {
            std::cout << alias << ',' << name << ',' << builtin_recipe(name)->figure << '\n';
        }
        return 0;
    }
    auto given = [&](const char *flag) { return app.count(flag) > 0; };
    Recipe recipe;
    if (!f.recipe.empty()) {
        auto r = builtin_recipe(f.recipe);
        if (!r) {
            throw UsageError("unknown recipe " + f.recipe + " (see --list-recipes)");
        }
        recipe = *r;
    }
    if (!f.config.empty()) {
        std::ifstream in(f.config);
        if (!in) {
            throw UsageError("cannot read config " + f.config);
        }
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception &e) {
            throw UsageError(std::string("bad config: ") + e.what());
        }
        if (!f.recipe.empty() && !j.contains("recipe")) {
            j["recipe"] = f.recipe;
        }
        recipe = recipe_from_json(j);
    }
    const bool from_recipe = !recipe.curves.empty() || !recipe.bounds.empty();
    if (!from_recipe) {
        recipe.name = "simulate";
        Curve c;
        c.label = "run";
        recipe.curves.push_back(c);
    }
    // Explicit flags override the recipe; without a recipe they define the run.
    for (auto &c : recipe.curves) {
        auto &cfg = c.config;
        if (!from_recipe || given("--rows")) cfg.rows = f.rows;
        if (!from_recipe || given("--cols")) cfg.cols = f.cols;
        if (!from_recipe || given("--p")) c.ps = f.ps;
        if (!from_recipe || given("--steps")) cfg.steps = f.steps;
        if (!from_recipe || given("--runs")) cfg.trials = f.runs;
        if (!from_recipe || given("--seed")) cfg.seed = f.seed;
        if (!from_recipe || given("--decoder")) cfg.decoder = parse_decoder(f.decoder);
        if (!from_recipe || given("--mode")) cfg.mode = parse_mode(f.mode);
        if (!from_recipe || given("--syndrome-noise")) cfg.syndrome_noise = parse_on_off(f.syndrome_noise);
        if (!from_recipe || given("--sector")) cfg.sector = parse_sector(f.sector);
    }
    for (const auto &c : recipe.curves) {
        for (double p : c.ps) {
            auto cfg = c.config;
            cfg.p = p;
            try {
                cfg.validate();
            } catch (const std::invalid_argument &e) {
                throw UsageError(e.what());
            }
        }
    }
    const int workers = f.workers > 0 ? f.workers : default_workers();

    std::ofstream dump;
    if (!f.dump_matching.empty()) {
        dump.open(f.dump_matching);
        if (!dump) {
            throw UsageError("cannot write " + f.dump_matching);
        }
    }
    if (!f.out_dir.empty()) {
        std::filesystem::create_directories(f.out_dir);
    }
    auto open_sink = [&](const std::string &label) -> std::ofstream {
        auto path = std::filesystem::path(f.out_dir) / (recipe.name + "-" + label + ".csv");
        std::ofstream out(path);
        if (!out) {
            throw UsageError("cannot write " + path.string());
        }
        return out;
    };

    if (f.out_dir.empty()) {
        std::cout << kSimHeader << '\n';
    }
    for (const auto &c : recipe.curves) {
        std::ofstream file;
        if (!f.out_dir.empty()) {
            file = open_sink(c.label);
            file << kSimHeader << '\n';
        }
        std::ostream &out = f.out_dir.empty() ? std::cout : file;
        for (double p : c.ps) {
            auto cfg = c.config;
            cfg.p = p;
            Experiment e(cfg);
            out << sim_row(cfg, e.run(workers)) << '\n';
            out.flush();
            if (dump.is_open()) {
                dump_trials(dump, e, f.dump_limit);
            }
        }
    }
    if (!recipe.bounds.empty()) {
        if (f.out_dir.empty()) {
            std::cerr << "note: storage bound curves are written only with --out-dir\n";
        }
        for (const auto &b : recipe.bounds) {
            if (f.out_dir.empty()) {
                break;
            }
            auto file = open_sink(b.label);
            file << kStorageHeader << '\n';
            for (double p : b.ps) {
                file << storage_row(b.rows, b.cols, b.steps, p) << '\n';
            }
        }
    }
    return 0;
}

struct VerifyFlags {
    int max_size = 4;
    int seeds = 20;
    uint64_t seed = 1;
    bool inject_fault = false;
};

int cmd_verify(const VerifyFlags &f) {
    VerifyOptions opt;
    opt.max_size = f.max_size;
    opt.seeds = f.seeds;
    opt.seed = f.seed;
    opt.inject_fault = f.inject_fault;
    VerificationReport report;
    try {
        report = verify_protocols(opt);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    std::cout << "property,checks,failures,status\n";
    for (const auto &t : report.properties) {
        std::cout << t.name << ',' << t.checks << ',' << t.failures << ',' << (t.failures ? "FAIL" : "PASS") << '\n';
    }
    for (const auto &m : report.messages) {
        std::cerr << m << '\n';
    }
    std::cerr << (report.ok() ? "all " : "") << report.checks << " checks, " << report.failures << " failures\n";
    return report.ok() ? 0 : kVerifyFailed;
}

struct BoundsFlags {
    std::string formula;
    std::vector<double> ps{1e-4};
    double v = 10;
    double c = 0;
    int r = 0;
    int rows = 7;
    int cols = 7;
    int steps = 100;
    std::vector<double> fx;
    std::vector<double> fz;
    bool chain_check = false;
    int points = 200;
    uint64_t seed = 1;
    bool simulate = false;
    int64_t runs = 10000;
    int workers = 0;
};

int cmd_bounds(const BoundsFlags &f) {
    if (f.formula == "concat") {
        if (f.chain_check) {
            auto s = concat_chain_check(f.points, 30, f.seed);
            std::cout << "step,points,failures,status\n";
            auto row = [&](const char *name, int failures) {
                std::cout << name << ',' << s.points << ',' << failures << ',' << (failures ? "FAIL" : "PASS") << '\n';
            };
            row("sum_vs_integral", s.sum_failures);
            row("integral_vs_tail", s.tail_failures);
            row("tail_vs_endpoint", s.endpoint_failures);
            row("endpoint_vs_linearized", s.linearized_failures);
            row("log_rate_vs_minus_p", s.target_failures);
            row("log_rate_vs_corrected", s.corrected_failures);
            return s.target_failures ? kVerifyFailed : 0;
        }
        std::cout << "p,v,c,r,product,closed_form,exp_bound\n";
        for (double p : f.ps) {
            ConcatParams a = f.c > 0 ? ConcatParams{p, f.v, f.c, f.r} : ConcatParams::with_pairs(p, f.v, f.r);
            std::cout << num(p) << ',' << num(a.v) << ',' << num(a.c) << ',' << a.r << ','
                      << num(concat_success_product(a)) << ',' << num(concat_success_closed_form(a)) << ','
                      << num(concat_fidelity_lower_bound(p, a.v)) << '\n';
        }
        return 0;
    }
    if (f.formula == "storage") {
        std::cout << kStorageHeader << '\n';
        for (double p : f.ps) {
            std::cout << storage_row(f.rows, f.cols, f.steps, p) << '\n';
        }
        return 0;
    }
    if (f.formula == "hofmann") {
        if (f.simulate) {
            // The X-sector run gives the conjugate-basis fidelity, the Z-sector
            // run (the transposed problem) the computational-basis one.
            std::cout << "N,M,p,k,n,fx,fz,bound\n";
            const int workers = f.workers > 0 ? f.workers : default_workers();
            for (double p : f.ps) {
                ExperimentConfig cfg;
                cfg.rows = f.rows;
                cfg.cols = f.cols;
                cfg.p = p;
                cfg.steps = f.steps;
                cfg.trials = f.runs;
                cfg.seed = f.seed;
                cfg.sector = Sector::X;
                double fx = estimate_success(cfg, workers).p_hat();
                cfg.sector = Sector::Z;
                double fz = estimate_success(cfg, workers).p_hat();
                std::cout << f.rows << ',' << f.cols << ',' << num(p) << ',' << f.steps << ',' << num(f.runs) << ','
                          << num(fx) << ',' << num(fz) << ',' << num(hofmann_bound(fx, fz)) << '\n';
            }
            return 0;
        }
        if (f.fx.size() != f.fz.size() || f.fx.empty()) {
            throw UsageError("hofmann needs --fx and --fz lists of equal length, or --simulate");
        }
        std::cout << "fx,fz,bound\n";
        for (std::size_t k = 0; k < f.fx.size(); k++) {
            std::cout << num(f.fx[k]) << ',' << num(f.fz[k]) << ',' << num(hofmann_bound(f.fx[k], f.fz[k])) << '\n';
        }
        return 0;
    }
    throw UsageError("formula must be concat, storage or hofmann");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Planar-code quantum memory simulator"};
    app.require_subcommand(1);

    SimulateFlags sim;
    auto *s = app.add_subcommand("simulate", "Storage experiments, one CSV row per p");
    s->add_option("--rows", sim.rows, "Lattice rows N")->capture_default_str();
    s->add_option("--cols", sim.cols, "Lattice columns M")->capture_default_str();
    s->add_option("--p", sim.ps, "Error probability, or a comma-separated list")->delimiter(',');
    s->add_option("--steps", sim.steps, "Storage steps k")->capture_default_str();
    s->add_option("--runs", sim.runs, "Trials per point n")->capture_default_str();
    s->add_option("--seed", sim.seed, "Master seed")->capture_default_str();
    s->add_option("--decoder", sim.decoder, "line or multiline")->capture_default_str();
    s->add_option("--mode", sim.mode, "encode or no-encode")->capture_default_str();
    s->add_option("--syndrome-noise", sim.syndrome_noise, "on or off")->capture_default_str();
    s->add_option("--sector", sim.sector, "x (stars) or z (plaquettes)")->capture_default_str();
    s->add_option("--workers", sim.workers, "Worker threads (default: PLANAR_WORKERS or all cores)");
    s->add_option("--recipe", sim.recipe, "Built-in figure recipe (fig6..fig10 or its name)");
    s->add_option("--config", sim.config, "JSON experiment description");
    s->add_option("--out-dir", sim.out_dir, "Write one CSV per curve into this directory");
    s->add_option("--dump-matching", sim.dump_matching, "Write matching instances as JSON lines");
    s->add_option("--dump-limit", sim.dump_limit, "Trials dumped per point")->capture_default_str();
    s->add_flag("--list-recipes", sim.list_recipes, "List built-in recipes");

    VerifyFlags ver;
    auto *v = app.add_subcommand("verify", "Check the encode, grow, shrink and decode protocols exactly");
    v->add_option("--max-size", ver.max_size, "Largest lattice side")->capture_default_str();
    v->add_option("--seeds", ver.seeds, "Random seeds per lattice and input")->capture_default_str();
    v->add_option("--seed", ver.seed, "Master seed")->capture_default_str();
    v->add_flag("--inject-fault", ver.inject_fault)->group("");

    BoundsFlags bnd;
    auto *b = app.add_subcommand("bounds", "Evaluate analytic bounds as CSV");
    b->add_option("--formula", bnd.formula, "concat, storage or hofmann")->required();
    b->add_option("--p", bnd.ps, "Error probability, or a comma-separated list")->delimiter(',');
    b->add_option("--v", bnd.v, "Encoding circuit volume")->capture_default_str();
    b->add_option("--c", bnd.c, "Location pairs (default v(v-1)/2)");
    b->add_option("--r", bnd.r, "Concatenation level")->capture_default_str();
    b->add_option("--rows", bnd.rows, "Lattice rows")->capture_default_str();
    b->add_option("--cols", bnd.cols, "Lattice columns")->capture_default_str();
    b->add_option("--steps", bnd.steps, "Storage steps")->capture_default_str();
    b->add_option("--fx", bnd.fx, "Conjugate-basis fidelities")->delimiter(',');
    b->add_option("--fz", bnd.fz, "Computational-basis fidelities")->delimiter(',');
    b->add_flag("--chain-check", bnd.chain_check, "Check the concatenation inequality chain numerically");
    b->add_option("--points", bnd.points, "Random points for the chain check")->capture_default_str();
    b->add_option("--seed", bnd.seed, "Seed for the chain check or simulation")->capture_default_str();
    b->add_flag("--simulate", bnd.simulate, "Hofmann bound from two simulated sectors");
    b->add_option("--runs", bnd.runs, "Trials per sector with --simulate")->capture_default_str();
    b->add_option("--workers", bnd.workers, "Worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*s) return cmd_simulate(sim, *s);
        if (*v) return cmd_verify(ver);
        if (*b) return cmd_bounds(bnd);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const json::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}
