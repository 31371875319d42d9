// Copyright 2026 The qrmagic Authors
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

// qrmagic: build quantum QR codes, compute weight enumerators, and evaluate
// T / Strange state distillation.
//
//   qrmagic build --p 23 --d 2
//   qrmagic weights --p 17 --d 3 --method brute --format csv
//   qrmagic threshold --p 5 --d 2 --state T
//   qrmagic curve --p 11 --d 3 --state Strange --samples 200
//   qrmagic verify --suite tables

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qrmagic/qrmagic.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalid = 2;

struct RunConfig {
    int64_t p = 0;
    unsigned d = 2;
    std::string state;
    std::string method = "auto";
    size_t samples = 200;
    std::string out;
    std::string format;  // empty selects the subcommand default
    unsigned workers = 1;
    std::string suite;
};

void emit(const RunConfig &cfg, const std::string &text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + cfg.out);
    f << text;
}

qrmagic::StateKind state_for(const RunConfig &cfg) {
    using qrmagic::StateKind;
    StateKind k = cfg.state.empty() ? (cfg.d == 2 ? StateKind::T : StateKind::Strange) : qrmagic::parse_state(cfg.state);
    if ((k == StateKind::T) != (cfg.d == 2)) {
        throw std::invalid_argument(std::string(qrmagic::state_name(k)) + " states need d=" + (k == StateKind::T ? "2" : "3"));
    }
    return k;
}

int cmd_build(const RunConfig &cfg) {
    using namespace qrmagic;
    QuantumQRCode code = build_quantum_qr(cfg.p, cfg.d);
    code.css = is_css(code).css;
    CodeMetadata meta;
    if (log2_size(code.classical) <= std::log2(kAutoBruteLimit) + 1e-9) {
        meta.classical_distance = min_distance_bruteforce(code.classical, cfg.workers);
        meta.distance_method = "brute";
    }
    emit(cfg, quantum_code_json(code, meta).dump(2) + "\n");
    return kExitOk;
}

int cmd_weights(const RunConfig &cfg) {
    using namespace qrmagic;
    SourcedEnumerator e = stabilizer_enumerator(cfg.p, cfg.d, parse_method(cfg.method), cfg.workers);
    if (cfg.format == "csv") {
        emit(cfg, enumerator_csv(e.w));
    } else {
        emit(cfg, sourced_enumerator_json(e, cfg.p, cfg.d).dump(2) + "\n");
    }
    return kExitOk;
}

int cmd_threshold(const RunConfig &cfg) {
    using namespace qrmagic;
    StateKind k = state_for(cfg);
    SourcedEnumerator e = stabilizer_enumerator(cfg.p, cfg.d, parse_method(cfg.method), cfg.workers);
    int lambda = 0;
    ThresholdResult r;
    if (k == StateKind::T) {
        lambda = choose_lambda(e.w);
        r = t_threshold(e.w, lambda);
    } else {
        r = strange_threshold(e.w);
    }
    emit(cfg, threshold_json(r, lambda, e.source).dump(2) + "\n");
    return kExitOk;
}

int cmd_curve(const RunConfig &cfg) {
    using namespace qrmagic;
    StateKind k = state_for(cfg);
    SourcedEnumerator e = stabilizer_enumerator(cfg.p, cfg.d, parse_method(cfg.method), cfg.workers);
    DistillationCurve c = emit_curve(k, e.w, cfg.samples);
    if (cfg.format == "json") {
        emit(cfg, curve_json(c, e.source).dump(2) + "\n");
    } else {
        emit(cfg, curve_csv(c));
    }
    return kExitOk;
}

int cmd_verify(const RunConfig &cfg) {
    using namespace qrmagic;
    VerifyReport rep;
    if (cfg.suite == "tables") {
        rep = verify_tables(cfg.workers);
    } else if (cfg.suite == "oracle") {
        rep = verify_oracle();
    } else {
        rep = verify_properties();
    }
    emit(cfg, rep.to_json().dump(2) + "\n");
    return rep.passed() ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum quadratic residue codes and magic state distillation"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_code = [&](CLI::App *sub) {
        sub->add_option("--p", cfg.p, "code length (odd prime)")->required();
        sub->add_option("--d", cfg.d, "qudit dimension")->check(CLI::IsMember({2u, 3u}))->default_val(2);
        sub->add_option("--out", cfg.out, "output file (default stdout)");
        sub->add_option("--workers", cfg.workers, "enumeration threads")->check(CLI::Range(1u, 1024u))->default_val(1);
    };
    auto add_method = [&](CLI::App *sub) {
        sub->add_option("--method", cfg.method, "enumerator source")
            ->check(CLI::IsMember({"auto", "brute", "invariant", "fixture"}))
            ->default_val("auto");
    };
    auto add_state = [&](CLI::App *sub) {
        sub->add_option("--state", cfg.state, "magic state")->check(CLI::IsMember({"T", "Strange"}));
    };

    CLI::App *build = app.add_subcommand("build", "construct a code and print its descriptor");
    add_code(build);
    build->add_option("--format", cfg.format, "output format [json]")->check(CLI::IsMember({"json"}));

    CLI::App *weights = app.add_subcommand("weights", "stabilizer weight enumerator");
    add_code(weights);
    add_method(weights);
    weights->add_option("--format", cfg.format, "output format [json]")->check(CLI::IsMember({"json", "csv"}));

    CLI::App *threshold = app.add_subcommand("threshold", "distillation threshold");
    add_code(threshold);
    add_method(threshold);
    add_state(threshold);
    threshold->add_option("--format", cfg.format, "output format [json]")->check(CLI::IsMember({"json"}));

    CLI::App *curve = app.add_subcommand("curve", "sampled eps'(eps) and success probability");
    add_code(curve);
    add_method(curve);
    add_state(curve);
    curve->add_option("--samples", cfg.samples, "number of samples")->check(CLI::Range((size_t)1, (size_t)10000000))->default_val(200);
    curve->add_option("--format", cfg.format, "output format [csv]")->check(CLI::IsMember({"json", "csv"}));

    CLI::App *verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", cfg.suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"tables", "oracle", "properties"}));
    verify->add_option("--out", cfg.out, "output file (default stdout)");
    verify->add_option("--workers", cfg.workers, "enumeration threads")->check(CLI::Range(1u, 1024u))->default_val(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (*build) return cmd_build(cfg);
        if (*weights) return cmd_weights(cfg);
        if (*threshold) return cmd_threshold(cfg);
        if (*curve) return cmd_curve(cfg);
        return cmd_verify(cfg);
    } catch (const qrmagic::InfeasibleError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
