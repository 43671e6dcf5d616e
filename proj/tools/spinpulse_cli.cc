// Copyright 2026 The SpinPulse Authors
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

// Command-line front end: transpile, schedule, integrate and characterise circuits.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "spinpulse/channels.h"
#include "spinpulse/circuit.h"
#include "spinpulse/config.h"
#include "spinpulse/error.h"
#include "spinpulse/hardware.h"
#include "spinpulse/integrator.h"
#include "spinpulse/mps.h"
#include "spinpulse/noise.h"
#include "spinpulse/pulse.h"
#include "spinpulse/schedule_io.h"
#include "spinpulse/state_sim.h"
#include "spinpulse/transpiler.h"

using namespace spinpulse;
using nlohmann::json;

namespace {

constexpr std::string_view kEnvPrefix = "SPINPULSE_";

// Bad input files and parameters are usage errors (exit 2); anything else is a runtime error (exit 1).
class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string circuit_path;
    std::string schedule_path;
    std::string specs_path;
    std::string noise_config;
    std::string noise_type;
    std::optional<double> t2s;
    std::optional<double> tjs;
    std::optional<int> segment;
    std::optional<std::string> dd_mode;
    std::uint64_t seed = 0;
    int jobs = 1;
    int realizations = 1000;
    std::string out;
    std::string format = "json";
    bool no_qubit_noise = false;
    bool no_exchange_noise = false;
    bool no_drive_noise = false;

    // Subcommand specific.
    std::string gate = "idle";
    int idle_duration = 100;
    double theta = std::numbers::pi / 2;
    int tmax = 300;
    int windows = 2000;
    int shots = 1000;
    int n_min = 10;
    int n_max = 100;
    int n_step = 10;
    std::string reference = "ideal";
};

bool noise_requested(const Options &o) { return !o.noise_type.empty() || !o.noise_config.empty(); }

HardwareSpecs load_specs(const Options &o, int min_qubits) {
    KeyValueConfig cfg;
    if (!o.specs_path.empty()) {
        cfg = KeyValueConfig::load(o.specs_path);
    }
    cfg.apply_env_overrides(kEnvPrefix,
                            {"num_qubits", "b_max", "delta_max", "j_max", "shape", "ramp_duration", "dd_mode"});
    if (o.dd_mode) {
        cfg.set("dd_mode", *o.dd_mode);
    }
    HardwareSpecs specs = specs_from_config(cfg);
    specs.num_qubits = std::max(specs.num_qubits, min_qubits);
    specs.validate();
    return specs;
}

int next_power_of_two(long n) {
    int p = 1;
    while (p < n) {
        p <<= 1;
    }
    return p;
}

// Noise parameters for `windows` consecutive windows of `window` steps each.
NoiseParams load_noise(const Options &o, long window, long windows) {
    KeyValueConfig cfg;
    if (!o.noise_config.empty()) {
        cfg = KeyValueConfig::load(o.noise_config);
    }
    cfg.apply_env_overrides(kEnvPrefix, {"noise_type", "t2s", "tjs", "duration", "segment_duration", "seed"});
    if (!o.noise_type.empty()) {
        cfg.set("noise_type", o.noise_type);
    }
    if (o.t2s) {
        cfg.set("t2s", format_double(*o.t2s));
    }
    if (o.tjs) {
        cfg.set("tjs", format_double(*o.tjs));
    }
    if (o.segment) {
        cfg.set("segment_duration", std::to_string(*o.segment));
    }
    if (!cfg.contains("seed")) {
        cfg.set("seed", std::to_string(o.seed));
    }
    const NoiseType type = parse_noise_type(cfg.get("noise_type").value_or("quasistatic"));
    const long needed = std::max(1L, window * windows);
    if (!cfg.contains("segment_duration")) {
        // Quasi-static segments aligned with circuit windows; pink cutoff at the whole trace.
        long seg = type == NoiseType::Quasistatic ? std::max(1L, window) : needed;
        if (type == NoiseType::Pink) {
            seg = next_power_of_two(std::max(needed, 16 * std::max(1L, window)));
        }
        cfg.set("segment_duration", std::to_string(seg));
    }
    long duration = std::max<long>(needed, cfg.require_int("segment_duration"));
    if (type == NoiseType::Pink) {
        duration = next_power_of_two(duration);
    }
    if (auto d = cfg.get_int("duration")) {
        duration = std::max<long long>(duration, *d);
    }
    cfg.set("duration", std::to_string(duration));
    return noise_params_from_config(cfg);
}

NoiseGating gating_of(const Options &o) {
    return NoiseGating{!o.no_qubit_noise, !o.no_exchange_noise, !o.no_drive_noise};
}

Circuit load_circuit(const Options &o) {
    if (o.circuit_path.empty()) {
        throw UsageError("a circuit file is required (-c)");
    }
    return parse_circuit(read_text_file(o.circuit_path));
}

// Scheduled circuit from --schedule or from -c through the transpiler.
PulseCircuit load_pulse_circuit(const Options &o) {
    if (!o.schedule_path.empty()) {
        json doc;
        try {
            doc = json::parse(read_text_file(o.schedule_path));
        } catch (const json::exception &e) {
            throw UsageError(std::string("cannot parse schedule document: ") + e.what());
        }
        return import_schedule(doc);
    }
    Circuit c = load_circuit(o);
    HardwareSpecs specs = load_specs(o, c.num_qubits);
    return schedule(gate_transpile(c, specs), specs);
}

void emit(const Options &o, const std::string &text) {
    if (o.out.empty() || o.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
        throw Error(ErrorCode::Io, "cannot write " + o.out);
    }
    f << text;
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

json fidelity_json(const FidelityReport &r) {
    return json{{"process_fidelity", r.process_fidelity},
                {"average_fidelity", r.average_fidelity},
                {"n_samples", r.n_samples},
                {"std_error", r.std_error},
                {"process_std_error", r.process_std_error}};
}

int cmd_transpile(const Options &o) {
    Circuit c = load_circuit(o);
    HardwareSpecs specs = load_specs(o, c.num_qubits);
    IsaCircuit isa = gate_transpile(c, specs);
    std::ostringstream s;
    auto layout = [&](const char *name, const std::vector<int> &l) {
        s << "# " << name;
        for (int q : l) {
            s << ' ' << q;
        }
        s << '\n';
    };
    layout("initial_layout", isa.initial_layout);
    layout("final_layout", isa.final_layout);
    s << serialize_circuit(isa.circuit);
    emit(o, s.str());
    return 0;
}

int cmd_schedule(const Options &o) {
    PulseCircuit pc = load_pulse_circuit(o);
    if (noise_requested(o)) {
        NoiseParams np = load_noise(o, pc.duration(), 1);
        ExperimentalEnvironment env = ExperimentalEnvironment::generate(np, pc.specs);
        pc = with_time_traces(pc, env, 0);
    }
    emit(o, o.format == "csv" ? schedule_csv(pc) : dump(export_schedule(pc)));
    return 0;
}

int cmd_integrate(const Options &o) {
    PulseCircuit pc = load_pulse_circuit(o);
    if (noise_requested(o)) {
        NoiseParams np = load_noise(o, pc.duration(), 1);
        ExperimentalEnvironment env = ExperimentalEnvironment::generate(np, pc.specs);
        pc = with_time_traces(pc, env, 0);
    }
    emit(o, dump(applied_to_json(to_circuit(pc, gating_of(o)))));
    return 0;
}

int cmd_fidelity(const Options &o) {
    Circuit c = load_circuit(o);
    HardwareSpecs specs = load_specs(o, c.num_qubits);
    IsaCircuit isa = gate_transpile(c, specs);
    PulseCircuit pc = schedule(isa, specs);
    MatX u0 = o.reference == "pulse" ? pulse_unitary(pc)
                                     : MatX(layout_permutation(isa.final_layout) * circuit_unitary(c));
    FidelityReport r;
    if (noise_requested(o)) {
        NoiseParams np = load_noise(o, pc.duration(), o.realizations);
        ExperimentalEnvironment env = ExperimentalEnvironment::generate(np, specs);
        r = mean_fidelity(pc, env, o.realizations, u0, gating_of(o), o.jobs);
    } else {
        r = fidelity_of({pulse_unitary(pc)}, u0);
    }
    emit(o, dump(fidelity_json(r)));
    return 0;
}

int cmd_channel(const Options &o) {
    HardwareSpecs specs;
    PulseCircuit pc;
    if (o.gate == "idle") {
        specs = load_specs(o, 1);
        pc = idle_schedule(1, o.idle_duration, specs);
    } else if (o.gate == "x") {
        specs = load_specs(o, 1);
        Circuit c{1, {make_gate(GateKind::X, {0})}};
        pc = schedule(gate_transpile(c, specs), specs);
    } else if (o.gate == "rzz") {
        specs = load_specs(o, 2);
        Circuit c{2, {make_gate(GateKind::RZZ, {0, 1}, o.theta)}};
        pc = schedule(gate_transpile(c, specs), specs);
    } else {
        throw UsageError("unknown gate '" + o.gate + "' (idle, x, rzz)");
    }
    if (!noise_requested(o)) {
        throw UsageError("channel needs a noise model (-n or --noise-config)");
    }
    NoiseParams np = load_noise(o, pc.duration(), o.realizations);
    ExperimentalEnvironment env = ExperimentalEnvironment::generate(np, pc.specs);
    std::vector<MatX> us = sample_unitaries(pc, env, o.realizations, gating_of(o), o.jobs);
    ChiMatrix chi = chi_of(us);
    const auto labels = pauli_labels(pc.num_qubits);

    if (o.format == "csv") {
        std::string s = "row,col,re,im,re_err,im_err\n";
        for (long i = 0; i < chi.matrix.rows(); ++i) {
            for (long j = 0; j < chi.matrix.cols(); ++j) {
                s += labels[static_cast<size_t>(i)] + "," + labels[static_cast<size_t>(j)] + "," +
                     format_double(chi.matrix(i, j).real()) + "," + format_double(chi.matrix(i, j).imag()) + "," +
                     format_double(chi.std_error(i, j).real()) + "," + format_double(chi.std_error(i, j).imag()) +
                     "\n";
            }
        }
        emit(o, s);
        return 0;
    }
    json entries = json::array();
    for (long i = 0; i < chi.matrix.rows(); ++i) {
        for (long j = 0; j < chi.matrix.cols(); ++j) {
            entries.push_back(json{{"row", labels[static_cast<size_t>(i)]},
                                   {"col", labels[static_cast<size_t>(j)]},
                                   {"re", chi.matrix(i, j).real()},
                                   {"im", chi.matrix(i, j).imag()},
                                   {"re_err", chi.std_error(i, j).real()},
                                   {"im_err", chi.std_error(i, j).imag()}});
        }
    }
    json doc{{"gate", o.gate},
             {"duration", pc.duration()},
             {"n_samples", chi.n_samples},
             {"labels", labels},
             {"chi", entries},
             {"fidelity", fidelity_json(fidelity_of(us, pulse_unitary(pc)))}};
    emit(o, dump(doc));
    return 0;
}

int cmd_ramsey(const Options &o) {
    if (!noise_requested(o)) {
        throw UsageError("ramsey needs a noise model (-n or --noise-config)");
    }
    HardwareSpecs specs = load_specs(o, 1);
    specs.num_qubits = 1;
    NoiseParams np = load_noise(o, o.tmax, o.windows);
    ExperimentalEnvironment env = ExperimentalEnvironment::generate(np, specs);
    RamseyCurve curve = ramsey_contrast(env, o.tmax, o.windows);

    auto analytic_t = [&](double t) {
        switch (np.type) {
            case NoiseType::Quasistatic:
                return analytic::ramsey_quasistatic(t, np.t2s);
            case NoiseType::White:
                return analytic::ramsey_white(t, np.t2s);
            case NoiseType::Pink:
                return analytic::ramsey_pink(t, np.t2s, 1.0 / np.segment_duration);
        }
        return 0.0;
    };
    auto analytic_c = [&](double t) {
        return np.type == NoiseType::White ? analytic::ramsey_white(t, np.t2s)
                                           : analytic::ramsey_quasistatic(t, np.t2s);
    };

    if (o.format == "csv") {
        std::string s = "t,C_measured,C_analytic_t_dependent,C_analytic_constant\n";
        for (size_t k = 0; k < curve.t.size(); ++k) {
            const double t = curve.t[k];
            s += std::to_string(curve.t[k]) + "," + format_double(curve.contrast[k]) + "," +
                 format_double(analytic_t(t)) + "," + format_double(analytic_c(t)) + "\n";
        }
        emit(o, s);
        return 0;
    }
    json rows = json::array();
    for (size_t k = 0; k < curve.t.size(); ++k) {
        const double t = curve.t[k];
        rows.push_back(json{{"t", curve.t[k]},
                            {"C_measured", curve.contrast[k]},
                            {"std_error", curve.std_error[k]},
                            {"C_analytic_t_dependent", analytic_t(t)},
                            {"C_analytic_constant", analytic_c(t)}});
    }
    emit(o, dump(json{{"noise_type", std::string(noise_type_name(np.type))},
                      {"t2s", np.t2s},
                      {"segment_duration", np.segment_duration},
                      {"n_samples", curve.n_samples},
                      {"curve", rows}}));
    return 0;
}

int cmd_sample(const Options &o) {
    Circuit c = load_circuit(o);
    HardwareSpecs specs = load_specs(o, c.num_qubits);
    PulseCircuit pc = schedule(gate_transpile(c, specs), specs);
    NoiseGating gating = gating_of(o);
    std::optional<ExperimentalEnvironment> env;
    if (noise_requested(o)) {
        env = ExperimentalEnvironment::generate(load_noise(o, pc.duration(), o.shots), specs);
    } else {
        // Silent environment: traces of zeros, gating off.
        NoiseParams np;
        np.duration = std::max(1, pc.duration() * o.shots);
        np.segment_duration = np.duration;
        std::vector<std::vector<double>> zeros(static_cast<size_t>(specs.num_qubits),
                                               std::vector<double>(static_cast<size_t>(np.duration), 0.0));
        env.emplace(np, specs, std::move(zeros), std::vector<std::vector<double>>{});
        gating = NoiseGating::all_off();
    }
    Counts counts = run_experiment(pc, *env, o.shots, gating, o.seed, o.jobs);
    if (o.format == "csv") {
        std::string s = "bitstring,count\n";
        for (const auto &[bits, n] : counts) {
            s += bits + "," + std::to_string(n) + "\n";
        }
        emit(o, s);
        return 0;
    }
    json j = json::object();
    for (const auto &[bits, n] : counts) {
        j[bits] = n;
    }
    emit(o, dump(j));
    return 0;
}

int cmd_cluster(const Options &o) {
    if (o.n_min < 2 || o.n_max < o.n_min || o.n_step < 1) {
        throw UsageError("need 2 <= --nmin <= --nmax and --nstep >= 1");
    }
    Options with_noise = o;
    if (!noise_requested(o)) {
        with_noise.noise_type = "pink";
    }
    std::string s = "N,t2s,mean_fidelity,std_error,n_realizations\n";
    json rows = json::array();
    for (int n = o.n_min; n <= o.n_max; n += o.n_step) {
        ClusterConfig cfg;
        cfg.num_qubits = n;
        cfg.specs = load_specs(o, n);
        const PulseCircuit probe = schedule(gate_transpile(cluster_circuit(n), cfg.specs), cfg.specs);
        cfg.noise = load_noise(with_noise, probe.duration(), o.realizations);
        cfg.n_realizations = o.realizations;
        cfg.gating = gating_of(o);
        cfg.jobs = o.jobs;
        ClusterRecord r = cluster_experiment(cfg);
        s += std::to_string(r.num_qubits) + "," + format_double(r.t2s) + "," + format_double(r.mean_fidelity) + "," +
             format_double(r.std_error) + "," + std::to_string(r.n_realizations) + "\n";
        rows.push_back(json{{"N", r.num_qubits},
                            {"t2s", r.t2s},
                            {"mean_fidelity", r.mean_fidelity},
                            {"std_error", r.std_error},
                            {"n_realizations", r.n_realizations}});
    }
    emit(o, o.format == "csv" ? s : dump(rows));
    return 0;
}

void add_common(CLI::App *app, Options &o) {
    app->add_option("-s,--specs", o.specs_path, "Hardware config file (key = value)")->check(CLI::ExistingFile);
    app->add_option("--dd", o.dd_mode, "Dynamical decoupling: none, spin_echo, full_drive");
    app->add_option("--seed", o.seed, "Master seed for noise and sampling");
    app->add_option("-j,--jobs", o.jobs, "Worker threads for realisations (0 = all cores)")->check(CLI::NonNegativeNumber);
    app->add_option("-o,--out", o.out, "Output file (default stdout)");
    app->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

void add_noise(CLI::App *app, Options &o) {
    app->add_option("-n,--noise", o.noise_type, "Noise type: quasistatic, white, pink")
        ->check(CLI::IsMember({"quasistatic", "white", "pink"}));
    app->add_option("--noise-config", o.noise_config, "Noise config file (key = value)")->check(CLI::ExistingFile);
    app->add_option("--t2s", o.t2s, "Qubit coherence time T2* in steps")->check(CLI::PositiveNumber);
    app->add_option("--tjs", o.tjs, "Exchange coherence time in steps (enables exchange noise)")
        ->check(CLI::PositiveNumber);
    app->add_option("--segment", o.segment, "Segment duration (quasi-static hold time, pink 1/f_min)")
        ->check(CLI::PositiveNumber);
    app->add_flag("--no-qubit-noise", o.no_qubit_noise, "Ignore qubit-frequency noise");
    app->add_flag("--no-exchange-noise", o.no_exchange_noise, "Ignore exchange noise");
    app->add_flag("--no-drive-noise", o.no_drive_noise, "Suppress qubit noise while a qubit is driven");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Pulse-level simulator for spin-qubit circuits"};
    app.require_subcommand(1);
    Options o;

    auto *transpile = app.add_subcommand("transpile", "Rewrite a circuit into native gates");
    transpile->add_option("-c,--circuit", o.circuit_path, "Circuit file")->required()->check(CLI::ExistingFile);
    add_common(transpile, o);

    auto *sched = app.add_subcommand("schedule", "Lower a circuit to a pulse schedule (JSON or CSV)");
    sched->add_option("-c,--circuit", o.circuit_path, "Circuit file")->check(CLI::ExistingFile);
    sched->add_option("--schedule", o.schedule_path, "Schedule document to re-export")->check(CLI::ExistingFile);
    add_common(sched, o);
    add_noise(sched, o);

    auto *integ = app.add_subcommand("integrate", "Integrate a schedule into per-gate unitaries (JSON)");
    integ->add_option("-c,--circuit", o.circuit_path, "Circuit file")->check(CLI::ExistingFile);
    integ->add_option("--schedule", o.schedule_path, "Schedule document")->check(CLI::ExistingFile);
    add_common(integ, o);
    add_noise(integ, o);

    auto *fid = app.add_subcommand("fidelity", "Mean gate fidelity over noise realisations");
    fid->add_option("-c,--circuit", o.circuit_path, "Circuit file")->required()->check(CLI::ExistingFile);
    fid->add_option("-N,--realizations", o.realizations, "Noise realisations")->check(CLI::PositiveNumber);
    fid->add_option("--reference", o.reference, "Reference unitary: ideal circuit or noiseless pulses")
        ->check(CLI::IsMember({"ideal", "pulse"}));
    add_common(fid, o);
    add_noise(fid, o);

    auto *chan = app.add_subcommand("channel", "Chi matrix of a noisy idle, X or RZZ gate");
    chan->add_option("--gate", o.gate, "idle, x or rzz")->check(CLI::IsMember({"idle", "x", "rzz"}));
    chan->add_option("--duration", o.idle_duration, "Idle duration in steps")->check(CLI::PositiveNumber);
    chan->add_option("--theta", o.theta, "RZZ angle in radians");
    chan->add_option("-N,--realizations", o.realizations, "Noise realisations")->check(CLI::PositiveNumber);
    add_common(chan, o);
    add_noise(chan, o);

    auto *ramsey = app.add_subcommand("ramsey", "Ramsey contrast curve with analytic references");
    ramsey->add_option("--tmax", o.tmax, "Largest free-evolution time")->check(CLI::PositiveNumber);
    ramsey->add_option("--windows", o.windows, "Noise windows per curve")->check(CLI::PositiveNumber);
    add_common(ramsey, o);
    add_noise(ramsey, o);

    auto *sample = app.add_subcommand("sample", "Measure bitstrings from noisy realisations");
    sample->add_option("-c,--circuit", o.circuit_path, "Circuit file")->required()->check(CLI::ExistingFile);
    sample->add_option("--shots", o.shots, "Number of shots")->check(CLI::PositiveNumber);
    add_common(sample, o);
    add_noise(sample, o);

    auto *cluster = app.add_subcommand("cluster", "Cluster-state fidelity versus chain length");
    cluster->add_option("--nmin", o.n_min, "Smallest chain");
    cluster->add_option("--nmax", o.n_max, "Largest chain");
    cluster->add_option("--nstep", o.n_step, "Chain length step");
    cluster->add_option("-N,--realizations", o.realizations, "Noise realisations per chain length")
        ->check(CLI::PositiveNumber);
    add_common(cluster, o);
    add_noise(cluster, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*transpile) return cmd_transpile(o);
        if (*sched || *integ) {
            if (o.circuit_path.empty() == o.schedule_path.empty()) {
                throw UsageError("give exactly one of -c or --schedule");
            }
            return *sched ? cmd_schedule(o) : cmd_integrate(o);
        }
        if (*fid) return cmd_fidelity(o);
        if (*chan) return cmd_channel(o);
        if (*ramsey) return cmd_ramsey(o);
        if (*sample) return cmd_sample(o);
        if (*cluster) return cmd_cluster(o);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case ErrorCode::UnknownGate:
            case ErrorCode::ArityMismatch:
            case ErrorCode::QubitOutOfRange:
            case ErrorCode::MalformedHeader:
            case ErrorCode::InvalidParams:
            case ErrorCode::Io:
                return 2;
            default:
                return 1;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
