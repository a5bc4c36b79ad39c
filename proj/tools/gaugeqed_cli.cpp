// gaugeqed: reproduces the gauge-invariance datasets as CSV.
//
// Subcommands map one-to-one onto the figure-level datasets: spectrum,
// photodetect, readout, vacuum, entropy, circuit, switch, selftest. All
// numeric output is deterministic (12 significant digits, LF endings, rows
// in grid order regardless of worker scheduling).

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "gaugeqed/csv.hpp"
#include "gaugeqed/observables.hpp"
#include "gaugeqed/readout.hpp"
#include "gaugeqed/selftest.hpp"
#include "gaugeqed/switching.hpp"

namespace {

using namespace gaugeqed;

constexpr int kExitConfig = 2;
constexpr int kExitOutput = 3;
constexpr int kExitConvergence = 4;
constexpr int kExitNumeric = 5;

struct EtaGrid {
    std::vector<double> values;
};

EtaGrid parse_eta(const std::string& text) {
    EtaGrid grid;
    const auto c1 = text.find(':');
    if (c1 == std::string::npos) {
        grid.values.push_back(std::stod(text));
        return grid;
    }
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos) throw ConfigError("--eta expects <value> or <start:step:end>");
    const double start = std::stod(text.substr(0, c1));
    const double step = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    const double end = std::stod(text.substr(c2 + 1));
    if (step <= 0.0) throw ConfigError("--eta step must be > 0");
    if (end < start) throw ConfigError("--eta end must be >= start");
    for (double e = start; e <= end + 1e-12; e += step) grid.values.push_back(e);
    if (grid.values.empty()) throw ConfigError("--eta grid is empty");
    return grid;
}

int worker_count() {
    if (const char* env = std::getenv("GAUGEQED_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 2;
}

// Index-ordered worker pool: results land in grid order no matter which
// thread finishes first.
template <typename Fn>
void parallel_for(int n, Fn&& fn) {
    const int workers = std::min(worker_count(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

struct Output {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    explicit Output(const std::string& path) {
        if (path.empty()) return;
        file.open(path, std::ios::binary);  // binary: LF endings everywhere
        if (!file) throw Error("cannot open output path: " + path);
        stream = &file;
    }
};

struct CommonOpts {
    std::string eta_text = "0:0.05:2";
    double omega0 = 1.0;
    double theta = 0.0;
    std::string gauge = "coulomb";
    int cutoff = 0;
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& o, const std::string& default_eta) {
    o.eta_text = default_eta;
    cmd->add_option("--eta", o.eta_text, "coupling: value or start:step:end")
        ->capture_default_str();
    cmd->add_option("--omega0", o.omega0, "qubit frequency in units of omega_c")
        ->capture_default_str();
    cmd->add_option("--cutoff", o.cutoff, "Fock cutoff override (0 = heuristic)")
        ->capture_default_str();
    cmd->add_option("--out", o.out_path, "output CSV path (default stdout)");
}

LabelingOptions sweep_options(const CommonOpts& o, double eta_max) {
    LabelingOptions lo;
    lo.cutoff = o.cutoff > 0 ? o.cutoff : default_cutoff(eta_max);
    lo.theta = o.theta;
    return lo;
}

// ---------------------------------------------------------------- spectrum

int run_spectrum(const CommonOpts& o) {
    const EtaGrid grid = parse_eta(o.eta_text);
    const RabiParams base{1.0, o.omega0, 0.0};
    const bool both = o.gauge == "both";
    const Gauge first = both ? Gauge::Coulomb
                             : (o.gauge == "dipole" ? Gauge::Dipole : Gauge::Coulomb);

    const LabelingOptions lo = sweep_options(o, grid.values.back());
    const std::vector<Spectrum> sweep = labeled_sweep(first, base, grid.values, lo);
    std::vector<Spectrum> other;
    if (both) other = labeled_sweep(Gauge::Dipole, base, grid.values, lo);

    Output out(o.out_path);
    CsvWriter csv(*out.stream);
    std::vector<std::string> cols{"eta"};
    auto add_gauge_cols = [&](const std::string& tag) {
        for (int j = 1; j <= 8; ++j) cols.push_back("dE" + std::to_string(j) + tag);
    };
    add_gauge_cols(both ? "_coulomb" : "");
    if (both) add_gauge_cols("_dipole");
    for (int j = 0; j < 8; ++j) cols.push_back("label" + std::to_string(j));
    csv.header(cols);

    for (size_t i = 0; i < sweep.size(); ++i) {
        std::vector<std::string> cells{format_sig12(sweep[i].eta)};
        for (int j = 1; j <= 8; ++j) cells.push_back(format_sig12(sweep[i].transition_energy(j)));
        if (both) {
            for (int j = 1; j <= 8; ++j) {
                cells.push_back(format_sig12(other[i].transition_energy(j)));
            }
        }
        for (int j = 0; j < 8; ++j) cells.push_back(sweep[i].labels[j].str());
        csv.row(cells);
    }
    return 0;
}

// ------------------------------------------------------------- photodetect

int run_photodetect(const CommonOpts& o) {
    const EtaGrid grid = parse_eta(o.eta_text);
    const RabiParams base{1.0, o.omega0, 0.0};
    const LabelingOptions lo = sweep_options(o, grid.values.back());
    const std::vector<Spectrum> cs = labeled_sweep(Gauge::Coulomb, base, grid.values, lo);
    const std::vector<Spectrum> ds = labeled_sweep(Gauge::Dipole, base, grid.values, lo);

    struct Row {
        double w_p, w_m, wp_p, wp_m;
    };
    std::vector<Row> rows(grid.values.size());
    parallel_for(static_cast<int>(grid.values.size()), [&](int i) {
        const Spectrum& c = cs[i];
        const Spectrum& d = ds[i];
        const auto jm = find_label(c, {StateLabel::Kind::Minus, 1});
        const auto jp = find_label(c, {StateLabel::Kind::Plus, 1});
        if (jm && jp) {
            rows[i] = {photodetection_W(c, *jp, 0), photodetection_W(c, *jm, 0),
                       photodetection_Wprime(d, *jp, 0), photodetection_Wprime(d, *jm, 0)};
            return;
        }
        // degenerate doublet (eta = 0 at resonance): report the manifold
        // total split equally, the projector-level quantity and the
        // eta -> 0+ limit
        const double w_sum = photodetection_W(c, 1, 0) + photodetection_W(c, 2, 0);
        const double wp_sum = photodetection_Wprime(d, 1, 0) + photodetection_Wprime(d, 2, 0);
        rows[i] = {0.5 * w_sum, 0.5 * w_sum, 0.5 * wp_sum, 0.5 * wp_sum};
    });

    Output out(o.out_path);
    CsvWriter csv(*out.stream);
    csv.header({"eta", "W_1p", "W_1m", "Wp_1p", "Wp_1m"});
    for (size_t i = 0; i < rows.size(); ++i) {
        csv.numeric_row({grid.values[i], rows[i].w_p, rows[i].w_m, rows[i].wp_p, rows[i].wp_m});
    }
    return 0;
}

// ----------------------------------------------------------------- readout

int run_readout(const CommonOpts& o, bool with_chi, double omega_b, double g_b) {
    const EtaGrid grid = parse_eta(o.eta_text);
    struct Row {
        double pc0, pd0, pc1, pd1, chi_ratio = 0.0, sigma_z = 0.0;
    };
    std::vector<Row> rows(grid.values.size());
    parallel_for(static_cast<int>(grid.values.size()), [&](int i) {
        const RabiParams p{1.0, o.omega0, grid.values[i]};
        ConvergenceOptions copts{.n_levels = 2};
        if (o.cutoff > 0) copts.initial_cutoff = o.cutoff;
        const Spectrum c = coulomb_spectrum(p, copts);
        Row& r = rows[i];
        r.pc0 = qubit_population(c, 0, Measurement::CoulombBare);
        r.pd0 = qubit_population(c, 0, Measurement::DipoleBare);
        r.pc1 = qubit_population(c, 1, Measurement::CoulombBare);
        r.pd1 = qubit_population(c, 1, Measurement::DipoleBare);
        if (with_chi) {
            const ReadoutParams ro{omega_b, g_b, o.omega0};
            try {
                const DispersiveShift shift = chi_numeric(p, ro, {.state_index = 0});
                r.chi_ratio = shift.ratio;
                r.sigma_z = shift.sigma_z_dipole;
            } catch (const ExtractionError& e) {
                // dispersive picture broke down at this grid point (e.g.
                // degenerate bare levels at eta = 0 on resonance)
                r.chi_ratio = std::nan("");
                r.sigma_z = std::nan("");
                std::cerr << "note: eta = " << grid.values[i] << ": " << e.what() << "\n";
            }
        }
    });

    Output out(o.out_path);
    CsvWriter csv(*out.stream);
    std::vector<std::string> cols{"eta", "pop_gs_coulomb", "pop_gs_dipole",
                                  "pop_exc_coulomb", "pop_exc_dipole"};
    if (with_chi) {
        cols.push_back("shift_over_chi_gs");
        cols.push_back("sigma_z_dipole_gs");
    }
    csv.header(cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        std::vector<double> vals{grid.values[i], rows[i].pc0, rows[i].pd0, rows[i].pc1,
                                 rows[i].pd1};
        if (with_chi) {
            vals.push_back(rows[i].chi_ratio);
            vals.push_back(rows[i].sigma_z);
        }
        csv.numeric_row(vals);
    }
    return 0;
}

// ----------------------------------------------------- vacuum and entropy

int run_ground_pair(const CommonOpts& o, bool photon) {
    const EtaGrid grid = parse_eta(o.eta_text);
    struct Row {
        double coulomb, dipole_wrong;
    };
    std::vector<Row> rows(grid.values.size());
    parallel_for(static_cast<int>(grid.values.size()), [&](int i) {
        const RabiParams p{1.0, o.omega0, grid.values[i]};
        ConvergenceOptions copts{.n_levels = 2};
        if (o.cutoff > 0) copts.initial_cutoff = o.cutoff;
        const Spectrum c = coulomb_spectrum(p, copts);
        const Spectrum d = dipole_spectrum(p, copts);
        const std::string name = photon ? "photon_number" : "entropy";
        auto value = [&](const std::vector<ObservableReport>& reps, Gauge g) {
            for (const ObservableReport& rep : reps) {
                if (rep.name == name && rep.gauge == g) return rep.value;
            }
            throw Error("missing report " + name);
        };
        rows[i] = {value(ground_state_reports(c), Gauge::Coulomb),
                   value(ground_state_reports(d), Gauge::Dipole)};
    });

    Output out(o.out_path);
    CsvWriter csv(*out.stream);
    csv.header({"eta", photon ? "nphot_coulomb" : "entropy_coulomb",
                photon ? "nphot_dipole_wrong" : "entropy_dipole_wrong"});
    for (size_t i = 0; i < rows.size(); ++i) {
        csv.numeric_row({grid.values[i], rows[i].coulomb, rows[i].dipole_wrong});
    }
    return 0;
}

// ----------------------------------------------------------------- circuit

int run_circuit(const CommonOpts& o) {
    if (o.theta != 0.0) {
        throw ConfigError("circuit: voltage rates are defined at the symmetry point theta = 0");
    }
    const EtaGrid grid = parse_eta(o.eta_text);
    const RabiParams base{1.0, o.omega0, 0.0};
    const LabelingOptions lo = sweep_options(o, grid.values.back());
    const std::vector<Spectrum> sweep = labeled_sweep(Gauge::Flux, base, grid.values, lo);

    struct Row {
        double vl_p, vl_m, vc_p, vc_m, n_gs, pexc_gs, s_gs;
    };
    std::vector<Row> rows(grid.values.size());
    parallel_for(static_cast<int>(grid.values.size()), [&](int i) {
        const Spectrum& fg = sweep[i];
        Row& r = rows[i];
        const auto jm = find_label(fg, {StateLabel::Kind::Minus, 1});
        const auto jp = find_label(fg, {StateLabel::Kind::Plus, 1});
        if (jm && jp) {
            const VoltageRates vm = circuit_voltage_rates(fg, *jm);
            const VoltageRates vp = circuit_voltage_rates(fg, *jp);
            r.vl_p = vp.v_l;
            r.vl_m = vm.v_l;
            r.vc_p = vp.v_c;
            r.vc_m = vm.v_c;
        } else {
            const VoltageRates v1 = circuit_voltage_rates(fg, 1);
            const VoltageRates v2 = circuit_voltage_rates(fg, 2);
            r.vl_p = r.vl_m = 0.5 * (v1.v_l + v2.v_l);
            r.vc_p = r.vc_m = 0.5 * (v1.v_c + v2.v_c);
        }
        r.n_gs = mean_photon_number(fg, 0, Measurement::FluxBare);
        r.pexc_gs = qubit_population(fg, 0, Measurement::FluxBare);
        r.s_gs = entanglement_entropy(fg.state(0), fg.spec);
    });

    Output out(o.out_path);
    CsvWriter csv(*out.stream);
    csv.header({"eta", "VL_1p", "VL_1m", "VC_1p", "VC_1m", "nphot_gs", "pexc_gs", "entropy_gs"});
    for (size_t i = 0; i < rows.size(); ++i) {
        const Row& r = rows[i];
        csv.numeric_row({grid.values[i], r.vl_p, r.vl_m, r.vc_p, r.vc_m, r.n_gs, r.pexc_gs,
                         r.s_gs});
    }
    return 0;
}

// ------------------------------------------------------------------ switch

int run_switch(const CommonOpts& o, double ramp, const std::string& shape_name, double t0,
               double follow) {
    const EtaGrid grid = parse_eta(o.eta_text);
    if (grid.values.size() != 1) throw ConfigError("switch: --eta must be a single value");
    const RabiParams p{1.0, o.omega0, grid.values.front()};
    const RampShape shape =
        shape_name == "linear" ? RampShape::Linear : RampShape::RaisedCosine;
    if (shape_name != "linear" && shape_name != "cosine") {
        throw ConfigError("switch: --shape must be linear or cosine");
    }

    const HilbertSpec spec{o.cutoff > 0 ? o.cutoff : default_cutoff(p.eta), 0};
    const SwitchProtocol prot = SwitchProtocol::switch_off(t0, ramp, shape);
    const PropagateOptions popts{.t_end = t0 + ramp + follow, .samples = 241};

    std::vector<DynamicsGauge> gauges;
    if (o.gauge == "coulomb") {
        gauges = {DynamicsGauge::Coulomb};
    } else if (o.gauge == "dipole") {
        gauges = {DynamicsGauge::Dipole};
    } else if (o.gauge == "both") {
        gauges = {DynamicsGauge::Coulomb, DynamicsGauge::Dipole, DynamicsGauge::DipoleWrong};
    } else {
        throw ConfigError("switch: --gauge must be coulomb, dipole or both");
    }

    std::vector<PropagationResult> results(gauges.size());
    std::vector<std::vector<double>> signals(gauges.size());
    parallel_for(static_cast<int>(gauges.size()), [&](int i) {
        const Spectrum s0 = diagonalize(gauges[i] == DynamicsGauge::Coulomb
                                            ? build_coulomb(p, spec)
                                            : build_dipole(p, spec));
        results[i] = propagate(s0.state(0), gauges[i], p, prot, spec, popts);
        signals[i] = emission_signal(results[i]);
    });

    Output out(o.out_path);
    CsvWriter csv(*out.stream);
    std::vector<std::string> cols{"t", "lambda"};
    auto tag = [](DynamicsGauge g) {
        switch (g) {
            case DynamicsGauge::Coulomb: return std::string("coulomb");
            case DynamicsGauge::Dipole: return std::string("dipole");
            case DynamicsGauge::DipoleWrong: return std::string("dipole_wrong");
        }
        return std::string("?");
    };
    for (DynamicsGauge g : gauges) {
        cols.push_back("emission_" + tag(g));
        cols.push_back("nphot_" + tag(g));
        cols.push_back("qubit_" + tag(g));
    }
    csv.header(cols);
    for (size_t s = 0; s < results[0].times.size(); ++s) {
        std::vector<double> vals{results[0].times[s], results[0].lambda[s]};
        for (size_t g = 0; g < gauges.size(); ++g) {
            vals.push_back(signals[g][s]);
            vals.push_back(results[g].photon_number[s]);
            vals.push_back(results[g].qubit_excitation[s]);
        }
        csv.numeric_row(vals);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gauge-invariant ultrastrong-coupling cavity/circuit QED datasets"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value config file; flags override");

    CommonOpts spectrum_o, photo_o, readout_o, vacuum_o, entropy_o, circuit_o, switch_o;

    CLI::App* spectrum = app.add_subcommand("spectrum", "energy differences and labels vs eta");
    add_common(spectrum, spectrum_o, "0:0.05:2");
    spectrum->add_option("--gauge", spectrum_o.gauge, "coulomb|dipole|both")
        ->capture_default_str();

    CLI::App* photo = app.add_subcommand("photodetect", "W and W' for the lowest doublet");
    add_common(photo, photo_o, "0:0.05:2");

    CLI::App* readout = app.add_subcommand("readout", "qubit populations in both gauges");
    add_common(readout, readout_o, "0:0.1:3");
    bool with_chi = false;
    double omega_b = 0.3, g_b = 0.02;
    readout->add_flag("--chi", with_chi, "append the dispersive-shift extraction");
    readout->add_option("--omega-b", omega_b, "readout mode frequency")->capture_default_str();
    readout->add_option("--gb", g_b, "readout coupling g_b")->capture_default_str();

    CLI::App* vacuum = app.add_subcommand("vacuum", "ground photon number, both gauges");
    add_common(vacuum, vacuum_o, "0:0.1:3");

    CLI::App* entropy = app.add_subcommand("entropy", "ground entanglement entropy, both gauges");
    add_common(entropy, entropy_o, "0:0.1:3");

    CLI::App* circuit = app.add_subcommand("circuit", "flux-gauge rates and ground observables");
    add_common(circuit, circuit_o, "0:0.1:3");
    circuit->add_option("--theta", circuit_o.theta, "flux angle (symmetry point = 0)")
        ->capture_default_str();

    CLI::App* sw = app.add_subcommand("switch", "emission through a coupling switch-off");
    add_common(sw, switch_o, "0.8");
    double ramp = 1e-3 * 2.0 * M_PI, t0 = 1.0, follow = 4.0 * M_PI;
    std::string shape = "cosine";
    sw->add_option("--gauge", switch_o.gauge, "coulomb|dipole|both")->capture_default_str();
    sw->add_option("--ramp", ramp, "ramp duration T")->capture_default_str();
    sw->add_option("--shape", shape, "linear|cosine")->capture_default_str();
    sw->add_option("--t0", t0, "switch-off time")->capture_default_str();
    sw->add_option("--follow", follow, "time to follow after the ramp")->capture_default_str();

    CLI::App* selftest = app.add_subcommand("selftest", "run the invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (spectrum->parsed()) return run_spectrum(spectrum_o);
        if (photo->parsed()) return run_photodetect(photo_o);
        if (readout->parsed()) return run_readout(readout_o, with_chi, omega_b, g_b);
        if (vacuum->parsed()) return run_ground_pair(vacuum_o, true);
        if (entropy->parsed()) return run_ground_pair(entropy_o, false);
        if (circuit->parsed()) return run_circuit(circuit_o);
        if (sw->parsed()) return run_switch(switch_o, ramp, shape, t0, follow);
        if (selftest->parsed()) return run_selftest(std::cout) ? 0 : 1;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ConvergenceError& e) {
        std::cerr << "convergence error: " << e.what() << "\n";
        return kExitConvergence;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        const std::string what = e.what();
        return what.find("output path") != std::string::npos ? kExitOutput : kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
