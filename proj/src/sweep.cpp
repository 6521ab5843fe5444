#include "mbeam/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <ostream>

#include "mbeam/analytical.hpp"
#include "mbeam/constitutive.hpp"
#include "mbeam/fem/eigensolver.hpp"
#include "mbeam/fem/solver.hpp"

namespace mbeam {
namespace {

std::string fmt_g(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double grid_value(const SweepRange& range, int i) {
    if (range.count == 1 || i == 0) return range.start;
    if (i == range.count - 1) return range.stop;
    return range.start + (range.stop - range.start) * i / (range.count - 1);
}

std::string sweep_var_for(const std::string& case_id) {
    if (case_id == "case1") return "e";
    if (case_id == "case2") return "p";
    if (case_id == "case3") return "A";
    return "none";
}

void validate(const RunConfig& cfg) {
    if (cfg.case_id != "case1" && cfg.case_id != "case2" && cfg.case_id != "case3" &&
        cfg.case_id != "elastic")
        throw usage_error("unknown case id: " + cfg.case_id);
    if (cfg.range.count < 1) throw usage_error("sweep count must be >= 1");
    if (cfg.range.start > cfg.range.stop)
        throw usage_error("sweep range must have start <= stop");
    if (cfg.n_elems < 1) throw usage_error("element count must be >= 1");
    if (cfg.N_list.empty()) throw usage_error("at least one axial force N is required");
    for (double N : cfg.N_list)
        if (N >= 0.0)
            throw usage_error("axial force must be compressive (N < 0), got " +
                              fmt_g(N));
    if (cfg.case_id == "case1") {
        if (cfg.range.start < 0.0 || cfg.range.stop > cfg.beam.h / 2.0)
            throw usage_error("eccentricity range violates 0 <= e <= h/2 = " +
                              fmt_g(cfg.beam.h / 2.0));
    } else if (cfg.case_id == "case2" || cfg.case_id == "case3") {
        if (cfg.range.start < 0.0)
            throw usage_error("sweep values must be non-negative");
    }
}

SweepRecord base_record(const RunConfig& cfg, double value, double N,
                        const std::string& method) {
    SweepRecord rec;
    rec.case_id = cfg.case_id;
    rec.sweep_var = sweep_var_for(cfg.case_id);
    rec.sweep_value = value;
    rec.N = N;
    rec.method = method;
    rec.iters = 0;
    rec.residual = 0.0;
    return rec;
}

void fill_modal(SweepRecord& rec, const ModalResult& m) {
    rec.omega = m.omega;
    rec.f_hz = m.f_hz;
    rec.ratio = m.ratio;
    rec.x0 = m.x0;
}

SweepRecord analytical_record(const RunConfig& cfg, double value, double N) {
    SweepRecord rec = base_record(cfg, value, N, "analytical");
    if (cfg.case_id == "case1") {
        fill_modal(rec, case1_frequency(value, cfg.beam));
    } else if (cfg.case_id == "case2") {
        try {
            fill_modal(rec, case2_frequency(value, N, cfg.beam));
        } catch (const limit_moment_error&) {
            // beyond the limit load: collapsed state, frequency -> 0
            const auto [pbar, pbarbar] = case2_limit_loads(N, cfg.beam);
            rec.omega = rec.f_hz = rec.ratio = 0.0;
            rec.x0 = case2_x0(pbarbar, N, cfg.beam);
        }
    } else if (cfg.case_id == "case3") {
        fill_modal(rec, case3_frequency(value, N, cfg.beam));
    } else {
        rec.omega = omega_elastic(cfg.beam);
        rec.f_hz = rec.omega / (2.0 * std::numbers::pi);
        rec.ratio = 1.0;
        rec.x0 = cfg.beam.L / 2.0;
    }
    return rec;
}

SweepRecord fem_record(const RunConfig& cfg, double value, double N) {
    SweepRecord rec = base_record(cfg, value, N, "fem");
    const fem::Mesh mesh(cfg.n_elems, cfg.beam.L);
    const AxialState axial(N, cfg.beam);
    LoadCase load;
    if (cfg.case_id == "case1")
        load = Case1{value, N};
    else if (cfg.case_id == "case2")
        load = Case2{value, N};
    else if (cfg.case_id == "case3")
        load = Case3{value, N};
    else
        load = Case2{0.0, N};  // unloaded beam: the elastic reference
    try {
        const fem::SystemState state = fem::equilibrium_state(load, mesh, cfg.beam);
        fill_modal(rec, fem::fundamental_mode(state, cfg.beam, axial));
        rec.iters = state.newton_iterations;
        rec.residual = state.residual;
    } catch (const fem::convergence_error& err) {
        rec.omega = rec.f_hz = rec.ratio = rec.x0 = 0.0;
        rec.iters = -1;
        rec.residual = err.residual();
    } catch (const limit_moment_error&) {
        // at or beyond the section capacity: no equilibrium to linearize about
        rec.omega = rec.f_hz = rec.ratio = rec.x0 = 0.0;
        rec.iters = -1;
        rec.residual = 0.0;
    }
    return rec;
}

}  // namespace

std::vector<SweepRecord> run_case(const RunConfig& cfg) {
    validate(cfg);
    std::vector<double> n_values = cfg.N_list;
    std::sort(n_values.begin(), n_values.end());

    const int count = cfg.case_id == "elastic" ? 1 : cfg.range.count;
    std::vector<SweepRecord> records;
    records.reserve(static_cast<std::size_t>(count) * n_values.size() * 2);
    for (double N : n_values) {
        for (int i = 0; i < count; ++i) {
            const double value =
                cfg.case_id == "elastic" ? 0.0 : grid_value(cfg.range, i);
            if (cfg.method != Method::fem)
                records.push_back(analytical_record(cfg, value, N));
            if (cfg.method != Method::analytical)
                records.push_back(fem_record(cfg, value, N));
        }
    }
    return records;
}

void emit(const std::vector<SweepRecord>& records, Format format, std::ostream& out) {
    if (records.empty()) throw usage_error("no records to emit");
    if (format == Format::csv) {
        out << "case,sweep_var,sweep_value,N,omega_rad_s,f_hz,ratio,x0_m,method,"
               "iters,residual\n";
        for (const auto& r : records)
            out << r.case_id << ',' << r.sweep_var << ',' << fmt_g(r.sweep_value)
                << ',' << fmt_g(r.N) << ',' << fmt_g(r.omega) << ',' << fmt_g(r.f_hz)
                << ',' << fmt_g(r.ratio) << ',' << fmt_g(r.x0) << ',' << r.method
                << ',' << r.iters << ',' << fmt_g(r.residual) << '\n';
    } else {
        out << "[\n";
        for (std::size_t i = 0; i < records.size(); ++i) {
            const auto& r = records[i];
            out << "  {\"case\":\"" << r.case_id << "\",\"sweep_var\":\""
                << r.sweep_var << "\",\"sweep_value\":" << fmt_g(r.sweep_value)
                << ",\"N\":" << fmt_g(r.N) << ",\"omega_rad_s\":" << fmt_g(r.omega)
                << ",\"f_hz\":" << fmt_g(r.f_hz) << ",\"ratio\":" << fmt_g(r.ratio)
                << ",\"x0_m\":" << fmt_g(r.x0) << ",\"method\":\"" << r.method
                << "\",\"iters\":" << r.iters << ",\"residual\":" << fmt_g(r.residual)
                << '}' << (i + 1 < records.size() ? ",\n" : "\n");
        }
        out << "]\n";
    }
    if (!out) throw io_error("write failed");
}

void emit_to_path(const std::vector<SweepRecord>& records, Format format,
                  const std::string& path) {
    if (path.empty() || path == "-") {
        emit(records, format, std::cout);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw io_error("cannot open output file: " + path);
    emit(records, format, file);
    file.close();
    if (!file) throw io_error("error writing output file: " + path);
}

}  // namespace mbeam
