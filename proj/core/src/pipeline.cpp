#include "smenc/pipeline.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

#include <json.hpp>

namespace smenc {

namespace {

using OrderedJson = nlohmann::ordered_json;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

void apply(RunConfig& cfg, const CommandOverrides& o) {
    if (o.tighten) cfg.tighten = *o.tighten;
    if (o.update_factor) cfg.update_factor = *o.update_factor;
    if (o.threads) cfg.threads = *o.threads;
    cfg.validate();
}

void write_text_file(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw IOError("cannot open for writing: " + tmp);
        out << content;
        if (!out) throw IOError("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw IOError("cannot move temp file onto " + path);
    }
}

OrderedJson record_json(const SweepRecord& r) {
    OrderedJson j;
    j["epsilon"] = r.epsilon;
    j["iota"] = r.iota;
    j["verified"] = r.verified;
    j["verified_N"] = r.verified_N;
    j["eta_initial"] = r.eta_initial;
    j["eta_final"] = r.eta_final;
    j["passes"] = r.passes;
    j["s_eps_hi"] = r.s_eps_hi;
    j["criterion_ok"] = r.criterion_ok;
    j["timings"] = {{"mesh", r.t_mesh}, {"verify", r.t_verify}, {"tighten", r.t_tighten}};
    return j;
}

OrderedJson failures_json(const TransversalityReport& rep) {
    OrderedJson arr = OrderedJson::array();
    for (const FaceFailure& f : rep.failures) {
        OrderedJson j;
        j["face"] = f.face;
        j["branch"] = std::string(1, f.branch);
        j["lo"] = f.lo;
        j["hi"] = f.hi;
        arr.push_back(j);
    }
    return arr;
}

std::string eta_history_csv(const std::vector<double>& history) {
    std::string csv = "pass,eta\n";
    char line[64];
    for (std::size_t i = 0; i < history.size(); ++i) {
        std::snprintf(line, sizeof line, "%zu,%.17g\n", i, history[i]);
        csv += line;
    }
    return csv;
}

} // namespace

void export_mesh(const LiftedSurface& surface, const std::string& path) {
    write_surface(surface, path);
}

int cmd_enclose(const std::string& config_path, const std::string& out_dir,
                const CommandOverrides& overrides) {
    RunConfig cfg;
    std::shared_ptr<const SlowFastSystem> sys;
    std::shared_ptr<const PlanarMesh> mesh;
    double t_mesh = 0.0;
    try {
        cfg = load_config(config_path);
        apply(cfg, overrides);
        const auto eps_list = cfg.resolved_epsilons();
        if (eps_list.size() != 1)
            throw ConfigError("enclose runs a single epsilon; run.epsilon has " +
                              std::to_string(eps_list.size()) + " entries");
        sys = cfg.system_factory()(eps_list.front());
        sys->require_normally_hyperbolic(cfg.domain);

        const auto t0 = std::chrono::steady_clock::now();
        mesh = std::make_shared<const PlanarMesh>(
            triangulate(generate_vertices(cfg.domain, cfg.d, [&](double y, double z) {
                return sys->gradient_norm_mid(y, z);
            })));
        t_mesh = seconds_since(t0);
    } catch (const Error& e) {
        std::cerr << "enclose: " << e.what() << "\n";
        return kExitConfig;
    }

    OrderedJson report;
    report["config_text"] = cfg.canonical_text();
    try {
        RunResult r = run_single(*sys, mesh, cfg.N0, cfg.tighten, cfg.update_factor,
                                 cfg.max_passes);
        r.record.t_mesh = t_mesh;
        export_mesh(r.pair.left(), out_dir + "/L.mesh");
        export_mesh(r.pair.right(), out_dir + "/R.mesh");
        write_text_file(out_dir + "/eta_history.csv", eta_history_csv(r.eta_history));
        report.update(record_json(r.record));
        report["faces"] = mesh->face_count();
        report["outputs"] = {{"left", "L.mesh"},
                             {"right", "R.mesh"},
                             {"eta_history", "eta_history.csv"}};
        write_text_file(out_dir + "/report.json", report.dump(2) + "\n");
        return kExitOk;
    } catch (const VerificationFailure& e) {
        std::cerr << "enclose: " << e.what() << "\n";
        report["verified"] = false;
        report["last_divisor"] = e.last_divisor;
        report["face_count"] = e.left.face_count;
        report["left_intersections"] = e.left.intersections;
        report["right_intersections"] = e.right.intersections;
        report["left_failures"] = failures_json(e.left);
        report["right_failures"] = failures_json(e.right);
        try {
            write_text_file(out_dir + "/report.json", report.dump(2) + "\n");
        } catch (const Error& io) {
            std::cerr << "enclose: " << io.what() << "\n";
            return kExitConfig;
        }
        return kExitVerification;
    } catch (const Error& e) {
        std::cerr << "enclose: " << e.what() << "\n";
        return kExitConfig;
    }
}

int cmd_sweep(const std::string& config_path, const std::string& csv_path,
              const CommandOverrides& overrides) {
    try {
        RunConfig cfg = load_config(config_path);
        apply(cfg, overrides);
        const std::vector<SweepRecord> records = sweep(cfg.sweep_settings());

        std::ostringstream csv;
        write_sweep_csv(records, csv);
        bool all_verified = true;
        for (const SweepRecord& r : records) all_verified = all_verified && r.verified;
        try {
            const double slope = sweep_slope(records, 1.0, 4.0);
            char line[128];
            std::snprintf(line, sizeof line,
                          "# least_squares_slope window=[1,4] slope=%.6g\n", slope);
            csv << line;
        } catch (const InsufficientData&) {
            csv << "# least_squares_slope window=[1,4] slope=nan\n";
        }
        write_text_file(csv_path, csv.str());

        for (const SweepRecord& r : records)
            if (!r.verified)
                std::cerr << "sweep: epsilon " << r.epsilon << " failed: " << r.error
                          << "\n";
        return all_verified ? kExitOk : kExitVerification;
    } catch (const Error& e) {
        std::cerr << "sweep: " << e.what() << "\n";
        return kExitConfig;
    }
}

} // namespace smenc
