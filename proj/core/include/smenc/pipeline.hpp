#pragma once

#include <optional>
#include <string>

#include "smenc/config.hpp"
#include "smenc/mesh_io.hpp"

namespace smenc {

/// Exit codes shared by the command entry points.
constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitVerification = 2;

/// Atomic text-format surface export (temp file + rename).
void export_mesh(const LiftedSurface& surface, const std::string& path);

struct CommandOverrides {
    std::optional<bool> tighten;
    std::optional<double> update_factor;
    std::optional<int> threads;
};

/// Full pipeline for one epsilon: writes L.mesh, R.mesh, eta_history.csv and
/// report.json into `out_dir`.  Returns 0 on verified success, 2 on
/// verification failure (report.json then carries the per-face diagnostics),
/// 1 on configuration or I/O errors.
int cmd_enclose(const std::string& config_path, const std::string& out_dir,
                const CommandOverrides& overrides = {});

/// Epsilon sweep writing the fixed-schema CSV plus a trailing least-squares
/// summary line.  Returns 0 if every epsilon verified, 2 if any failed, 1 on
/// configuration errors.
int cmd_sweep(const std::string& config_path, const std::string& csv_path,
              const CommandOverrides& overrides = {});

} // namespace smenc
