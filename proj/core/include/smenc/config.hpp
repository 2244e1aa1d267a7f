#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smenc/diagnostics.hpp"

namespace smenc {

/// Run configuration, read from flat key=value text with [system], [domain],
/// [mesh] and [run] sections.  Parameters may be given in original
/// coordinates (a, b, c) or rescaled ones (A, B, C); rescaled values are
/// converted per epsilon when systems are built.
struct RunConfig {
    // [system]
    std::string system_name = "singular_hopf";
    Branch branch = Branch::Plus;
    double mu = 0.0;
    std::optional<double> a, b, c;
    std::optional<double> A, B, C;

    // [domain]
    Domain2 domain{0.0, 1.0, 0.0, 1.0};

    // [mesh]
    int d = 8;

    // [run]
    std::optional<std::vector<double>> epsilons;
    double N0 = 64.0;
    double update_factor = 0.125;
    bool tighten = true;
    int max_passes = 10000;
    int threads = 1;

    void validate() const;

    /// Epsilon list with the default half-decade grid filled in.
    std::vector<double> resolved_epsilons() const;

    /// Per-epsilon system builder, rescaling parameters when needed.
    SystemFactory system_factory() const;

    SweepSettings sweep_settings() const;

    /// Canonical serialization of every resolved key; parsing it back
    /// reproduces this configuration exactly.
    std::string canonical_text() const;
};

RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::string& path);

} // namespace smenc
