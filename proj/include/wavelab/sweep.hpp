#pragma once

#include <filesystem>
#include <optional>
#include <span>

#include "wavelab/config.hpp"
#include "wavelab/report.hpp"

namespace wavelab {

struct SweepOptions {
  std::optional<std::filesystem::path> csv_dir;  // snapshot CSVs when set
  bool kinetic_dump = false;  // binary (x, ξ₁) dump of the final kinetic field
  bool concurrent = true;
};

/// One ε of the sweep. NumericalAbort marks the record failed.
EpsRecord run_case(const ExperimentConfig& cfg, const ProfileConfig& base, double eps,
                   const SweepOptions& opts = {});

/// Runs every ε, records sup errors on Σ_h at snapshot times t >= h and
/// fits e ≈ C ε^r to the per-ε maximum over those times.
ConvergenceReport sweep(const ExperimentConfig& cfg, const SweepOptions& opts = {});

/// One ledger row: sup over sampled x outside |x| <= √(ε(1+t))·ln(1/ε) of the
/// componentwise |ansatz - Riemann| and the envelope terms at that point.
BoundRow bound_row(const ProfileConfig& cfg, double t, double decay);

/// Contact decay c: the slower of the two fitted Gaussian tails of the
/// self-similar profile; 1/4 for a trivial contact.
double contact_decay(const ProfileConfig& cfg);

/// Ledger over eps × t_samples with C = max ratio and c = contact_decay;
/// passes when max/min over ε of the per-ε constant is at most 2.
BoundLedger check_ansatz_bound(const ExperimentConfig& cfg, std::span<const double> eps,
                               std::span<const double> t_samples);

}  // namespace wavelab
