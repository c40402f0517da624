#pragma once

#include <functional>
#include <optional>

#include "umcf/diagnostics.hpp"
#include "umcf/model.hpp"

namespace umcf {

enum class HaltReason { max_steps, extinction, divergence };

enum class RadiusEstimator { none, circle2d, sphere3d, filament3d };

struct RunPlan {
  ModelParams params;
  long steps = 1;
  long diag_every = 1;
  long snapshot_every = 0;  // 0 = no snapshots
  double extinction_threshold = 0.05;
  RadiusEstimator radius = RadiusEstimator::none;

  void validate() const;
};

struct RunState {
  RealField u;
  long step_index = 0;
  HaltReason halted = HaltReason::max_steps;

  double time(double dt) const { return step_index * dt; }
};

struct RunCallbacks {
  std::function<void(const DiagnosticsRecord&)> on_diagnostics;
  std::function<void(const RealField&, long step, double time)> on_snapshot;
};

/// Applies the scheme plan.steps times starting at start_step, emitting a
/// diagnostics record every diag_every steps (including the initial state) and
/// snapshots every snapshot_every steps. Halts early on extinction
/// (max u below the threshold at a diagnostic) or on divergence, in which case
/// the last finite state is preserved in the returned RunState.
RunState run(RealField u0, const RunPlan& plan, const RunCallbacks& cb = {},
             long start_step = 0);

}  // namespace umcf
