#include "umcf/solver.hpp"

namespace umcf {

void RunPlan::validate() const {
  params.validate();
  if (steps < 1) fail(ErrorCode::invalid_argument, "plan needs steps >= 1");
  if (diag_every < 1 || snapshot_every < 0)
    fail(ErrorCode::invalid_argument, "plan strides must be >= 1");
  if (!(extinction_threshold >= 0.0))
    fail(ErrorCode::invalid_argument, "extinction threshold must be >= 0");
}

namespace {

std::optional<double> estimate_radius(const RealField& u, const RunPlan& plan) {
  switch (plan.radius) {
    case RadiusEstimator::none: return std::nullopt;
    case RadiusEstimator::circle2d: return radius_circle_2d(u, plan.params.eps);
    case RadiusEstimator::sphere3d: return radius_sphere_3d(u, plan.params.eps);
    case RadiusEstimator::filament3d:
      return radius_filament_3d(u, plan.params.eps);
  }
  return std::nullopt;
}

}  // namespace

RunState run(RealField u0, const RunPlan& plan, const RunCallbacks& cb,
             long start_step) {
  plan.validate();
  if (!u0.all_finite()) fail(ErrorCode::invalid_argument, "non-finite u0");

  Stepper stepper(u0.grid(), plan.params);
  RunState state{std::move(u0), start_step, HaltReason::max_steps};
  const long last = start_step + plan.steps;

  const auto diagnose_now = [&](long step) {
    DiagnosticsRecord rec =
        diagnose(state.u, plan.params, step, estimate_radius(state.u, plan));
    if (cb.on_diagnostics) cb.on_diagnostics(rec);
    return rec;
  };
  const auto snapshot_now = [&](long step) {
    if (cb.on_snapshot) cb.on_snapshot(state.u, step, step * plan.params.dt);
  };

  for (long step = start_step;; ++step) {
    const bool diag_due = (step - start_step) % plan.diag_every == 0;
    const bool snap_due =
        plan.snapshot_every > 0 && (step - start_step) % plan.snapshot_every == 0;
    if (diag_due) {
      const DiagnosticsRecord rec = diagnose_now(step);
      if (rec.u_max < plan.extinction_threshold) {
        state.step_index = step;
        state.halted = HaltReason::extinction;
        if (snap_due) snapshot_now(step);
        return state;
      }
    }
    if (snap_due) snapshot_now(step);
    if (step == last) {
      state.step_index = step;
      state.halted = HaltReason::max_steps;
      return state;
    }
    try {
      stepper.advance(state.u, step + 1);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::diverged) throw;
      // keep the last finite state
      state.step_index = step;
      state.halted = HaltReason::divergence;
      return state;
    }
  }
}

}  // namespace umcf
