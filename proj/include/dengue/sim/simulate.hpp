#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "dengue/sim/model.hpp"

namespace dengue::sim {

inline constexpr double kDefaultHorizonDays = 84.0;
inline constexpr std::size_t kDefaultSteps = 1000;

/// Insecticide levels on a uniform time grid; node i sits at
/// t_i = i * horizon / (nodes - 1).
struct ControlSignal {
    std::vector<double> values;

    ControlSignal() = default;
    explicit ControlSignal(std::vector<double> v) : values(std::move(v)) {}
    ControlSignal(std::span<const double> v) : values(v.begin(), v.end()) {}

    static ControlSignal constant(double level, std::size_t nodes = kDefaultSteps + 1)
    {
        return ControlSignal(std::vector<double>(nodes, level));
    }

    bool in_bounds() const
    {
        return std::all_of(values.begin(), values.end(),
                           [](double v) { return v >= 0.0 && v <= 1.0; });
    }
};

struct Trajectory {
    std::vector<EpidemicState> states;
    std::vector<double> times;  // days
};

/// One classical RK4 step for any state supporting + and scalar *.
/// The derivative callback receives (state, t).
template <typename State, typename Deriv>
State rk4_step(const State& y, double t, double h, Deriv&& f)
{
    const State k1 = f(y, t);
    const State k2 = f(y + (h / 2.0) * k1, t + h / 2.0);
    const State k3 = f(y + (h / 2.0) * k2, t + h / 2.0);
    const State k4 = f(y + h * k3, t + h);
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

/// Integrates the transmission model with one RK4 step per control interval.
/// The control is interpolated linearly between grid nodes at stage times.
inline Trajectory integrate_rk4(const ModelParameters& params, const ControlSignal& control,
                                double horizon = kDefaultHorizonDays,
                                std::size_t steps = kDefaultSteps)
{
    if (steps < 1 || horizon <= 0.0) {
        throw std::invalid_argument("integrate_rk4: need steps >= 1 and horizon > 0");
    }
    if (control.values.size() != steps + 1) {
        throw std::invalid_argument("integrate_rk4: control grid must have steps + 1 nodes");
    }

    const double h = horizon / static_cast<double>(steps);
    Trajectory traj;
    traj.states.reserve(steps + 1);
    traj.times.reserve(steps + 1);

    EpidemicState y = initial_condition();
    traj.states.push_back(y);
    traj.times.push_back(0.0);

    for (std::size_t i = 0; i < steps; ++i) {
        const double c0 = control.values[i];
        const double c1 = control.values[i + 1];
        const double cm = 0.5 * (c0 + c1);

        const EpidemicState k1 = derivative(y, params, c0);
        const EpidemicState k2 = derivative(y + (h / 2.0) * k1, params, cm);
        const EpidemicState k3 = derivative(y + (h / 2.0) * k2, params, cm);
        const EpidemicState k4 = derivative(y + h * k3, params, c1);
        y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        traj.states.push_back(y);
        traj.times.push_back(static_cast<double>(i + 1) * h);
    }
    return traj;
}

/// Trapezoidal rule on a uniform grid spanning [0, horizon]. Written as
/// horizon * (weighted sum / intervals) so constant integrands come out exact.
inline double trapezoid(std::span<const double> values, double horizon)
{
    if (values.size() < 2) {
        throw std::invalid_argument("trapezoid: need at least two nodes");
    }
    const std::size_t n = values.size() - 1;
    double s = 0.5 * (values.front() + values.back());
    for (std::size_t i = 1; i < n; ++i) {
        s += values[i];
    }
    return horizon * (s / static_cast<double>(n));
}

struct ObjectiveResult {
    double f1;  // integrated infected-human fraction, days
    double f2;  // integrated control effort, days
};

/// Evaluates the biobjective pair: f1 = integral of i_h, f2 = integral of c,
/// both by the trapezoidal rule on the control grid. Negative compartment
/// values caused by floating point are clamped at zero in the integrand only.
inline ObjectiveResult evaluate_objectives(const ControlSignal& control,
                                           const ModelParameters& params,
                                           double horizon = kDefaultHorizonDays,
                                           std::size_t steps = kDefaultSteps)
{
    const Trajectory traj = integrate_rk4(params, control, horizon, steps);
    std::vector<double> ih(traj.states.size());
    for (std::size_t i = 0; i < traj.states.size(); ++i) {
        ih[i] = std::max(traj.states[i].i_h, 0.0);
    }
    return {trapezoid(ih, horizon), trapezoid(control.values, horizon)};
}

struct ScalarCostWeights {
    double gamma_D = 1.0;  // cost weight of infected humans
    double gamma_S = 1.0;  // cost weight of spraying
};

/// Quadratic cost functional: trapezoidal integral of
/// gamma_D * i_h^2 + gamma_S * c^2 over the grid.
inline double scalar_cost(const ControlSignal& control, const ScalarCostWeights& w,
                          const ModelParameters& params,
                          double horizon = kDefaultHorizonDays,
                          std::size_t steps = kDefaultSteps)
{
    if (!(w.gamma_D > 0.0) || !(w.gamma_S > 0.0)) {
        throw std::invalid_argument("scalar_cost: weights must be strictly positive");
    }
    const Trajectory traj = integrate_rk4(params, control, horizon, steps);
    std::vector<double> integrand(traj.states.size());
    for (std::size_t i = 0; i < traj.states.size(); ++i) {
        const double ih = std::max(traj.states[i].i_h, 0.0);
        const double c = control.values[i];
        integrand[i] = w.gamma_D * ih * ih + w.gamma_S * c * c;
    }
    return trapezoid(integrand, horizon);
}

}  // namespace dengue::sim
