#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace dengue::sim {

/// Parameters of the dengue transmission model. Defaults correspond to the
/// 2009 Cape Verde outbreak data.
struct ModelParameters {
    double N_h = 480000.0;          // total human population
    double B = 1.0;                 // average daily bites per mosquito
    double beta_mh = 0.375;         // transmission probability mosquito -> human, per bite
    double beta_hm = 0.375;         // transmission probability human -> mosquito, per bite
    double mu_h = 1.0 / (71.0 * 365.0);  // human mortality rate, 1/day
    double eta_h = 1.0 / 3.0;       // human recovery rate (inverse viremic period)
    double mu_m = 1.0 / 11.0;       // adult mosquito mortality rate
    double phi = 6.0;               // eggs per deposit per capita, per day
    double mu_A = 1.0 / 4.0;        // larval mortality rate
    double eta_A = 0.08;            // larva-to-adult maturation rate
    double eta_m = 1.0 / 11.0;      // extrinsic incubation rate
    double nu_h = 1.0 / 4.0;        // intrinsic incubation rate
    double m = 6.0;                 // female mosquitoes per human
    double k = 3.0;                 // larvae per human

    bool valid() const
    {
        for (double v : {N_h, B, beta_mh, beta_hm, mu_h, eta_h, mu_m, phi, mu_A,
                         eta_A, eta_m, nu_h, m, k}) {
            if (!(v > 0.0)) {
                return false;
            }
        }
        return true;
    }
};

/// Normalized compartments: human S/E/I/R fractions plus mosquito
/// aquatic/S/E/I fractions.
struct EpidemicState {
    double s_h = 0.0;
    double e_h = 0.0;
    double i_h = 0.0;
    double r_h = 0.0;
    double a_m = 0.0;
    double s_m = 0.0;
    double e_m = 0.0;
    double i_m = 0.0;

    double human_sum() const { return s_h + e_h + i_h + r_h; }

    std::array<double, 8> to_array() const
    {
        return {s_h, e_h, i_h, r_h, a_m, s_m, e_m, i_m};
    }
};

inline EpidemicState operator+(const EpidemicState& a, const EpidemicState& b)
{
    return {a.s_h + b.s_h, a.e_h + b.e_h, a.i_h + b.i_h, a.r_h + b.r_h,
            a.a_m + b.a_m, a.s_m + b.s_m, a.e_m + b.e_m, a.i_m + b.i_m};
}

inline EpidemicState operator*(double c, const EpidemicState& a)
{
    return {c * a.s_h, c * a.e_h, c * a.i_h, c * a.r_h,
            c * a.a_m, c * a.s_m, c * a.e_m, c * a.i_m};
}

/// Outbreak initial condition (normalized).
inline EpidemicState initial_condition()
{
    EpidemicState y;
    y.s_h = 0.99865;
    y.e_h = 0.00035;
    y.i_h = 0.001;
    y.r_h = 0.0;
    y.a_m = 1.0;
    y.s_m = 1.0;
    y.e_m = 0.0;
    y.i_m = 0.0;
    return y;
}

/// Right-hand side of the transmission model at control level c in [0,1].
/// The sum of the four human derivatives equals mu_h*(1 - human_sum).
inline EpidemicState derivative(const EpidemicState& y, const ModelParameters& p, double c)
{
    EpidemicState d;
    const double force_h = p.B * p.beta_mh * p.m * y.i_m;  // infection force on humans
    const double force_m = p.B * p.beta_hm * y.i_h;        // infection force on mosquitoes

    d.s_h = p.mu_h - (force_h + p.mu_h) * y.s_h;
    d.e_h = force_h * y.s_h - (p.nu_h + p.mu_h) * y.e_h;
    d.i_h = p.nu_h * y.e_h - (p.eta_h + p.mu_h) * y.i_h;
    d.r_h = p.eta_h * y.i_h - p.mu_h * y.r_h;
    d.a_m = p.phi * (p.m / p.k) * (1.0 - y.a_m) * (y.s_m + y.e_m + y.i_m)
            - (p.eta_A + p.mu_A) * y.a_m;
    d.s_m = p.eta_A * (p.k / p.m) * y.a_m - (force_m + p.mu_m) * y.s_m - c * y.s_m;
    d.e_m = force_m * y.s_m - (p.mu_m + p.eta_m) * y.e_m - c * y.e_m;
    d.i_m = p.eta_m * y.e_m - p.mu_m * y.i_m - c * y.i_m;
    return d;
}

}  // namespace dengue::sim
