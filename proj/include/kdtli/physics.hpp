#ifndef KDTLI_PHYSICS_HPP
#define KDTLI_PHYSICS_HPP

#include <string>
#include <utility>
#include <vector>

namespace kdtli {

// The particle under test.  All fields SI; alpha_vol is the polarizability
// volume (1 A^3 = 1e-30 m^3), which makes the phase and absorption formulas
// below dimensionless as written.
struct Molecule {
  std::string name;
  double mass = 0.0;       // kg
  double alpha_vol = 0.0;  // m^3
  double sigma_abs = 0.0;  // m^2
  void validate() const;
};

// Three-grating geometry: material masks G1/G3 and the standing light wave
// in the middle.  The standing-wave period lambda_L/2 must equal d.
struct InterferometerGeometry {
  double d = 0.0;         // grating period, m
  double f = 0.0;         // open fraction
  double L = 0.0;         // G1->G2 distance (= G2->G3), m
  double lambda_L = 0.0;  // laser wavelength, m
  double w_y = 0.0;       // vertical laser waist, m
  double w_x = 0.0;       // horizontal waist, m; cancels analytically, kept as metadata
  void validate() const;
};

// Per-(power, velocity) interaction state.
struct PhaseAbsorptionState {
  double phi_max;    // peak phase at an anti-node, rad
  double n0;         // mean photons absorbed in an anti-node
  double xi_coh;     // phi_max * sin(pi L / L_T)
  double xi_abs;     // n0 * sin^2(pi L / (2 L_T))
  double l_over_lt;  // L / L_T, L_T = d^2 / lambda_dB
};

enum class VelocityForm { gaussian, tabulated };

// Longitudinal-velocity density of the molecular beam.  The gaussian form is
// truncated to v > 0 and renormalized; the tabulated form takes measured
// (v, weight) rows.
struct VelocityDistribution {
  VelocityForm form = VelocityForm::gaussian;
  double v_m = 0.0;      // most probable velocity, m/s
  double delta_v = 0.0;  // standard deviation, m/s
  std::vector<std::pair<double, double>> table;

  static VelocityDistribution gaussian(double v_m, double delta_v);
  static VelocityDistribution tabulated(std::vector<std::pair<double, double>> rows);
  void validate() const;
};

// lambda_dB = h / (m v)
double de_broglie_wavelength(double mass, double v);

// L_T = d^2 / lambda_dB
double talbot_length(double d, double lambda_dB);

// (2 m_index + 1)/2 * d^2 / lambda_dB
double kdtl_resonant_length(int m_index, double d, double lambda_dB);

// phi_max = 8 sqrt(2 pi) alpha_vol P / (hbar c w_y v)
double phi_max(const Molecule& mol, const InterferometerGeometry& geo, double power, double v);

// n0 = 8 sigma_abs lambda_L P / (sqrt(2 pi) h c w_y v)
double mean_absorbed_photons(const Molecule& mol, const InterferometerGeometry& geo, double power,
                             double v);

// xi_coh = phi_max * sin(pi L/L_T)
double xi_coherent(double phi_max, double l_over_lt);

// xi_abs = n0 * sin^2(pi L / (2 L_T))
double xi_absorptive(double n0, double l_over_lt);

// Phase imprinted by the standing wave at position x: phi_max * sin^2(2 pi x / lambda_L).
double transmission_phase(double x, double phi_max, double lambda_L);

PhaseAbsorptionState phase_absorption_state(const Molecule& mol, const InterferometerGeometry& geo,
                                            double power, double v);

// Signed fringe contrast at fixed velocity:
//   V = 2 (sin(pi f)/(pi f))^2 exp(-xi_abs) (xi_coh - xi_abs)^2 h(u)/u,
//   u = xi_coh^2 - xi_abs^2,
// which equals the (xi_coh-xi_abs)/(xi_coh+xi_abs) * h(u) form with the
// removable singularity at xi_coh + xi_abs = 0 absorbed into h(u)/u.
double visibility_mono(double f, double xi_coh, double xi_abs);

// visibility_mono evaluated from molecule/geometry/power/velocity.
double visibility_mono_at(const Molecule& mol, const InterferometerGeometry& geo, double power,
                          double v);

// |integral p(v) V_signed(v) dv| over the velocity density.  Gaussian form:
// 128-node Gauss-Legendre on [max(1 m/s, v_m - 5 dv), v_m + 5 dv], weights
// self-normalized.  Tabulated form: weighted sum.
double visibility_avg(const Molecule& mol, const InterferometerGeometry& geo,
                      const VelocityDistribution& dist, double power);

}  // namespace kdtli

#endif
