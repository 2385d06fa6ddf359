#ifndef SPINSIM_FLOQUET_HPP
#define SPINSIM_FLOQUET_HPP

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "json.hpp"

namespace spinsim {

struct NuclearCouplingParams;

enum class PulseAxis { plus_x, minus_x, plus_y, minus_y };

Eigen::Vector3d pulse_axis_vector(PulseAxis a);
const char* pulse_axis_name(PulseAxis a);

struct Pulse {
  PulseAxis axis = PulseAxis::plus_x;
  double rotation = 0.0;     // rad; pi for a standard decoupling pulse
  double duration_ns = 0.0;  // > 0
};

struct Wait {
  double duration_ns = 0.0;
};

using PulseElement = std::variant<Pulse, Wait>;

struct PulseSequence {
  std::vector<PulseElement> elements;

  double period_ns() const;
  // ||net frame rotation - identity|| for one period (valid decoupling
  // sequences return the frame to identity)
  double net_rotation_defect() const;

  nlohmann::json to_json() const;
  static PulseSequence from_json(const nlohmann::json& j);

  // Built-in sequence library: uniform spacing tau between consecutive pi
  // pulses (wrapping across the period boundary).
  static PulseSequence xy8(double t_pi_ns, double tau_ns);
  static PulseSequence xy16(double t_pi_ns, double tau_ns);
  // XY16 variant with every X pulse replaced by a 3pi pulse of the same Rabi
  // amplitude (duration 3 t_pi); per-axis pi durations for the generalized
  // timing used to reach anisotropic XYZ targets.
  static PulseSequence xy16_triple_x(double t_pi_ns, double tau_ns);
  static PulseSequence xy16_triple_x(double t_pi_x_ns, double t_pi_y_ns, double tau_ns);
};

struct FrameFractions {
  double fx = 0.0, fy = 0.0, fz = 1.0;
  bool net_identity_ok = true;  // warning flag, not an error

  std::array<double, 3> as_array() const { return {fx, fy, fz}; }
};

// Time-averaged squared projections of the toggling-frame image of sigma^z.
// Pulses are continuous rotations integrated by midpoint quadrature with at
// least `min_substeps` sub-steps; a pi pulse about X therefore feeds half of
// its duration to the Y weight and half to the Z weight.
FrameFractions frame_fractions(const PulseSequence& seq, int min_substeps = 64);

// Per-pair engineered multipliers: H_pair = heis_scale * J_Heis sigma.sigma
//   + J_Twist (gx XX + gy YY + gz ZZ),  gx + gy + gz = 1.
struct EngineeredHamiltonian {
  double heis_scale = 1.0;
  double gx = 0.0, gy = 0.0, gz = 1.0;
  bool reversed = false;

  // anisotropy parameter when the triple has the two-axis-twisting form
  // (gy = 1/3): lambda = gz - 1/3 = 1/3 - gx
  std::optional<double> lambda(double tol = 1e-9) const;
  std::array<double, 3> g() const { return {gx, gy, gz}; }
  // coefficient triple of the pair Hamiltonian for couplings (j_heis, j_twist)
  std::array<double, 3> pair_coeffs(double j_heis, double j_twist) const {
    return {heis_scale * j_heis + gx * j_twist, heis_scale * j_heis + gy * j_twist,
            heis_scale * j_heis + gz * j_twist};
  }

  nlohmann::json to_json() const;
};

EngineeredHamiltonian engineer(const FrameFractions& f, bool reversed = false);

// (1/3 - eps, 1/3 - eps, 1/3 + 2 eps); eps in [-1/6, 1/3]
FrameFractions epsilon_family(double eps);

enum class XyzTarget { tat, xyz_paper };

// tat: g = (1/9, 1/3, 5/9) (lambda = 2/9).
// xyz_paper: twist part (2/9)[(ZZ - XX) + (5/64)(XX + ZZ - 2 YY)]
// normalized to the trace-1 g convention.
EngineeredHamiltonian xyz_target(XyzTarget t);

// twist part lam*(ZZ - XX) + y_anis*(XX + ZZ - 2 YY), trace-normalized
EngineeredHamiltonian xyz_twist(double lam, double y_anis);

struct DimerSpectrum {
  // Bell-state energies, order (psi-, psi+, phi+, phi-), rad/us
  std::array<double, 4> eps{0, 0, 0, 0};
  double omega_x = 0.0;  // eps2 - eps3
  double omega_z = 0.0;  // eps3 - eps4
  std::optional<double> rephase_ratio_xz;  // 1 + omega_x / omega_z
  std::optional<double> rephase_ratio_zx;  // 1 + omega_z / omega_x
};

// Spectrum of an isolated pair under h with twist coupling scale j_d:
// the pair Hamiltonian is normalized so that the two-axis-twisting form maps
// to j_d (XX - ZZ), giving omega_x = omega_z = 2 j_d. An optional Heisenberg
// term shifts the energies but not the gaps.
DimerSpectrum dimer_spectrum(const EngineeredHamiltonian& h, double j_d, double j_heis = 0.0);

struct SyncReport {
  double ratio = 0.0;  // T_Floquet / T_Nuc
  bool flagged = false;
  int k = 0, m = 1;    // nearest small rational k/m
  double knm = 0.0;
};

// Flags Floquet periods within 0.05 of an integer multiple of the nuclear
// precession period; reports the nearest rational k/m with m <= 8.
SyncReport nuclear_sync_check(const PulseSequence& seq, const NuclearCouplingParams& nuc);

}  // namespace spinsim

#endif
