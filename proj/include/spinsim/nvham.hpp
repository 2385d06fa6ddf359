#ifndef SPINSIM_NVHAM_HPP
#define SPINSIM_NVHAM_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "spinsim/units.hpp"

// Microscopic NV physics. The lab frame is fixed by the 2D spin layer:
// z_lab = plane normal, the layer spans x-y. The NV native (symmetry) axis is
// either tilted by arccos(1/sqrt(3)) ~ 54.74 deg from the normal inside the
// x-z lab plane ((100)-grown samples) or along the normal ((111)).
//
// dress() works in a "quantization frame": z = native axis, x chosen along
// the off-axis field component (so the field lies in the frame's x-z plane),
// y completing the right-handed triad. All spin expectations and transition
// matrix elements returned by dress() are expressed in that frame.

namespace spinsim {

enum class CrystalOrientation { n100_native, n100_engineered, n111 };

struct NVSpinParams {
  double zero_field_splitting = mhz_to_rad_us(2870.0);  // rad/us
  double gyromagnetic_ratio = mhz_to_rad_us(2.8);       // rad/us per gauss
  double dipolar_coefficient = mhz_to_rad_us(52.0);     // rad/us * nm^3
  Eigen::Vector3d native_axis{0.0, 0.0, 1.0};           // unit, lab frame
  CrystalOrientation orientation = CrystalOrientation::n111;

  static NVSpinParams make(CrystalOrientation o);
  void validate() const;

  // Unit vector perpendicular to native_axis, inside the (native axis, plane
  // normal) plane, pointing toward the plane normal. Defines the default
  // quantization-frame x axis when the field has no off-axis component.
  Eigen::Vector3d frame_x() const;
};

struct FieldConfig {
  Eigen::Vector3d b_lab{0.0, 0.0, 0.0};  // gauss

  static FieldConfig on_axis(const NVSpinParams& p, double b_gauss);
  // components (bx, by, bz) in the params' native frame (z = native axis,
  // x = frame_x(), y = z cross x)
  static FieldConfig in_native_frame(const NVSpinParams& p, const Eigen::Vector3d& b_native);
  // the configuration each orientation is operated at: 789.3 G on-axis for
  // (100)-native, (143, 0, 877) G native-frame for (100)-engineered,
  // 877 G on-axis for (111)
  static FieldConfig canonical(const NVSpinParams& p);
};

struct DressedNV {
  // energies of |0~>, |-1~>, |+1~> labeled by adiabatic continuation from the
  // on-axis limit, rad/us
  Eigen::Vector3d energies{0, 0, 0};
  double qubit_frequency = 0.0;       // E(|-1~>) - E(|0~>)
  double dipolar_coefficient = 0.0;   // copied from NVSpinParams for pair_coupling
  // rows = quantization-frame basis vectors (x, y, z) in lab coordinates
  Eigen::Matrix3d frame = Eigen::Matrix3d::Identity();
  Eigen::Vector3d b_frame{0, 0, 0};  // field in the quantization frame (by = 0)
  // eigenvectors in the frame's |+1>,|0>,|-1> spin basis
  Eigen::Vector3cd state0, state_m1, state_p1;
  // <J> on the two qubit states and the transition vector <0~| J^c |-1~>
  Eigen::Vector3d j_exp_0{0, 0, 0}, j_exp_m1{0, 0, 0};
  Eigen::Vector3cd j_trans{0, 0, 0};
};

DressedNV dress(const NVSpinParams& params, const FieldConfig& field, int n_ramp = 100);

// Effective qubit-qubit coefficients for one pair, rad/us. Both
// representations of the interaction are carried: (j_zz, j_xy) and
// (j_heis, j_twist) = (j_xy, j_zz - j_xy). j_z1/j_z2 are the single-body
// disorder terms; decoupling sequences cancel them, so interaction matrices
// exclude them by default.
struct PairCoupling {
  double j_zz = 0.0;
  double j_xy = 0.0;
  double j_z1 = 0.0;
  double j_z2 = 0.0;
  double e0 = 0.0;
  std::complex<double> flipflop_f{0.0, 0.0};

  double j_heis() const { return j_xy; }
  double j_twist() const { return j_zz - j_xy; }
};

PairCoupling pair_coupling(const DressedNV& d1, const DressedNV& d2, const Eigen::Vector3d& r_vec_nm);

struct AngularSample {
  double phi = 0.0;   // in-plane direction, rad
  double a_zz = 0.0;  // r^3-normalized Ising coefficient, rad/us * nm^3
  double a_xy = 0.0;  // r^3-normalized exchange coefficient
  double a_heis() const { return a_xy; }
  double a_twist() const { return a_zz - a_xy; }
};

// pair_coupling at unit separation for lab-frame in-plane directions
// phi in [0, 2pi). n_angles >= 4.
std::vector<AngularSample> angular_map(const NVSpinParams& params, const FieldConfig& field,
                                       int n_angles);

std::string angular_map_csv(const std::vector<AngularSample>& map);

// 15N hyperfine constants plus the derived secular nuclear parameters.
struct NuclearCouplingParams {
  double gamma_n = mhz_to_rad_us(0.4316e-3);  // rad/us per gauss
  double a_perp = mhz_to_rad_us(3.65);
  double a_par = mhz_to_rad_us(3.03);
  // filled by nuclear_precession():
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;  // rad/us
  double omega_n = 0.0;                       // sqrt(c^2 + d^2)
  double t_nuc_us = 0.0;                      // 2pi / omega_n
};

NuclearCouplingParams nuclear_precession(const NVSpinParams& params, const FieldConfig& field,
                                         NuclearCouplingParams nuc = {});

namespace spin1 {
// spin-1 operators in the (+1, 0, -1) basis
Eigen::Matrix3cd jx();
Eigen::Matrix3cd jy();
Eigen::Matrix3cd jz();
// D Jz^2 + gamma (B . J), B in the quantization frame
Eigen::Matrix3cd single_nv_hamiltonian(double d_zfs, double gamma, const Eigen::Vector3d& b_frame);
}  // namespace spin1

}  // namespace spinsim

#endif
