#include "spinsim/nvham.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

#include "spinsim/error.hpp"
#include "spinsim/io.hpp"

namespace spinsim {

namespace spin1 {

Eigen::Matrix3cd jx() {
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
  const double s = 1.0 / std::sqrt(2.0);
  m(0, 1) = s; m(1, 0) = s; m(1, 2) = s; m(2, 1) = s;
  return m;
}

Eigen::Matrix3cd jy() {
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
  const std::complex<double> i(0.0, 1.0);
  const double s = 1.0 / std::sqrt(2.0);
  m(0, 1) = -i * s; m(1, 0) = i * s; m(1, 2) = -i * s; m(2, 1) = i * s;
  return m;
}

Eigen::Matrix3cd jz() {
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
  m(0, 0) = 1.0; m(2, 2) = -1.0;
  return m;
}

Eigen::Matrix3cd single_nv_hamiltonian(double d_zfs, double gamma, const Eigen::Vector3d& b) {
  static const Eigen::Matrix3cd x = jx(), y = jy(), z = jz();
  return d_zfs * (z * z).eval() + gamma * (b.x() * x + b.y() * y + b.z() * z);
}

}  // namespace spin1

NVSpinParams NVSpinParams::make(CrystalOrientation o) {
  NVSpinParams p;
  p.orientation = o;
  if (o == CrystalOrientation::n111) {
    p.native_axis = Eigen::Vector3d(0.0, 0.0, 1.0);
  } else {
    // [111]-type axis of a (100)-grown layer: arccos(1/sqrt(3)) from the normal
    const double ca = 1.0 / std::sqrt(3.0);
    const double sa = std::sqrt(2.0 / 3.0);
    p.native_axis = Eigen::Vector3d(sa, 0.0, ca);
  }
  return p;
}

void NVSpinParams::validate() const {
  require(zero_field_splitting > 0.0, ErrorKind::config, "zero_field_splitting must be > 0");
  require(dipolar_coefficient > 0.0, ErrorKind::config, "dipolar_coefficient must be > 0");
  require(std::abs(native_axis.norm() - 1.0) < 1e-12, ErrorKind::config,
          "native_axis must be a unit vector");
}

Eigen::Vector3d NVSpinParams::frame_x() const {
  const Eigen::Vector3d normal(0.0, 0.0, 1.0);
  Eigen::Vector3d perp = normal - normal.dot(native_axis) * native_axis;
  if (perp.norm() < 1e-9) {
    // native axis along the normal ((111)): any in-plane direction
    return Eigen::Vector3d(1.0, 0.0, 0.0);
  }
  return perp.normalized();
}

FieldConfig FieldConfig::on_axis(const NVSpinParams& p, double b_gauss) {
  return FieldConfig{b_gauss * p.native_axis};
}

FieldConfig FieldConfig::in_native_frame(const NVSpinParams& p, const Eigen::Vector3d& b) {
  const Eigen::Vector3d x = p.frame_x();
  const Eigen::Vector3d z = p.native_axis;
  const Eigen::Vector3d y = z.cross(x);
  return FieldConfig{b.x() * x + b.y() * y + b.z() * z};
}

FieldConfig FieldConfig::canonical(const NVSpinParams& p) {
  switch (p.orientation) {
    case CrystalOrientation::n100_native:
      return on_axis(p, 789.3);
    case CrystalOrientation::n100_engineered:
      return in_native_frame(p, Eigen::Vector3d(143.0, 0.0, 877.0));
    case CrystalOrientation::n111:
    default:
      return on_axis(p, 877.0);
  }
}

namespace {

// Track eigenvectors through the B_perp ramp: match by largest overlap with
// the previous step, fix the phase so the overlap is real positive.
struct Labeled {
  Eigen::Vector3d energies;
  Eigen::Matrix3cd vecs;  // columns: |0~>, |-1~>, |+1~>
};

Labeled ramp_dress(double d_zfs, double gamma, const Eigen::Vector3d& b_frame, int n_ramp) {
  Labeled cur;
  // on-axis start: eigenstates are |m>, basis order (+1, 0, -1)
  cur.vecs.setZero();
  cur.vecs(1, 0) = 1.0;  // |0>
  cur.vecs(2, 1) = 1.0;  // |-1>
  cur.vecs(0, 2) = 1.0;  // |+1>
  const double bz = b_frame.z();
  cur.energies = Eigen::Vector3d(0.0, d_zfs - gamma * bz, d_zfs + gamma * bz);

  const double b_perp = std::hypot(b_frame.x(), b_frame.y());
  if (b_perp == 0.0 || n_ramp < 1) return cur;

  for (int k = 1; k <= n_ramp; ++k) {
    const double lam = double(k) / n_ramp;
    Eigen::Vector3d b(lam * b_frame.x(), lam * b_frame.y(), bz);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> es(
        spin1::single_nv_hamiltonian(d_zfs, gamma, b));
    const auto& w = es.eigenvalues();
    const auto& v = es.eigenvectors();
    Labeled next;
    bool used[3] = {false, false, false};
    for (int c = 0; c < 3; ++c) {
      int best = -1;
      double best_ov = -1.0;
      for (int i = 0; i < 3; ++i) {
        if (used[i]) continue;
        double ov = std::abs(v.col(i).dot(cur.vecs.col(c)));
        if (ov > best_ov) { best_ov = ov; best = i; }
      }
      require(best_ov > 0.6, ErrorKind::degeneracy,
              "near-degenerate dressed states: adiabatic labeling ambiguous "
              "(overlap " + std::to_string(best_ov) + " at ramp step " + std::to_string(k) + ")");
      used[best] = true;
      std::complex<double> ov = v.col(best).dot(cur.vecs.col(c));  // <new|prev>
      std::complex<double> phase = std::abs(ov) > 0 ? ov / std::abs(ov) : 1.0;
      next.vecs.col(c) = v.col(best) * phase;
      next.energies(c) = w(best);
    }
    cur = next;
  }
  return cur;
}

}  // namespace

DressedNV dress(const NVSpinParams& params, const FieldConfig& field, int n_ramp) {
  params.validate();
  require(field.b_lab.allFinite(), ErrorKind::config, "field components must be finite");

  DressedNV d;
  const Eigen::Vector3d z = params.native_axis;
  const Eigen::Vector3d b_par = field.b_lab.dot(z) * z;
  const Eigen::Vector3d b_perp = field.b_lab - b_par;
  Eigen::Vector3d x = b_perp.norm() > 1e-9 * std::max(1.0, field.b_lab.norm())
                          ? Eigen::Vector3d(b_perp.normalized())
                          : params.frame_x();
  const Eigen::Vector3d y = z.cross(x);
  d.frame.row(0) = x;
  d.frame.row(1) = y;
  d.frame.row(2) = z;
  d.b_frame = d.frame * field.b_lab;

  require(std::abs(params.gyromagnetic_ratio * d.b_frame.x()) < params.zero_field_splitting,
          ErrorKind::config, "off-axis Zeeman energy exceeds the zero-field splitting; "
          "dressed states are not adiabatically labelable");

  Labeled lab = ramp_dress(params.zero_field_splitting, params.gyromagnetic_ratio, d.b_frame, n_ramp);
  d.dipolar_coefficient = params.dipolar_coefficient;
  d.energies = lab.energies;
  d.qubit_frequency = lab.energies(1) - lab.energies(0);
  d.state0 = lab.vecs.col(0);
  d.state_m1 = lab.vecs.col(1);
  d.state_p1 = lab.vecs.col(2);

  static const Eigen::Matrix3cd jx = spin1::jx(), jy = spin1::jy(), jz = spin1::jz();
  auto expect = [&](const Eigen::Vector3cd& v) {
    return Eigen::Vector3d(std::real(v.dot(jx * v)), std::real(v.dot(jy * v)),
                           std::real(v.dot(jz * v)));
  };
  d.j_exp_0 = expect(d.state0);
  d.j_exp_m1 = expect(d.state_m1);
  d.j_trans = Eigen::Vector3cd(d.state0.dot(jx * d.state_m1), d.state0.dot(jy * d.state_m1),
                               d.state0.dot(jz * d.state_m1));
  return d;
}

PairCoupling pair_coupling(const DressedNV& d1, const DressedNV& d2, const Eigen::Vector3d& r_vec) {
  const double r = r_vec.norm();
  require(r > 0.0, ErrorKind::singular, "pair_coupling: zero separation");

  // Both spins share the NVSpinParams by precondition, hence the same frame.
  const Eigen::Vector3d rhat = (d1.frame * r_vec) / r;
  const double pref = -d1.dipolar_coefficient / (r * r * r);

  // diagonal (energy conserving) elements from single-spin expectations
  auto diag = [&](const Eigen::Vector3d& ja, const Eigen::Vector3d& jb) {
    return pref * (3.0 * ja.dot(rhat) * jb.dot(rhat) - ja.dot(jb));
  };
  const double d00 = diag(d1.j_exp_0, d2.j_exp_0);
  const double d01 = diag(d1.j_exp_0, d2.j_exp_m1);
  const double d10 = diag(d1.j_exp_m1, d2.j_exp_0);
  const double d11 = diag(d1.j_exp_m1, d2.j_exp_m1);

  // flip-flop <0~,-1~| H_int |-1~,0~>: spin 1 uses <0~|J|-1~>, spin 2 its
  // conjugate; real by exchange symmetry for same-orientation pairs
  const Eigen::Vector3cd v1 = d1.j_trans;
  const Eigen::Vector3cd v2 = d2.j_trans.conjugate();
  const std::complex<double> v1r = v1(0) * rhat(0) + v1(1) * rhat(1) + v1(2) * rhat(2);
  const std::complex<double> v2r = v2(0) * rhat(0) + v2(1) * rhat(1) + v2(2) * rhat(2);
  const std::complex<double> f = pref * (3.0 * v1r * v2r - (v1(0) * v2(0) + v1(1) * v2(1) + v1(2) * v2(2)));

  PairCoupling pc;
  pc.e0 = 0.25 * (d00 + d01 + d10 + d11);
  pc.j_z1 = 0.25 * (d00 + d01 - d10 - d11);
  pc.j_z2 = 0.25 * (d00 - d01 + d10 - d11);
  pc.j_zz = 0.25 * (d00 - d01 - d10 + d11);
  pc.flipflop_f = f;
  pc.j_xy = 0.5 * std::real(f);
  return pc;
}

std::vector<AngularSample> angular_map(const NVSpinParams& params, const FieldConfig& field,
                                       int n_angles) {
  require(n_angles >= 4, ErrorKind::config, "angular_map: n_angles must be >= 4");
  DressedNV d = dress(params, field);
  std::vector<AngularSample> out;
  out.reserve(n_angles);
  for (int k = 0; k < n_angles; ++k) {
    const double phi = k2Pi * k / n_angles;
    const Eigen::Vector3d rhat(std::cos(phi), std::sin(phi), 0.0);
    PairCoupling pc = pair_coupling(d, d, rhat);
    out.push_back({phi, pc.j_zz, pc.j_xy});
  }
  return out;
}

std::string angular_map_csv(const std::vector<AngularSample>& map) {
  std::string s = "phi_rad,A_ZZ,A_XY,A_Heis\n";
  for (const auto& m : map) {
    s += sci(m.phi, 12) + "," + sci(m.a_zz, 12) + "," + sci(m.a_xy, 12) + "," +
         sci(m.a_heis(), 12) + "\n";
  }
  return s;
}

NuclearCouplingParams nuclear_precession(const NVSpinParams& params, const FieldConfig& field,
                                         NuclearCouplingParams nuc) {
  DressedNV d = dress(params, field);
  const double bx = d.b_frame.x();
  const double bz = d.b_frame.z();
  nuc.a = nuc.a_par * (d.j_exp_0.z() - d.j_exp_m1.z());
  nuc.b = nuc.a_perp * (d.j_exp_0.x() - d.j_exp_m1.x());
  nuc.c = nuc.gamma_n * bz + nuc.a_par * 0.5 * (d.j_exp_0.z() + d.j_exp_m1.z());
  nuc.d = nuc.gamma_n * bx + nuc.a_perp * 0.5 * (d.j_exp_0.x() + d.j_exp_m1.x());
  nuc.omega_n = std::hypot(nuc.c, nuc.d);
  nuc.t_nuc_us = nuc.omega_n > 0.0 ? k2Pi / nuc.omega_n : 0.0;
  return nuc;
}

}  // namespace spinsim
