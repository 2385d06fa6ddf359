#ifndef SPINSIM_ENGINE_EXACT_HPP
#define SPINSIM_ENGINE_EXACT_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "spinsim/ensemble.hpp"
#include "spinsim/schedule.hpp"

// Dense oracle for small systems: state-vector (or density-matrix) evolution
// of H = sum_{i<j} [heis_scale J_Heis,ij sigma_i.sigma_j
//                   + J_Twist,ij (gx XX + gy YY + gz ZZ)]
// by unitary Suzuki-Trotter stepping built from exact two-spin gates (each
// pair term is diagonal in the Bell basis). Every gate is exactly unitary,
// so the state norm is conserved to machine precision regardless of step.

namespace spinsim {

struct ExactOptions {
  double dt_us = 0.0;      // 0 = choose automatically by halving refinement
  double refine_tol = 1e-9;
  int max_refine = 14;
  int order = 4;           // Suzuki-Trotter composition order: 2 or 4
  bool include_single_z = false;  // include the per-spin J^Z disorder terms
  int max_qubits_pure = 12;
  int max_qubits_mixed = 8;
};

struct ExactDiag {
  double dt_used = 0.0;
  double norm_defect = 0.0;  // | ||psi|| - 1 | at the end (pure mode)
};

// p = 1 runs the pure-state path (n <= 12); p < 1 switches to the
// density-matrix path (n <= 8).
ObservableSeries exact_evolve(const CouplingMatrix& m, const InitialState& init,
                              const Schedule& schedule, const ExactOptions& opts = {},
                              ExactDiag* diag = nullptr);

// Kubo response -i <psi0| [M(t_plus - t_minus), S(t_plus)] |psi0> with
// |psi0> polarized along y_sign * Y, S = sum_i (s_axis . sigma_i)/2 (the
// generator of a global rotation per unit angle) and M = per-spin average
// (1/N) sum_i (m_axis . sigma_i). Hamiltonian h applies to every pair of m.
double kubo_chi(const CouplingMatrix& m, const EngineeredHamiltonian& h, int y_sign,
                const Eigen::Vector3d& sense_axis, const Eigen::Vector3d& meas_axis,
                double t_plus, double t_minus, const ExactOptions& opts = {});

// chi over a (t_plus, t_minus) grid; result(i, j) = chi(t_plus[i], t_minus[j])
Eigen::MatrixXd kubo_chi_grid(const CouplingMatrix& m, const EngineeredHamiltonian& h, int y_sign,
                              const Eigen::Vector3d& sense_axis, const Eigen::Vector3d& meas_axis,
                              const std::vector<double>& t_plus, const std::vector<double>& t_minus,
                              const ExactOptions& opts = {});

namespace exact {

// State-vector helper exposed for protocol-level code and tests.
class PureState {
 public:
  explicit PureState(int n_qubits);

  int n() const { return n_; }
  std::vector<std::complex<double>>& amps() { return a_; }
  const std::vector<std::complex<double>>& amps() const { return a_; }

  // product state with every spin along `axis`
  void set_product(const Eigen::Vector3d& axis);
  double norm() const;

  void apply_single(int i, const Eigen::Matrix2cd& u);
  void apply_rotation(const Eigen::Vector3d& axis, double angle);  // all spins
  // pair phase gate from Bell-basis energies (eps order psi-, psi+, phi+, phi-)
  void apply_pair_phases(int i, int j, const std::array<double, 4>& eps, double dt);
  void apply_diagonal_z(const std::vector<double>& h_z, double dt);

  Eigen::Vector3d bloch(int i) const;

 private:
  int n_;
  std::vector<std::complex<double>> a_;
};

// Trotter stepper over all pairs of a coupling matrix for one engineered
// Hamiltonian; shared by exact_evolve and the Kubo evaluations.
class PairStepper {
 public:
  PairStepper(const CouplingMatrix& m, const EngineeredHamiltonian& h, bool include_single_z);

  // advance by signed time t in unitary steps of at most |dt|
  void evolve(PureState& s, double t, double dt) const;
  double coupling_scale() const { return scale_; }
  void set_hamiltonian(const EngineeredHamiltonian& h);

 private:
  void strang(PureState& s, double dt) const;
  void step(PureState& s, double dt, int order) const;

  const CouplingMatrix* m_;
  bool include_z_;
  int order_ = 4;
  std::vector<std::array<int, 2>> pairs_;
  std::vector<std::array<double, 4>> eps_;  // Bell energies per pair
  std::vector<double> h_z_;
  double scale_ = 0.0;

 public:
  void set_order(int order) { order_ = order; }
};

// |out> = sum_i scale * (axis . sigma_i) |in>
PureState apply_collective(const PureState& in, const Eigen::Vector3d& axis, double scale);

std::complex<double> inner(const PureState& a, const PureState& b);

}  // namespace exact

}  // namespace spinsim

#endif
