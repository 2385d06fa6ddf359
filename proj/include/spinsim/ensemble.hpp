#ifndef SPINSIM_ENSEMBLE_HPP
#define SPINSIM_ENSEMBLE_HPP

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "spinsim/nvham.hpp"

#include "json.hpp"

namespace spinsim {

enum class GeometryMode { disordered2d, lattice2d };

struct GeometrySpec {
  GeometryMode mode = GeometryMode::disordered2d;
  int n_spins = 200;
  double mean_spacing = 17.0;   // nm; box side = mean_spacing * sqrt(n_spins)
  double thickness_fwhm = 9.0;  // nm; 0 = ideal plane
  double min_separation = 1.0;  // nm; resample floor for disordered sampling
  uint64_t seed = 0;

  void validate() const;
};

struct SpinConfiguration {
  std::vector<Eigen::Vector3d> positions;  // nm, lab frame
  GeometrySpec geometry;
  int resample_count = 0;  // times the min-separation floor triggered

  nlohmann::json to_json() const;
  static SpinConfiguration from_json(const nlohmann::json& j);
};

// Deterministic for a fixed seed (single private RNG stream, no threading).
SpinConfiguration sample_positions(const GeometrySpec& spec);

struct CouplingMatrix {
  int n_spins = 0;
  Eigen::MatrixXd j_heis;    // symmetric, zero diagonal, rad/us
  Eigen::MatrixXd j_twist;   // symmetric, zero diagonal, rad/us
  Eigen::VectorXd single_z;  // per-spin sum of the pair J^Z disorder terms

  double heis(int i, int j) const { return j_heis(i, j); }
  double twist(int i, int j) const { return j_twist(i, j); }

  nlohmann::json to_json() const;
};

CouplingMatrix build_couplings(const SpinConfiguration& config, const NVSpinParams& params,
                               const FieldConfig& field);

enum class CouplingWeight { twist, heis, total };

struct CoordinationReport {
  std::vector<double> z;     // effective coordination number per spin
  std::vector<int> tertile;  // 0 = low, 1 = mid, 2 = high (by sorted rank)

  std::array<int, 3> tertile_sizes() const;
  std::string histogram_csv(int n_bins = 40) const;  // header "z,count"
};

// z_i = (sum_j |J_ij|)^2 / sum_j J_ij^2 with the chosen coupling component;
// "total" uses the Frobenius weight sqrt(2 j_xy^2 + j_zz^2) of the pair tensor.
CoordinationReport coordination(const CouplingMatrix& m, CouplingWeight w = CouplingWeight::twist);

struct DimerPairing {
  std::vector<std::array<int, 2>> pairs;  // i < j
  std::vector<int> singletons;
  // greedy certificate: |J| of each selected pair, in selection order
  std::vector<double> selected_strength;
};

// Greedy strongest-|J_twist| matching; deterministic (lexicographic
// tie-break). Odd spin counts leave one singleton.
DimerPairing dimer_pairing(const CouplingMatrix& m);

}  // namespace spinsim

#endif
