#ifndef SPINSIM_SCHEDULE_HPP
#define SPINSIM_SCHEDULE_HPP

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spinsim/floquet.hpp"
#include "spinsim/units.hpp"

namespace spinsim {

struct InitialState {
  Eigen::Vector3d axis{0.0, 1.0, 0.0};  // unit polarization axis
  double polarization = 1.0;            // in [0, 1]

  void validate() const;
};

struct EvolveSegment {
  EngineeredHamiltonian h;
  double duration_us = 0.0;
};

struct RotateSegment {
  Eigen::Vector3d axis{0.0, 0.0, 1.0};  // unit
  double angle_rad = 0.0;               // instantaneous global rotation
};

using Segment = std::variant<EvolveSegment, RotateSegment>;

struct Schedule {
  std::vector<Segment> segments;
  // sampling grid in cumulative evolve-time, sorted ascending; boundaries of
  // segments do not have to be included
  std::vector<double> sample_times_us;

  double total_evolve_time() const;
  void validate() const;

  static Schedule single(const EngineeredHamiltonian& h, double duration_us, int n_samples);
};

struct DynamicalDisorder {
  double asd_mhz = 0.019;    // amplitude spectral density, MHz/sqrt(MHz)
  double f_peak_mhz = 37.0;  // filter-function peak the ASD is quoted at
  double correlation_time_us = 1.0 / (k2Pi * 37.0);  // OU correlation time
  enum class Coupling { frame_mixture, lab_z };
  Coupling coupling = Coupling::frame_mixture;

  // stationary variance of the ordinary-frequency detuning process, MHz^2,
  // set so the one-sided PSD at f_peak equals asd^2
  double variance_mhz2() const;
};

struct NoiseModel {
  bool static_disorder = false;        // decoupled under Floquet-effective evolution
  double static_disorder_fwhm_mhz = 1.0;
  std::optional<DynamicalDisorder> dynamical;
  double t1_ms = 0.0;                  // 0 = off; experimental 0.94
  bool heisenberg_unreversed = true;   // backward segments keep the Heisenberg part

  bool any_noise() const { return static_disorder || dynamical.has_value() || t1_ms > 0.0; }
};

// Per-spin-averaged Bloch components with standard errors; optionally
// resolved over spin groups (e.g. coordination tertiles).
struct ObservableSeries {
  std::vector<double> times_us;
  std::vector<std::array<double, 3>> mean;  // [time][X,Y,Z]
  std::vector<std::array<double, 3>> sem;
  std::vector<std::vector<std::array<double, 3>>> group_mean;  // [group][time][axis]
  std::vector<std::vector<std::array<double, 3>>> group_sem;
  long n_traj = 0;
  uint64_t seed = 0;

  // "t_us,X,Y,Z,X_err,Y_err,Z_err[,group]" with 10 significant digits;
  // group rows appended with their group index when present
  std::string to_csv() const;
};

}  // namespace spinsim

#endif
