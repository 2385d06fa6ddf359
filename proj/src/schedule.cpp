#include "spinsim/schedule.hpp"

#include <algorithm>
#include <cmath>

#include "spinsim/error.hpp"
#include "spinsim/io.hpp"

namespace spinsim {

void InitialState::validate() const {
  require(std::abs(axis.norm() - 1.0) < 1e-9, ErrorKind::config,
          "initial state axis must be a unit vector");
  require(polarization >= 0.0 && polarization <= 1.0, ErrorKind::config,
          "polarization must lie in [0, 1]");
}

double Schedule::total_evolve_time() const {
  double t = 0.0;
  for (const auto& s : segments)
    if (std::holds_alternative<EvolveSegment>(s)) t += std::get<EvolveSegment>(s).duration_us;
  return t;
}

void Schedule::validate() const {
  require(!segments.empty(), ErrorKind::config, "schedule: empty segment list");
  for (const auto& s : segments) {
    if (std::holds_alternative<EvolveSegment>(s)) {
      require(std::get<EvolveSegment>(s).duration_us >= 0.0, ErrorKind::config,
              "schedule: negative segment duration");
    } else {
      require(std::abs(std::get<RotateSegment>(s).axis.norm() - 1.0) < 1e-9, ErrorKind::config,
              "schedule: rotation axis must be a unit vector");
    }
  }
  require(std::is_sorted(sample_times_us.begin(), sample_times_us.end()), ErrorKind::config,
          "schedule: sample times must be sorted");
  if (!sample_times_us.empty()) {
    require(sample_times_us.front() >= 0.0 &&
                sample_times_us.back() <= total_evolve_time() + 1e-12,
            ErrorKind::config, "schedule: sample times outside the evolved window");
  }
}

Schedule Schedule::single(const EngineeredHamiltonian& h, double duration_us, int n_samples) {
  Schedule s;
  s.segments.push_back(EvolveSegment{h, duration_us});
  if (n_samples < 2) {
    s.sample_times_us = {duration_us};
  } else {
    for (int i = 0; i < n_samples; ++i)
      s.sample_times_us.push_back(duration_us * i / (n_samples - 1));
  }
  return s;
}

double DynamicalDisorder::variance_mhz2() const {
  // one-sided OU spectrum S(f) = 4 var tau / (1 + (2 pi f tau)^2), f in MHz
  const double wt = k2Pi * f_peak_mhz * correlation_time_us;
  return asd_mhz * asd_mhz * (1.0 + wt * wt) / (4.0 * correlation_time_us);
}

std::string ObservableSeries::to_csv() const {
  const bool groups = !group_mean.empty();
  std::string s = groups ? "t_us,X,Y,Z,X_err,Y_err,Z_err,group\n" : "t_us,X,Y,Z,X_err,Y_err,Z_err\n";
  auto row = [&](double t, const std::array<double, 3>& m, const std::array<double, 3>& e) {
    return sci(t) + "," + sci(m[0]) + "," + sci(m[1]) + "," + sci(m[2]) + "," + sci(e[0]) + "," +
           sci(e[1]) + "," + sci(e[2]);
  };
  for (size_t i = 0; i < times_us.size(); ++i) {
    s += row(times_us[i], mean[i], sem[i]);
    if (groups) s += ",-1";
    s += "\n";
  }
  for (size_t g = 0; g < group_mean.size(); ++g) {
    for (size_t i = 0; i < times_us.size(); ++i) {
      s += row(times_us[i], group_mean[g][i], group_sem[g][i]) + "," + std::to_string(g) + "\n";
    }
  }
  return s;
}

}  // namespace spinsim
