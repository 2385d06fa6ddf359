#include "spinsim/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "spinsim/error.hpp"
#include "spinsim/io.hpp"
#include "spinsim/rng.hpp"

namespace spinsim {

void GeometrySpec::validate() const {
  require(n_spins >= 2, ErrorKind::config, "geometry: n_spins must be >= 2");
  require(mean_spacing > 0.0, ErrorKind::config, "geometry: mean_spacing must be > 0");
  require(thickness_fwhm >= 0.0, ErrorKind::config, "geometry: thickness_fwhm must be >= 0");
}

SpinConfiguration sample_positions(const GeometrySpec& spec) {
  spec.validate();
  SpinConfiguration cfg;
  cfg.geometry = spec;
  cfg.positions.reserve(spec.n_spins);

  if (spec.mode == GeometryMode::lattice2d) {
    const int k = static_cast<int>(std::ceil(std::sqrt(double(spec.n_spins))));
    for (int i = 0; i < spec.n_spins; ++i) {
      cfg.positions.emplace_back((i % k) * spec.mean_spacing, (i / k) * spec.mean_spacing, 0.0);
    }
    return cfg;
  }

  const double box = spec.mean_spacing * std::sqrt(double(spec.n_spins));
  const double sigma_z = spec.thickness_fwhm / (2.0 * std::sqrt(2.0 * std::log(2.0)));
  Pcg32 rng(substream_seed(spec.seed, 0xA5A5u), substream_seed(spec.seed, 0x5A5Au));
  const double min_sep2 = spec.min_separation * spec.min_separation;

  for (int i = 0; i < spec.n_spins; ++i) {
    for (int attempt = 0;; ++attempt) {
      require(attempt < 10000, ErrorKind::config,
              "sample_positions: cannot satisfy the minimum separation floor");
      Eigen::Vector3d p(rng.uniform() * box, rng.uniform() * box,
                        sigma_z > 0.0 ? rng.gaussian() * sigma_z : 0.0);
      bool ok = true;
      for (const auto& q : cfg.positions) {
        if ((p - q).squaredNorm() < min_sep2) { ok = false; break; }
      }
      if (ok) { cfg.positions.push_back(p); break; }
      ++cfg.resample_count;
    }
  }
  return cfg;
}

nlohmann::json SpinConfiguration::to_json() const {
  nlohmann::json j;
  j["geometry"] = {
      {"mode", geometry.mode == GeometryMode::lattice2d ? "lattice2d" : "disordered2d"},
      {"n_spins", geometry.n_spins},
      {"mean_spacing_nm", geometry.mean_spacing},
      {"thickness_fwhm_nm", geometry.thickness_fwhm},
      {"min_separation_nm", geometry.min_separation},
      {"seed", geometry.seed}};
  j["resample_count"] = resample_count;
  auto& pos = j["positions_nm"] = nlohmann::json::array();
  for (const auto& p : positions) pos.push_back({p.x(), p.y(), p.z()});
  return j;
}

SpinConfiguration SpinConfiguration::from_json(const nlohmann::json& j) {
  SpinConfiguration cfg;
  const auto& g = j.at("geometry");
  cfg.geometry.mode = g.at("mode").get<std::string>() == "lattice2d" ? GeometryMode::lattice2d
                                                                     : GeometryMode::disordered2d;
  cfg.geometry.n_spins = g.at("n_spins").get<int>();
  cfg.geometry.mean_spacing = g.at("mean_spacing_nm").get<double>();
  cfg.geometry.thickness_fwhm = g.at("thickness_fwhm_nm").get<double>();
  cfg.geometry.min_separation = g.value("min_separation_nm", 1.0);
  cfg.geometry.seed = g.at("seed").get<uint64_t>();
  cfg.resample_count = j.value("resample_count", 0);
  for (const auto& p : j.at("positions_nm")) {
    cfg.positions.emplace_back(p.at(0).get<double>(), p.at(1).get<double>(), p.at(2).get<double>());
  }
  return cfg;
}

CouplingMatrix build_couplings(const SpinConfiguration& config, const NVSpinParams& params,
                               const FieldConfig& field) {
  const int n = static_cast<int>(config.positions.size());
  require(n >= 2, ErrorKind::config, "build_couplings: need at least 2 spins");
  DressedNV d = dress(params, field);

  CouplingMatrix m;
  m.n_spins = n;
  m.j_heis = Eigen::MatrixXd::Zero(n, n);
  m.j_twist = Eigen::MatrixXd::Zero(n, n);
  m.single_z = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Eigen::Vector3d r = config.positions[j] - config.positions[i];
      require(r.norm() > 0.0, ErrorKind::singular,
              "build_couplings: coincident positions for pair (" + std::to_string(i) + "," +
                  std::to_string(j) + ")");
      PairCoupling pc = pair_coupling(d, d, r);
      m.j_heis(i, j) = m.j_heis(j, i) = pc.j_heis();
      m.j_twist(i, j) = m.j_twist(j, i) = pc.j_twist();
      m.single_z(i) += pc.j_z1;
      m.single_z(j) += pc.j_z2;
    }
  }
  return m;
}

nlohmann::json CouplingMatrix::to_json() const {
  nlohmann::json j;
  j["n_spins"] = n_spins;
  auto& h = j["j_heis_rad_us"] = nlohmann::json::array();
  auto& t = j["j_twist_rad_us"] = nlohmann::json::array();
  for (int i = 0; i < n_spins; ++i) {
    for (int k = i + 1; k < n_spins; ++k) {
      h.push_back(j_heis(i, k));
      t.push_back(j_twist(i, k));
    }
  }
  auto& z = j["single_z_rad_us"] = nlohmann::json::array();
  for (int i = 0; i < n_spins; ++i) z.push_back(single_z(i));
  return j;
}

CoordinationReport coordination(const CouplingMatrix& m, CouplingWeight w) {
  const int n = m.n_spins;
  require(n >= 2, ErrorKind::config, "coordination: need at least 2 spins");
  CoordinationReport rep;
  rep.z.resize(n);
  rep.tertile.assign(n, 0);

  auto weight = [&](int i, int j) {
    switch (w) {
      case CouplingWeight::twist: return std::abs(m.j_twist(i, j));
      case CouplingWeight::heis: return std::abs(m.j_heis(i, j));
      case CouplingWeight::total:
      default: {
        const double xy = m.j_heis(i, j);
        const double zz = m.j_twist(i, j) + xy;
        return std::sqrt(2.0 * xy * xy + zz * zz);
      }
    }
  };

  for (int i = 0; i < n; ++i) {
    double s1 = 0.0, s2 = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const double a = weight(i, j);
      s1 += a;
      s2 += a * a;
    }
    require(s2 > 0.0, ErrorKind::numeric,
            "coordination: all couplings of spin " + std::to_string(i) + " are zero");
    rep.z[i] = s1 * s1 / s2;
  }

  // tertiles by sorted rank, ties broken by index; sizes differ by at most 1
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return rep.z[a] != rep.z[b] ? rep.z[a] < rep.z[b] : a < b;
  });
  const int base = n / 3, extra = n % 3;
  // distribute the remainder low-first so group sizes differ by <= 1
  const int n_low = base + (extra > 0 ? 1 : 0);
  const int n_mid = base + (extra > 1 ? 1 : 0);
  for (int r = 0; r < n; ++r) {
    rep.tertile[order[r]] = r < n_low ? 0 : (r < n_low + n_mid ? 1 : 2);
  }
  return rep;
}

std::array<int, 3> CoordinationReport::tertile_sizes() const {
  std::array<int, 3> s{0, 0, 0};
  for (int t : tertile) s[t]++;
  return s;
}

std::string CoordinationReport::histogram_csv(int n_bins) const {
  const double zmax = *std::max_element(z.begin(), z.end());
  const double zmin = *std::min_element(z.begin(), z.end());
  const double width = (zmax > zmin) ? (zmax - zmin) / n_bins : 1.0;
  std::vector<int> count(n_bins, 0);
  for (double v : z) {
    int b = std::min(n_bins - 1, static_cast<int>((v - zmin) / width));
    count[b]++;
  }
  std::string s = "z,count\n";
  for (int b = 0; b < n_bins; ++b) {
    s += sci(zmin + (b + 0.5) * width, 10) + "," + std::to_string(count[b]) + "\n";
  }
  return s;
}

DimerPairing dimer_pairing(const CouplingMatrix& m) {
  const int n = m.n_spins;
  require(n >= 2, ErrorKind::config, "dimer_pairing: need at least 2 spins");

  struct Cand { double w; int i, j; };
  std::vector<Cand> cands;
  cands.reserve(size_t(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) cands.push_back({std::abs(m.j_twist(i, j)), i, j});
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.w != b.w) return a.w > b.w;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });

  DimerPairing out;
  std::vector<char> taken(n, 0);
  for (const auto& c : cands) {
    if (taken[c.i] || taken[c.j]) continue;
    taken[c.i] = taken[c.j] = 1;
    out.pairs.push_back({c.i, c.j});
    out.selected_strength.push_back(c.w);
  }
  for (int i = 0; i < n; ++i)
    if (!taken[i]) out.singletons.push_back(i);
  return out;
}

}  // namespace spinsim
