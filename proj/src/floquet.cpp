#include "spinsim/floquet.hpp"

#include <cmath>
#include <numeric>

#include "spinsim/error.hpp"
#include "spinsim/nvham.hpp"
#include "spinsim/units.hpp"

namespace spinsim {

Eigen::Vector3d pulse_axis_vector(PulseAxis a) {
  switch (a) {
    case PulseAxis::plus_x: return {1, 0, 0};
    case PulseAxis::minus_x: return {-1, 0, 0};
    case PulseAxis::plus_y: return {0, 1, 0};
    case PulseAxis::minus_y:
    default: return {0, -1, 0};
  }
}

const char* pulse_axis_name(PulseAxis a) {
  switch (a) {
    case PulseAxis::plus_x: return "+X";
    case PulseAxis::minus_x: return "-X";
    case PulseAxis::plus_y: return "+Y";
    case PulseAxis::minus_y:
    default: return "-Y";
  }
}

static PulseAxis axis_from_name(const std::string& s) {
  if (s == "+X") return PulseAxis::plus_x;
  if (s == "-X") return PulseAxis::minus_x;
  if (s == "+Y") return PulseAxis::plus_y;
  if (s == "-Y") return PulseAxis::minus_y;
  throw Error(ErrorKind::config, "pulse axis must be one of +X,-X,+Y,-Y; got '" + s + "'");
}

double PulseSequence::period_ns() const {
  double t = 0.0;
  for (const auto& e : elements) {
    if (std::holds_alternative<Pulse>(e)) t += std::get<Pulse>(e).duration_ns;
    else t += std::get<Wait>(e).duration_ns;
  }
  return t;
}

static Eigen::Matrix3d axis_rotation(const Eigen::Vector3d& axis, double angle) {
  return Eigen::AngleAxisd(angle, axis).toRotationMatrix();
}

double PulseSequence::net_rotation_defect() const {
  Eigen::Matrix3d r = Eigen::Matrix3d::Identity();
  for (const auto& e : elements) {
    if (std::holds_alternative<Pulse>(e)) {
      const auto& p = std::get<Pulse>(e);
      r = axis_rotation(pulse_axis_vector(p.axis), p.rotation) * r;
    }
  }
  return (r - Eigen::Matrix3d::Identity()).norm();
}

nlohmann::json PulseSequence::to_json() const {
  nlohmann::json j;
  auto& arr = j["elements"] = nlohmann::json::array();
  for (const auto& e : elements) {
    if (std::holds_alternative<Pulse>(e)) {
      const auto& p = std::get<Pulse>(e);
      arr.push_back({{"type", "pulse"},
                     {"axis", pulse_axis_name(p.axis)},
                     {"rotation_pi_units", p.rotation / kPi},
                     {"duration_ns", p.duration_ns}});
    } else {
      arr.push_back({{"type", "wait"}, {"duration_ns", std::get<Wait>(e).duration_ns}});
    }
  }
  return j;
}

PulseSequence PulseSequence::from_json(const nlohmann::json& j) {
  PulseSequence seq;
  for (const auto& e : j.at("elements")) {
    const std::string type = e.at("type").get<std::string>();
    if (type == "pulse") {
      Pulse p;
      p.axis = axis_from_name(e.at("axis").get<std::string>());
      p.rotation = e.at("rotation_pi_units").get<double>() * kPi;
      p.duration_ns = e.at("duration_ns").get<double>();
      require(p.duration_ns > 0.0, ErrorKind::config, "pulse duration must be > 0");
      seq.elements.emplace_back(p);
    } else if (type == "wait") {
      seq.elements.emplace_back(Wait{e.at("duration_ns").get<double>()});
    } else {
      throw Error(ErrorKind::config, "sequence element type must be 'pulse' or 'wait'");
    }
  }
  return seq;
}

namespace {

// X and Y phase pattern of XY8; XY16 appends the phase-inverted copy.
constexpr PulseAxis kXy8[8] = {PulseAxis::plus_x,  PulseAxis::plus_y,  PulseAxis::plus_x,
                               PulseAxis::plus_y,  PulseAxis::plus_y,  PulseAxis::plus_x,
                               PulseAxis::plus_y,  PulseAxis::plus_x};
constexpr PulseAxis kXy8Inv[8] = {PulseAxis::minus_x, PulseAxis::minus_y, PulseAxis::minus_x,
                                  PulseAxis::minus_y, PulseAxis::minus_y, PulseAxis::minus_x,
                                  PulseAxis::minus_y, PulseAxis::minus_x};

PulseSequence build_train(const std::vector<PulseAxis>& axes, double t_pi_x, double t_pi_y,
                          double rot_x, double tau) {
  require(t_pi_x > 0.0 && t_pi_y > 0.0, ErrorKind::config, "pulse durations must be > 0");
  require(tau >= 0.0, ErrorKind::config, "pulse spacing must be >= 0");
  PulseSequence seq;
  for (PulseAxis a : axes) {
    const bool is_x = (a == PulseAxis::plus_x || a == PulseAxis::minus_x);
    Pulse p;
    p.axis = a;
    p.rotation = is_x ? rot_x : kPi;
    p.duration_ns = is_x ? t_pi_x * (rot_x / kPi) : t_pi_y;
    seq.elements.emplace_back(p);
    if (tau > 0.0) seq.elements.emplace_back(Wait{tau});
  }
  return seq;
}

}  // namespace

PulseSequence PulseSequence::xy8(double t_pi_ns, double tau_ns) {
  std::vector<PulseAxis> axes(kXy8, kXy8 + 8);
  return build_train(axes, t_pi_ns, t_pi_ns, kPi, tau_ns);
}

PulseSequence PulseSequence::xy16(double t_pi_ns, double tau_ns) {
  std::vector<PulseAxis> axes(kXy8, kXy8 + 8);
  axes.insert(axes.end(), kXy8Inv, kXy8Inv + 8);
  return build_train(axes, t_pi_ns, t_pi_ns, kPi, tau_ns);
}

PulseSequence PulseSequence::xy16_triple_x(double t_pi_ns, double tau_ns) {
  return xy16_triple_x(t_pi_ns, t_pi_ns, tau_ns);
}

PulseSequence PulseSequence::xy16_triple_x(double t_pi_x_ns, double t_pi_y_ns, double tau_ns) {
  std::vector<PulseAxis> axes(kXy8, kXy8 + 8);
  axes.insert(axes.end(), kXy8Inv, kXy8Inv + 8);
  return build_train(axes, t_pi_x_ns, t_pi_y_ns, 3.0 * kPi, tau_ns);
}

FrameFractions frame_fractions(const PulseSequence& seq, int min_substeps) {
  const double period = seq.period_ns();
  require(period > 0.0, ErrorKind::config, "frame_fractions: zero-duration period");

  Eigen::Vector3d n(0.0, 0.0, 1.0);  // toggling-frame image of sigma^z
  Eigen::Vector3d acc(0.0, 0.0, 0.0);
  for (const auto& e : seq.elements) {
    if (std::holds_alternative<Wait>(e)) {
      const double d = std::get<Wait>(e).duration_ns;
      acc += d * n.cwiseProduct(n);
      continue;
    }
    const auto& p = std::get<Pulse>(e);
    const Eigen::Vector3d axis = pulse_axis_vector(p.axis);
    const int nsub = std::max(min_substeps,
                              static_cast<int>(std::ceil(std::abs(p.rotation) / kPi)) * min_substeps);
    const double dphi = p.rotation / nsub;
    const double dt = p.duration_ns / nsub;
    for (int k = 0; k < nsub; ++k) {
      const Eigen::Vector3d nk = axis_rotation(axis, (k + 0.5) * dphi) * n;
      acc += dt * nk.cwiseProduct(nk);
    }
    n = axis_rotation(axis, p.rotation) * n;
  }

  FrameFractions f;
  f.fx = acc.x() / period;
  f.fy = acc.y() / period;
  f.fz = acc.z() / period;
  f.net_identity_ok = seq.net_rotation_defect() < 1e-9;
  return f;
}

std::optional<double> EngineeredHamiltonian::lambda(double tol) const {
  if (std::abs(gy - 1.0 / 3.0) > tol) return std::nullopt;
  const double l1 = gz - 1.0 / 3.0;
  const double l2 = 1.0 / 3.0 - gx;
  if (std::abs(l1 - l2) > tol) return std::nullopt;
  return l1;
}

nlohmann::json EngineeredHamiltonian::to_json() const {
  nlohmann::json j{{"heis_scale", heis_scale}, {"gx", gx}, {"gy", gy}, {"gz", gz},
                   {"reversed", reversed}};
  if (auto l = lambda()) j["lambda"] = *l;
  return j;
}

EngineeredHamiltonian engineer(const FrameFractions& f, bool reversed) {
  EngineeredHamiltonian h;
  h.heis_scale = 1.0;
  if (reversed) {
    // pi/2 frame swap x <-> z; for the two-axis-twisting family this negates
    // the twist anisotropy while the Heisenberg part stays put
    h.gx = f.fz; h.gy = f.fy; h.gz = f.fx;
  } else {
    h.gx = f.fx; h.gy = f.fy; h.gz = f.fz;
  }
  h.reversed = reversed;
  return h;
}

FrameFractions epsilon_family(double eps) {
  require(eps >= -1.0 / 6.0 - 1e-12 && eps <= 1.0 / 3.0 + 1e-12, ErrorKind::config,
          "epsilon_family: eps must lie in [-1/6, 1/3]");
  FrameFractions f;
  f.fx = 1.0 / 3.0 - eps;
  f.fy = 1.0 / 3.0 - eps;
  f.fz = 1.0 / 3.0 + 2.0 * eps;
  return f;
}

EngineeredHamiltonian xyz_twist(double lam, double y_anis) {
  // traceless twist coefficients, then shift by 1/3 to the g convention
  const double tx = -lam + y_anis;
  const double ty = -2.0 * y_anis;
  const double tz = lam + y_anis;
  EngineeredHamiltonian h;
  h.gx = 1.0 / 3.0 + tx;
  h.gy = 1.0 / 3.0 + ty;
  h.gz = 1.0 / 3.0 + tz;
  return h;
}

EngineeredHamiltonian xyz_target(XyzTarget t) {
  switch (t) {
    case XyzTarget::tat:
      return xyz_twist(2.0 / 9.0, 0.0);
    case XyzTarget::xyz_paper:
    default:
      return xyz_twist(2.0 / 9.0, (2.0 / 9.0) * (5.0 / 64.0));
  }
}

DimerSpectrum dimer_spectrum(const EngineeredHamiltonian& h, double j_d, double j_heis) {
  require(std::isfinite(j_d), ErrorKind::config, "dimer_spectrum: j_d must be finite");
  DimerSpectrum s;
  // normalize the traceless twist part so the two-axis-twisting form becomes
  // (XX - ZZ); the scale (gz - gx)/2 is the lambda of the family
  const double scale = 0.5 * (h.gz - h.gx);
  double cg[3] = {0.0, 0.0, 0.0};
  if (std::abs(scale) > 1e-15) {
    cg[0] = -(h.gx - 1.0 / 3.0) / scale;
    cg[1] = -(h.gy - 1.0 / 3.0) / scale;
    cg[2] = -(h.gz - 1.0 / 3.0) / scale;
  }
  // Bell energies of cx XX + cy YY + cz ZZ (simultaneous eigenstates with
  // eigenvalues +-1 per term)
  const double cx = j_d * cg[0] + j_heis;
  const double cy = j_d * cg[1] + j_heis;
  const double cz = j_d * cg[2] + j_heis;
  s.eps[0] = -cx - cy - cz;
  s.eps[1] = cx + cy - cz;
  s.eps[2] = cx - cy + cz;
  s.eps[3] = -cx + cy + cz;
  s.omega_x = s.eps[1] - s.eps[2];
  s.omega_z = s.eps[2] - s.eps[3];

  const double thr = 1e-12 * std::max({std::abs(s.omega_x), std::abs(s.omega_z), std::abs(j_d)});
  const bool defined = std::abs(s.omega_x) > thr && std::abs(s.omega_z) > thr;
  if (defined) {
    s.rephase_ratio_xz = 1.0 + s.omega_x / s.omega_z;
    s.rephase_ratio_zx = 1.0 + s.omega_z / s.omega_x;
  }
  return s;
}

SyncReport nuclear_sync_check(const PulseSequence& seq, const NuclearCouplingParams& nuc) {
  require(nuc.t_nuc_us > 0.0, ErrorKind::config, "nuclear_sync_check: T_Nuc not computed");
  SyncReport rep;
  rep.ratio = ns_to_us(seq.period_ns()) / nuc.t_nuc_us;

  const double nearest_int = std::round(rep.ratio);
  rep.flagged = nearest_int >= 1.0 && std::abs(rep.ratio - nearest_int) <= 0.05;

  double best = 1e300;
  for (int m = 1; m <= 8; ++m) {
    const int kmax = static_cast<int>(std::ceil(rep.ratio * m)) + 1;
    for (int k = 0; k <= kmax; ++k) {
      if (std::gcd(k, m) != 1 && !(k == 0 && m == 1)) continue;
      const double v = double(k) / m;
      const double diff = std::abs(rep.ratio - v);
      if (diff < best - 1e-15) {
        best = diff;
        rep.k = k;
        rep.m = m;
        rep.knm = v;
      }
    }
  }
  return rep;
}

}  // namespace spinsim
