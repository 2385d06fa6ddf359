#ifndef SPINSIM_UNITS_HPP
#define SPINSIM_UNITS_HPP

// Internal unit conventions, used everywhere without exception:
//   angular frequency  rad/us   (1 MHz of ordinary frequency = 2*pi rad/us)
//   length             nm
//   magnetic field     gauss
//   time               us (pulse sequences carry ns, converted at the boundary)
// Dipolar couplings at ~17 nm spacing are then O(0.01..1) rad/us.

namespace spinsim {

inline constexpr double k2Pi = 6.283185307179586476925286766559;
inline constexpr double kPi = 3.1415926535897932384626433832795;

inline constexpr double mhz_to_rad_us(double f_mhz) { return k2Pi * f_mhz; }
inline constexpr double rad_us_to_mhz(double w) { return w / k2Pi; }
inline constexpr double ns_to_us(double t_ns) { return t_ns * 1e-3; }
inline constexpr double us_to_ns(double t_us) { return t_us * 1e3; }
inline constexpr double deg_to_rad(double d) { return d * kPi / 180.0; }

}  // namespace spinsim

#endif
