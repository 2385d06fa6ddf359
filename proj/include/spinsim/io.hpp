#ifndef SPINSIM_IO_HPP
#define SPINSIM_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

// Byte-stable text output: scientific notation with a fixed number of
// significant digits, '.' decimal point, '\n' line endings. All CSV emitted
// by the toolkit goes through sci() so output digests are reproducible.

namespace spinsim {

// x formatted as scientific with `sig` significant digits (sig >= 1).
std::string sci(double x, int sig = 10);

std::string sha256_hex(const void* data, size_t len);
inline std::string sha256_hex(const std::string& s) { return sha256_hex(s.data(), s.size()); }

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace spinsim

#endif
