#ifndef SPINSIM_ERROR_HPP
#define SPINSIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace spinsim {

// Error categories map onto CLI exit codes: config -> 2, capacity -> 3.
enum class ErrorKind { config, capacity, degeneracy, singular, numeric };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
  if (!cond) throw Error(kind, msg);
}

}  // namespace spinsim

#endif
