#pragma once

#include <stdexcept>
#include <string>

namespace mpec {

// Thrown on broken preconditions and on internal invariant failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invariant checks stay on in release builds; they guard contracts whose
// violation would silently corrupt approximation guarantees.
inline void internal_check(bool ok, const char* what) {
  if (!ok) throw Error(std::string("internal invariant violated: ") + what);
}

}  // namespace mpec
