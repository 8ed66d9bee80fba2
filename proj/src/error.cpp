#include "tamehall/error.hpp"

namespace tamehall {

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return 3;
    case ErrorKind::Infeasible: return 2;
    case ErrorKind::Verification: return 4;
  }
  return 4;
}

Limits& limits() noexcept {
  static Limits instance;
  return instance;
}

}  // namespace tamehall
