#include "pytri/errors.hpp"

namespace pytri {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::degenerate_triangle: return "degenerate-triangle";
    case Errc::not_pythagorean: return "not-pythagorean";
    case Errc::not_primitive: return "not-primitive";
    case Errc::invalid_params: return "invalid-params";
    case Errc::invalid_sequence: return "invalid-sequence";
    case Errc::root_node: return "root";
    case Errc::not_coprime: return "non-coprime";
    case Errc::invalid_ratio: return "invalid-ratio";
    case Errc::not_descartes: return "not-descartes";
    case Errc::no_real_solution: return "no-real-solution";
    case Errc::inconsistent_seed: return "inconsistent-seed";
    case Errc::precondition: return "precondition";
    case Errc::invariant_violation: return "invariant-violation";
  }
  return "unknown";
}

void fail(Errc code, const std::string& message) {
  std::string what(to_string(code));
  what += ": ";
  what += message;
  throw Error(code, what);
}

}  // namespace pytri
