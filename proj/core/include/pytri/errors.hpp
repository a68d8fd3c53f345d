#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pytri {

/// Failure categories reported by the library. Everything except
/// `invariant_violation` describes bad input; `invariant_violation` means an
/// internal consistency check failed and indicates a bug.
enum class Errc {
  invalid_argument,
  degenerate_triangle,
  not_pythagorean,
  not_primitive,
  invalid_params,
  invalid_sequence,
  root_node,
  not_coprime,
  invalid_ratio,
  not_descartes,
  no_real_solution,
  inconsistent_seed,
  precondition,
  invariant_violation,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }
  bool is_internal() const noexcept { return code_ == Errc::invariant_violation; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace pytri
