#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopf {

enum class ErrorKind {
  invalid_family,
  radius_out_of_domain,
  excluded_radius,
  unsupported_family,
  invalid_order,
  degenerate_leading_coefficient,
  endpoint_root,
  root_out_of_range,
  probes_collide,
  no_exact_count_guarantee,
  not_applicable,
  no_biharmonic_tube,
  degenerate_tube,
  invalid_argument,
};

std::string_view to_string(ErrorKind kind);

class HopfError : public std::runtime_error {
 public:
  HopfError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hopf
