#include "hopf/errors.hpp"

namespace hopf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_family: return "InvalidFamily";
    case ErrorKind::radius_out_of_domain: return "RadiusOutOfDomain";
    case ErrorKind::excluded_radius: return "ExcludedRadius";
    case ErrorKind::unsupported_family: return "UnsupportedFamily";
    case ErrorKind::invalid_order: return "InvalidOrder";
    case ErrorKind::degenerate_leading_coefficient: return "DegenerateLeadingCoefficient";
    case ErrorKind::endpoint_root: return "EndpointRoot";
    case ErrorKind::root_out_of_range: return "RootOutOfRange";
    case ErrorKind::probes_collide: return "ProbesCollide";
    case ErrorKind::no_exact_count_guarantee: return "NoExactCountGuarantee";
    case ErrorKind::not_applicable: return "NotApplicable";
    case ErrorKind::no_biharmonic_tube: return "NoBiharmonicTube";
    case ErrorKind::degenerate_tube: return "DegenerateTube";
    case ErrorKind::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace hopf
