#pragma once

#include <stdexcept>
#include <string>

namespace geosub {

// Bad arguments: non-unit axes, mismatched base points, malformed files.
class invalid_input : public std::invalid_argument {
public:
  explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

// Geometrically meaningless requests: antipodal log, cut-locus interpolation.
class domain_error : public std::domain_error {
public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// A construction that exists in general but fails for this configuration
// (vanishing ASA denominator, unsolvable arcsin, coincident vertices).
class degenerate_configuration : public domain_error {
public:
  explicit degenerate_configuration(const std::string& what) : domain_error(what) {}
};

// Global degeneracy tolerance; GEOSUB_EPS overrides the 1e-12 default.
double degeneracy_eps();

}  // namespace geosub
