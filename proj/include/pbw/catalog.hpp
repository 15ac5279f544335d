#pragma once

#include <map>
#include <string>
#include <vector>

#include "pbw/presentation.hpp"

namespace pbw {

using ExampleOptions = std::map<std::string, std::string>;

struct CatalogEntry {
  std::string key;
  std::string description;
  ExampleOptions options;  ///< effective options, defaults filled in
  Presentation presentation;
  bool laurent = false;  ///< passes validate_presentation(laurent)
  bool poisson = false;  ///< passes validate_presentation(poisson)
};

/// q_differential, q_dilatation, weyl, skew3d, quantum_space, witten, symplectic.
const std::vector<std::string>& catalog_keys();

/// Options: q_dilatation n, m (1 <= n <= m); weyl and quantum_space n (>= 2);
/// skew3d v (an affine combination of 1, x, y, z, default "z");
/// symplectic n (only 1). Throws UnknownExample or InvalidOptions.
CatalogEntry build_example(const std::string& key, const ExampleOptions& options = {});

}  // namespace pbw
