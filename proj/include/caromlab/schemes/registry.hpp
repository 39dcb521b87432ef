#pragma once

#include <memory>

#include "caromlab/schemes/scheme.hpp"

namespace caromlab::schemes {

// Builds a scheme from its config-file description:
//   {"name": "pad" | "counter" | "conjugate", ...per-scheme parameters...}
// Unknown names throw std::invalid_argument.
std::unique_ptr<Scheme> make_scheme(const nlohmann::json& config);

std::vector<std::string> scheme_names();

}  // namespace caromlab::schemes
