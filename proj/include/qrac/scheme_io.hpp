#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "qrac/schemes.hpp"

namespace qrac {

/// Scheme file format: JSON with keys label, n, m, states (bitstring ->
/// {"amplitudes": [[re,im],...]} or {"matrix": [[[re,im],...],...]}), and
/// povms (array of {"e0": matrix}); e1 is derived as I - e0 on load.
///
/// Structural problems raise SchemeFormatError with the failing key path;
/// numeric invariant violations raise InvariantViolation with the key path
/// and the residual.
QracScheme scheme_from_json(const nlohmann::json& j);
nlohmann::json scheme_to_json(const QracScheme& scheme);

QracScheme load_scheme(const std::filesystem::path& path);
void save_scheme(const QracScheme& scheme, const std::filesystem::path& path);

}  // namespace qrac
