#pragma once

#include <string>

#include <json.hpp>

#include "tiltrich/varietylab.hpp"

namespace tiltrich::cli {

// Row-major array of strings such as "3/2" or "1"; plain integers are accepted on input.
nlohmann::ordered_json matrix_to_json(const ExactMatrix<Rational>& m);
ExactMatrix<Rational> matrix_from_json(const nlohmann::json& j);
ExactMatrix<Rational> read_matrix_file(const std::string& path);

Rational parse_rational(const std::string& text);

}  // namespace tiltrich::cli
