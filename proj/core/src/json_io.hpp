#pragma once

#include "json.hpp"

#include "jordan/algebra.hpp"

namespace jordan::detail {

nlohmann::json algebra_to_json(const Algebra& a);

}  // namespace jordan::detail
