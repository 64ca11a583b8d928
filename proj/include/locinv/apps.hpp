#pragma once

#include <string>
#include <vector>

#include "locinv/framework.hpp"

namespace locinv {

/// kostka, rimhook, refine, refine-weighted, brick.
const std::vector<std::string>& app_names();

/// Throws std::invalid_argument for an unknown name.
LocalSystem system_for(const std::string& app);

/// Apps whose A_n satisfies the sorting condition (rows are partitions).
bool has_square_form(const std::string& app);

}  // namespace locinv
