#include "locinv/apps.hpp"

#include <algorithm>
#include <stdexcept>

#include "locinv/brick.hpp"
#include "locinv/kostka.hpp"
#include "locinv/refine.hpp"
#include "locinv/rimhook.hpp"

namespace locinv {

const std::vector<std::string>& app_names() {
  static const std::vector<std::string> names{"kostka", "rimhook", "refine", "refine-weighted", "brick"};
  return names;
}

LocalSystem system_for(const std::string& app) {
  if (app == "kostka") return kostka_system();
  if (app == "rimhook") return rimhook_system();
  if (app == "refine") return refine_system();
  if (app == "refine-weighted") return weighted_system();
  if (app == "brick") return obt_system();
  throw std::invalid_argument("unknown app '" + app + "'");
}

bool has_square_form(const std::string& app) {
  return app == "kostka" || app == "rimhook" || app == "brick";
}

}  // namespace locinv
