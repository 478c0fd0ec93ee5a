#include "checks.hpp"

#include <algorithm>

namespace mocktheta {

const std::vector<CheckInfo>& list_checks() {
  static const std::vector<CheckInfo> reg = [] {
    std::vector<CheckInfo> r;
    checks::add_theta(r);
    checks::add_phi(r);
    checks::add_sec3(r);
    checks::add_kernel(r);
    checks::add_completion(r);
    checks::add_g(r);
    checks::add_exact(r);
    return r;
  }();
  return reg;
}

const CheckInfo& find_check(const std::string& name) {
  const auto& reg = list_checks();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const CheckInfo& c) { return c.name == name; });
  if (it == reg.end()) throw UnknownCheck("unknown check '" + name + "'");
  return *it;
}

}  // namespace mocktheta
