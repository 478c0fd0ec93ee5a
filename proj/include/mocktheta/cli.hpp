#pragma once

#include "mocktheta/numerics.hpp"

#include <iosfwd>
#include <string>

namespace mocktheta {

// "0.1+0.9i", "-0.31-0.07i", "1.1i", "2"
cplx parse_complex(const std::string& text);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mocktheta
