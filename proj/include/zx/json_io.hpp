#pragma once

#include "zx/diagram.hpp"

#include <string>

namespace zx {

std::string to_json(const Diagram& d);
Diagram     from_json(const std::string& text);

} // namespace zx
