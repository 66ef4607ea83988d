#pragma once

#include <string_view>

#include "rhombus/pointset.hpp"

namespace rhombus {

// The two certificate data sets ship embedded so every verification runs
// offline with zero setup. `dump-data` re-emits the exact text.
std::string_view bundled_b154_text();
std::string_view bundled_b46_text();

const PointSet& bundled_b154();
const PointSet& bundled_b46();

}  // namespace rhombus
