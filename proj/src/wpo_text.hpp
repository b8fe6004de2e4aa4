#pragma once

#include <functional>

#include "cursor.hpp"
#include "thetawpo/wpo.hpp"

namespace thetawpo::detail {

using HoleReader = std::function<std::uint64_t(Cursor&)>;

/// Reads one element shaped by `w`; hole values come from `hole`.
WElement parse_element(const WExpr& w, Cursor& c, const HoleReader& hole);

}  // namespace thetawpo::detail
