#pragma once

#include <string>

#include "kpalg/kgraph.hpp"

namespace kpalg {

/// Parses the line-oriented `.kg` presentation and validates it.
///
///   kgraph <name> rank <k>
///   vertex <id>
///   edge <id> color <i> from <source> to <range>
///   square <a> <b> ~ <c> <d>
///
/// `#` starts a comment. Unknown directives are errors.
KGraph parse_kg(const std::string& text);
KGraph load_kg(const std::string& path);

std::string write_kg(const KGraph& g);

}  // namespace kpalg
