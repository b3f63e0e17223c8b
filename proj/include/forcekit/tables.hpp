#pragma once

#include <string>

#include "forcekit/suites.hpp"

namespace forcekit {

/// Summary table of F (which = 1) or F+ (which = 2) per family row: the
/// published formula and mr-equality column next to computed agreement
/// over the default instances and the instances where equality was
/// observed. Throws std::invalid_argument for other values of `which`.
std::string render_table(int which, const SuiteOptions& options);

}  // namespace forcekit
