#pragma once

// Umbrella header. serialize.hpp additionally needs the vendored json.hpp on the include path.

#include "cyclo/avoidance.hpp"
#include "cyclo/cycnum.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/format.hpp"
#include "cyclo/house.hpp"
#include "cyclo/laurent.hpp"
#include "cyclo/loxton.hpp"
#include "cyclo/parser.hpp"
#include "cyclo/ratfunc.hpp"
#include "cyclo/roots.hpp"
#include "cyclo/special.hpp"
#include "cyclo/witness.hpp"
