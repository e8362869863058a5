/*
   Copyright 2026, the sincfrac authors.

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "sincfrac/quadrature.hpp"

#include <cmath>
#include <sstream>

namespace sincfrac {

void QuadratureConfig::validate() const {
    auto fail = [](const char* key, double value, const char* range) {
        std::ostringstream msg;
        msg << key << " must be " << range << " (got " << value << ")";
        throw ConfigError(msg.str());
    };
    if (!(rel_tol > 0.0) || !std::isfinite(rel_tol)) fail("rel_tol", rel_tol, "positive");
    if (!(abs_tol > 0.0) || !std::isfinite(abs_tol)) fail("abs_tol", abs_tol, "positive");
    if (max_panels < 1) fail("max_panels", max_panels, ">= 1");
}

}  // namespace sincfrac
