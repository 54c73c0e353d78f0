// Copyright 2026 The conebound Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <string>

#include "conebound/compressor.hpp"
#include "conebound/model.hpp"

namespace conebound {

// "4x(3) <= x(4)" for c = (4, -1) at level 3; `flip` writes the sides the
// other way round ("5x(3) >= x(4)"), which reads better for lower bounds.
std::string format_inequality(const Constraint& c, bool flip = false);

// Numbered narrative of a compression run in sorted coordinates: the
// initialization, then per level the binding inequalities, the chosen value,
// the rescaling and the new partial solution, then the result line.
std::string narrate(const CompressOutput& out);

}  // namespace conebound
