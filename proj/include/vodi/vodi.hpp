// Copyright 2026 The vodi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "vodi/alpha.hpp"
#include "vodi/analysis.hpp"
#include "vodi/bundled.hpp"
#include "vodi/game.hpp"
#include "vodi/kernels.hpp"
#include "vodi/matrix.hpp"
#include "vodi/oracle.hpp"
#include "vodi/random_games.hpp"
#include "vodi/solvers.hpp"
#include "vodi/spec_io.hpp"
