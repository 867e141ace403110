// Copyright 2026 The Werner Decomposition Authors
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

// Umbrella header.

#include "werner/decomposition.hpp"
#include "werner/dense_matrix.hpp"
#include "werner/errors.hpp"
#include "werner/gf2.hpp"
#include "werner/io.hpp"
#include "werner/linalg.hpp"
#include "werner/partition.hpp"
#include "werner/pauli.hpp"
#include "werner/sweep.hpp"
#include "werner/verification.hpp"
#include "werner/werner_state.hpp"
