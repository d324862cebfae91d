// Copyright 2026 The qslkit Authors
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

#include "qslkit/density_matrix.hpp"
#include "qslkit/dynamics.hpp"
#include "qslkit/errors.hpp"
#include "qslkit/generators.hpp"
#include "qslkit/io.hpp"
#include "qslkit/linalg.hpp"
#include "qslkit/lz_model.hpp"
#include "qslkit/qsl_metrics.hpp"
#include "qslkit/quadrature.hpp"
#include "qslkit/s_parameter.hpp"
#include "qslkit/state_prep.hpp"
#include "qslkit/thermal.hpp"
#include "qslkit/tomography.hpp"
