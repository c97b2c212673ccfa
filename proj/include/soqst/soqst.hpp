// Copyright 2026 The soqst Authors
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

#include "soqst/errors.hpp"
#include "soqst/evolve.hpp"
#include "soqst/experiment.hpp"
#include "soqst/io.hpp"
#include "soqst/model.hpp"
#include "soqst/nelder_mead.hpp"
#include "soqst/optimize.hpp"
#include "soqst/pulsesim.hpp"
#include "soqst/qmat.hpp"
#include "soqst/seed.hpp"
#include "soqst/transfer.hpp"
