// Copyright 2026 The qpart authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "qpart/baselines.hpp"
#include "qpart/circuit.hpp"
#include "qpart/ea.hpp"
#include "qpart/error.hpp"
#include "qpart/experiment.hpp"
#include "qpart/io.hpp"
#include "qpart/network.hpp"
#include "qpart/operators.hpp"
#include "qpart/oracle.hpp"
#include "qpart/rng.hpp"
#include "qpart/run_record.hpp"
#include "qpart/sa.hpp"
#include "qpart/schedule.hpp"
