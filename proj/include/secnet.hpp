// Copyright 2026 The secnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "secnet/cli.hpp"
#include "secnet/connectivity.hpp"
#include "secnet/construction.hpp"
#include "secnet/error.hpp"
#include "secnet/game.hpp"
#include "secnet/graph.hpp"
#include "secnet/io.hpp"
#include "secnet/metrics.hpp"
#include "secnet/oracle.hpp"
#include "secnet/rational.hpp"
#include "secnet/reproduce.hpp"
#include "secnet/solve.hpp"
