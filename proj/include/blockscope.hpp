// Copyright 2026 The Blockscope Authors
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

// Umbrella header.

#ifndef BLOCKSCOPE_HPP
#define BLOCKSCOPE_HPP

#include "blockscope/annotation.hpp"
#include "blockscope/area.hpp"
#include "blockscope/cli.hpp"
#include "blockscope/delay.hpp"
#include "blockscope/device.hpp"
#include "blockscope/fixtures.hpp"
#include "blockscope/graph.hpp"
#include "blockscope/netlist.hpp"
#include "blockscope/netlist_io.hpp"
#include "blockscope/oracles.hpp"
#include "blockscope/parallel.hpp"
#include "blockscope/power.hpp"
#include "blockscope/profile.hpp"
#include "blockscope/report.hpp"
#include "blockscope/text_format.hpp"
#include "blockscope/types.hpp"

#endif  // BLOCKSCOPE_HPP
