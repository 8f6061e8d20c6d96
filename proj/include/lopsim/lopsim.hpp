/**
 * Copyright 2026 The lopsim developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LOPSIM_LOPSIM_HPP
#define LOPSIM_LOPSIM_HPP

#include "lopsim/dataset_io.hpp"
#include "lopsim/detection.hpp"
#include "lopsim/faddeeva.hpp"
#include "lopsim/metrics.hpp"
#include "lopsim/network.hpp"
#include "lopsim/oracle.hpp"
#include "lopsim/sweep.hpp"
#include "lopsim/twophoton.hpp"
#include "lopsim/wavepacket.hpp"

#endif
