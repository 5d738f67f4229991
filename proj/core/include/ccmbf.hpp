// SPDX-License-Identifier: Apache-2.0
//
// ccmbf: reduced-rank constrained constant modulus adaptive beamforming
// Copyright (C) 2026 The ccmbf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef CCMBF_HPP
#define CCMBF_HPP

#include "ccmbf/array_model.hpp"
#include "ccmbf/complexity.hpp"
#include "ccmbf/experiment.hpp"
#include "ccmbf/fullrank.hpp"
#include "ccmbf/gram_schmidt.hpp"
#include "ccmbf/jio.hpp"
#include "ccmbf/metrics.hpp"
#include "ccmbf/types.hpp"

#endif
