// Copyright 2026 The onc Authors
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

#ifndef ONC_ONC_HPP
#define ONC_ONC_HPP

#include "onc/error.hpp"
#include "onc/extrema.hpp"
#include "onc/indicator.hpp"
#include "onc/io.hpp"
#include "onc/matrix_core.hpp"
#include "onc/orbit_space.hpp"
#include "onc/parallel.hpp"
#include "onc/quadrature.hpp"
#include "onc/random_ensembles.hpp"
#include "onc/sw_kernel.hpp"
#include "onc/wigner_eval.hpp"

#endif  // ONC_ONC_HPP
