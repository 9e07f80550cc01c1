// Copyright 2026 The covpovm Authors
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

#ifndef COVPOVM_COVPOVM_HPP
#define COVPOVM_COVPOVM_HPP

#include "covpovm/abelian_group.hpp"
#include "covpovm/covariant_povm.hpp"
#include "covpovm/cv_coherent.hpp"
#include "covpovm/errors.hpp"
#include "covpovm/linalg.hpp"
#include "covpovm/rng.hpp"
#include "covpovm/serialize.hpp"
#include "covpovm/tomography.hpp"
#include "covpovm/weyl_system.hpp"

#endif  // COVPOVM_COVPOVM_HPP
