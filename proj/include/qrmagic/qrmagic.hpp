// Copyright 2026 The qrmagic Authors
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

#ifndef QRMAGIC_QRMAGIC_HPP_
#define QRMAGIC_QRMAGIC_HPP_

#include "qrmagic/field.hpp"
#include "qrmagic/numth.hpp"
#include "qrmagic/linalg.hpp"
#include "qrmagic/enumerate.hpp"
#include "qrmagic/code.hpp"
#include "qrmagic/weights.hpp"
#include "qrmagic/quantum.hpp"
#include "qrmagic/distill.hpp"
#include "qrmagic/fixtures.hpp"
#include "qrmagic/pipeline.hpp"
#include "qrmagic/serialize.hpp"
#include "qrmagic/sim.hpp"
#include "qrmagic/verify.hpp"

#endif  // QRMAGIC_QRMAGIC_HPP_
