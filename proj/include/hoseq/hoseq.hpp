/* Copyright 2026 The hoseq Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#ifndef HOSEQ_HOSEQ_HPP
#define HOSEQ_HOSEQ_HPP

#include "hoseq/config.hpp"
#include "hoseq/dataset.hpp"
#include "hoseq/errors.hpp"
#include "hoseq/experiment.hpp"
#include "hoseq/geometry_radio.hpp"
#include "hoseq/mobility_sim.hpp"
#include "hoseq/model_io.hpp"
#include "hoseq/rng.hpp"
#include "hoseq/seq2seq.hpp"
#include "hoseq/trace_io.hpp"

#endif  // HOSEQ_HOSEQ_HPP
