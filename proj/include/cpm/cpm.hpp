// SPDX-License-Identifier: Apache-2.0

#ifndef CPM_CPM_HPP
#define CPM_CPM_HPP

#include "cpm/anchor_engine.hpp"
#include "cpm/benchmark.hpp"
#include "cpm/interval_geometry.hpp"
#include "cpm/io.hpp"
#include "cpm/light_counting.hpp"
#include "cpm/periodic_engine.hpp"
#include "cpm/sequence.hpp"
#include "cpm/solver.hpp"
#include "cpm/suffix_array.hpp"
#include "cpm/text_index.hpp"

#endif  // CPM_CPM_HPP
