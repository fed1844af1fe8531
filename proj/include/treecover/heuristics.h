// Copyright 2026 The treecover Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TREECOVER_HEURISTICS_H_
#define TREECOVER_HEURISTICS_H_

#include "treecover/immersion.h"
#include "treecover/tree.h"

namespace treecover {

// Packs maximal runs of consecutive depth-first leaves: a run is extended
// while its walk still fits in `p`, otherwise it is closed and the next run
// starts at the leaf that did not fit. Throws InfeasibleError if p < 2h.
CoverSolution sweeping_leaves(const RootedTree& tree, Cost p);

// Deepest-first-then-nearest. Each immersion opens with the deepest uncovered
// leaf, then repeatedly takes the uncovered leaf nearest to the immersion's
// subtree and closes at the first one that does not fit. Ties go to the
// smaller depth-first index. Throws InfeasibleError if p < 2h.
CoverSolution dftn(const RootedTree& tree, Cost p);

}  // namespace treecover

#endif  // TREECOVER_HEURISTICS_H_
