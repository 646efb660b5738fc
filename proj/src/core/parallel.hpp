/*
   Copyright 2026 The hankellab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HANKELLAB_CORE_PARALLEL_HPP
#define HANKELLAB_CORE_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace hankellab {

/// Caps the worker count used by parallel_for. 0 restores the hardware default.
void set_max_threads(int n);
int max_threads();

/// Runs body(i) for i in [0, count). Bodies must write to disjoint slots;
/// reductions are performed by the caller in index order, so results do not
/// depend on the schedule.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace hankellab

#endif
