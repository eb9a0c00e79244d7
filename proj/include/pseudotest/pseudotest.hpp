// Copyright 2026 The pseudotest Authors
//
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


// Umbrella header.

#ifndef PSEUDOTEST_PSEUDOTEST_HPP
#define PSEUDOTEST_PSEUDOTEST_HPP

#include "pseudotest/adapter.hpp"
#include "pseudotest/classify.hpp"
#include "pseudotest/config.hpp"
#include "pseudotest/cpp_scanner.hpp"
#include "pseudotest/executor.hpp"
#include "pseudotest/fixture_adapter.hpp"
#include "pseudotest/fixture_lang.hpp"
#include "pseudotest/host_adapter.hpp"
#include "pseudotest/journal.hpp"
#include "pseudotest/metrics.hpp"
#include "pseudotest/model.hpp"
#include "pseudotest/mutagen.hpp"
#include "pseudotest/pipeline.hpp"
#include "pseudotest/process.hpp"
#include "pseudotest/report.hpp"
#include "pseudotest/util.hpp"

#endif  // PSEUDOTEST_PSEUDOTEST_HPP
