// Copyright 2026 The lingds Authors
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

#ifndef LINGDS_TESTS_SUPPORT_FIXTURES_HPP_
#define LINGDS_TESTS_SUPPORT_FIXTURES_HPP_

#include <string>
#include <string_view>

#include "lingds/diagnostics.hpp"
#include "lingds/document.hpp"

namespace lingds::test {

// Absolute path of a file in the fixture corpus.
std::string FixturePath(std::string_view name);

// Reads a whole file; throws std::runtime_error when unreadable.
std::string ReadFile(const std::string& path);

// Parses a fixture; parse errors throw, diagnostics go to |diags| if given.
Document LoadFixture(std::string_view name, Diagnostics* diags = nullptr);

}  // namespace lingds::test

#endif  // LINGDS_TESTS_SUPPORT_FIXTURES_HPP_
