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

#include "support/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lingds/xml.hpp"

#ifndef LINGDS_FIXTURE_DIR
#error "LINGDS_FIXTURE_DIR must be defined by the build"
#endif

namespace lingds::test {

std::string FixturePath(std::string_view name) {
  std::string path = LINGDS_FIXTURE_DIR;
  path.push_back('/');
  path.append(name);
  return path;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Document LoadFixture(std::string_view name, Diagnostics* diags) {
  Diagnostics local;
  Document doc = ParseDocument(ReadFile(FixturePath(name)), diags ? *diags : local);
  return doc;
}

}  // namespace lingds::test
