// Copyright 2026 The ffperm Authors
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

// Runs every acceptance criterion and prints one line per criterion.
// Usage: acceptance [seed] [jobs]

#include <cstdlib>
#include <iostream>
#include <string>

#include "ffperm/acceptance.hpp"

int main(int argc, char** argv) {
  ffperm::acceptance::Options opt;
  if (argc > 1) opt.seed = std::stoull(argv[1]);
  if (argc > 2) opt.jobs = static_cast<unsigned>(std::stoul(argv[2]));
  opt.scan_csv = "nu_scan.csv";
  ffperm::acceptance::Runner runner(opt);
  const auto results = runner.run_all(std::cout);
  for (const auto& r : results) {
    if (!r.pass) return EXIT_FAILURE;
  }
  return EXIT_SUCCESS;
}
