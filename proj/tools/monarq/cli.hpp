// Copyright 2026 The Monarq Authors
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

#pragma once

namespace monarq::cli {

/// Entry point shared by the executable and the tests. Subcommands:
/// conv, dtft, grad, edge, roundtrip, noise-fit. Exit codes: 0 success,
/// 2 usage error, 3 capacity exceeded, 4 data format error.
int run_command(int argc, const char* const* argv);

}  // namespace monarq::cli
