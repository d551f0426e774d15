// Copyright 2026 The macroreal Authors
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


#ifndef MACROREAL_TOOLS_COMMANDS_HPP
#define MACROREAL_TOOLS_COMMANDS_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "output.hpp"

namespace macroreal::cli {

/// Bad or inconsistent parameters; reported with exit status 1.
struct UserError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SelfCheck {
    std::string name;
    bool ok;
    std::string detail;
};

struct Command {
    std::string name;
    std::string help;
    std::function<void(CLI::App &)> options;
    std::function<Table()> run;
    std::function<std::vector<SelfCheck>()> selftest;
};

std::vector<Command> make_commands();

/// "a:b:step", "a:b" (step 1), "x,y,z" or a single value.
std::vector<double> parse_real_list(const std::string &text);
std::vector<int> parse_int_list(const std::string &text);

}  // namespace macroreal::cli

#endif
