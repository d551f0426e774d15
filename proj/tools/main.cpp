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


#include <cstdlib>
#include <iostream>
#include <stdexcept>

#include "commands.hpp"
#include "output.hpp"

using namespace macroreal::cli;

namespace {

struct Common {
    std::string format = "csv";
    std::string out;
    bool selftest = false;
};

Config config_echo(const CLI::App &app) {
    Config cfg;
    for (const CLI::Option *opt : app.get_options()) {
        if (opt->check_lname("help") || opt->check_lname("out") || opt->check_lname("selftest")) continue;
        std::string name = opt->get_single_name();
        std::string value;
        if (opt->count() > 0) {
            for (const auto &r : opt->results()) value += (value.empty() ? "" : ",") + r;
            if (opt->get_expected_max() == 0 && value.empty()) value = "true";
        } else {
            value = opt->get_default_str();
        }
        cfg.emplace_back(name, value.empty() ? "none" : value);
    }
    return cfg;
}

int report_selftest(const std::string &name, const std::vector<SelfCheck> &checks) {
    int failed = 0;
    for (const auto &c : checks) {
        std::cout << (c.ok ? "PASS " : "FAIL ") << name << ": " << c.name << " (" << c.detail << ")\n";
        failed += !c.ok;
    }
    return failed;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"macroreal: macrorealism and collective entanglement toolkit"};
    app.set_version_flag("--version", std::string(MACROREAL_VERSION));
    app.require_subcommand(1);
    app.fallthrough(false);

    auto commands = make_commands();
    auto common = std::make_shared<Common>();
    std::vector<CLI::App *> subs;
    for (auto &cmd : commands) {
        CLI::App *sub = app.add_subcommand(cmd.name, cmd.help);
        sub->option_defaults()->always_capture_default();
        cmd.options(*sub);
        sub->add_option("--format", common->format, "Output format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", common->out, "Output file (default: $MACROREAL_OUTPUT_DIR/<command>.<ext> or stdout)");
        sub->add_flag("--selftest", common->selftest, "Run the built-in checks for this command");
        subs.push_back(sub);
    }
    CLI::App *all = app.add_subcommand("selftest-all", "Run every command's built-in checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (all->parsed()) {
            int failed = 0;
            for (auto &cmd : commands) failed += report_selftest(cmd.name, cmd.selftest());
            std::cout << (failed ? "selftest-all: " + std::to_string(failed) + " check(s) failed\n"
                                 : std::string("selftest-all: all checks passed\n"));
            return failed ? 2 : 0;
        }
        for (size_t i = 0; i < commands.size(); ++i) {
            if (!subs[i]->parsed()) continue;
            const Command &cmd = commands[i];
            if (common->selftest) return report_selftest(cmd.name, cmd.selftest()) ? 2 : 0;
            Format format = common->format == "json" ? Format::json : Format::csv;
            Table table = cmd.run();
            emit(render(table, config_echo(*subs[i]), cmd.name, format), common->out, cmd.name, format);
            std::cerr << human_summary(table, cmd.name);
            return 0;
        }
    } catch (const UserError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
