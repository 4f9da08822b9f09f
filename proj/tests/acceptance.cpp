#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include "wittcft/verify.hpp"

using namespace wittcft;

int main(int argc, char** argv) {
    VerifyConfig config;
    config.jobs = std::max(1u, std::thread::hardware_concurrency());
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        const long value = std::strtol(argv[i + 1], nullptr, 10);
        if (flag == "--jobs") config.jobs = static_cast<unsigned>(value);
        else if (flag == "--seed") config.seed = static_cast<std::uint64_t>(value);
    }
    bool all = true;
    for (int id = 1; id <= suite_count(); ++id) {
        const SuiteResult r = run_suite(id, config);
        std::cout << r.summary_line() << std::endl;
        for (const auto& s : r.failure_samples) std::cout << "    " << s << "\n";
        all = all && r.passed;
    }
    std::cout << (all ? "all criteria pass" : "some criteria fail") << std::endl;
    return all ? 0 : 1;
}
