#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "lpaflow/random.hpp"
#include "support/seed.hpp"

#include <cstring>
#include <iostream>
#include <string>
#include <vector>

namespace testsupport {

namespace {
std::uint64_t g_seed = lpaflow::kDefaultSeed;
}

std::uint64_t seed() { return g_seed; }
void set_seed(std::uint64_t s) { g_seed = s; }

std::mt19937_64 rng(std::uint64_t salt) {
    std::seed_seq seq{static_cast<std::uint32_t>(g_seed), static_cast<std::uint32_t>(g_seed >> 32),
                      static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(salt >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace testsupport

int main(int argc, char** argv) {
    std::vector<char*> rest;
    for (int i = 0; i < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            testsupport::set_seed(std::stoull(argv[++i]));
        } else if (std::strncmp(argv[i], "--seed=", 7) == 0) {
            testsupport::set_seed(std::stoull(argv[i] + 7));
        } else {
            rest.push_back(argv[i]);
        }
    }
    std::cout << "seed " << testsupport::seed() << '\n';
    doctest::Context context;
    context.applyCommandLine(static_cast<int>(rest.size()), rest.data());
    return context.run();
}
