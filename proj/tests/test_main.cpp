#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "oracles.hpp"

// Accepts --seed=N (or --seed N) ahead of the usual doctest flags so every
// randomized property run is reproducible.
int main(int argc, char** argv) {
    std::vector<char*> rest;
    for (int i = 0; i < argc; ++i) {
        std::string a = argv[i];
        if (a.rfind("--seed=", 0) == 0) {
            oracles::g_seed = std::strtoull(a.c_str() + 7, nullptr, 10);
        } else if (a == "--seed" && i + 1 < argc) {
            oracles::g_seed = std::strtoull(argv[++i], nullptr, 10);
        } else {
            rest.push_back(argv[i]);
        }
    }
    if (const char* env = std::getenv("SLICECERT_SEED"))
        oracles::g_seed = std::strtoull(env, nullptr, 10);

    doctest::Context ctx;
    ctx.applyCommandLine(static_cast<int>(rest.size()), rest.data());
    return ctx.run();
}
