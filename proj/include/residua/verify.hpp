#pragma once

#include <vector>

#include "residua/checks.hpp"
#include "residua/residue.hpp"

namespace residua {

// Replaceable pieces of the closed-form routes, so the suite itself can be
// mutation-tested.
struct VerifyHooks {
  ElementarySymmetricFn elementary_symmetric = [](std::span<const Integer> v, int m) {
    return residua::elementary_symmetric(v, m);
  };
};

// Runs every cross-oracle invariant grid. One report per suite; a failing
// report carries the first counterexample in its notes.
std::vector<CheckReport> verify_suite(const VerifyHooks& hooks = {});

}  // namespace residua
