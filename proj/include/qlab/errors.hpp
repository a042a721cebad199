// Error categories: domain errors (bad parameters, violated preconditions)
// vs structural errors (malformed tables, files, dangling references).
#pragma once

#include <stdexcept>
#include <string>

namespace qlab {

// Violated mathematical precondition. CLI maps this to exit code 1.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input data: wrong dimensions, out-of-range entries, dangling
// references, unparseable files. CLI maps this to exit code 2.
struct structural_error : std::runtime_error {
    explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

// Internal failure that should not occur on valid inputs (e.g. no nontrivial
// cohomology class found where one is expected). Surfaced, never guessed away.
struct computation_error : std::runtime_error {
    explicit computation_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qlab
