#pragma once

#include <stdexcept>
#include <string>

namespace mpt {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent input: bad JSON fields, dimension mismatches,
// configurations that are not matroid polytopes, orderings that are not
// permutations of the ground set, and so on.
struct validation_error : error {
    explicit validation_error(const std::string& what) : error(what) {}
};

// Reconstruction from an abstract graph failed a consistency check
// (missing vertices, edge mismatch, Euler failure, ...).
struct reconstruction_error : error {
    explicit reconstruction_error(const std::string& what) : error(what) {}
};

} // namespace mpt
