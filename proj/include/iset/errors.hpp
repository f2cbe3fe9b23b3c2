#pragma once

#include <stdexcept>
#include <string>

namespace iset {

// Malformed input: bad edge list, bad generator spec, precondition violation.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// The configured node budget ran out before an exact answer was reached.
// An exact routine either returns the true value or throws this; it never
// returns an approximation.
struct BudgetExhausted : std::runtime_error {
    explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

// The input is outside the operating range of the requested computation
// (average degree too small to derive parameters, sample pool smaller
// than the requested sample, ...).
struct DegenerateInput : std::runtime_error {
    explicit DegenerateInput(const std::string& what) : std::runtime_error(what) {}
};

} // namespace iset
