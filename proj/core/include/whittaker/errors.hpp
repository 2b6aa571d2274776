#pragma once

#include <stdexcept>
#include <string>

namespace whittaker {

// Input does not have the expected shape (wrong row lengths, bad index).
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Parameters violate a mathematical precondition (regularity, dominance, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Valid input that the implementation deliberately does not cover.
class OutOfScope : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal invariant failed. Usually a bug or an out-of-hypothesis input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Residue expansion hit a pole configuration it does not expand.
class PoleCollision : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Evaluated a gamma function exactly at a pole.
class GammaPole : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace whittaker
