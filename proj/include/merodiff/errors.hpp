#ifndef MERODIFF_ERRORS_HPP
#define MERODIFF_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace merodiff {

// Base of everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input: dimensions, node parity, spacing, parse problems. CLI exit code 2.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Runtime numerical failure: singular systems, divergence, non-finite values.
// CLI exit code 3.
class NumericalError : public Error {
public:
    using Error::Error;
};

class DimensionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NodeSpacingError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class EvenNodeCountError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NodesCongruentError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NodeTooCloseToPoleError : public ValidationError {
public:
    NodeTooCloseToPoleError(std::size_t node_index, std::size_t pole_index)
        : ValidationError("node " + std::to_string(node_index) +
                          " is too close to pole " + std::to_string(pole_index)),
          node_index(node_index),
          pole_index(pole_index) {}

    std::size_t node_index;
    std::size_t pole_index;
};

class SingularMatrixError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class ConvergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NonFiniteError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Evaluation too close to a pole or lattice point of a special function.
class PoleProximityError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace merodiff

#endif
