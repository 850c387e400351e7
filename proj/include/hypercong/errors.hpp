#pragma once

#include <stdexcept>
#include <string>

namespace hypercong {

/// Base class for every domain error thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation precondition was violated (bad range, bad parameter shape).
struct precondition_error : error {
    using error::error;
};

/// Modular inverse requested for a value divisible by p.
struct not_invertible_error : error {
    using error::error;
};

/// A denominator that must be a p-adic unit is divisible by p.
struct denominator_divisible_error : error {
    using error::error;
};

/// Fermat quotient argument shares a factor with p.
struct not_coprime_error : error {
    using error::error;
};

/// Residues from two different p-adic contexts were combined.
struct context_mismatch_error : error {
    using error::error;
};

/// Invalid run configuration (CLI flags or config file).
struct config_error : error {
    using error::error;
};

/// Report could not be written.
struct io_error : error {
    using error::error;
};

} // namespace hypercong
