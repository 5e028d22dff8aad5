#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace btinv {

using Complex = std::complex<double>;

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The recursion (or the Cholesky oracle) met a non-positive pivot.
/// For recursion failures `k` and `l` name the offending step; for the
/// oracle and for diagonal checks `k == l`.
class NotPositiveDefinite : public Error {
public:
    NotPositiveDefinite(std::size_t k, std::size_t l, const std::string& what);

    std::size_t k() const noexcept { return k_; }
    std::size_t l() const noexcept { return l_; }

private:
    std::size_t k_;
    std::size_t l_;
};

/// An internal identity that must hold on valid input did not hold
/// (conjugate numerator identity, diagonality of the factor products,
/// residual checks, missing predecessors in the block schedule).
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// Entrywise residual tolerance: 1e-12 + 1e-10 * max_abs * n, unless an
/// absolute override is set.
struct Tolerance {
    std::optional<double> absolute_override;

    double for_matrix(double max_abs, std::size_t n) const;
};

}  // namespace btinv
