#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "btinv/types.hpp"

namespace btinv {

/// Non-owning view of a vector of logical length `size()` whose entries are
/// zero outside the half-open support window [begin, end).
///
/// Shifting a view (multiplication by the down-shift matrix U^s) only moves
/// the window; no entry is copied.
class VectorView {
public:
    VectorView() = default;
    VectorView(std::size_t length, std::size_t begin, std::span<const Complex> window);

    std::size_t size() const noexcept { return length_; }
    std::size_t begin() const noexcept { return begin_; }
    std::size_t end() const noexcept { return begin_ + window_.size(); }
    std::span<const Complex> window() const noexcept { return window_; }

    /// Entry i, zero outside the support window.
    Complex operator[](std::size_t i) const;

    /// U^s applied to the view. Window entries pushed past the end must be
    /// exactly zero (they are dropped), otherwise std::out_of_range.
    VectorView shifted(std::size_t s) const;

private:
    std::size_t length_ = 0;
    std::size_t begin_ = 0;
    std::span<const Complex> window_;
};

/// Owning vector with an explicit support window. Storage covers only the
/// window, so polynomial vectors p_{k,l}, q_{k,l} cost O(l - k).
class ComplexVector {
public:
    ComplexVector() = default;
    /// Zero vector with full support.
    explicit ComplexVector(std::size_t length);
    /// Full-support vector.
    explicit ComplexVector(std::vector<Complex> entries);
    ComplexVector(std::size_t length, std::size_t begin, std::vector<Complex> window);
    explicit ComplexVector(VectorView view);

    /// Canonical basis vector e_k with support [k, k + 1).
    static ComplexVector basis(std::size_t length, std::size_t k);

    std::size_t size() const noexcept { return length_; }
    std::size_t begin() const noexcept { return begin_; }
    std::size_t end() const noexcept { return begin_ + window_.size(); }

    Complex operator[](std::size_t i) const;
    /// Mutable access to an index inside the support window.
    Complex& at_window(std::size_t i);

    std::span<const Complex> window() const noexcept { return window_; }
    VectorView view() const { return VectorView(length_, begin_, window_); }

    /// All `size()` entries, zeros included.
    std::vector<Complex> dense() const;

private:
    std::size_t length_ = 0;
    std::size_t begin_ = 0;
    std::vector<Complex> window_;
};

/// Sum of v_i * w_i over the intersection of the two support windows. No
/// conjugation. Throws std::invalid_argument on length mismatch.
Complex windowed_dot(const VectorView& v, const VectorView& w);
inline Complex windowed_dot(const ComplexVector& v, const ComplexVector& w) {
    return windowed_dot(v.view(), w.view());
}

/// U^s v, materialized.
ComplexVector shift(const ComplexVector& v, std::size_t s);

}  // namespace btinv
