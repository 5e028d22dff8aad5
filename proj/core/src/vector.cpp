#include "btinv/vector.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace btinv {

VectorView::VectorView(std::size_t length, std::size_t begin, std::span<const Complex> window)
    : length_(length), begin_(begin), window_(window) {
    if (begin + window.size() > length) {
        throw std::out_of_range("VectorView: support window exceeds vector length");
    }
}

Complex VectorView::operator[](std::size_t i) const {
    if (i >= length_) {
        throw std::out_of_range("VectorView: index " + std::to_string(i) + " out of range");
    }
    if (i < begin_ || i >= end()) {
        return {};
    }
    return window_[i - begin_];
}

VectorView VectorView::shifted(std::size_t s) const {
    if (s == 0) {
        return *this;
    }
    if (window_.empty()) {
        return VectorView(length_, std::min(begin_ + s, length_), window_);
    }
    const std::size_t new_begin = begin_ + s;
    std::size_t kept = 0;
    if (new_begin < length_) {
        kept = std::min(window_.size(), length_ - new_begin);
    }
    for (std::size_t i = kept; i < window_.size(); ++i) {
        if (window_[i] != Complex{}) {
            throw std::out_of_range("shift: nonzero entry pushed past the end of the vector");
        }
    }
    return VectorView(length_, std::min(new_begin, length_), window_.first(kept));
}

ComplexVector::ComplexVector(std::size_t length) : length_(length), window_(length) {}

ComplexVector::ComplexVector(std::vector<Complex> entries)
    : length_(entries.size()), window_(std::move(entries)) {}

ComplexVector::ComplexVector(std::size_t length, std::size_t begin, std::vector<Complex> window)
    : length_(length), begin_(begin), window_(std::move(window)) {
    if (begin_ + window_.size() > length_) {
        throw std::out_of_range("ComplexVector: support window exceeds vector length");
    }
}

ComplexVector::ComplexVector(VectorView view)
    : length_(view.size()),
      begin_(view.begin()),
      window_(view.window().begin(), view.window().end()) {}

ComplexVector ComplexVector::basis(std::size_t length, std::size_t k) {
    if (k >= length) {
        throw std::out_of_range("basis: index out of range");
    }
    return ComplexVector(length, k, {Complex{1.0, 0.0}});
}

Complex ComplexVector::operator[](std::size_t i) const { return view()[i]; }

Complex& ComplexVector::at_window(std::size_t i) {
    if (i < begin_ || i >= end()) {
        throw std::out_of_range("ComplexVector: index outside support window");
    }
    return window_[i - begin_];
}

std::vector<Complex> ComplexVector::dense() const {
    std::vector<Complex> out(length_);
    std::copy(window_.begin(), window_.end(), out.begin() + static_cast<std::ptrdiff_t>(begin_));
    return out;
}

Complex windowed_dot(const VectorView& v, const VectorView& w) {
    if (v.size() != w.size()) {
        throw std::invalid_argument("windowed_dot: length mismatch");
    }
    const std::size_t lo = std::max(v.begin(), w.begin());
    const std::size_t hi = std::min(v.end(), w.end());
    Complex sum{};
    for (std::size_t i = lo; i < hi; ++i) {
        sum += v.window()[i - v.begin()] * w.window()[i - w.begin()];
    }
    return sum;
}

ComplexVector shift(const ComplexVector& v, std::size_t s) { return ComplexVector(v.view().shifted(s)); }

}  // namespace btinv
