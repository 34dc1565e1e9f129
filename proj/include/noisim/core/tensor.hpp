#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "noisim/core/shape.hpp"

namespace noisim {

// Dense row-major real tensor. T is float in production, double in the
// gradient-check instantiation.
template <typename T>
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(Shape s) : shape_(s), v_(static_cast<std::size_t>(s.numel()), T(0)) {}
    Tensor(Shape s, std::vector<T> values) : shape_(s), v_(std::move(values)) {
        if (static_cast<std::int64_t>(v_.size()) != shape_.numel())
            throw ShapeError("tensor value count does not match shape " + shape_.to_string());
    }

    static Tensor zeros(Shape s) { return Tensor(s); }
    static Tensor full(Shape s, T value) {
        Tensor t(s);
        for (auto& x : t.v_) x = value;
        return t;
    }
    static Tensor scalar(T value) {
        Tensor t{Shape{}};
        t.v_.assign(1, value);
        return t;
    }

    const Shape& shape() const { return shape_; }
    std::int64_t size() const { return static_cast<std::int64_t>(v_.size()); }
    bool empty() const { return v_.empty(); }

    T* data() { return v_.data(); }
    const T* data() const { return v_.data(); }
    std::vector<T>& values() { return v_; }
    const std::vector<T>& values() const { return v_; }

    T& operator[](std::int64_t i) { return v_[static_cast<std::size_t>(i)]; }
    T operator[](std::int64_t i) const { return v_[static_cast<std::size_t>(i)]; }

    // 4-d accessor for [N,C,H,W] tensors.
    T& at(std::int64_t n, std::int64_t c, std::int64_t h, std::int64_t w) {
        return v_[static_cast<std::size_t>(((n * shape_[1] + c) * shape_[2] + h) * shape_[3] + w)];
    }
    T at(std::int64_t n, std::int64_t c, std::int64_t h, std::int64_t w) const {
        return v_[static_cast<std::size_t>(((n * shape_[1] + c) * shape_[2] + h) * shape_[3] + w)];
    }
    // 2-d accessor for [R,C] tensors.
    T& at(std::int64_t r, std::int64_t c) { return v_[static_cast<std::size_t>(r * shape_[1] + c)]; }
    T at(std::int64_t r, std::int64_t c) const { return v_[static_cast<std::size_t>(r * shape_[1] + c)]; }

    void fill(T value) {
        for (auto& x : v_) x = value;
    }

    bool all_finite() const {
        for (T x : v_)
            if (!std::isfinite(static_cast<double>(x))) return false;
        return true;
    }

    Tensor reshaped(Shape s) const {
        if (s.numel() != shape_.numel())
            throw ShapeError("reshape " + shape_.to_string() + " -> " + s.to_string() +
                             " changes element count");
        Tensor t = *this;
        t.shape_ = s;
        return t;
    }

private:
    Shape shape_;
    std::vector<T> v_;
};

} // namespace noisim
