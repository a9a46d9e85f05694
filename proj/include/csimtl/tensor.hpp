#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "csimtl/errors.hpp"

namespace csimtl {

// Dense row-major tensor. Element type is float for all production data and
// parameters; the double instantiation backs the finite-difference oracle.
template <typename T>
struct TensorT {
    std::vector<int> dims;
    std::vector<T> data;

    TensorT() = default;
    explicit TensorT(std::vector<int> d) : dims(std::move(d)), data(numel_of(dims)) {}
    TensorT(std::vector<int> d, std::vector<T> values) : dims(std::move(d)), data(std::move(values)) {
        if (static_cast<std::int64_t>(data.size()) != numel_of(dims))
            throw ShapeError("tensor data length does not match dims");
    }

    static std::int64_t numel_of(const std::vector<int>& d) {
        std::int64_t n = 1;
        for (int v : d) {
            if (v <= 0) throw ShapeError("tensor dims must be positive");
            n *= v;
        }
        return n;
    }

    std::int64_t numel() const { return static_cast<std::int64_t>(data.size()); }

    bool same_dims(const TensorT& o) const { return dims == o.dims; }

    bool operator==(const TensorT& o) const { return dims == o.dims && data == o.data; }

    template <typename U>
    TensorT<U> cast() const {
        TensorT<U> out;
        out.dims = dims;
        out.data.assign(data.begin(), data.end());
        return out;
    }
};

using Tensor = TensorT<float>;

inline std::string dims_to_string(const std::vector<int>& d) {
    std::string s = "[";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += "x";
        s += std::to_string(d[i]);
    }
    return s + "]";
}

}  // namespace csimtl
