#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>

#include "noisim/core/error.hpp"

namespace noisim {

// Dense row-major extent list, rank 0..4. Rank 0 is a scalar (numel 1).
struct Shape {
    std::array<std::int64_t, 4> d{1, 1, 1, 1};
    int rank = 0;

    Shape() = default;
    Shape(std::initializer_list<std::int64_t> dims) {
        if (dims.size() > 4) throw ShapeError("shape rank > 4");
        rank = static_cast<int>(dims.size());
        int i = 0;
        for (std::int64_t v : dims) {
            if (v < 0) throw ShapeError("negative extent in shape");
            d[i++] = v;
        }
    }

    std::int64_t operator[](int i) const { return d[static_cast<std::size_t>(i)]; }

    std::int64_t numel() const {
        std::int64_t n = 1;
        for (int i = 0; i < rank; ++i) n *= d[static_cast<std::size_t>(i)];
        return n;
    }

    // Extent of the last axis; 1 for scalars.
    std::int64_t last() const { return rank == 0 ? 1 : d[static_cast<std::size_t>(rank - 1)]; }

    bool operator==(const Shape& o) const {
        if (rank != o.rank) return false;
        for (int i = 0; i < rank; ++i)
            if (d[static_cast<std::size_t>(i)] != o.d[static_cast<std::size_t>(i)]) return false;
        return true;
    }
    bool operator!=(const Shape& o) const { return !(*this == o); }

    std::string to_string() const {
        std::string s = "[";
        for (int i = 0; i < rank; ++i) {
            if (i) s += ",";
            s += std::to_string(d[static_cast<std::size_t>(i)]);
        }
        return s + "]";
    }
};

} // namespace noisim
