#pragma once

// Skew shape lambda/mu with cell enumeration.

#include <stdexcept>
#include <utility>
#include <vector>

#include "symco/partition.hpp"

namespace symco {

struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
        if (!outer.contains(inner))
            throw std::invalid_argument("skew shape: inner partition not contained in outer");
    }

    long long size() const { return outer.size() - inner.size(); }

    // Cells (i, j), 1-based, with inner_i < j <= outer_i, row-major.
    std::vector<std::pair<int, int>> cells() const {
        std::vector<std::pair<int, int>> cs;
        for (int i = 1; i <= outer.rows(); ++i)
            for (int j = inner.part(i) + 1; j <= outer.part(i); ++j) cs.emplace_back(i, j);
        return cs;
    }
};

}  // namespace symco
