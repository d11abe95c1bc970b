#pragma once

#include <compare>
#include <string>

namespace wordrep {

// Shape of a rectangular array: rows x cols cells, both at least 1.
// Cells are indexed row-major: cell (r, c) has index r * cols + c.
struct GridShape {
    int rows = 1;
    int cols = 1;

    int cells() const { return rows * cols; }
    bool square() const { return rows == cols; }
    GridShape transposed() const { return {cols, rows}; }
    std::string str() const {
        return "(" + std::to_string(rows) + "," + std::to_string(cols) + ")";
    }

    friend auto operator<=>(const GridShape&, const GridShape&) = default;
};

}  // namespace wordrep
