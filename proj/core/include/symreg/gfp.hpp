#pragma once

#include <cstdint>
#include <vector>

namespace symreg {

/// Dense matrix over GF(p), row-major.
struct GfpMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::int32_t> data;

    GfpMatrix() = default;
    GfpMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0) {}

    std::int32_t& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    std::int32_t at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
};

bool is_prime(int p);

/// Rank over GF(p) by Gaussian elimination; the matrix is consumed.
int gfp_rank(GfpMatrix m, std::int32_t p);

}  // namespace symreg
