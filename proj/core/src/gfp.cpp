#include "symreg/gfp.hpp"

namespace symreg {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int gfp_rank(GfpMatrix m, std::int32_t p) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r) {
            if (m.at(r, col) % p != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = col; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        // normalize pivot row to 1
        std::int64_t pv = ((m.at(rank, col) % p) + p) % p;
        // modular inverse via Fermat
        std::int64_t inv = 1, base = pv, e = p - 2;
        while (e > 0) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (int c = col; c < m.cols; ++c)
            m.at(rank, c) = static_cast<std::int32_t>((((m.at(rank, c) % p) + p) % p) * inv % p);
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank) continue;
            std::int64_t factor = ((m.at(r, col) % p) + p) % p;
            if (factor == 0) continue;
            for (int c = col; c < m.cols; ++c) {
                std::int64_t val = m.at(r, c) - factor * m.at(rank, c) % p;
                m.at(r, c) = static_cast<std::int32_t>(((val % p) + p) % p);
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace symreg
