#ifndef ORDTURAN_BIT_MATRIX_HPP
#define ORDTURAN_BIT_MATRIX_HPP

#include "ordturan/ordered_graph.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace ordturan::detail {

// Row-major adjacency bitmap, one row of ceil(cols/64) words per vertex.
class BitMatrix {
public:
    BitMatrix(int rows, int cols)
        : cols_(cols), words_(static_cast<std::size_t>((cols + 63) / 64)),
          data_(static_cast<std::size_t>(rows) * words_, 0) {}

    void set(int r, int c) { data_[row_offset(r) + c / 64] |= std::uint64_t{1} << (c % 64); }

    bool test(int r, int c) const {
        return (data_[row_offset(r) + c / 64] >> (c % 64)) & 1u;
    }

    const std::uint64_t* row(int r) const { return data_.data() + row_offset(r); }
    std::size_t words_per_row() const { return words_; }

    int intersect_count(int r, const std::uint64_t* mask) const {
        const std::uint64_t* p = row(r);
        int total = 0;
        for (std::size_t i = 0; i < words_; ++i) total += std::popcount(p[i] & mask[i]);
        return total;
    }

private:
    std::size_t row_offset(int r) const { return static_cast<std::size_t>(r) * words_; }

    int cols_;
    std::size_t words_;
    std::vector<std::uint64_t> data_;
};

// 0-indexed full adjacency of g (symmetric view of the ordered edges).
inline BitMatrix adjacency_bits(const OrderedGraph& g) {
    BitMatrix m(g.n(), g.n());
    for (auto [u, v] : g.edges()) {
        m.set(u - 1, v - 1);
        m.set(v - 1, u - 1);
    }
    return m;
}

} // namespace ordturan::detail

#endif
