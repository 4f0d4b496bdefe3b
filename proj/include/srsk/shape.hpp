#pragma once

// Partition shapes (Young diagrams) with addable/removable node
// bookkeeping.

#include <numeric>
#include <stdexcept>
#include <vector>

#include "srsk/node.hpp"

namespace srsk {

class Shape {
public:
    Shape() = default;

    explicit Shape(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("shape: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("shape: parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int rows() const { return static_cast<int>(parts_.size()); }

    // 1-based; rows past the bottom have length 0.
    int row_length(int r) const {
        if (r < 1) throw std::out_of_range("shape: row index must be >= 1");
        return r <= rows() ? parts_[r - 1] : 0;
    }

    // Number of cells in column c (1-based).
    int col_length(int c) const {
        if (c < 1) throw std::out_of_range("shape: column index must be >= 1");
        int n = 0;
        while (n < rows() && parts_[n] >= c) ++n;
        return n;
    }

    int cells() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    bool contains(Node u) const {
        return u.row >= 1 && u.col >= 1 && u.row <= rows() && u.col <= parts_[u.row - 1];
    }

    Shape conjugate() const {
        std::vector<int> parts;
        const int cols = parts_.empty() ? 0 : parts_[0];
        for (int c = 1; c <= cols; ++c) parts.push_back(col_length(c));
        return Shape(std::move(parts));
    }

    // u is the last cell of its row and removing it keeps a partition.
    bool is_removable(Node u) const {
        return contains(u) && u.col == parts_[u.row - 1] && u.col > row_length(u.row + 1);
    }

    // u is just past the end of its row and adding it keeps a partition.
    bool is_addable(Node u) const {
        if (u.row < 1 || u.col < 1) return false;
        if (u.col != row_length(u.row) + 1) return false;
        return u.row == 1 || row_length(u.row - 1) >= u.col;
    }

    std::vector<Node> removable_nodes() const {
        std::vector<Node> out;
        for (int r = 1; r <= rows(); ++r)
            if (is_removable(Node{r, parts_[r - 1]})) out.push_back(Node{r, parts_[r - 1]});
        return out;
    }

    std::vector<Node> addable_nodes() const {
        std::vector<Node> out;
        for (int r = 1; r <= rows() + 1; ++r)
            if (is_addable(Node{r, row_length(r) + 1})) out.push_back(Node{r, row_length(r) + 1});
        return out;
    }

    Shape with_added(Node u) const {
        if (!is_addable(u)) throw std::domain_error("shape: node is not addable");
        std::vector<int> parts = parts_;
        if (u.row == rows() + 1)
            parts.push_back(1);
        else
            ++parts[u.row - 1];
        return Shape(std::move(parts));
    }

    Shape with_removed(Node u) const {
        if (!is_removable(u)) throw std::domain_error("shape: node is not removable");
        std::vector<int> parts = parts_;
        if (--parts[u.row - 1] == 0) parts.pop_back();
        return Shape(std::move(parts));
    }

    // All cells, row-major.
    std::vector<Node> nodes() const {
        std::vector<Node> out;
        out.reserve(static_cast<std::size_t>(cells()));
        for (int r = 1; r <= rows(); ++r)
            for (int c = 1; c <= parts_[r - 1]; ++c) out.push_back(Node{r, c});
        return out;
    }

    friend bool operator==(const Shape&, const Shape&) = default;

private:
    std::vector<int> parts_;
};

// The diagram together with its addable nodes, row-major.
inline std::vector<Node> diagram_with_addable(const Shape& s) {
    std::vector<Node> out;
    for (int r = 1; r <= s.rows() + 1; ++r) {
        for (int c = 1; c <= s.row_length(r); ++c) out.push_back(Node{r, c});
        if (s.is_addable(Node{r, s.row_length(r) + 1})) out.push_back(Node{r, s.row_length(r) + 1});
    }
    return out;
}

} // namespace srsk
