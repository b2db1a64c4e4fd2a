#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "schensted/errors.hpp"

namespace schensted {

/// One cell of a Ferrers diagram. French convention: row 1 is the bottom
/// row and rows grow upward; column 1 is leftmost. Both indices are 1-based.
struct Square {
    int row = 0;
    int col = 0;

    friend bool operator==(const Square&, const Square&) = default;
    friend auto operator<=>(const Square&, const Square&) = default;
};

/// "(row,col)"
[[nodiscard]] inline std::string to_string(Square sq) {
    return "(" + std::to_string(sq.row) + "," + std::to_string(sq.col) + ")";
}

/// An integer partition identified with its Ferrers diagram. Parts are
/// weakly decreasing positive integers; the empty shape is a valid value.
class Shape {
public:
    Shape() = default;

    explicit Shape(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) {
                throw DomainError("shape parts must be positive integers");
            }
            if (i > 0 && parts_[i] > parts_[i - 1]) {
                throw DomainError("shape parts must be weakly decreasing");
            }
        }
    }

    Shape(std::initializer_list<int> parts) : Shape(std::vector<int>(parts)) {}

    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    [[nodiscard]] int num_rows() const { return static_cast<int>(parts_.size()); }

    /// Number of squares.
    [[nodiscard]] int size() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    /// Length of the given 1-based row; 0 for rows beyond the last.
    [[nodiscard]] int part(int row) const {
        if (row < 1) throw DomainError("row index must be >= 1");
        return row <= num_rows() ? parts_[row - 1] : 0;
    }

    [[nodiscard]] bool contains(Square sq) const {
        return sq.row >= 1 && sq.col >= 1 && sq.col <= part(sq.row);
    }

    [[nodiscard]] bool is_subshape_of(const Shape& other) const {
        for (int r = 1; r <= num_rows(); ++r) {
            if (part(r) > other.part(r)) return false;
        }
        return true;
    }

    /// Squares whose removal leaves a shape, bottom row first. A shape with
    /// m distinct part values has exactly m of these.
    [[nodiscard]] std::vector<Square> removable_squares() const {
        std::vector<Square> result;
        for (int r = 1; r <= num_rows(); ++r) {
            if (part(r) > part(r + 1)) result.push_back({r, part(r)});
        }
        return result;
    }

    /// Squares whose addition yields a shape, bottom row first. Always one
    /// more of these than removable squares.
    [[nodiscard]] std::vector<Square> addible_squares() const {
        std::vector<Square> result;
        for (int r = 1; r <= num_rows() + 1; ++r) {
            if (r == 1 || part(r) < part(r - 1)) result.push_back({r, part(r) + 1});
        }
        return result;
    }

    [[nodiscard]] Shape with_square_added(Square sq) const {
        if (sq.row < 1 || sq.row > num_rows() + 1 || sq.col != part(sq.row) + 1 ||
            (sq.row > 1 && part(sq.row) + 1 > part(sq.row - 1))) {
            throw DomainError("square " + to_string(sq) + " is not addible in shape " + to_string_());
        }
        std::vector<int> parts = parts_;
        if (sq.row == num_rows() + 1) {
            parts.push_back(1);
        } else {
            ++parts[sq.row - 1];
        }
        return Shape(std::move(parts));
    }

    [[nodiscard]] Shape with_square_removed(Square sq) const {
        if (sq.row < 1 || sq.row > num_rows() || sq.col != part(sq.row) ||
            part(sq.row) <= part(sq.row + 1)) {
            throw DomainError("square " + to_string(sq) + " is not removable in shape " + to_string_());
        }
        std::vector<int> parts = parts_;
        if (--parts[sq.row - 1] == 0) parts.pop_back();
        return Shape(std::move(parts));
    }

    /// All shapes obtained by removing one square, in removable-square order.
    [[nodiscard]] std::vector<Shape> predecessors() const {
        if (empty()) throw DomainError("the empty shape has no predecessors");
        std::vector<Shape> result;
        for (Square sq : removable_squares()) result.push_back(with_square_removed(sq));
        return result;
    }

    /// All shapes obtained by adding one square, in addible-square order.
    [[nodiscard]] std::vector<Shape> successors() const {
        std::vector<Shape> result;
        for (Square sq : addible_squares()) result.push_back(with_square_added(sq));
        return result;
    }

    /// Shapes of the same size reachable by adding a square and then removing
    /// a different one (equivalently, removing then adding). The shape itself
    /// is never among them. Canonical order.
    [[nodiscard]] std::vector<Shape> plus_minus_shapes() const {
        if (empty()) throw DomainError("plus-minus shapes are undefined for the empty shape");
        std::vector<Shape> result;
        for (Square added : addible_squares()) {
            Shape grown = with_square_added(added);
            for (Square removed : grown.removable_squares()) {
                if (removed != added) result.push_back(grown.with_square_removed(removed));
            }
        }
        std::sort(result.begin(), result.end(), canonical_before);
        result.erase(std::unique(result.begin(), result.end()), result.end());
        return result;
    }

    /// Transposed diagram.
    [[nodiscard]] Shape conjugate() const {
        std::vector<int> columns(empty() ? 0 : parts_[0], 0);
        for (int p : parts_) {
            for (int c = 0; c < p; ++c) ++columns[c];
        }
        return Shape(std::move(columns));
    }

    /// Comma-separated parts, e.g. "3,3,2"; empty string for the empty shape.
    [[nodiscard]] std::string to_string() const { return to_string_(); }

    [[nodiscard]] static Shape from_string(const std::string& text) {
        if (text.empty()) return Shape();
        std::vector<int> parts;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            std::string token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            try {
                std::size_t used = 0;
                int value = std::stoi(token, &used);
                if (used != token.size()) throw ParseError("");
                parts.push_back(value);
            } catch (const ParseError&) {
                throw ParseError("bad shape part '" + token + "' in \"" + text + "\"");
            } catch (const std::exception&) {
                throw ParseError("bad shape part '" + token + "' in \"" + text + "\"");
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        try {
            return Shape(std::move(parts));
        } catch (const DomainError& e) {
            throw ParseError("\"" + text + "\" is not a partition: " + e.what());
        }
    }

    /// Ordering used everywhere shapes are listed: lexicographically larger
    /// part sequences first, so partitions of n run (n), ..., (1,...,1).
    [[nodiscard]] static bool canonical_before(const Shape& a, const Shape& b) {
        return a.parts_ > b.parts_;
    }

    friend bool operator==(const Shape&, const Shape&) = default;
    friend auto operator<=>(const Shape&, const Shape&) = default;

private:
    [[nodiscard]] std::string to_string_() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i > 0) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    std::vector<int> parts_;
};

/// Pointwise minimum of two diagrams (their meet in the Young lattice).
[[nodiscard]] inline Shape meet(const Shape& a, const Shape& b) {
    std::vector<int> parts;
    for (int r = 1; r <= std::min(a.num_rows(), b.num_rows()); ++r) {
        parts.push_back(std::min(a.part(r), b.part(r)));
    }
    return Shape(std::move(parts));
}

/// The unique square of `larger` that is not in `smaller`; requires that
/// `larger` covers `smaller` (one square bigger and containing it).
[[nodiscard]] inline Square skew_square(const Shape& larger, const Shape& smaller) {
    if (!smaller.is_subshape_of(larger) || larger.size() != smaller.size() + 1) {
        throw DomainError("shape " + larger.to_string() + " does not cover " + smaller.to_string());
    }
    for (int r = 1; r <= larger.num_rows(); ++r) {
        if (larger.part(r) != smaller.part(r)) return {r, larger.part(r)};
    }
    throw DomainError("unreachable: covering shapes differ in some row");
}

/// All partitions of n in canonical order, largest-first lexicographic.
[[nodiscard]] inline std::vector<Shape> all_partitions(int n) {
    if (n < 0) throw DomainError("cannot partition a negative integer");
    std::vector<Shape> result;
    std::vector<int> current;
    auto generate = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            result.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    generate(generate, n, n);
    return result;
}

/// All partitions of every size from 0 through n, smaller sizes first.
[[nodiscard]] inline std::vector<Shape> all_shapes_up_to(int n) {
    std::vector<Shape> result;
    for (int k = 0; k <= n; ++k) {
        auto shapes = all_partitions(k);
        result.insert(result.end(), shapes.begin(), shapes.end());
    }
    return result;
}

} // namespace schensted
