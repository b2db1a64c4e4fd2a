#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "schensted/shapes.hpp"

namespace schensted {

/// A bumping scheme: one injection per shape from its removable squares into
/// its addible squares. The injection may depend on the shape only, never on
/// tableau contents, so evaluation is deterministic and the induced insertion
/// scheme is invertible. The one addible square left out of the image is the
/// shape's lone square.
class BumpingScheme {
public:
    /// Returns the images of removable_squares(shape), index-aligned with
    /// that bottom-to-top list.
    using ImagesFn = std::function<std::vector<Square>(const Shape&)>;

    BumpingScheme(std::string name, ImagesFn images)
        : name_(std::move(name)), images_(std::move(images)) {}

    [[nodiscard]] const std::string& name() const { return name_; }

    /// Image list for one shape, validated: one addible square per removable
    /// square, no two alike.
    [[nodiscard]] std::vector<Square> images(const Shape& shape) const {
        std::vector<Square> images = images_(shape);
        auto removable = shape.removable_squares();
        auto addible = shape.addible_squares();
        if (images.size() != removable.size()) {
            throw DomainError(describe_(shape) + " maps " + std::to_string(images.size()) +
                              " squares, expected " + std::to_string(removable.size()));
        }
        for (std::size_t i = 0; i < images.size(); ++i) {
            if (std::find(addible.begin(), addible.end(), images[i]) == addible.end()) {
                throw DomainError(describe_(shape) + " sends " + to_string(removable[i]) +
                                  " to non-addible square " + to_string(images[i]));
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (images[j] == images[i]) {
                    throw DomainError(describe_(shape) + " is not injective: " +
                                      to_string(removable[j]) + " and " + to_string(removable[i]) +
                                      " both map to " + to_string(images[i]));
                }
            }
        }
        return images;
    }

    /// The addible square assigned to a removable square.
    [[nodiscard]] Square bump(const Shape& shape, Square removable) const {
        auto squares = shape.removable_squares();
        auto assigned = images(shape);
        for (std::size_t i = 0; i < squares.size(); ++i) {
            if (squares[i] == removable) return assigned[i];
        }
        throw DomainError("square " + to_string(removable) + " is not removable in shape " +
                          shape.to_string());
    }

    /// The removable square mapped to a given addible square; the lone square
    /// has no preimage.
    [[nodiscard]] Square unbump(const Shape& shape, Square addible) const {
        auto squares = shape.removable_squares();
        auto assigned = images(shape);
        for (std::size_t i = 0; i < assigned.size(); ++i) {
            if (assigned[i] == addible) return squares[i];
        }
        if (addible == lone_square(shape)) {
            throw DomainError("square " + to_string(addible) + " is the lone square of " +
                              shape.to_string() + " under scheme '" + name_ + "'");
        }
        throw DomainError("square " + to_string(addible) + " is not addible in shape " +
                          shape.to_string());
    }

    /// The unique addible square outside the image of the injection.
    [[nodiscard]] Square lone_square(const Shape& shape) const {
        auto assigned = images(shape);
        for (Square candidate : shape.addible_squares()) {
            if (std::find(assigned.begin(), assigned.end(), candidate) == assigned.end()) {
                return candidate;
            }
        }
        throw DomainError(describe_(shape) + " leaves no lone square");
    }

private:
    [[nodiscard]] std::string describe_(const Shape& shape) const {
        return "scheme '" + name_ + "' on shape (" + shape.to_string() + ")";
    }

    std::string name_;
    ImagesFn images_;
};

/// Each removable square is sent to the addible square one row higher; the
/// lone square is the end of the bottom row. Induces classical row insertion.
[[nodiscard]] inline BumpingScheme make_row_scheme() {
    return BumpingScheme("row", [](const Shape& shape) {
        std::vector<Square> images;
        for (Square sq : shape.removable_squares()) {
            images.push_back({sq.row + 1, shape.part(sq.row + 1) + 1});
        }
        return images;
    });
}

/// Conjugate of the row rule: each removable square is sent to the addible
/// square one column to the right; the lone square is the top of column 1.
[[nodiscard]] inline BumpingScheme make_column_scheme() {
    return BumpingScheme("column", [](const Shape& shape) {
        Shape conj = shape.conjugate();
        std::vector<Square> images;
        for (Square sq : shape.removable_squares()) {
            images.push_back({conj.part(sq.col + 1) + 1, sq.col + 1});
        }
        return images;
    });
}

/// The bottom removable square goes to the top addible square, the second
/// lowest to the second highest, and so on; the lone square is always the
/// end of the bottom row.
[[nodiscard]] inline BumpingScheme make_reversing_scheme() {
    return BumpingScheme("reversing", [](const Shape& shape) {
        auto removable = shape.removable_squares();
        auto addible = shape.addible_squares();
        std::vector<Square> images;
        for (std::size_t i = 0; i < removable.size(); ++i) {
            images.push_back(addible[removable.size() - i]);
        }
        return images;
    });
}

/// An explicit per-shape list of removable -> addible assignments for every
/// shape up to max_size. Beyond that the derived scheme fails loudly.
struct SchemeTable {
    int max_size = 0;
    std::map<Shape, std::vector<std::pair<Square, Square>>> shapes;

    /// One message per defect; empty when the table is a complete family of
    /// injections for all shapes of size <= max_size.
    [[nodiscard]] std::vector<std::string> problems() const {
        std::vector<std::string> out;
        for (const auto& [shape, pairs] : shapes) {
            if (shape.size() > max_size) {
                out.push_back("shape (" + shape.to_string() + ") exceeds max_size " +
                              std::to_string(max_size));
            }
        }
        for (int n = 1; n <= max_size; ++n) {
            for (const Shape& shape : all_partitions(n)) {
                auto removable = shape.removable_squares();
                auto addible = shape.addible_squares();
                auto it = shapes.find(shape);
                const auto* pairs = it == shapes.end() ? nullptr : &it->second;
                for (Square sq : removable) {
                    int hits = 0;
                    if (pairs) {
                        for (const auto& [from, to] : *pairs) {
                            if (from == sq) ++hits;
                        }
                    }
                    if (hits != 1) {
                        out.push_back("shape (" + shape.to_string() + "): removable " + to_string(sq) +
                                      (hits == 0 ? " has no assignment" : " assigned more than once"));
                    }
                }
                if (!pairs) continue;
                std::vector<Square> targets;
                for (const auto& [from, to] : *pairs) {
                    if (std::find(removable.begin(), removable.end(), from) == removable.end()) {
                        out.push_back("shape (" + shape.to_string() + "): " + to_string(from) +
                                      " is not removable");
                    }
                    if (std::find(addible.begin(), addible.end(), to) == addible.end()) {
                        out.push_back("shape (" + shape.to_string() + "): target " + to_string(to) +
                                      " is not addible");
                    }
                    if (std::find(targets.begin(), targets.end(), to) != targets.end()) {
                        out.push_back("shape (" + shape.to_string() + "): target " + to_string(to) +
                                      " used twice");
                    }
                    targets.push_back(to);
                }
            }
        }
        return out;
    }
};

/// Scheme backed by an explicit table; the table is validated up front.
[[nodiscard]] inline BumpingScheme make_table_scheme(SchemeTable table, std::string name = "table") {
    auto defects = table.problems();
    if (!defects.empty()) {
        std::string message = "invalid scheme table:";
        for (const auto& d : defects) message += "\n  " + d;
        throw DomainError(message);
    }
    auto shared = std::make_shared<SchemeTable>(std::move(table));
    return BumpingScheme(std::move(name), [shared](const Shape& shape) {
        if (shape.size() > shared->max_size) {
            throw DomainError("scheme table covers shapes up to size " +
                              std::to_string(shared->max_size) + "; shape (" + shape.to_string() +
                              ") is larger");
        }
        std::vector<Square> images;
        auto it = shared->shapes.find(shape);
        if (it == shared->shapes.end()) return images;  // only reachable with no removable squares
        for (Square sq : shape.removable_squares()) {
            for (const auto& [from, to] : it->second) {
                if (from == sq) images.push_back(to);
            }
        }
        return images;
    });
}

namespace detail {

/// FNV-1a over the seed and the canonical shape encoding. Used instead of
/// std::hash so random schemes are reproducible across processes and
/// standard libraries.
[[nodiscard]] inline std::uint64_t mix_seed(std::uint64_t seed, const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    auto eat = [&h](unsigned char byte) {
        h ^= byte;
        h *= 1099511628211ull;
    };
    for (int i = 0; i < 8; ++i) eat(static_cast<unsigned char>(seed >> (8 * i)));
    for (char c : text) eat(static_cast<unsigned char>(c));
    return h;
}

} // namespace detail

/// For each shape, a pseudorandom injection determined by (seed, shape)
/// alone: the addible squares are shuffled by a generator keyed on that pair
/// and the first m become the images of the bottom-to-top removable list.
/// Computed injections are memoized; lookup is safe under concurrency.
[[nodiscard]] inline BumpingScheme make_random_scheme(std::uint64_t seed) {
    struct Cache {
        std::mutex mutex;
        std::map<Shape, std::vector<Square>> images;
    };
    auto cache = std::make_shared<Cache>();
    return BumpingScheme("random:" + std::to_string(seed), [seed, cache](const Shape& shape) {
        {
            std::lock_guard<std::mutex> lock(cache->mutex);
            auto it = cache->images.find(shape);
            if (it != cache->images.end()) return it->second;
        }
        auto addible = shape.addible_squares();
        std::mt19937_64 rng(detail::mix_seed(seed, shape.to_string()));
        // Explicit Fisher-Yates: std::shuffle's draws are not portable.
        for (std::size_t i = addible.size(); i > 1; --i) {
            std::swap(addible[i - 1], addible[rng() % i]);
        }
        addible.resize(shape.removable_squares().size());
        std::lock_guard<std::mutex> lock(cache->mutex);
        return cache->images.emplace(shape, std::move(addible)).first->second;
    });
}

} // namespace schensted
