#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "schensted/shapes.hpp"

namespace schensted {

using BigInt = boost::multiprecision::cpp_int;

/// A filling of a Ferrers diagram with distinct positive integers that
/// increase left to right along rows and bottom to top along columns.
/// Rows are stored bottom-up, matching the Square convention. A tableau is
/// standard when its entries are exactly 1..n.
class Tableau {
public:
    Tableau() = default;

    /// Validating constructor from bottom-up rows.
    [[nodiscard]] static Tableau from_rows(std::vector<std::vector<int>> rows) {
        // Trailing empty rows are tolerated on input but never stored.
        while (!rows.empty() && rows.back().empty()) rows.pop_back();
        std::set<int> seen;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].empty()) throw DomainError("row " + std::to_string(r + 1) + " is empty");
            if (r > 0 && rows[r].size() > rows[r - 1].size()) {
                throw DomainError("row lengths must be weakly decreasing bottom-up");
            }
            for (std::size_t c = 0; c < rows[r].size(); ++c) {
                int value = rows[r][c];
                if (value < 1) throw DomainError("tableau entries must be positive");
                if (!seen.insert(value).second) {
                    throw DomainError("duplicate entry " + std::to_string(value));
                }
                if (c > 0 && rows[r][c - 1] >= value) {
                    throw DomainError("row entries must increase left to right");
                }
                if (r > 0 && rows[r - 1][c] >= value) {
                    throw DomainError("column entries must increase bottom to top");
                }
            }
        }
        Tableau t;
        t.rows_ = std::move(rows);
        return t;
    }

    /// Bottom-up rows.
    [[nodiscard]] const std::vector<std::vector<int>>& rows() const { return rows_; }

    [[nodiscard]] Shape shape() const {
        std::vector<int> parts;
        parts.reserve(rows_.size());
        for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
        return Shape(std::move(parts));
    }

    [[nodiscard]] bool empty() const { return rows_.empty(); }

    [[nodiscard]] int size() const {
        int total = 0;
        for (const auto& row : rows_) total += static_cast<int>(row.size());
        return total;
    }

    [[nodiscard]] bool has(Square sq) const {
        return sq.row >= 1 && sq.row <= static_cast<int>(rows_.size()) &&
               sq.col >= 1 && sq.col <= static_cast<int>(rows_[sq.row - 1].size());
    }

    [[nodiscard]] int at(Square sq) const {
        if (!has(sq)) throw DomainError("no square " + to_string(sq) + " in this tableau");
        return rows_[sq.row - 1][sq.col - 1];
    }

    [[nodiscard]] std::optional<Square> find(int entry) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            for (std::size_t c = 0; c < rows_[r].size(); ++c) {
                if (rows_[r][c] == entry) {
                    return Square{static_cast<int>(r) + 1, static_cast<int>(c) + 1};
                }
            }
        }
        return std::nullopt;
    }

    /// All entries in increasing order.
    [[nodiscard]] std::vector<int> entries() const {
        std::vector<int> out;
        for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
        std::sort(out.begin(), out.end());
        return out;
    }

    [[nodiscard]] int max_entry() const {
        if (empty()) throw DomainError("the empty tableau has no entries");
        int best = 0;
        for (const auto& row : rows_) best = std::max(best, *std::max_element(row.begin(), row.end()));
        return best;
    }

    [[nodiscard]] bool standard() const {
        auto sorted = entries();
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (sorted[i] != static_cast<int>(i) + 1) return false;
        }
        return true;
    }

    /// Sub-tableau of all entries <= threshold. Always a valid tableau.
    [[nodiscard]] Tableau restrict_below(int threshold) const {
        std::vector<std::vector<int>> rows;
        for (const auto& row : rows_) {
            std::vector<int> kept;
            for (int value : row) {
                if (value > threshold) break;  // rows increase, so a prefix survives
                kept.push_back(value);
            }
            if (kept.empty()) break;
            rows.push_back(std::move(kept));
        }
        Tableau t;
        t.rows_ = std::move(rows);
        return t;
    }

    struct RemovedMax {
        Tableau remaining;
        Square vacated;
        int entry = 0;
    };

    /// Delete the largest entry; its square is always removable.
    [[nodiscard]] RemovedMax remove_max() const {
        int entry = max_entry();
        Square sq = *find(entry);
        RemovedMax out;
        out.vacated = sq;
        out.entry = entry;
        out.remaining.rows_ = rows_;
        out.remaining.rows_[sq.row - 1].pop_back();
        if (out.remaining.rows_[sq.row - 1].empty()) out.remaining.rows_.pop_back();
        return out;
    }

    /// Copy with `value` placed in the addible square `sq`; rejects
    /// placements that break row/column monotonicity or duplicate an entry.
    [[nodiscard]] Tableau with_entry(Square sq, int value) const {
        shape().with_square_added(sq);  // throws unless sq is addible
        if (value < 1) throw DomainError("tableau entries must be positive");
        if (find(value)) throw DomainError("entry " + std::to_string(value) + " already present");
        if (sq.col > 1 && at({sq.row, sq.col - 1}) >= value) {
            throw DomainError("placing " + std::to_string(value) + " at " + to_string(sq) +
                              " breaks the row ordering");
        }
        if (sq.row > 1 && at({sq.row - 1, sq.col}) >= value) {
            throw DomainError("placing " + std::to_string(value) + " at " + to_string(sq) +
                              " breaks the column ordering");
        }
        Tableau t;
        t.rows_ = rows_;
        if (sq.row > static_cast<int>(t.rows_.size())) t.rows_.emplace_back();
        t.rows_[sq.row - 1].push_back(value);
        return t;
    }

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau&, const Tableau&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

/// All standard tableaux of the given shape, each exactly once. Guarded by a
/// listing bound since the count grows superexponentially.
[[nodiscard]] inline std::vector<Tableau> enumerate_standard(const Shape& shape, int listing_bound = 8) {
    if (shape.size() > listing_bound) {
        throw DomainError("shape " + shape.to_string() + " exceeds the listing bound " +
                          std::to_string(listing_bound));
    }
    if (shape.empty()) return {Tableau()};
    std::vector<Tableau> result;
    int n = shape.size();
    for (Square sq : shape.removable_squares()) {
        for (const Tableau& smaller : enumerate_standard(shape.with_square_removed(sq), listing_bound)) {
            result.push_back(smaller.with_entry(sq, n));
        }
    }
    return result;
}

using CountMemo = std::map<Shape, BigInt>;

/// Number of standard tableaux of the given shape, by the downward recursion
/// f = sum over predecessors, memoized in `memo`.
[[nodiscard]] inline const BigInt& count_standard(const Shape& shape, CountMemo& memo) {
    auto it = memo.find(shape);
    if (it != memo.end()) return it->second;
    BigInt total = 0;
    if (shape.empty()) {
        total = 1;
    } else {
        for (const Shape& predecessor : shape.predecessors()) {
            total += count_standard(predecessor, memo);
        }
    }
    return memo.emplace(shape, std::move(total)).first->second;
}

[[nodiscard]] inline BigInt count_standard(const Shape& shape) {
    CountMemo memo;
    return count_standard(shape, memo);
}

[[nodiscard]] inline BigInt factorial(int n) {
    BigInt out = 1;
    for (int k = 2; k <= n; ++k) out *= k;
    return out;
}

/// Outcome of one of the exhaustive checks. `failures` holds one line per
/// violated instance; an empty list means the check passed.
struct VerificationReport {
    std::string name;
    long long cases = 0;
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// For every shape of size 1..n_max, checks the upward recursion
/// (n+1) f = sum over successors together with the two summed forms it is
/// derived from: (m+1) f + sum over plus-minus = sum over successors, and
/// m f + sum over plus-minus = n * sum over predecessors.
[[nodiscard]] inline VerificationReport verify_upward_recursion(int n_max) {
    VerificationReport report{"upward-recursion", 0, {}};
    CountMemo memo;
    for (int n = 1; n <= n_max; ++n) {
        for (const Shape& shape : all_partitions(n)) {
            BigInt f = count_standard(shape, memo);
            BigInt up = 0;
            for (const Shape& s : shape.successors()) up += count_standard(s, memo);
            BigInt down = 0;
            for (const Shape& s : shape.predecessors()) down += count_standard(s, memo);
            BigInt sideways = 0;
            for (const Shape& s : shape.plus_minus_shapes()) sideways += count_standard(s, memo);
            auto m = static_cast<int>(shape.removable_squares().size());
            ++report.cases;
            if ((n + 1) * f != up) {
                report.failures.push_back("(" + shape.to_string() + "): (n+1)f != sum of successor counts");
            }
            if ((m + 1) * f + sideways != up) {
                report.failures.push_back("(" + shape.to_string() + "): (m+1)f + plus-minus sum != successor sum");
            }
            if (m * f + sideways != n * down) {
                report.failures.push_back("(" + shape.to_string() + "): m f + plus-minus sum != n * predecessor sum");
            }
        }
    }
    return report;
}

/// Checks n! = sum of squared tableau counts over all partitions of n,
/// for every n up to n_max.
[[nodiscard]] inline VerificationReport verify_dimension_formula(int n_max) {
    VerificationReport report{"dimension-formula", 0, {}};
    CountMemo memo;
    for (int n = 0; n <= n_max; ++n) {
        BigInt total = 0;
        for (const Shape& shape : all_partitions(n)) {
            const BigInt& f = count_standard(shape, memo);
            total += f * f;
        }
        ++report.cases;
        if (total != factorial(n)) {
            report.failures.push_back("n=" + std::to_string(n) + ": sum of squares " + total.str() +
                                      " != " + factorial(n).str());
        }
    }
    return report;
}

} // namespace schensted
