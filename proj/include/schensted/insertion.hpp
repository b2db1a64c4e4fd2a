#pragma once

#include <string>
#include <utility>
#include <vector>

#include "schensted/bumping.hpp"
#include "schensted/tableaux.hpp"

namespace schensted {

/// How one entry was placed during an insertion: the inserted letter enters
/// the lone square; every later entry either reoccupies its own square or is
/// bumped to the addible square its square maps to.
enum class Rule { Lone, SameSquare, Bump };

[[nodiscard]] inline std::string to_string(Rule rule) {
    switch (rule) {
        case Rule::Lone: return "LONE";
        case Rule::SameSquare: return "SAME_SQUARE";
        case Rule::Bump: return "BUMP";
    }
    throw DomainError("unknown rule");
}

struct TraceStep {
    int entry = 0;
    Square placed_at;
    Rule rule = Rule::Lone;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/// Step-by-step record of one insertion. `initial` is the source tableau;
/// the first step is always the lone-square placement of the inserted letter
/// and step entries strictly increase.
struct InsertionTrace {
    Tableau initial;
    Tableau result;
    std::vector<TraceStep> steps;

    friend bool operator==(const InsertionTrace&, const InsertionTrace&) = default;
};

struct InsertResult {
    Tableau tableau;
    InsertionTrace trace;
};

/// Inserts `letter` into a tableau with distinct entries not containing it.
/// The entries below `letter` are kept in place, `letter` enters the lone
/// square of their shape, and the remaining entries re-enter in increasing
/// order: back into their own square when it is vacant, otherwise bumped to
/// the addible square the scheme assigns to it.
[[nodiscard]] inline InsertResult insert(const BumpingScheme& scheme, const Tableau& source, int letter) {
    if (letter < 1) throw DomainError("inserted letter must be positive");
    if (source.find(letter)) {
        throw DomainError("letter " + std::to_string(letter) + " is already in the tableau");
    }
    std::vector<TraceStep> steps;
    Tableau current = source.restrict_below(letter - 1);
    Square lone = scheme.lone_square(current.shape());
    current = current.with_entry(lone, letter);
    steps.push_back({letter, lone, Rule::Lone});
    for (int entry : source.entries()) {
        if (entry < letter) continue;
        Square home = *source.find(entry);
        if (!current.shape().contains(home)) {
            current = current.with_entry(home, entry);
            steps.push_back({entry, home, Rule::SameSquare});
        } else {
            Square target = scheme.bump(current.shape(), home);
            current = current.with_entry(target, entry);
            steps.push_back({entry, target, Rule::Bump});
        }
    }
    return {current, {source, current, std::move(steps)}};
}

/// The tableau states visited by an insertion, from the state just before
/// the lone-square placement through the final tableau. states[k] is the
/// state on which steps[k] acted.
[[nodiscard]] inline std::vector<Tableau> trace_states(const InsertionTrace& trace) {
    if (trace.steps.empty()) throw DomainError("empty insertion trace");
    std::vector<Tableau> states;
    states.push_back(trace.initial.restrict_below(trace.steps.front().entry - 1));
    for (const TraceStep& step : trace.steps) {
        states.push_back(states.back().with_entry(step.placed_at, step.entry));
    }
    return states;
}

/// Inverse of `insert`, relative to a target shape: peels the largest entry
/// and recurses until the peeled entry is the one that had entered a lone
/// square. `target` must be covered by the tableau's shape. Returns the
/// source tableau (of shape `target`) and the letter that was inserted.
[[nodiscard]] inline std::pair<Tableau, int> uninsert(const BumpingScheme& scheme,
                                                      const Tableau& tableau,
                                                      const Shape& target) {
    const Shape shape = tableau.shape();
    if (!target.is_subshape_of(shape) || shape.size() != target.size() + 1) {
        throw DomainError("target shape (" + target.to_string() + ") is not covered by (" +
                          shape.to_string() + ")");
    }
    auto [rest, vacated, entry] = tableau.remove_max();
    if (rest.shape() == target) {
        if (vacated == scheme.lone_square(target)) {
            return {rest, entry};  // the peeled entry was the inserted letter
        }
        // The peeled entry had been bumped: it came from the removable square
        // assigned to the square it vacated.
        Square came_from = scheme.unbump(target, vacated);
        auto [source, letter] = uninsert(scheme, rest, target.with_square_removed(came_from));
        return {source.with_entry(came_from, entry), letter};
    }
    // The peeled entry sat in its own square; recurse toward the unique
    // predecessor of the target contained in what remains.
    Shape predecessor = meet(target, rest.shape());
    if (predecessor.size() != target.size() - 1) {
        throw DomainError("tableau is not an insertion image for target shape (" +
                          target.to_string() + ")");
    }
    auto [source, letter] = uninsert(scheme, rest, predecessor);
    return {source.with_entry(skew_square(target, predecessor), entry), letter};
}

/// Textbook Schensted row insertion, kept free of bumping schemes so it can
/// serve as an independent reference. Returns the new tableau and the
/// boundary square where the final entry settled.
[[nodiscard]] inline std::pair<Tableau, Square> classical_row_insert(const Tableau& source, int letter) {
    if (letter < 1) throw DomainError("inserted letter must be positive");
    if (source.find(letter)) {
        throw DomainError("letter " + std::to_string(letter) + " is already in the tableau");
    }
    std::vector<std::vector<int>> rows = source.rows();
    int value = letter;
    for (std::size_t r = 0;; ++r) {
        if (r == rows.size()) {
            rows.push_back({value});
            return {Tableau::from_rows(std::move(rows)),
                    Square{static_cast<int>(r) + 1, 1}};
        }
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), value);
        if (it == row.end()) {
            row.push_back(value);
            return {Tableau::from_rows(std::move(rows)),
                    Square{static_cast<int>(r) + 1, static_cast<int>(row.size())}};
        }
        std::swap(*it, value);  // displaced entry moves up a row
    }
}

namespace detail {

/// Copy of a standard tableau with entry k replaced by the k-th smallest
/// element of `target_entries`.
[[nodiscard]] inline Tableau relabel(const Tableau& standard, const std::vector<int>& target_entries) {
    std::vector<std::vector<int>> rows = standard.rows();
    for (auto& row : rows) {
        for (int& value : row) value = target_entries[value - 1];
    }
    return Tableau::from_rows(std::move(rows));
}

} // namespace detail

/// Exhaustively checks that the row-scheme insertion agrees with classical
/// row insertion: over every shape of size n <= n_max, every tableau on
/// {1..n+1} minus {i}, every i.
[[nodiscard]] inline VerificationReport verify_row_insertion_equivalence(int n_max) {
    VerificationReport report{"row-equivalence", 0, {}};
    const BumpingScheme row = make_row_scheme();
    for (int n = 0; n <= n_max; ++n) {
        for (const Shape& shape : all_partitions(n)) {
            auto standard_fillings = enumerate_standard(shape, n_max);
            for (int letter = 1; letter <= n + 1; ++letter) {
                std::vector<int> entries;
                for (int v = 1; v <= n + 1; ++v) {
                    if (v != letter) entries.push_back(v);
                }
                for (const Tableau& filling : standard_fillings) {
                    Tableau source = detail::relabel(filling, entries);
                    ++report.cases;
                    if (insert(row, source, letter).tableau != classical_row_insert(source, letter).first) {
                        report.failures.push_back("shape (" + shape.to_string() + "), letter " +
                                                  std::to_string(letter));
                    }
                }
            }
        }
    }
    return report;
}

} // namespace schensted
