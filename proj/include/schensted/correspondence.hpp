#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "schensted/insertion.hpp"

namespace schensted {

/// A rearrangement of 1..n in one-line notation.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> letters) : letters_(std::move(letters)) {
        std::vector<bool> seen(letters_.size(), false);
        for (int v : letters_) {
            if (v < 1 || v > static_cast<int>(letters_.size()) || seen[v - 1]) {
                throw DomainError("letters are not a rearrangement of 1..n");
            }
            seen[v - 1] = true;
        }
    }

    [[nodiscard]] static Permutation identity(int n) {
        std::vector<int> letters(n);
        for (int i = 0; i < n; ++i) letters[i] = i + 1;
        return Permutation(std::move(letters));
    }

    /// Accepts a digit string ("2641375") when n <= 9, or comma-separated
    /// letters ("10,2,9,...") for larger n.
    [[nodiscard]] static Permutation from_string(const std::string& text) {
        if (text.empty()) throw ParseError("empty permutation");
        std::vector<int> letters;
        if (text.find(',') == std::string::npos && text.size() <= 9) {
            for (char c : text) {
                if (c < '1' || c > '9') {
                    throw ParseError(std::string("bad letter '") + c + "' in \"" + text + "\"");
                }
                letters.push_back(c - '0');
            }
        } else {
            std::size_t pos = 0;
            while (pos <= text.size()) {
                std::size_t comma = text.find(',', pos);
                std::string token =
                    text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
                try {
                    std::size_t used = 0;
                    int value = std::stoi(token, &used);
                    if (used != token.size()) throw ParseError("");
                    letters.push_back(value);
                } catch (const std::exception&) {
                    throw ParseError("bad letter '" + token + "' in \"" + text + "\"");
                }
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        }
        try {
            return Permutation(std::move(letters));
        } catch (const DomainError& e) {
            throw ParseError("\"" + text + "\" is not a permutation: " + e.what());
        }
    }

    [[nodiscard]] const std::vector<int>& letters() const { return letters_; }
    [[nodiscard]] int size() const { return static_cast<int>(letters_.size()); }

    /// Digit string for n <= 9, comma-separated otherwise.
    [[nodiscard]] std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (letters_.size() > 9 && i > 0) out += ',';
            out += std::to_string(letters_[i]);
        }
        return out;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> letters_;
};

/// Insertion tableau and recording tableau of the same shape.
struct TableauPair {
    Tableau p;
    Tableau q;

    friend bool operator==(const TableauPair&, const TableauPair&) = default;
    friend auto operator<=>(const TableauPair&, const TableauPair&) = default;
};

/// Inserts the letters of the permutation one at a time; p is the result of
/// the insertions and q records, at each step k, the boundary square where
/// p grew.
[[nodiscard]] inline TableauPair rs_forward(const BumpingScheme& scheme, const Permutation& permutation) {
    TableauPair pair;
    int step = 0;
    for (int letter : permutation.letters()) {
        Shape before = pair.p.shape();
        pair.p = insert(scheme, pair.p, letter).tableau;
        pair.q = pair.q.with_entry(skew_square(pair.p.shape(), before), ++step);
    }
    return pair;
}

/// Inverse of rs_forward: locates n, n-1, ... in q to find the shape chain
/// and un-inserts p one step at a time. The pair must be two standard
/// tableaux of the same shape.
[[nodiscard]] inline Permutation rs_inverse(const BumpingScheme& scheme, const TableauPair& pair) {
    if (pair.p.shape() != pair.q.shape()) {
        throw DomainError("tableau pair has mismatched shapes (" + pair.p.shape().to_string() +
                          ") and (" + pair.q.shape().to_string() + ")");
    }
    if (!pair.p.standard()) throw DomainError("insertion tableau is not standard");
    if (!pair.q.standard()) throw DomainError("recording tableau is not standard");
    int n = pair.p.size();
    std::vector<int> letters(n);
    Tableau current = pair.p;
    for (int k = n; k >= 1; --k) {
        Shape target = pair.q.restrict_below(k - 1).shape();
        auto [smaller, letter] = uninsert(scheme, current, target);
        letters[k - 1] = letter;
        current = std::move(smaller);
    }
    return Permutation(std::move(letters));
}

/// Longest increasing subsequence length, by direct dynamic programming
/// (no tableaux involved).
[[nodiscard]] inline int lis_statistic(const Permutation& permutation) {
    const auto& letters = permutation.letters();
    std::vector<int> best(letters.size(), 1);
    int longest = letters.empty() ? 0 : 1;
    for (std::size_t i = 1; i < letters.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (letters[j] < letters[i]) best[i] = std::max(best[i], best[j] + 1);
        }
        longest = std::max(longest, best[i]);
    }
    return longest;
}

/// Length of the bottom row of the insertion tableau under the given scheme.
[[nodiscard]] inline int first_row_length(const BumpingScheme& scheme, const Permutation& permutation) {
    Shape shape = rs_forward(scheme, permutation).p.shape();
    return shape.empty() ? 0 : shape.parts()[0];
}

/// Encode with one correspondence, decode with another. A bijection on the
/// symmetric group for any fixed ordered pair of schemes; the identity map
/// when the schemes agree.
[[nodiscard]] inline Permutation scramble(const Permutation& permutation,
                                          const BumpingScheme& encode,
                                          const BumpingScheme& decode) {
    return rs_inverse(decode, rs_forward(encode, permutation));
}

/// Exhaustive check over all n! permutations that the correspondence is
/// injective, lands on same-shape standard pairs hitting each shape class
/// f^2 times, and inverts correctly.
[[nodiscard]] inline VerificationReport verify_bijection(const BumpingScheme& scheme, int n,
                                                         int exhaustive_bound = 6) {
    if (n > exhaustive_bound) {
        throw DomainError("bijection check over S_" + std::to_string(n) +
                          " exceeds the exhaustive bound " + std::to_string(exhaustive_bound));
    }
    VerificationReport report{"bijection(" + scheme.name() + ")", 0, {}};
    using RawPair = std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>;
    std::set<RawPair> images;
    std::map<Shape, long long> per_shape;
    std::vector<int> letters(n);
    for (int i = 0; i < n; ++i) letters[i] = i + 1;
    do {
        Permutation sigma{std::vector<int>(letters)};
        TableauPair pair = rs_forward(scheme, sigma);
        ++report.cases;
        if (pair.p.shape() != pair.q.shape() || !pair.p.standard() || !pair.q.standard()) {
            report.failures.push_back(sigma.to_string() + ": image is not a same-shape standard pair");
            continue;
        }
        if (!images.emplace(pair.p.rows(), pair.q.rows()).second) {
            report.failures.push_back(sigma.to_string() + ": image pair already produced");
        }
        ++per_shape[pair.p.shape()];
        if (rs_inverse(scheme, pair) != sigma) {
            report.failures.push_back(sigma.to_string() + ": inverse does not return the input");
        }
    } while (std::next_permutation(letters.begin(), letters.end()));
    CountMemo memo;
    for (const Shape& shape : all_partitions(n)) {
        const BigInt& f = count_standard(shape, memo);
        BigInt expected = f * f;
        auto it = per_shape.find(shape);
        BigInt got = it == per_shape.end() ? 0 : it->second;
        if (got != expected) {
            report.failures.push_back("shape (" + shape.to_string() + "): " + got.str() +
                                      " pairs, expected " + expected.str());
        }
    }
    return report;
}

} // namespace schensted
