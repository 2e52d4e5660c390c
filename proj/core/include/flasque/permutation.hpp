#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace flasque {

/// A bijection of {1, ..., degree}, stored as its one-line image array.
///
/// Products compose right to left: (a * b)(x) = a(b(x)). The natural order
/// is lexicographic on the image array, which is what every deterministic
/// enumeration in the library sorts by.
class Permutation {
public:
    Permutation() = default;

    /// `images[i]` is the image of letter i + 1. Throws ArgumentError unless
    /// the array is a bijection of {1, ..., images.size()}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int degree);

    /// Builds a permutation from disjoint or overlapping cycles; cycles are
    /// applied right to left, so `{{1, 2}, {2, 3}}` is (1 2)(2 3).
    static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

    /// Parses cycle notation such as "(1 2 3)(4 5)" or "()" for the identity.
    /// Letters may be separated by spaces or commas.
    static Permutation parse(std::string_view text, int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    const std::vector<int>& images() const { return images_; }

    int operator()(int letter) const { return images_[static_cast<std::size_t>(letter - 1)]; }

    Permutation operator*(const Permutation& rhs) const;
    Permutation inverse() const;
    Permutation pow(std::int64_t exponent) const;

    bool is_identity() const;
    bool is_even() const;
    bool fixes(int letter) const { return (*this)(letter) == letter; }
    std::uint64_t order() const;

    /// Disjoint cycle notation, fixed points omitted; "()" for the identity.
    std::string to_cycle_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace flasque
