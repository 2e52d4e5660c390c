#include "flasque/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "flasque/errors.hpp"

namespace flasque {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
        if (v < 1 || v > degree() || seen[static_cast<std::size_t>(v)])
            throw ArgumentError("image array is not a bijection of {1.." + std::to_string(degree()) + "}");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int degree) {
    if (degree < 0) throw ArgumentError("negative degree");
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    Permutation result = identity(degree);
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
        const auto& cycle = *it;
        std::vector<int> images = identity(degree).images_;
        std::vector<bool> used(static_cast<std::size_t>(degree) + 1, false);
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int a = cycle[i];
            if (a < 1 || a > degree)
                throw ArgumentError("cycle letter " + std::to_string(a) + " outside 1.." + std::to_string(degree));
            if (used[static_cast<std::size_t>(a)])
                throw ArgumentError("letter " + std::to_string(a) + " repeated inside a cycle");
            used[static_cast<std::size_t>(a)] = true;
            images[static_cast<std::size_t>(a - 1)] = cycle[(i + 1) % cycle.size()];
        }
        result = Permutation(std::move(images)) * result;
    }
    return result;
}

Permutation Permutation::parse(std::string_view text, int degree) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };
    skip_space();
    if (i == text.size()) throw ParseError("empty permutation string");
    while (i < text.size()) {
        if (text[i] != '(') throw ParseError("expected '(' in \"" + std::string(text) + "\"");
        ++i;
        std::vector<int> cycle;
        for (;;) {
            skip_space();
            if (i >= text.size()) throw ParseError("unterminated cycle in \"" + std::string(text) + "\"");
            if (text[i] == ')') {
                ++i;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("unexpected character '" + std::string(1, text[i]) + "' in \"" +
                                 std::string(text) + "\"");
            long value = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                value = value * 10 + (text[i] - '0');
                if (value > 1'000'000) throw ParseError("letter too large");
                ++i;
            }
            cycle.push_back(static_cast<int>(value));
        }
        if (!cycle.empty()) cycles.push_back(std::move(cycle));
        skip_space();
    }
    try {
        return from_cycles(degree, cycles);
    } catch (const ArgumentError& e) {
        throw ParseError(e.what());
    }
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    if (degree() != rhs.degree()) throw ArgumentError("degree mismatch in permutation product");
    std::vector<int> images(images_.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        images[i] = images_[static_cast<std::size_t>(rhs.images_[i] - 1)];
    Permutation out;
    out.images_ = std::move(images);
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        out.images_[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    return out;
}

Permutation Permutation::pow(std::int64_t exponent) const {
    Permutation base = exponent < 0 ? inverse() : *this;
    std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent) : static_cast<std::uint64_t>(exponent);
    Permutation result = identity(degree());
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

bool Permutation::is_even() const {
    std::vector<bool> seen(images_.size(), false);
    std::size_t transpositions = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j] - 1)) {
            seen[j] = true;
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0;
}

std::uint64_t Permutation::order() const {
    std::vector<bool> seen(images_.size(), false);
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j] - 1)) {
            seen[j] = true;
            ++len;
        }
        result = std::lcm(result, len);
    }
    return result;
}

std::string Permutation::to_cycle_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == static_cast<int>(i) + 1) continue;
        out += '(';
        bool first = true;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j] - 1)) {
            seen[j] = true;
            if (!first) out += ' ';
            out += std::to_string(j + 1);
            first = false;
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.images()) {
        h ^= static_cast<std::size_t>(v);
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace flasque
