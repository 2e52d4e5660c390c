#include "flasque/arith.hpp"

#include "flasque/errors.hpp"

namespace flasque {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int p_valuation(std::uint64_t n, std::uint64_t p) {
    if (n == 0 || p < 2) throw ArgumentError("p_valuation needs n > 0 and p >= 2");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::vector<int> primes_up_to(int bound) {
    std::vector<int> out;
    for (int n = 2; n <= bound; ++n)
        if (is_prime(static_cast<std::uint64_t>(n))) out.push_back(n);
    return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw ArgumentError("factorial argument out of range");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

}  // namespace flasque
