#pragma once

#include <cstdint>
#include <vector>

namespace flasque {

bool is_prime(std::uint64_t n);

/// Largest v with p^v dividing n (n > 0).
int p_valuation(std::uint64_t n, std::uint64_t p);

std::vector<int> primes_up_to(int bound);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

std::uint64_t factorial(int n);

}  // namespace flasque
