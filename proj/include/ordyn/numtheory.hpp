#pragma once

#include <cstdint>
#include <vector>

namespace ordyn {

bool is_prime(std::uint64_t n);

// Primes <= bound, ascending.
std::vector<std::uint64_t> primes_upto(std::uint64_t bound);

// k-th prime, 0-based (nth_prime(0) == 2).
std::uint64_t nth_prime(std::uint32_t k);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

// (a * b) % m without overflow.
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);

}  // namespace ordyn
