// Number-theoretic sequence construction: primality, Legendre symbols,
// Legendre sequences and cyclic rotation.

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace rls {

// Antipodal (+1/-1) sequence. Construction rejects any other symbol.
class BinarySequence {
public:
    BinarySequence() = default;
    explicit BinarySequence(std::vector<int> values);
    BinarySequence(std::initializer_list<int> values);

    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    int operator[](std::size_t j) const { return values_[j]; }
    std::span<const int> values() const { return values_; }

    // Sum of all symbols.
    long long sum() const;

    BinarySequence negated() const;

    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    friend bool operator==(const BinarySequence&, const BinarySequence&) = default;

private:
    std::vector<int> values_;
};

// Rotation fractions f_p in [0,1], optionally bound to a length N with the
// integer left-shift offsets t_p = round(f_p * N) mod N.
struct RotationSet {
    std::vector<double> fractions;
    std::vector<std::int64_t> offsets;
    std::optional<std::uint64_t> length;

    std::size_t size() const { return fractions.size(); }
    bool bound() const { return length.has_value(); }
};

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

// Smallest prime >= n.
std::uint64_t next_prime(std::uint64_t n);

// Largest prime <= n; throws std::invalid_argument when n < 2.
std::uint64_t prev_prime(std::uint64_t n);

bool is_odd_prime(std::uint64_t n);

// Legendre symbol (j | n) via Euler's criterion. Throws std::invalid_argument
// unless n is an odd prime.
int legendre_symbol(std::int64_t j, std::uint64_t n);

// Legendre sequence of odd prime length n, with element 0 forced to +1.
BinarySequence legendre_sequence(std::uint64_t n);

// Cyclic left rotation: out[j] = seq[(j + t) mod N]. Negative t allowed.
BinarySequence rotate(const BinarySequence& seq, std::int64_t t);

// Round-half-up binding of fractions to offsets on an odd prime length n.
// The stored fractions are re-derived as t_p / n.
RotationSet bind_rotations(std::span<const double> fractions, std::uint64_t n);

// The rotated-Legendre set for a bound rotation set.
std::vector<BinarySequence> rotated_legendre_set(const RotationSet& rotations);

}  // namespace rls
