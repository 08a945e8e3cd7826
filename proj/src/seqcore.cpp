#include "rls/seqcore.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rls {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1u) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

void require_odd_prime(std::uint64_t n) {
    if (!is_odd_prime(n))
        throw std::invalid_argument("n must be an odd prime (got " + std::to_string(n) + ")");
}

}  // namespace

BinarySequence::BinarySequence(std::vector<int> values) : values_(std::move(values)) {
    for (int v : values_)
        if (v != 1 && v != -1)
            throw std::invalid_argument("binary sequence entries must be +1 or -1");
}

BinarySequence::BinarySequence(std::initializer_list<int> values)
    : BinarySequence(std::vector<int>(values)) {}

long long BinarySequence::sum() const {
    long long s = 0;
    for (int v : values_) s += v;
    return s;
}

BinarySequence BinarySequence::negated() const {
    std::vector<int> out(values_.size());
    for (std::size_t j = 0; j < values_.size(); ++j) out[j] = -values_[j];
    return BinarySequence(std::move(out));
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    // These twelve bases are a deterministic witness set below 3.3e24.
    static constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t p : bases) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1u) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : bases) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t next_prime(std::uint64_t n) {
    if (n <= 2) return 2;
    std::uint64_t c = n | 1u;
    while (!is_prime(c)) c += 2;
    return c;
}

std::uint64_t prev_prime(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("no prime below 2");
    if (n == 2) return 2;
    std::uint64_t c = (n % 2 == 0) ? n - 1 : n;
    while (c > 2 && !is_prime(c)) c -= 2;
    return c;
}

bool is_odd_prime(std::uint64_t n) { return n > 2 && is_prime(n); }

int legendre_symbol(std::int64_t j, std::uint64_t n) {
    require_odd_prime(n);
    const auto sn = static_cast<std::int64_t>(n);
    std::int64_t r = j % sn;
    if (r < 0) r += sn;
    if (r == 0) return 0;
    const std::uint64_t e = pow_mod(static_cast<std::uint64_t>(r), (n - 1) / 2, n);
    return e == 1 ? 1 : -1;
}

BinarySequence legendre_sequence(std::uint64_t n) {
    require_odd_prime(n);
    std::vector<int> out(n);
    out[0] = 1;
    // Mark residues by squaring: cheaper than n modular exponentiations.
    std::vector<char> residue(n, 0);
    for (std::uint64_t k = 1; k <= (n - 1) / 2; ++k) residue[mul_mod(k, k, n)] = 1;
    for (std::uint64_t j = 1; j < n; ++j) out[j] = residue[j] ? 1 : -1;
    return BinarySequence(std::move(out));
}

BinarySequence rotate(const BinarySequence& seq, std::int64_t t) {
    const auto n = static_cast<std::int64_t>(seq.size());
    if (n == 0) return seq;
    std::int64_t shift = t % n;
    if (shift < 0) shift += n;
    std::vector<int> out(seq.size());
    for (std::int64_t j = 0; j < n; ++j) out[j] = seq[(j + shift) % n];
    return BinarySequence(std::move(out));
}

RotationSet bind_rotations(std::span<const double> fractions, std::uint64_t n) {
    require_odd_prime(n);
    RotationSet set;
    set.length = n;
    set.fractions.reserve(fractions.size());
    set.offsets.reserve(fractions.size());
    const double dn = static_cast<double>(n);
    for (double f : fractions) {
        if (!(f >= 0.0 && f <= 1.0))
            throw std::invalid_argument("rotation fraction must lie in [0,1]");
        auto t = static_cast<std::int64_t>(std::floor(f * dn + 0.5)) % static_cast<std::int64_t>(n);
        set.offsets.push_back(t);
        set.fractions.push_back(static_cast<double>(t) / dn);
    }
    return set;
}

std::vector<BinarySequence> rotated_legendre_set(const RotationSet& rotations) {
    if (!rotations.bound()) throw std::invalid_argument("rotation set is not bound to a length");
    const BinarySequence base = legendre_sequence(*rotations.length);
    std::vector<BinarySequence> out;
    out.reserve(rotations.offsets.size());
    for (std::int64_t t : rotations.offsets) out.push_back(rotate(base, t));
    return out;
}

}  // namespace rls
