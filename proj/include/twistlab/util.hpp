#pragma once

#include <complex>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistlab {

using Cx = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

// Thrown when an operation's stated precondition is violated.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a quadrature or solver fails to reach its declared accuracy.
struct AccuracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotImplementedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 64-bit finalizer from SplitMix64 (Steele, Lea, Flood).
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

// Shortest round-trip decimal form, stable across runs.
inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// Lexicographic indexer for multi-indices in [1,N]^d (first axis most significant).
class MultiIndexer {
public:
    MultiIndexer(int d, int N) : d_(d), N_(N) {
        if (d < 1 || N < 1) throw PreconditionError("MultiIndexer: d and N must be positive");
        size_ = 1;
        for (int a = 0; a < d; ++a) size_ *= static_cast<std::size_t>(N);
    }

    int d() const { return d_; }
    int N() const { return N_; }
    std::size_t size() const { return size_; }

    // flat index -> components in [1,N]
    std::vector<int> unflatten(std::size_t flat) const {
        std::vector<int> s(d_);
        for (int a = d_ - 1; a >= 0; --a) {
            s[a] = static_cast<int>(flat % N_) + 1;
            flat /= N_;
        }
        return s;
    }

    std::size_t flatten(const std::vector<int>& s) const {
        std::size_t flat = 0;
        for (int a = 0; a < d_; ++a) flat = flat * N_ + static_cast<std::size_t>(s[a] - 1);
        return flat;
    }

    bool in_range(const std::vector<int>& s) const {
        for (int a = 0; a < d_; ++a)
            if (s[a] < 1 || s[a] > N_) return false;
        return true;
    }

private:
    int d_;
    int N_;
    std::size_t size_;
};

// Radical-inverse Halton point, bases 2,3,5,... per axis; index starts at 1.
double halton(std::uint64_t index, int base);
std::vector<double> halton_point(std::uint64_t index, int dims);

}  // namespace twistlab
