#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "cgt/numutil.hpp"

namespace cgt {

/// Permutation of {0..n-1} stored as an image array.
///
/// Composition is function composition: (a * b)(x) = a(b(x)), i.e. b acts
/// first. Everything downstream (Schreier-Sims, orbit code, matrix actions)
/// relies on this convention.
class Perm {
  public:
    Perm() = default;
    explicit Perm(u32 n) : im_(n) {
        for (u32 i = 0; i < n; ++i) im_[i] = i;
    }

    static Perm from_images(std::vector<u32> images);  // validates bijection
    // Parses "(0 1 2)(3 4)" or "()" on n points; commas also accepted.
    static Perm from_cycles(const std::string& s, u32 n);

    u32 degree() const { return u32(im_.size()); }
    u32 operator[](u32 x) const { return im_[x]; }
    const std::vector<u32>& images() const { return im_; }

    Perm operator*(const Perm& o) const;  // (a*b)(x) = a(b(x))
    Perm inverse() const;
    bool is_identity() const;
    u64 order() const;  // lcm of cycle lengths

    std::string cycle_string() const;

    friend bool operator==(const Perm& a, const Perm& b) { return a.im_ == b.im_; }
    friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
        return a.im_ <=> b.im_;
    }

  private:
    std::vector<u32> im_;
};

struct PermHash {
    std::size_t operator()(const Perm& p) const {
        u64 h = 1469598103934665603ull;
        for (u32 x : p.images()) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return std::size_t(h);
    }
};

inline Perm conjugate(const Perm& x, const Perm& g) { return g * x * g.inverse(); }
inline Perm commutator(const Perm& a, const Perm& b) {
    return a.inverse() * b.inverse() * a * b;
}

}  // namespace cgt
