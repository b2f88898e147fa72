#pragma once

#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "cgt/caps.hpp"
#include "cgt/perm.hpp"

namespace cgt {

/// Permutation group with a base and strong generating set.
///
/// The BSGS is built by a deterministic Schreier-Sims: base points are taken
/// from the optional hint first, then always the smallest moved point, and
/// orbits are explored in breadth-first discovery order with generators in
/// insertion order. Two builds from the same generator list produce the same
/// base, the same transversals and the same element enumeration order.
///
/// Groups are immutable after construction; all queries are const and safe to
/// call concurrently.
class PermGroup {
  public:
    // Trivial group of the given degree.
    explicit PermGroup(u32 degree);
    PermGroup(u32 degree, std::vector<Perm> gens, std::vector<u32> base_hint = {},
              const Caps& caps = Caps{});

    u32 degree() const { return degree_; }
    u64 order() const { return order_; }
    bool is_trivial() const { return order_ == 1; }
    // Generators as passed in (identity and duplicates dropped).
    const std::vector<Perm>& generators() const { return gens_; }
    const std::vector<u32>& base() const { return base_; }
    const std::vector<Perm>& strong_generators() const { return strong_gens_; }

    bool contains(const Perm& p) const;
    bool contains_group(const PermGroup& h) const;  // all generators of h

    // Enumerates all elements in a deterministic order starting with the
    // identity. Throws CapExceeded beyond caps.max_group_order (or when the
    // order*degree footprint is unreasonable).
    std::vector<Perm> elements(const Caps& caps = Caps{}) const;
    void for_each_element(const std::function<void(const Perm&)>& fn,
                          const Caps& caps = Caps{}) const;

    // Uniformly random element; deterministic given the RNG state.
    Perm random_element(std::mt19937_64& rng) const;

    // Stabilizer of a point (exact subgroup with its own BSGS).
    PermGroup point_stabilizer(u32 point, const Caps& caps = Caps{}) const;
    // Pointwise stabilizer of a sequence of points.
    PermGroup pointwise_stabilizer(const std::vector<u32>& points,
                                   const Caps& caps = Caps{}) const;

    // Orbit of a point under the whole group, in discovery order.
    std::vector<u32> orbit_of(u32 point) const;
    // All orbits on {0..n-1}; each orbit in discovery order, orbits ordered by
    // smallest element. Also fills point -> orbit id if requested.
    std::vector<std::vector<u32>> orbits(std::vector<u32>* orbit_id = nullptr) const;

  private:
    struct Level {
        u32 beta = 0;
        std::vector<Perm> gens;        // strong generators first stuck at this level
        std::vector<u32> orbit;        // fundamental orbit, discovery order
        std::vector<i64> pos;          // point -> index in orbit, -1 outside
        std::vector<Perm> trans;       // trans[i](beta) = orbit[i]
        std::vector<Perm> trans_inv;
    };

    void schreier_sims(const std::vector<u32>& base_hint, const Caps& caps);
    void recompute_orbit(size_t level);
    std::vector<const Perm*> level_gens(size_t level) const;  // S_level
    // Sifts g through levels [from..end); returns residue and the level where
    // sifting stopped (== levels_.size() on full sift).
    std::pair<Perm, size_t> strip(Perm g, size_t from) const;

    u32 degree_ = 0;
    u64 order_ = 1;
    std::vector<Perm> gens_;
    std::vector<Perm> strong_gens_;
    std::vector<u32> base_;
    std::vector<Level> levels_;
};

}  // namespace cgt
