#include "cgt/perm_group.hpp"

#include <algorithm>
#include <stdexcept>

#include "cgt/errors.hpp"

namespace cgt {

PermGroup::PermGroup(u32 degree) : degree_(degree) {}

PermGroup::PermGroup(u32 degree, std::vector<Perm> gens, std::vector<u32> base_hint,
                     const Caps& caps)
    : degree_(degree) {
    if (degree > caps.max_degree)
        throw CapExceeded("degree " + std::to_string(degree) + " exceeds cap " +
                          std::to_string(caps.max_degree));
    for (auto& g : gens) {
        if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
        if (g.is_identity()) continue;
        if (std::find(gens_.begin(), gens_.end(), g) != gens_.end()) continue;
        gens_.push_back(g);
    }
    schreier_sims(base_hint, caps);
}

std::vector<const Perm*> PermGroup::level_gens(size_t level) const {
    std::vector<const Perm*> out;
    for (size_t j = level; j < levels_.size(); ++j)
        for (const Perm& g : levels_[j].gens) out.push_back(&g);
    return out;
}

void PermGroup::recompute_orbit(size_t li) {
    Level& L = levels_[li];
    auto gens = level_gens(li);
    L.orbit.clear();
    L.pos.assign(degree_, -1);
    L.trans.clear();
    L.trans_inv.clear();
    L.orbit.push_back(L.beta);
    L.pos[L.beta] = 0;
    L.trans.emplace_back(degree_);
    L.trans_inv.emplace_back(degree_);
    for (size_t qi = 0; qi < L.orbit.size(); ++qi) {
        u32 p = L.orbit[qi];
        for (const Perm* s : gens) {
            u32 q = (*s)[p];
            if (L.pos[q] >= 0) continue;
            L.pos[q] = i64(L.orbit.size());
            L.orbit.push_back(q);
            Perm t = *s * L.trans[qi];  // maps beta -> q
            L.trans_inv.push_back(t.inverse());
            L.trans.push_back(std::move(t));
        }
    }
}

std::pair<Perm, size_t> PermGroup::strip(Perm g, size_t from) const {
    for (size_t i = from; i < levels_.size(); ++i) {
        const Level& L = levels_[i];
        u32 p = g[L.beta];
        if (p == L.beta) continue;
        if (L.pos[p] < 0) return {std::move(g), i};
        g = L.trans_inv[size_t(L.pos[p])] * g;
    }
    return {std::move(g), levels_.size()};
}

void PermGroup::schreier_sims(const std::vector<u32>& base_hint, const Caps& caps) {
    (void)caps;
    auto add_level = [&](u32 beta) {
        Level L;
        L.beta = beta;
        levels_.push_back(std::move(L));
        recompute_orbit(levels_.size() - 1);
    };
    auto min_moved = [&](const Perm& g) {
        for (u32 x = 0; x < degree_; ++x)
            if (g[x] != x) return x;
        throw std::logic_error("identity has no moved point");
    };

    for (u32 b : base_hint) {
        if (b >= degree_) throw std::invalid_argument("base hint point out of range");
        add_level(b);
    }

    // insert the original generators, extending the base as needed
    for (const Perm& g : gens_) {
        auto [res, lvl] = strip(g, 0);
        if (res.is_identity()) continue;
        if (lvl == levels_.size()) add_level(min_moved(res));
        levels_[lvl].gens.push_back(std::move(res));
        for (size_t j = 0; j <= lvl; ++j) recompute_orbit(j);
    }

    // classic completion: ensure every Schreier generator of level i sifts to
    // the identity through the deeper levels
    if (!levels_.empty()) {
        size_t i = levels_.size() - 1;
        for (;;) {
            bool complete = true;
            Level& L = levels_[i];
            auto gens = level_gens(i);
            for (size_t qi = 0; qi < L.orbit.size() && complete; ++qi) {
                for (const Perm* s : gens) {
                    u32 p = L.orbit[qi];
                    u32 q = (*s)[p];
                    Perm schreier = L.trans_inv[size_t(L.pos[q])] * (*s * L.trans[qi]);
                    if (schreier.is_identity()) continue;
                    auto [res, lvl] = strip(std::move(schreier), i + 1);
                    if (res.is_identity()) continue;
                    // the residue fixes base[0..lvl-1], so it joins S_j for
                    // every j <= lvl and all those orbits must be refreshed
                    if (lvl == levels_.size()) add_level(min_moved(res));
                    levels_[lvl].gens.push_back(std::move(res));
                    for (size_t j = 0; j <= lvl; ++j) recompute_orbit(j);
                    i = lvl;
                    complete = false;
                    break;
                }
            }
            if (!complete) continue;
            if (i == 0) break;
            --i;
        }
    }

    // drop levels with trivial orbit that came from the hint (they contribute
    // nothing), except keep the chain meaningful for pointwise stabilizers:
    // hint levels are kept so that levels_[k] is the stabilizer of the first k
    // hint points.
    order_ = 1;
    base_.clear();
    strong_gens_.clear();
    for (auto& L : levels_) {
        order_ = checked_mul(order_, L.orbit.size(), "group order overflow");
        base_.push_back(L.beta);
        for (auto& g : L.gens) strong_gens_.push_back(g);
    }
}

bool PermGroup::contains(const Perm& p) const {
    if (p.degree() != degree_) return false;
    auto [res, lvl] = strip(p, 0);
    (void)lvl;
    return res.is_identity();
}

bool PermGroup::contains_group(const PermGroup& h) const {
    if (h.degree() != degree_) return false;
    for (const Perm& g : h.generators())
        if (!contains(g)) return false;
    return true;
}

void PermGroup::for_each_element(const std::function<void(const Perm&)>& fn,
                                 const Caps& caps) const {
    if (order_ > caps.max_group_order)
        throw CapExceeded("group order " + std::to_string(order_) +
                          " exceeds enumeration cap " + std::to_string(caps.max_group_order));
    if (order_ * u64(degree_) > 400000000ull)
        throw CapExceeded("element enumeration footprint too large");
    // depth-first product of transversals; identity comes first because every
    // orbit starts at its base point with the identity representative
    Perm acc(degree_);
    std::function<void(size_t, const Perm&)> rec = [&](size_t li, const Perm& prefix) {
        if (li == levels_.size()) {
            fn(prefix);
            return;
        }
        for (size_t qi = 0; qi < levels_[li].orbit.size(); ++qi)
            rec(li + 1, prefix * levels_[li].trans[qi]);
    };
    rec(0, acc);
}

std::vector<Perm> PermGroup::elements(const Caps& caps) const {
    std::vector<Perm> out;
    out.reserve(size_t(order_));
    for_each_element([&](const Perm& p) { out.push_back(p); }, caps);
    return out;
}

Perm PermGroup::random_element(std::mt19937_64& rng) const {
    Perm acc(degree_);
    for (const auto& L : levels_) {
        size_t qi = size_t(rng() % L.orbit.size());
        acc = acc * L.trans[qi];
    }
    return acc;
}

PermGroup PermGroup::point_stabilizer(u32 point, const Caps& caps) const {
    return pointwise_stabilizer({point}, caps);
}

PermGroup PermGroup::pointwise_stabilizer(const std::vector<u32>& points,
                                          const Caps& caps) const {
    // rebuild with the points as leading base; generators at levels >= |points|
    // generate exactly the pointwise stabilizer
    PermGroup rebased(degree_, gens_, points, caps);
    std::vector<Perm> sub;
    for (size_t j = points.size(); j < rebased.levels_.size(); ++j)
        for (const Perm& g : rebased.levels_[j].gens) sub.push_back(g);
    return PermGroup(degree_, std::move(sub), {}, caps);
}

std::vector<u32> PermGroup::orbit_of(u32 point) const {
    std::vector<u32> orb{point};
    std::vector<bool> seen(degree_, false);
    seen[point] = true;
    for (size_t i = 0; i < orb.size(); ++i)
        for (const Perm& g : gens_) {
            u32 q = g[orb[i]];
            if (!seen[q]) {
                seen[q] = true;
                orb.push_back(q);
            }
        }
    return orb;
}

std::vector<std::vector<u32>> PermGroup::orbits(std::vector<u32>* orbit_id) const {
    std::vector<std::vector<u32>> out;
    std::vector<u32> id(degree_, u32(-1));
    for (u32 x = 0; x < degree_; ++x) {
        if (id[x] != u32(-1)) continue;
        auto orb = orbit_of(x);
        for (u32 y : orb) id[y] = u32(out.size());
        out.push_back(std::move(orb));
    }
    if (orbit_id) *orbit_id = std::move(id);
    return out;
}

}  // namespace cgt
