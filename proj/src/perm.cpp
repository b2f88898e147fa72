#include "cgt/perm.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cgt {

Perm Perm::from_images(std::vector<u32> images) {
    std::vector<bool> seen(images.size(), false);
    for (u32 x : images) {
        if (x >= images.size() || seen[x])
            throw std::invalid_argument("image array is not a bijection");
        seen[x] = true;
    }
    Perm p;
    p.im_ = std::move(images);
    return p;
}

Perm Perm::from_cycles(const std::string& s, u32 n) {
    Perm p(n);
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && (s[i] == ' ' || s[i] == ',' || s[i] == '\t')) ++i; };
    skip_ws();
    while (i < s.size()) {
        if (s[i] != '(') throw std::invalid_argument("expected '(' in cycle string: " + s);
        ++i;
        std::vector<u32> cyc;
        skip_ws();
        while (i < s.size() && s[i] != ')') {
            if (!isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("expected point in cycle string: " + s);
            u64 v = 0;
            while (i < s.size() && isdigit(static_cast<unsigned char>(s[i])))
                v = v * 10 + u64(s[i++] - '0');
            if (v >= n) throw std::invalid_argument("point " + std::to_string(v) + " out of range in cycle string");
            cyc.push_back(u32(v));
            skip_ws();
        }
        if (i >= s.size()) throw std::invalid_argument("unterminated cycle in: " + s);
        ++i;  // ')'
        for (size_t j = 0; j < cyc.size(); ++j) {
            u32 from = cyc[j], to = cyc[(j + 1) % cyc.size()];
            if (p.im_[from] != from)
                throw std::invalid_argument("point repeated across cycles in: " + s);
            p.im_[from] = to;
        }
        skip_ws();
    }
    // the writes above keep it a bijection only if cycles were disjoint; verify
    return from_images(std::move(p.im_));
}

Perm Perm::operator*(const Perm& o) const {
    if (degree() != o.degree()) throw std::invalid_argument("degree mismatch in permutation product");
    Perm r;
    r.im_.resize(im_.size());
    for (u32 x = 0; x < degree(); ++x) r.im_[x] = im_[o.im_[x]];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    r.im_.resize(im_.size());
    for (u32 x = 0; x < degree(); ++x) r.im_[im_[x]] = x;
    return r;
}

bool Perm::is_identity() const {
    for (u32 x = 0; x < degree(); ++x)
        if (im_[x] != x) return false;
    return true;
}

u64 Perm::order() const {
    std::vector<bool> seen(im_.size(), false);
    u64 ord = 1;
    for (u32 x = 0; x < degree(); ++x) {
        if (seen[x]) continue;
        u64 len = 0;
        for (u32 y = x; !seen[y]; y = im_[y]) { seen[y] = true; ++len; }
        ord = std::lcm(ord, len);
    }
    return ord;
}

std::string Perm::cycle_string() const {
    std::vector<bool> seen(im_.size(), false);
    std::ostringstream os;
    bool any = false;
    for (u32 x = 0; x < degree(); ++x) {
        if (seen[x] || im_[x] == x) { seen[x] = true; continue; }
        any = true;
        os << '(';
        bool first = true;
        for (u32 y = x; !seen[y]; y = im_[y]) {
            seen[y] = true;
            if (!first) os << ' ';
            os << y;
            first = false;
        }
        os << ')';
    }
    if (!any) return "()";
    return os.str();
}

}  // namespace cgt
