#include "cgt/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "cgt/errors.hpp"

namespace cgt {

namespace {

using Poly = std::vector<u32>;  // coefficients mod p, constant term first

// Strips trailing zero coefficients (keeps at least the constant).
void normalize(Poly& f) {
    while (f.size() > 1 && f.back() == 0) f.pop_back();
}

int deg(const Poly& f) {
    for (int i = int(f.size()) - 1; i >= 0; --i)
        if (f[size_t(i)]) return i;
    return -1;  // zero polynomial
}

// Remainder of a mod b over Z_p, b monic-normalized on the fly.
Poly poly_mod(Poly a, const Poly& b, u64 p) {
    int db = deg(b);
    u64 lead = b[size_t(db)];
    // lead^{-1} mod p by Fermat
    u64 lead_inv = powmod(lead, p - 2, p);
    for (int da = deg(a); da >= db; da = deg(a)) {
        u64 c = mulmod(a[size_t(da)], lead_inv, p);
        for (int i = 0; i <= db; ++i) {
            u64 sub = mulmod(c, b[size_t(i)], p);
            a[size_t(da - db + i)] = u32((a[size_t(da - db + i)] + p - sub) % p);
        }
    }
    normalize(a);
    return a;
}

bool is_zero(const Poly& f) { return deg(f) < 0; }

// Trial division by every monic polynomial of degree 1..deg(f)/2.
// Desk-scale fields only; simplicity over speed.
bool is_irreducible(const Poly& f, u64 p) {
    int d = deg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    for (int e = 1; e <= d / 2; ++e) {
        u64 count = ipow(p, u32(e));  // monic polys of degree e
        Poly g(size_t(e) + 1, 0);
        g[size_t(e)] = 1;
        for (u64 idx = 0; idx < count; ++idx) {
            u64 t = idx;
            for (int i = 0; i < e; ++i) { g[size_t(i)] = u32(t % p); t /= p; }
            if (is_zero(poly_mod(f, g, p))) return false;
        }
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree k over Z_p,
// coefficient tuples (c0, c1, ..., c_{k-1}) compared left to right.
Poly canonical_polynomial(u64 p, u32 k) {
    Poly f(size_t(k) + 1, 0);
    f[k] = 1;
    if (k == 1) {
        // smallest monic degree-1 polynomial is x itself (c0 = 0)
        return f;
    }
    std::vector<u32> c(k, 0);
    for (;;) {
        for (u32 i = 0; i < k; ++i) f[i] = c[i];
        if (is_irreducible(f, p)) return f;
        // advance the tuple in lex order: last coordinate fastest
        int i = int(k) - 1;
        while (i >= 0 && c[size_t(i)] == p - 1) { c[size_t(i)] = 0; --i; }
        if (i < 0) throw std::logic_error("no irreducible polynomial found");
        ++c[size_t(i)];
    }
}

std::mutex cache_mutex;
std::map<std::pair<u64, u32>, std::unique_ptr<FieldSpec>>& cache() {
    static std::map<std::pair<u64, u32>, std::unique_ptr<FieldSpec>> c;
    return c;
}

constexpr u64 kLogTableLimit = 65536;

}  // namespace

const FieldSpec& FieldSpec::get(u64 p, u32 k, const Caps& caps) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
    if (k < 1) throw std::invalid_argument("field degree must be >= 1");
    u64 q = 1;
    for (u32 i = 0; i < k; ++i) {
        q = checked_mul(q, p, "field size overflow");
        if (q > caps.max_field)
            throw CapExceeded("field size " + std::to_string(p) + "^" + std::to_string(k) +
                              " exceeds cap " + std::to_string(caps.max_field));
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_pair(p, k);
    auto it = cache().find(key);
    if (it == cache().end())
        it = cache().emplace(key, std::unique_ptr<FieldSpec>(new FieldSpec(p, k))).first;
    return *it->second;
}

FieldSpec::FieldSpec(u64 p, u32 k) : p_(p), k_(k), q_(ipow(p, k)), poly_(canonical_polynomial(p, k)) {
    // find the canonical generator, then build discrete-log tables
    auto ord_factors = factorize(q_ - 1);
    for (u64 a = 1; a < q_; ++a) {
        bool full = true;
        for (auto& [pr, e] : ord_factors) {
            // a has full order iff a^{(q-1)/pr} != 1 for every prime pr | q-1
            u64 w = 1, x = a, ee = (q_ - 1) / pr;
            while (ee) {
                if (ee & 1) w = mul_raw(w, x);
                x = mul_raw(x, x);
                ee >>= 1;
            }
            if (w == 1) { full = false; break; }
        }
        if (full) { generator_ = a; break; }
    }
    if (generator_ == 0) throw std::logic_error("no multiplicative generator found");

    if (q_ <= kLogTableLimit) {
        log_.assign(q_, 0);
        exp_.assign(q_ - 1, 0);
        u64 x = 1;
        for (u64 i = 0; i + 1 < q_; ++i) {
            exp_[i] = u32(x);
            log_[x] = u32(i);
            x = mul_raw(x, generator_);
        }
    }
}

std::string FieldSpec::name() const { return field_name(p_, k_); }

std::vector<u32> FieldSpec::coeffs(u64 a) const {
    std::vector<u32> c(k_);
    for (u32 i = 0; i < k_; ++i) { c[i] = u32(a % p_); a /= p_; }
    return c;
}

u64 FieldSpec::encode(const std::vector<u32>& c) const {
    if (c.size() != k_) throw std::invalid_argument("coefficient vector has wrong length");
    u64 a = 0;
    for (u32 i = k_; i-- > 0;) {
        if (c[i] >= p_) throw std::invalid_argument("coefficient out of range");
        a = a * p_ + c[i];
    }
    return a;
}

u64 FieldSpec::add(u64 a, u64 b) const {
    u64 r = 0, mult = 1;
    for (u32 i = 0; i < k_; ++i) {
        r += (a % p_ + b % p_) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

u64 FieldSpec::neg(u64 a) const {
    u64 r = 0, mult = 1;
    for (u32 i = 0; i < k_; ++i) {
        r += (p_ - a % p_) % p_ * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

u64 FieldSpec::sub(u64 a, u64 b) const { return add(a, neg(b)); }

u64 FieldSpec::mul_raw(u64 a, u64 b) const {
    // schoolbook product of coefficient vectors, reduced mod poly_
    std::vector<u64> prod(2 * k_ - 1, 0);
    std::vector<u32> ca = coeffs(a), cb = coeffs(b);
    for (u32 i = 0; i < k_; ++i) {
        if (!ca[i]) continue;
        for (u32 j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + u64(ca[i]) * cb[j]) % p_;
    }
    // reduce x^{k+t} using x^k = -(poly_[0] + ... + poly_[k-1] x^{k-1})
    for (u32 t = 2 * k_ - 2; t >= k_ && t < 2 * k_; --t) {
        u64 c = prod[t];
        if (c) {
            prod[t] = 0;
            for (u32 i = 0; i < k_; ++i)
                prod[t - k_ + i] = (prod[t - k_ + i] + c * (p_ - poly_[i])) % p_;
        }
        if (t == k_) break;
    }
    u64 r = 0;
    for (u32 i = k_; i-- > 0;) r = r * p_ + prod[i];
    return r;
}

u64 FieldSpec::mul(u64 a, u64 b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) return exp_[(u64(log_[a]) + log_[b]) % (q_ - 1)];
    return mul_raw(a, b);
}

u64 FieldSpec::inv(u64 a) const {
    if (a == 0) throw std::domain_error("inversion of zero in " + name());
    if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    return pow(a, q_ - 2);
}

u64 FieldSpec::pow(u64 a, u64 e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    if (!exp_.empty()) return exp_[u64(u128(log_[a]) * (e % (q_ - 1)) % (q_ - 1))];
    u64 r = 1;
    e %= (q_ - 1);
    while (e) {
        if (e & 1) r = mul_raw(r, a);
        a = mul_raw(a, a);
        e >>= 1;
    }
    return r;
}

u64 FieldSpec::frobenius(u64 a, u32 j) const {
    u64 e = 1;
    for (u32 i = 0; i < j % k_; ++i) e *= p_;  // p^j with j reduced mod k
    return pow(a, e);
}

u64 FieldSpec::element_order(u64 a) const {
    if (a == 0) throw std::domain_error("zero has no multiplicative order");
    u64 ord = q_ - 1;
    for (auto& [pr, e] : factorize(q_ - 1)) {
        for (u32 i = 0; i < e; ++i) {
            if (pow(a, ord / pr) == 1)
                ord /= pr;
            else
                break;
        }
    }
    return ord;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    if (field != o.field) throw std::invalid_argument("elements of different fields");
    return {*field, field->add(value, o.value)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    if (field != o.field) throw std::invalid_argument("elements of different fields");
    return {*field, field->sub(value, o.value)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    if (field != o.field) throw std::invalid_argument("elements of different fields");
    return {*field, field->mul(value, o.value)};
}

FieldElement FieldElement::inverse() const { return {*field, field->inv(value)}; }

FieldElement FieldElement::pow(u64 e) const { return {*field, field->pow(value, e)}; }

std::pair<u64, u32> parse_field_name(const std::string& name) {
    // accepts GF(p) and GF(p^k)
    if (name.size() < 5 || name.substr(0, 3) != "GF(" || name.back() != ')')
        throw std::invalid_argument("bad field name: " + name);
    std::string body = name.substr(3, name.size() - 4);
    auto caret = body.find('^');
    u64 p;
    u32 k = 1;
    try {
        if (caret == std::string::npos) {
            p = std::stoull(body);
        } else {
            p = std::stoull(body.substr(0, caret));
            k = u32(std::stoul(body.substr(caret + 1)));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad field name: " + name);
    }
    return {p, k};
}

std::string field_name(u64 p, u32 k) {
    std::ostringstream os;
    os << "GF(" << p;
    if (k > 1) os << "^" << k;
    os << ")";
    return os.str();
}

}  // namespace cgt
