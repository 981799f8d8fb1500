#include "mfq/ntt.hpp"

#include <algorithm>
#include <numeric>

namespace mfq {

u64 mulmod_u64(u64 a, u64 b, u64 q) { return static_cast<u64>((u128)a * b % q); }

u64 powmod_u64(u64 a, u64 e, u64 q) {
    u64 r = 1;
    a %= q;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, q);
        a = mulmod_u64(a, a, q);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

u64 pollard_rho(u64 n) {
    if ((n & 1) == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        auto f = [&](u64 v) { return (mulmod_u64(v, v, n) + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            u64 diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
    }
}

void factor_u64(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    for (u64 d = 2; d < 100000 && d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
            factor_u64(n, out);
            return;
        }
    }
    u64 d = pollard_rho(n);
    factor_u64(d, out);
    factor_u64(n / d, out);
}

u64 find_primitive_root(u64 q) {
    std::vector<u64> fac;
    factor_u64(q - 1, fac);
    std::sort(fac.begin(), fac.end());
    fac.erase(std::unique(fac.begin(), fac.end()), fac.end());
    for (u64 g = 2;; ++g) {
        bool ok = true;
        for (u64 p : fac)
            if (powmod_u64(g, (q - 1) / p, q) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
}

inline u64 shoup_of(u64 w, u64 q) { return static_cast<u64>(((u128)w << 64) / q); }

inline u64 mulmod_shoup(u64 a, u64 w, u64 wsh, u64 q) {
    u64 hi = static_cast<u64>(((u128)a * wsh) >> 64);
    u64 r = a * w - hi * q;  // in [0, 2q)
    return r >= q ? r - q : r;
}

}  // namespace

u64 FftPrime::zeta_for_order(u32 o) const {
    if (o == 0 || (q - 1) % o != 0)
        throw incompatible_prime_error("order " + std::to_string(o) + " does not divide q-1 for q = " +
                                       std::to_string(q));
    return powmod_u64(primitive_root, (q - 1) / o, q);
}

FftPrime find_fft_prime(u64 n, const std::vector<u32>& required_orders, u32 min_bits, u64 lower_bound) {
    if (min_bits >= 63) throw capacity_error("find_fft_prime: min_bits must stay below 63");
    u32 r = 1;
    while ((u64(1) << (r - 1)) < n) {
        ++r;
        if (r > 62) throw capacity_error("find_fft_prime: n too large");
    }
    u64 L = 1;
    for (u32 o : required_orders) {
        if (o == 0) throw std::invalid_argument("find_fft_prime: zero order");
        L = L / std::gcd(L, (u64)o) * o;
        if (L > (u64(1) << 40)) throw capacity_error("find_fft_prime: order lcm too large");
    }
    if (L > (u64(1) << (62 - r))) throw capacity_error("find_fft_prime: no room below 2^63");
    u64 base = L << r;
    u64 lo = std::max(u64(1) << min_bits, lower_bound);
    u64 m = lo <= 1 ? 1 : (lo - 1 + base - 1) / base;  // smallest m with m*base+1 >= lo
    if (m == 0) m = 1;
    for (;; ++m) {
        if (m > ((u64(1) << 62) - 1) / base) throw capacity_error("find_fft_prime: exhausted range below 2^63");
        u64 q = m * base + 1;
        if (!is_prime_u64(q)) continue;
        FftPrime f;
        f.q = q;
        u64 d = q - 1;
        f.r2adic = 0;
        while ((d & 1) == 0) {
            d >>= 1;
            ++f.r2adic;
        }
        f.primitive_root = find_primitive_root(q);
        f.extra_orders = required_orders;
        return f;
    }
}

FftPrime fft_prime_from(u64 q, u64 n, const std::vector<u32>& required_orders) {
    if (q >= (u64(1) << 63)) throw capacity_error("fft_prime_from: prime must stay below 2^63");
    if (!is_prime_u64(q)) throw std::invalid_argument("fft_prime_from: q is not prime");
    FftPrime f;
    f.q = q;
    u64 d = q - 1;
    while ((d & 1) == 0) {
        d >>= 1;
        ++f.r2adic;
    }
    if ((u64(1) << (f.r2adic > 0 ? f.r2adic - 1 : 0)) < n)
        throw capacity_error("fft_prime_from: 2-adic capacity of q below requested length");
    for (u32 o : required_orders)
        if (o == 0 || (q - 1) % o)
            throw incompatible_prime_error("fft_prime_from: order " + std::to_string(o) +
                                           " does not divide q-1");
    f.primitive_root = find_primitive_root(q);
    f.extra_orders = required_orders;
    return f;
}

Ntt::Ntt(const FftPrime& f, u32 max_log2) : q_(f.q), maxlog_(max_log2) {
    if (max_log2 > f.r2adic)
        throw capacity_error("Ntt: prime supports transforms only up to 2^" + std::to_string(f.r2adic));
    if (max_log2 > 32) throw capacity_error("Ntt: operand lengths above 2^32 are not supported");
    std::size_t S = std::size_t(1) << maxlog_;
    rt_.assign(S, 1);
    rt_sh_.assign(S, shoup_of(1, q_));
    for (std::size_t k = 2, s = 2; k < S; k <<= 1, ++s) {
        u64 z[2] = {1, powmod_u64(f.primitive_root, (q_ - 1) >> s, q_)};
        for (std::size_t i = k; i < 2 * k; ++i) {
            rt_[i] = mulmod_u64(rt_[i / 2], z[i & 1], q_);
            rt_sh_[i] = shoup_of(rt_[i], q_);
        }
    }
}

void Ntt::transform(std::vector<u64>& a) const {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0 || n > (std::size_t(1) << maxlog_))
        throw capacity_error("Ntt::transform: size must be a power of two within capacity");
    int L = 0;
    while ((std::size_t(1) << L) < n) ++L;
    // bit-reversal permutation
    std::vector<u32> rev(n);
    for (std::size_t i = 1; i < n; ++i) rev[i] = (rev[i >> 1] >> 1) | ((i & 1u) << (L - 1));
    for (std::size_t i = 0; i < n; ++i)
        if (i < rev[i]) std::swap(a[i], a[rev[i]]);
    for (std::size_t k = 1; k < n; k <<= 1) {
        for (std::size_t i = 0; i < n; i += 2 * k) {
            for (std::size_t j = 0; j < k; ++j) {
                u64 z = mulmod_shoup(a[i + j + k], rt_[j + k], rt_sh_[j + k], q_);
                u64 x = a[i + j];
                u64 s = x + z;
                a[i + j] = s >= q_ ? s - q_ : s;
                a[i + j + k] = x >= z ? x - z : x + q_ - z;
            }
        }
    }
}

std::vector<u64> Ntt::multiply(const std::vector<u64>& a, const std::vector<u64>& b, std::size_t n) const {
    if (n == 0) return {};
    if (a.size() > (std::size_t(1) << 32) || b.size() > (std::size_t(1) << 32))
        throw capacity_error("Ntt::multiply: operand length above 2^32");
    std::size_t la = std::min(a.size(), n), lb = std::min(b.size(), n);
    if (la == 0 || lb == 0) return std::vector<u64>(n, 0);
    std::size_t need = la + lb - 1;
    std::size_t S = 1;
    while (S < need) S <<= 1;
    if (S > (std::size_t(1) << maxlog_)) throw capacity_error("Ntt::multiply: transform capacity exceeded");
    std::vector<u64> fa(S, 0), fb(S, 0);
    std::copy(a.begin(), a.begin() + la, fa.begin());
    std::copy(b.begin(), b.begin() + lb, fb.begin());
    transform(fa);
    transform(fb);
    u64 ninv = powmod_u64(S, q_ - 2, q_);
    std::vector<u64> fc(S);
    for (std::size_t i = 0; i < S; ++i)
        fc[(S - i) & (S - 1)] = mulmod_u64(mulmod_u64(fa[i], fb[i], q_), ninv, q_);
    transform(fc);
    fc.resize(n, 0);
    return fc;
}

std::vector<u64> series_mul(const Fp64& ring, const Ntt& ntt, const std::vector<u64>& a,
                            const std::vector<u64>& b, std::size_t n) {
    if (ring.modulus() != ntt.modulus())
        throw std::invalid_argument("series_mul: mismatched moduli between ring and transform");
    return ntt.multiply(a, b, n);
}

}  // namespace mfq
