#include "mfq/sieve.hpp"

#include <algorithm>
#include <new>
#include <stdexcept>

namespace mfq {

namespace {

// The rough list holds odd values 1,3,5,...; slot(v) = v>>1.
// next/prev store values (not slots); a value of n_end marks the end.
struct OddList {
    std::vector<u32> next, prev;
    u32 end;

    explicit OddList(u64 n) : end(static_cast<u32>(n | 1)) {
        // values 1..n-1 odd; next of v is v+2, capped at `end` sentinel
        std::size_t slots = (n + 1) / 2;
        next.resize(slots);
        prev.resize(slots);
        for (std::size_t s = 0; s < slots; ++s) {
            u32 v = static_cast<u32>(2 * s + 1);
            next[s] = v + 2 >= n ? end : v + 2;
            prev[s] = v == 1 ? 0 : v - 2;
        }
    }
    u32 nxt(u32 v) const { return next[v >> 1]; }
    void unlink(u32 v) {
        u32 p = prev[v >> 1], s = next[v >> 1];
        if (p) next[p >> 1] = s;
        if (s != end) prev[s >> 1] = p;
    }
};

}  // namespace

CoprimeTable rough_coprime_sieve(u64 n) {
    if (n < 2) throw std::invalid_argument("rough_coprime_sieve: need n >= 2");
    if (n > (u64(1) << 31)) throw capacity_error("rough_coprime_sieve: n above 2^31 index limit");

    CoprimeTable t;
    t.n = n;

    // dense transient slots, compacted into the sorted parallel arrays at the end
    std::vector<u32> pe_of, m_of;
    try {
        pe_of.assign(n, 0);
        m_of.assign(n, 0);
    } catch (const std::bad_alloc&) {
        throw capacity_error("rough_coprime_sieve: allocation failed");
    }

    // p = 2: evens are never in the list; emit k = 2^e * m for odd m > 1.
    if (n > 2) t.primes.push_back(2);
    for (u64 pe = 2; pe < n; pe *= 2) {
        if (pe >= 4) {
            t.hp_p.push_back(2);
            u32 e = 0;
            for (u64 v = pe; v > 1; v >>= 1) ++e;
            t.hp_e.push_back(e);
            t.hp_pe.push_back(static_cast<u32>(pe));
        }
        for (u64 m = 3; pe * m < n; m += 2) {
            pe_of[pe * m] = static_cast<u32>(pe);
            m_of[pe * m] = static_cast<u32>(m);
        }
    }

    OddList list(n);
    if (n > 3) {
        u32 p = 3;
        while (p != list.end && p < n) {
            t.primes.push_back(p);
            // unlink p^e and record powers
            u32 e = 1;
            for (u64 pe = p; pe < n; pe *= p, ++e) {
                if (e >= 2) {
                    t.hp_p.push_back(p);
                    t.hp_e.push_back(e);
                    t.hp_pe.push_back(static_cast<u32>(pe));
                }
                list.unlink(static_cast<u32>(pe));
                ++t.unlink_count;
            }
            // generate k = p^e * m over surviving p-rough m; each emitted k is
            // ahead of the walker and gets unlinked before the walk reaches it
            for (u64 pe = p; pe < n; pe *= p) {
                u64 lim = (n - 1) / pe;
                for (u32 m = list.nxt(1); m != list.end && m <= lim; m = list.nxt(m)) {
                    u64 k = pe * m;
                    pe_of[k] = static_cast<u32>(pe);
                    m_of[k] = m;
                    list.unlink(static_cast<u32>(k));
                    ++t.unlink_count;
                }
            }
            p = list.nxt(1);
        }
    }

    // compact: dense slots -> ascending (k, pe, m) triples
    std::size_t cnt = 0;
    for (u64 k = 2; k < n; ++k) cnt += pe_of[k] != 0;
    t.dk.reserve(cnt);
    t.dpe.reserve(cnt);
    t.dm.reserve(cnt);
    for (u64 k = 2; k < n; ++k) {
        if (pe_of[k]) {
            t.dk.push_back(static_cast<u32>(k));
            t.dpe.push_back(pe_of[k]);
            t.dm.push_back(m_of[k]);
        }
    }

    // higher powers were emitted per prime; sort them by pe for the declared order
    {
        std::vector<std::size_t> idx(t.hp_pe.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return t.hp_pe[a] < t.hp_pe[b]; });
        std::vector<u32> p2(idx.size()), e2(idx.size()), pe2(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) {
            p2[i] = t.hp_p[idx[i]];
            e2[i] = t.hp_e[idx[i]];
            pe2[i] = t.hp_pe[idx[i]];
        }
        t.hp_p = std::move(p2);
        t.hp_e = std::move(e2);
        t.hp_pe = std::move(pe2);
    }
    return t;
}

std::vector<u32> primes_below(u64 n) {
    std::vector<u32> out;
    if (n <= 2) return out;
    std::vector<bool> comp(n, false);
    for (u64 i = 2; i * i < n; ++i)
        if (!comp[i])
            for (u64 j = i * i; j < n; j += i) comp[j] = true;
    for (u64 i = 2; i < n; ++i)
        if (!comp[i]) out.push_back(static_cast<u32>(i));
    return out;
}

std::vector<SmoothEntry> smooth_sieve_expand_order(u64 n) {
    if (n < 2) throw std::invalid_argument("smooth_sieve_expand_order: need n >= 2");
    if (n > (u64(1) << 31)) throw capacity_error("smooth_sieve_expand_order: n above 2^31 index limit");
    // gpf[k] = greatest prime factor (0 for k < 2)
    std::vector<u32> gpf(n, 0);
    for (u64 p = 2; p < n; ++p) {
        if (gpf[p] == 0)
            for (u64 j = p; j < n; j += p) gpf[j] = static_cast<u32>(p);
    }
    std::vector<SmoothEntry> out;
    for (u64 k = 4; k < n; ++k) {
        u32 p = gpf[k];
        u64 pe = p, m = k / p;
        while (m % p == 0) {
            pe *= p;
            m /= p;
        }
        if (m == 1) continue;  // prime power
        out.push_back({static_cast<u32>(k), static_cast<u32>(pe), static_cast<u32>(m)});
    }
    return out;
}

}  // namespace mfq
