#include "mfq/bgform.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <fstream>
#include <memory>
#include <numeric>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "mfq/euler.hpp"
#include "mfq/symfun.hpp"

namespace mfq {

using nlohmann::json;

namespace {

mpq_class rational_from_json(const json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return mpq_class(static_cast<long>(v.get<long long>()));
    throw std::invalid_argument("decomposition: expected rational as string or integer");
}

MatrixEntry entry_from_json(const json& v) {
    MatrixEntry e;
    if (v.is_object()) {
        e.cyclotomic = true;
        e.zeta_order = v.at("zeta_order").get<u32>();
        for (const auto& c : v.at("num")) e.num.push_back(rational_from_json(c));
        if (v.contains("den"))
            for (const auto& c : v.at("den")) e.den.push_back(rational_from_json(c));
    } else {
        e.rat = rational_from_json(v);
    }
    return e;
}

}  // namespace

u32 BGDecomposition::zeta_lcm() const {
    u64 O = 1;
    for (const auto& c : chars) O = std::lcm(O, (u64)c.order);
    for (const auto& row : matrix)
        for (const auto& e : row)
            if (e.cyclotomic) O = std::lcm(O, (u64)e.zeta_order);
    return static_cast<u32>(O);
}

BGDecomposition parse_decomposition(std::istream& in, const std::string& name) {
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument(name + ": not valid JSON: " + e.what());
    }
    BGDecomposition d;
    d.source = name;
    d.weight = j.at("weight").get<u32>();
    d.level = j.at("level").get<u32>();
    for (const auto& c : j.at("chars")) {
        u32 N = c.at(0).get<u32>(), a = c.at(1).get<u32>();
        d.chars.push_back(conrey_character(N, a));
    }
    for (const auto& p : j.at("products")) {
        if (p.size() != 7) throw std::invalid_argument(name + ": product tuple must have 7 entries");
        ProductTerm t{p.at(0).get<u32>(), p.at(1).get<u32>(), p.at(2).get<u32>(), p.at(3).get<u32>(),
                      p.at(4).get<u32>(), p.at(5).get<u32>(), p.at(6).get<u32>()};
        auto check = [&](u32 idx) {
            if (idx < 1 || idx > d.chars.size())
                throw std::invalid_argument(name + ": character index out of range");
        };
        check(t.i);
        check(t.j);
        if (t.l > d.weight) throw std::invalid_argument(name + ": product weight exceeds form weight");
        if (t.l < d.weight) {
            check(t.i2);
            check(t.j2);
        }
        if (t.d < 1 || t.d2 < 1) throw std::invalid_argument(name + ": dilation must be >= 1");
        d.products.push_back(t);
    }
    for (const auto& c : j.at("basis").at("minpoly")) d.minpoly.push_back(rational_from_json(c));
    if (d.minpoly.size() < 2 || d.minpoly.back() != 1)
        throw std::invalid_argument(name + ": basis minpoly must be monic of degree >= 1");
    if (j.at("basis").contains("names"))
        for (const auto& s : j.at("basis").at("names")) d.basis_names.push_back(s.get<std::string>());
    const std::size_t deg = d.basis_degree();
    for (const auto& row : j.at("matrix")) {
        std::vector<MatrixEntry> r;
        for (const auto& e : row) r.push_back(entry_from_json(e));
        if (r.size() != d.products.size())
            throw std::invalid_argument(name + ": matrix row length != product count");
        d.matrix.push_back(std::move(r));
    }
    if (d.matrix.size() != deg) throw std::invalid_argument(name + ": matrix must have basis-degree rows");
    for (const auto& h : j.at("header")) {
        std::vector<mpq_class> coords;
        for (const auto& c : h) coords.push_back(rational_from_json(c));
        if (coords.size() != deg) throw std::invalid_argument(name + ": header width != basis degree");
        d.header.push_back(std::move(coords));
    }
    if (d.header.empty()) throw std::invalid_argument(name + ": empty header");
    // normalized eigenform: a_1 = 1 on the basis
    if (d.header[0][0] != 1) throw std::invalid_argument(name + ": header a_1 must be 1");
    for (std::size_t i = 1; i < deg; ++i)
        if (d.header[0][i] != 0) throw std::invalid_argument(name + ": header a_1 must be 1");
    return d;
}

BGDecomposition load_decomposition(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open decomposition file: " + path);
    return parse_decomposition(in, path);
}

namespace {

// All coefficient rows 0..n (basis coordinates mod q). Small n can run with
// schoolbook products (self-certification); large n goes through the NTT.
std::vector<std::vector<u64>> compute_rows(const PreparedDecomposition& pd, u64 n, bool use_ntt,
                                           u32 threads) {
    const BGDecomposition& dec = *pd.dec;
    const Fp64& ring = pd.ring;
    const u32 k = dec.weight;
    CoprimeTable table = rough_coprime_sieve(n + 2);

    // longest length needed per distinct Eisenstein factor (l, i, j)
    std::map<std::tuple<u32, u32, u32>, u64> need;
    for (const auto& t : dec.products) {
        auto bump = [&](u32 l, u32 i, u32 j, u32 d) {
            auto key = std::make_tuple(l, i, j);
            u64 len = n / d;
            auto it = need.find(key);
            if (it == need.end() || it->second < len) need[key] = len;
        };
        bump(t.l, t.i, t.j, t.d);
        if (t.l < k) bump(k - t.l, t.i2, t.j2, t.d2);
    }
    std::map<std::tuple<u32, u32, u32>, std::vector<u64>> eis_cache;
    for (const auto& [key, len] : need) {
        auto [l, i, j] = key;
        CoeffSeq<Fp64> s = eisenstein_coeffs(ring, l, pd.chars[i - 1], pd.chars[j - 1],
                                             std::max<u64>(len, 1), table, true);
        eis_cache[key] = std::move(s.a);
    }

    std::unique_ptr<Ntt> ntt;
    if (use_ntt) {
        u32 lg = 0;
        while ((u64(1) << lg) < 2 * (n + 1) - 1) ++lg;
        ntt = std::make_unique<Ntt>(pd.prime, lg);
    }

    const std::size_t m = dec.products.size();
    std::vector<std::vector<u64>> cols(m);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t jdx = next.fetch_add(1);
            if (jdx >= m) return;
            const ProductTerm& t = dec.products[jdx];
            const auto& e1 = eis_cache.at(std::make_tuple(t.l, t.i, t.j));
            std::vector<u64> col = expand_operator<u64>(e1, t.d, n, 0);
            if (t.l < k) {
                const auto& e2 = eis_cache.at(std::make_tuple(k - t.l, t.i2, t.j2));
                std::vector<u64> f2 = expand_operator<u64>(e2, t.d2, n, 0);
                if (use_ntt) {
                    col = ntt->multiply(col, f2, n + 1);
                } else {
                    std::vector<u64> prod(n + 1, 0);
                    for (u64 a = 0; a <= n; ++a) {
                        if (col[a] == 0) continue;
                        for (u64 b = 0; a + b <= n; ++b) {
                            if (f2[b] == 0) continue;
                            prod[a + b] = (prod[a + b] + mulmod_u64(col[a], f2[b], ring.modulus())) %
                                          ring.modulus();
                        }
                    }
                    col = std::move(prod);
                }
            }
            cols[jdx] = std::move(col);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (u32 t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    const std::size_t deg = dec.basis_degree();
    std::vector<std::vector<u64>> rows(deg, std::vector<u64>(n + 1, 0));
    for (std::size_t jdx = 0; jdx < m; ++jdx) {
        for (std::size_t i = 0; i < deg; ++i) {
            u64 c = pd.matrix_modq[i][jdx];
            if (c == 0) continue;
            auto& row = rows[i];
            const auto& col = cols[jdx];
            const u64 q = ring.modulus();
            for (u64 idx = 0; idx <= n; ++idx) {
                if (col[idx] == 0) continue;
                row[idx] = (row[idx] + mulmod_u64(c, col[idx], q)) % q;
            }
        }
    }
    return rows;
}

}  // namespace

PreparedDecomposition::PreparedDecomposition(const BGDecomposition& d, const FftPrime& f)
    : dec(&d), prime(f), ring(f.q) {
    const u32 O = d.zeta_lcm();
    const u64 zO = f.zeta_for_order(O);
    for (const auto& chi : d.chars) {
        u64 z = powmod_u64(zO, O / chi.order, f.q);
        chars.push_back(embed_values(ring, chi, z));
    }
    matrix_modq.resize(d.basis_degree());
    for (std::size_t i = 0; i < d.basis_degree(); ++i) {
        for (const auto& e : d.matrix[i]) {
            u64 v;
            if (!e.cyclotomic) {
                v = ring.from_mpq(e.rat);
            } else {
                u64 z = powmod_u64(zO, O / e.zeta_order, f.q);
                auto eval_poly = [&](const std::vector<mpq_class>& p) {
                    u64 acc = 0, zp = 1;
                    for (const auto& c : p) {
                        acc = (acc + mulmod_u64(ring.from_mpq(c), zp, f.q)) % f.q;
                        zp = mulmod_u64(zp, z, f.q);
                    }
                    return acc;
                };
                u64 num = eval_poly(e.num);
                u64 den = e.den.empty() ? 1 : eval_poly(e.den);
                auto di = ring.inv(den);
                if (!di) throw incompatible_prime_error("matrix denominator vanishes mod q");
                v = mulmod_u64(num, *di, f.q);
            }
            matrix_modq[i].push_back(v);
        }
    }
    // self-certification against the exact header
    const u64 t = d.header.size();
    auto rows = compute_rows(*this, t, /*use_ntt=*/false, 1);
    for (std::size_t i = 0; i < d.basis_degree(); ++i) {
        if (rows[i][0] != 0)
            throw integrity_error(d.source + ": decomposition has a nonzero constant term mod q");
        for (u64 mdx = 1; mdx <= t; ++mdx) {
            if (rows[i][mdx] != ring.from_mpq(d.header[mdx - 1][i]))
                throw integrity_error(d.source + ": header self-certification failed at index " +
                                      std::to_string(mdx));
        }
    }
}

FftPrime choose_prime(const BGDecomposition& dec, u64 n, u32 min_bits, u64 lower_bound, u32 max_attempts) {
    std::vector<u32> orders{dec.zeta_lcm()};
    u64 lb = lower_bound;
    std::string last;
    for (u32 a = 0; a < max_attempts; ++a) {
        FftPrime f = find_fft_prime(n + 1, orders, min_bits, lb);
        try {
            PreparedDecomposition pd(dec, f);
            return f;
        } catch (const computation_error& e) {
            last = e.what();
            lb = f.q + 1;
        }
    }
    throw integrity_error("choose_prime: no certifying prime found (" + last + ")");
}

ModqCoefficients mf_coefficients(const PreparedDecomposition& pd, u64 n, CoefMode mode, u32 threads) {
    ModqCoefficients out;
    out.q = pd.ring.modulus();
    out.mode = mode;
    auto rows = compute_rows(pd, n, /*use_ntt=*/true, threads);
    if (mode == CoefMode::all) {
        out.index.resize(n);
        for (u64 i = 1; i <= n; ++i) out.index[i - 1] = static_cast<u32>(i);
        for (auto& r : rows) r.erase(r.begin());  // drop the constant slot
        out.rows = std::move(rows);
        return out;
    }
    out.index = primes_below(n + 1);
    out.rows.assign(rows.size(), {});
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out.rows[i].reserve(out.index.size());
        for (u32 p : out.index) out.rows[i].push_back(rows[i][p]);
    }
    return out;
}

namespace {

// exact squarefree test: gcd(f, f') constant in Q[x]
bool squarefree_exact(const std::vector<mpq_class>& f) {
    using Poly = std::vector<mpq_class>;
    auto deg_of = [](const Poly& p) -> long {
        for (std::size_t i = p.size(); i-- > 0;)
            if (p[i] != 0) return static_cast<long>(i);
        return -1;
    };
    Poly a = f, b(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) b[i - 1] = f[i] * static_cast<long>(i);
    while (deg_of(b) > 0) {
        long da = deg_of(a), db = deg_of(b);
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        mpq_class c = a[da] / b[db];
        for (long i = 0; i <= db; ++i) a[da - db + i] -= c * b[i];
        if (deg_of(a) < db) std::swap(a, b);
    }
    return deg_of(b) == 0 || deg_of(a) <= 0;
}

}  // namespace

double hasse_bound(const std::vector<mpq_class>& minpoly) {
    using C = std::complex<double>;
    const std::size_t d = minpoly.size() - 1;
    if (d == 0) throw std::invalid_argument("hasse_bound: constant minpoly");
    if (!squarefree_exact(minpoly)) throw precision_error("hasse_bound: minpoly is not squarefree");
    std::vector<C> c(d + 1);
    for (std::size_t i = 0; i <= d; ++i) c[i] = C(mpq_get_d(minpoly[i].get_mpq_t()), 0.0);
    if (d == 1) return 1.0;  // basis (1), embeddings matrix is the 1x1 identity

    // Durand-Kerner
    double radius = 1.0;
    for (std::size_t i = 0; i < d; ++i) radius = std::max(radius, 2.0 * std::abs(c[i]) / std::abs(c[d]));
    std::vector<C> z(d);
    for (std::size_t i = 0; i < d; ++i) z[i] = std::pow(C(0.4, 0.9), static_cast<double>(i + 1)) * radius;
    auto eval = [&](C x) {
        C r = c[d];
        for (std::size_t i = d; i-- > 0;) r = r * x + c[i];
        return r;
    };
    for (int it = 0; it < 500; ++it) {
        double delta = 0;
        for (std::size_t i = 0; i < d; ++i) {
            C den(1, 0);
            for (std::size_t j = 0; j < d; ++j)
                if (j != i) den *= (z[i] - z[j]);
            C step = eval(z[i]) / den;
            z[i] -= step;
            delta = std::max(delta, std::abs(step));
        }
        if (delta < 1e-15 * radius) break;
    }
    for (std::size_t i = 0; i < d; ++i) {
        if (std::abs(eval(z[i])) > 1e-9 * std::max(1.0, std::pow(radius, double(d))))
            throw precision_error("hasse_bound: root refinement failed");
        for (std::size_t j = i + 1; j < d; ++j)
            if (std::abs(z[i] - z[j]) < 1e-9 * radius)
                throw precision_error("hasse_bound: roots not separated (squarefree minpoly required)");
    }
    // Omega[i][s] = z_s^i; invert by Gaussian elimination
    std::vector<std::vector<C>> M(d, std::vector<C>(2 * d, C(0, 0)));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t s = 0; s < d; ++s) M[i][s] = std::pow(z[s], static_cast<double>(i));
        M[i][d + i] = 1;
    }
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        for (std::size_t r2 = col + 1; r2 < d; ++r2)
            if (std::abs(M[r2][col]) > std::abs(M[piv][col])) piv = r2;
        if (std::abs(M[piv][col]) < 1e-12) throw precision_error("hasse_bound: singular embedding matrix");
        std::swap(M[col], M[piv]);
        C inv = C(1, 0) / M[col][col];
        for (auto& x : M[col]) x *= inv;
        for (std::size_t r2 = 0; r2 < d; ++r2) {
            if (r2 == col) continue;
            C f = M[r2][col];
            if (std::abs(f) == 0) continue;
            for (std::size_t cc = 0; cc < 2 * d; ++cc) M[r2][cc] -= f * M[col][cc];
        }
    }
    double B = 0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) B = std::max(B, std::abs(M[i][d + j]));
    B = B * (1.0 + 1e-9) + 1e-15;  // outward rounding margin
    if (B < 1.0 / static_cast<double>(d) * 0.999)
        throw precision_error("hasse_bound: below the 1/d sanity floor");
    return B;
}

i64 lift_balanced_residue(u64 q, u64 r) {
    return r > q / 2 ? static_cast<i64>(r) - static_cast<i64>(q) : static_cast<i64>(r);
}

std::vector<std::vector<i64>> lift_prime_coefficients(const ModqCoefficients& mc, u32 weight, double hasse_B) {
    std::vector<std::vector<i64>> out(mc.rows.size());
    const double dim = static_cast<double>(mc.rows.size());
    const double qhalf = (static_cast<double>(mc.q) - 1.0) / 2.0;
    for (std::size_t idx = 0; idx < mc.index.size(); ++idx) {
        const double p = static_cast<double>(mc.index[idx]);
        // |a_{p,i}| = |sum_s a_p^s (Omega^{-1})_{s,i}| <= d * 2 sqrt(p)^{w-1} * max|Omega^{-1}|
        const double bound = dim * 2.0 * std::pow(std::sqrt(p), static_cast<double>(weight - 1)) * hasse_B;
        if (bound > qhalf)
            throw precision_error("lift: Hasse bound exceeds q at index " + std::to_string(mc.index[idx]) +
                                  " (use CRT with another prime)");
        for (std::size_t i = 0; i < mc.rows.size(); ++i) {
            i64 v = lift_balanced_residue(mc.q, mc.rows[i][idx]);
            if (std::abs(static_cast<double>(v)) > bound + 0.5)
                throw integrity_error("lift: residue exceeds the Hasse bound at index " +
                                      std::to_string(mc.index[idx]));
            out[i].push_back(v);
        }
    }
    return out;
}

std::vector<std::vector<mpz_class>> crt_combine(const std::vector<ModqCoefficients>& runs, u32 weight,
                                                double hasse_B) {
    if (runs.empty()) throw std::invalid_argument("crt_combine: no runs");
    for (std::size_t r = 1; r < runs.size(); ++r) {
        if (runs[r].index != runs[0].index || runs[r].rows.size() != runs[0].rows.size())
            throw std::invalid_argument("crt_combine: runs cover different indices");
        for (std::size_t s = 0; s < r; ++s)
            if (runs[r].q == runs[s].q) throw std::invalid_argument("crt_combine: repeated prime");
    }
    mpz_class M = 1;
    for (const auto& run : runs) {
        mpz_class q;
        mpz_set_ui(q.get_mpz_t(), run.q);
        M *= q;
    }
    std::vector<std::vector<mpz_class>> out(runs[0].rows.size());
    const double dim = static_cast<double>(runs[0].rows.size());
    for (std::size_t idx = 0; idx < runs[0].index.size(); ++idx) {
        const double p = static_cast<double>(runs[0].index[idx]);
        const double bound = dim * 2.0 * std::pow(std::sqrt(p), static_cast<double>(weight - 1)) * hasse_B;
        mpz_class bz(bound + 1.0);
        if (mpz_class(2 * bz) >= M)
            throw precision_error("crt_combine: combined modulus below the Hasse bound");
        for (std::size_t i = 0; i < out.size(); ++i) {
            // incremental garner-style reconstruction
            mpz_class x = 0, mod = 1;
            for (const auto& run : runs) {
                mpz_class q, r;
                mpz_set_ui(q.get_mpz_t(), run.q);
                mpz_set_ui(r.get_mpz_t(), run.rows[i][idx]);
                // x' = x + mod * t with t = (r - x) / mod (mod q)
                mpz_class minv;
                if (mpz_invert(minv.get_mpz_t(), mod.get_mpz_t(), q.get_mpz_t()) == 0)
                    throw integrity_error("crt_combine: moduli not coprime");
                mpz_class t = ((r - x) * minv) % q;
                if (t < 0) t += q;
                x += mod * t;
                mod *= q;
            }
            if (2 * x > M) x -= M;  // balanced
            if (abs(x) > bz) throw integrity_error("crt_combine: inconsistent residues at index " +
                                                   std::to_string(runs[0].index[idx]));
            out[i].push_back(x);
        }
    }
    return out;
}

std::vector<NumberRingZ::Elem> multiplicative_extend(const NumberRingZ& ring,
                                                     const std::vector<u32>& primes,
                                                     const std::vector<NumberRingZ::Elem>& ap,
                                                     const std::map<u32, NumberRingZ::Elem>& bad_ap,
                                                     u32 weight, u32 level, u64 n, const CoprimeTable& table) {
    if (n < 1) {
        std::vector<NumberRingZ::Elem> a(n + 1, ring.zero());
        if (n >= 1) a[1] = ring.one();
        return a;
    }
    if (primes.size() != ap.size()) throw std::invalid_argument("multiplicative_extend: prime/ap mismatch");
    // explicit factors required at every bad prime below n
    {
        std::string missing;
        for (u32 p = 2; p <= level && p <= n; ++p) {
            if (level % p) continue;
            bool pp = true;
            for (u32 dd = 2; dd < p; ++dd)
                if (p % dd == 0) pp = false;
            if (!pp) continue;
            if (!bad_ap.count(p)) missing += (missing.empty() ? "" : ", ") + std::to_string(p);
        }
        if (!missing.empty())
            throw computation_error("multiplicative_extend: missing bad-prime factors at p | level: " +
                                    missing);
    }
    std::size_t cursor = 0;
    auto provider = [&](u64 p) -> FactorRepr<NumberRingZ> {
        while (cursor < primes.size() && primes[cursor] < p) ++cursor;
        auto bad = bad_ap.find(static_cast<u32>(p));
        if (bad != bad_ap.end())
            return make_sigma(ring, 1, std::vector<NumberRingZ::Elem>{bad->second});
        if (cursor >= primes.size() || primes[cursor] != p)
            throw computation_error("multiplicative_extend: no coefficient for prime " + std::to_string(p));
        u64 pw = 1;
        for (u32 i = 0; i + 1 < weight; ++i) pw *= p;  // p^{weight-1}, exact
        return make_sigma(ring, 2, std::vector<NumberRingZ::Elem>{ap[cursor], ring.from_index(pw)});
    };
    return expand_precomp(ring, provider, table, n);
}

}  // namespace mfq
