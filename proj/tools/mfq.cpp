// mfq: Dirichlet-series and modular-form coefficient pipelines on the
// command line. Subcommands: sieve, eisenstein, euler-expand, tensor,
// sympow, mf-coefs, triple, bench.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mfq/bgform.hpp"
#include "mfq/chars.hpp"
#include "mfq/eis.hpp"
#include "mfq/euler.hpp"
#include "mfq/lprod.hpp"
#include "mfq/ntt.hpp"
#include "mfq/numring.hpp"
#include "mfq/rings.hpp"
#include "mfq/sieve.hpp"

namespace {

using namespace mfq;
using nlohmann::json;

constexpr char kBinaryMagic[4] = {'M', 'F', 'Q', '1'};

class Output {
  public:
    Output(const std::string& path, bool binary) : binary_(binary) {
        if (!path.empty()) {
            file_.open(path, binary ? std::ios::binary | std::ios::out : std::ios::out);
            if (!file_) throw std::invalid_argument("cannot open output file: " + path);
            os_ = &file_;
        } else {
            os_ = &std::cout;
        }
    }
    void header(u64 length) {
        if (!binary_) return;
        os_->write(kBinaryMagic, 4);
        u32 version = 1;
        os_->write(reinterpret_cast<const char*>(&version), 4);
        os_->write(reinterpret_cast<const char*>(&length), 8);
    }
    void record(u64 index, const std::vector<std::string>& vals) {
        std::string line = std::to_string(index);
        for (const auto& v : vals) {
            line += ' ';
            line += v;
        }
        line += '\n';
        os_->write(line.data(), static_cast<std::streamsize>(line.size()));
    }
    void record_binary(i64 v) { os_->write(reinterpret_cast<const char*>(&v), 8); }
    void record_binary_mpz(const mpz_class& v) {
        if (!v.fits_slong_p()) throw capacity_error("binary output: coefficient exceeds int64");
        record_binary(static_cast<i64>(mpz_get_si(v.get_mpz_t())));
    }
    bool binary() const { return binary_; }

  private:
    bool binary_;
    std::ofstream file_;
    std::ostream* os_;
};

std::pair<u32, u32> parse_char_pair(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("character must be N,a");
    return {static_cast<u32>(std::stoul(s.substr(0, comma))),
            static_cast<u32>(std::stoul(s.substr(comma + 1)))};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------- factor files

struct FactorFile {
    ReprKind kind = ReprKind::sigma;
    std::map<u64, std::vector<mpz_class>> primes;  // raw polynomial coefficients f_1.. (F_p = 1 + sum f_i T^i)
    std::optional<std::vector<mpz_class>> dflt;
};

FactorFile load_factor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open factor file: " + path);
    json j;
    in >> j;
    FactorFile f;
    if (j.contains("kind")) {
        std::string k = j.at("kind").get<std::string>();
        if (k == "poly")
            f.kind = ReprKind::sigma;
        else if (k == "newton")
            f.kind = ReprKind::newton;
        else
            throw std::invalid_argument(path + ": kind must be poly or newton");
    }
    auto parse_list = [&](const json& arr) {
        std::vector<mpz_class> v;
        for (const auto& c : arr) {
            if (c.is_string())
                v.emplace_back(c.get<std::string>());
            else
                v.emplace_back(static_cast<long>(c.get<long long>()));
        }
        return v;
    };
    if (j.contains("default")) f.dflt = parse_list(j.at("default"));
    if (j.contains("primes"))
        for (const auto& [key, val] : j.at("primes").items()) f.primes[std::stoull(key)] = parse_list(val);
    return f;
}

ZZ::Elem elem_from_mpz(const ZZ&, const mpz_class& c) { return c; }
Fp64::Elem elem_from_mpz(const Fp64& ring, const mpz_class& c) { return ring.from_mpz(c); }

// raw polynomial coefficients -> sigma convention (sigma_k = (-1)^k f_k);
// newton kind passes through
template <class R>
FactorRepr<R> factor_from_file(const R& ring, const FactorFile& f, u64 p) {
    const std::vector<mpz_class>* coeffs = nullptr;
    auto it = f.primes.find(p);
    if (it != f.primes.end())
        coeffs = &it->second;
    else if (f.dflt)
        coeffs = &*f.dflt;
    else
        throw computation_error("factor file has no entry for prime " + std::to_string(p));
    std::vector<typename R::Elem> vals;
    vals.reserve(coeffs->size());
    for (std::size_t i = 0; i < coeffs->size(); ++i) {
        mpz_class c = (*coeffs)[i];
        if (f.kind == ReprKind::sigma && (i % 2 == 0)) c = -c;  // f_k at odd k keeps its sign
        vals.push_back(elem_from_mpz(ring, c));
    }
    return FactorRepr<R>{f.kind, static_cast<int>(vals.size()), std::move(vals)};
}

// ---------------------------------------------------------------- subcommands

int cmd_sieve(u64 n, bool print_decomps, bool print_primes, bool stats) {
    CoprimeTable t = rough_coprime_sieve(n);
    if (print_primes)
        for (u32 p : t.primes) std::printf("%u\n", p);
    if (print_decomps)
        for (std::size_t i = 0; i < t.dk.size(); ++i)
            std::printf("%u = %u * %u\n", t.dk[i], t.dpe[i], t.dm[i]);
    if (stats) {
        std::printf("primes=%zu\n", t.primes.size());
        std::printf("higher_prime_powers=%zu\n", t.hp_pe.size());
        std::printf("decomps=%zu\n", t.dk.size());
        std::printf("unlinks=%llu\n", static_cast<unsigned long long>(t.unlink_count));
    }
    return 0;
}

int cmd_eisenstein(u32 k, const std::string& phi_s, const std::string& psi_s, u64 n, u64 prime,
                   u32 min_bits, const std::string& out_path, bool binary) {
    auto [Np, ap] = parse_char_pair(phi_s);
    auto [Ns, as] = parse_char_pair(psi_s);
    DirichletCharacter phi = conrey_character(Np, ap);
    DirichletCharacter psi = conrey_character(Ns, as);
    u32 O = static_cast<u32>(std::lcm(phi.order, psi.order));
    FftPrime f = prime ? fft_prime_from(prime, 1, {O}) : find_fft_prime(n + 1, {O}, min_bits);
    Fp64 ring(f.q);
    u64 zO = f.zeta_for_order(O);
    auto ephi = embed_values(ring, phi, powmod_u64(zO, O / phi.order, f.q));
    auto epsi = embed_values(ring, psi, powmod_u64(zO, O / psi.order, f.q));
    CoprimeTable table = rough_coprime_sieve(n + 2);
    CoeffSeq<Fp64> c = eisenstein_coeffs(ring, k, ephi, epsi, n, table, false);
    Output out(out_path, binary);
    out.header(n);
    for (u64 m = 1; m <= n; ++m) {
        i64 v = ring.lift_balanced(c.a[m]);
        if (out.binary())
            out.record_binary(v);
        else
            out.record(m, {std::to_string(v)});
    }
    return 0;
}

int cmd_euler_expand(const std::string& factors_path, u64 n, const std::string& ring_name, u64 prime,
                     const std::string& out_path, bool binary) {
    FactorFile f = load_factor_file(factors_path);
    CoprimeTable table = rough_coprime_sieve(n + 2);
    Output out(out_path, binary);
    out.header(n);
    if (ring_name == "zz") {
        ZZ ring;
        auto a = expand_precomp(ring, [&](u64 p) { return factor_from_file(ring, f, p); }, table, n);
        for (u64 m = 1; m <= n; ++m) {
            if (out.binary())
                out.record_binary_mpz(a[m]);
            else
                out.record(m, {a[m].get_str()});
        }
        return 0;
    }
    if (ring_name == "fq") {
        FftPrime fp;
        if (prime) {
            if (!is_prime_u64(prime) || prime >= (u64(1) << 63))
                throw std::invalid_argument("--prime must be a prime below 2^63");
            fp.q = prime;
        } else {
            fp = find_fft_prime(n + 1, {1}, 50);
        }
        Fp64 ring(fp.q);
        auto a = expand_precomp(ring, [&](u64 p) { return factor_from_file(ring, f, p); }, table, n);
        for (u64 m = 1; m <= n; ++m) {
            i64 v = ring.lift_balanced(a[m]);
            if (out.binary())
                out.record_binary(v);
            else
                out.record(m, {std::to_string(v)});
        }
        return 0;
    }
    throw std::invalid_argument("--ring must be zz or fq");
}

int cmd_tensor_or_sympow(const std::vector<std::string>& files, u32 power, u64 n,
                         const std::string& out_path, bool binary) {
    ZZ ring;
    CoprimeTable table = rough_coprime_sieve(n + 2);
    std::vector<FactorFile> fs;
    for (const auto& p : files) fs.push_back(load_factor_file(p));
    std::vector<u64> result_dummy;
    std::vector<mpz_class> a;
    if (power > 0) {
        auto provider = [&](u64 p) {
            FactorRepr<ZZ> F = factor_from_file(ring, fs[0], p);
            std::size_t emax = 1;
            u64 pe = p;
            while (pe <= n / p) {
                pe *= p;
                ++emax;
            }
            return power == 1 ? F : sym_power(ring, F, power, emax, ReprKind::newton);
        };
        a = expand_precomp(ring, provider, table, n);
    } else {
        auto provider = [&](u64 p) {
            std::vector<FactorRepr<ZZ>> locs;
            for (const auto& ff : fs) locs.push_back(factor_from_file(ring, ff, p));
            std::size_t emax = 1;
            u64 pe = p;
            while (pe <= n / p) {
                pe *= p;
                ++emax;
            }
            return tensor_product(ring, locs, emax, ReprKind::newton);
        };
        a = expand_precomp(ring, provider, table, n);
    }
    Output out(out_path, binary);
    out.header(n);
    for (u64 m = 1; m <= n; ++m) {
        if (out.binary())
            out.record_binary_mpz(a[m]);
        else
            out.record(m, {a[m].get_str()});
    }
    return 0;
}

struct MfRun {
    BGDecomposition dec;
    FftPrime prime;
    std::vector<u32> primes;
    std::vector<std::vector<i64>> ap;  // basis coords per prime
    double hasse = 1.0;
};

MfRun run_mf_primes(const std::string& decomp_path, u64 n, u64 explicit_prime, u32 threads) {
    MfRun r;
    r.dec = load_decomposition(decomp_path);
    r.prime = explicit_prime ? fft_prime_from(explicit_prime, n + 1, {r.dec.zeta_lcm()})
                             : choose_prime(r.dec, n);
    PreparedDecomposition pd(r.dec, r.prime);
    ModqCoefficients mc = mf_coefficients(pd, n, CoefMode::primes_only, threads);
    r.hasse = hasse_bound(r.dec.minpoly);
    r.ap = lift_prime_coefficients(mc, r.dec.weight, r.hasse);
    r.primes = std::move(mc.index);
    return r;
}

std::vector<NumberRingZ::Elem> extend_all(const MfRun& r, u64 n) {
    std::vector<mpz_class> mp;
    for (const auto& c : r.dec.minpoly) {
        if (c.get_den() != 1) throw std::invalid_argument("basis minpoly must be integral");
        mp.push_back(c.get_num());
    }
    NumberRingZ ring(mp);
    std::vector<NumberRingZ::Elem> ap;
    std::map<u32, NumberRingZ::Elem> bad;
    for (std::size_t i = 0; i < r.primes.size(); ++i) {
        NumberRingZ::Elem e = ring.zero();
        for (std::size_t c = 0; c < r.ap.size(); ++c) e[c] = r.ap[c][i];
        if (r.dec.level % r.primes[i] == 0)
            bad[r.primes[i]] = e;
        else
            ap.push_back(e);
    }
    std::vector<u32> good;
    for (u32 p : r.primes)
        if (r.dec.level % p) good.push_back(p);
    CoprimeTable table = rough_coprime_sieve(n + 2);
    return multiplicative_extend(ring, good, ap, bad, r.dec.weight, r.dec.level, n, table);
}

int cmd_mf_coefs(const std::string& decomp_path, u64 n, u64 prime, bool all_mode, u32 threads,
                 const std::string& out_path, bool binary) {
    MfRun r = run_mf_primes(decomp_path, n, prime, threads);
    Output out(out_path, binary);
    const std::size_t d = r.dec.basis_degree();
    if (!all_mode) {
        out.header(r.primes.size());
        for (std::size_t i = 0; i < r.primes.size(); ++i) {
            std::vector<std::string> vals;
            for (std::size_t c = 0; c < d; ++c) vals.push_back(std::to_string(r.ap[c][i]));
            if (out.binary())
                for (std::size_t c = 0; c < d; ++c) out.record_binary(r.ap[c][i]);
            else
                out.record(r.primes[i], vals);
        }
        return 0;
    }
    auto a = extend_all(r, n);
    out.header(n);
    for (u64 m = 1; m <= n; ++m) {
        if (out.binary()) {
            for (std::size_t c = 0; c < d; ++c)
                out.record_binary_mpz(a[m][c]);
        } else {
            std::vector<std::string> vals;
            for (std::size_t c = 0; c < d; ++c) vals.push_back(a[m][c].get_str());
            out.record(m, vals);
        }
    }
    return 0;
}

int cmd_triple(const std::string& fpath, const std::string& gpath, const std::string& hpath, u32 level,
               u64 n, u32 threads, const std::string& out_path, bool binary) {
    // prime coefficients for each factor via the modular pipeline
    MfRun rf = run_mf_primes(fpath, n, 0, threads);
    MfRun rg = run_mf_primes(gpath, n, 0, threads);
    MfRun rh = run_mf_primes(hpath, n, 0, threads);
    if (rf.primes != rg.primes || rf.primes != rh.primes)
        throw integrity_error("triple: factor runs cover different primes");
    std::vector<mpz_class> mpg, mph;
    for (const auto& c : rg.dec.minpoly) mpg.push_back(c.get_num());
    for (const auto& c : rh.dec.minpoly) mph.push_back(c.get_num());
    if (mpg != mph)
        throw std::invalid_argument("triple: bases of g and h must agree (conjugate pair expected)");

    // tensor over the compositum ring Z[y]/(minpoly of g); f embeds through
    // its rational coordinates, and the product must come out rational
    NumberRingZ ring(mpg);
    auto coords_at = [&](const MfRun& r, std::size_t i) {
        NumberRingZ::Elem e = ring.zero();
        for (std::size_t c = 0; c < r.ap.size() && c < e.size(); ++c) e[c] = r.ap[c][i];
        return e;
    };
    ArithmeticObject<NumberRingZ> tf, tg, th;
    std::map<u32, FactorRepr<NumberRingZ>> bad;
    for (std::size_t i = 0; i < rf.primes.size(); ++i) {
        u32 p = rf.primes[i];
        NumberRingZ::Elem apf = ring.from_int(0);
        apf[0] = rf.ap[0][i];
        NumberRingZ::Elem apg = coords_at(rg, i), aph = coords_at(rh, i);
        if (level % p == 0) {
            bad[p] = triple_product_bad_factor(ring, apf, apg, aph, u64(p));
            // mark all three bad at p so the override is demanded
            tf.bad[p] = make_sigma(ring, 1, std::vector<NumberRingZ::Elem>{apf});
            tg.bad[p] = make_sigma(ring, 1, std::vector<NumberRingZ::Elem>{apg});
            th.bad[p] = make_sigma(ring, 1, std::vector<NumberRingZ::Elem>{aph});
            continue;
        }
        u64 pw = u64(p);
        tf.primes.push_back(p);
        tf.ap.push_back(apf);
        tf.sigma2.push_back(ring.from_index(pw));
        tg.primes.push_back(p);
        tg.ap.push_back(apg);
        tg.sigma2.push_back(ring.from_index(pw));
        th.primes.push_back(p);
        th.ap.push_back(aph);
        th.sigma2.push_back(ring.from_index(pw));
    }
    CoprimeTable table = rough_coprime_sieve(n + 2);
    auto an = dirichlet_tensor(ring, {&tf, &tg, &th}, n, table, bad);

    Output out(out_path, binary);
    out.header(n);
    for (u64 m = 1; m <= n; ++m) {
        if (!ring.is_rational(an[m])) throw integrity_error("triple: non-rational coefficient");
        if (out.binary())
            out.record_binary_mpz(an[m][0]);
        else
            out.record(m, {an[m][0].get_str()});
    }
    return 0;
}

int cmd_bench(const std::string& op, u64 n, const std::string& decomp, u32 threads) {
    auto t0 = std::chrono::steady_clock::now();
    if (op == "sieve") {
        CoprimeTable t = rough_coprime_sieve(n);
        std::printf("sieve_time_s=%.6f\n", seconds_since(t0));
        std::printf("unlinks=%llu\n", static_cast<unsigned long long>(t.unlink_count));
        std::printf("decomps=%zu\n", t.dk.size());
        return 0;
    }
    if (op == "eisenstein") {
        DirichletCharacter phi = conrey_character(1, 1);
        DirichletCharacter psi = conrey_character(23, 22);
        FftPrime f = find_fft_prime(n + 1, {2}, 50);
        Fp64 ring(f.q);
        auto ephi = embed_values(ring, phi, ring.one());
        auto epsi = embed_values(ring, psi, f.zeta_for_order(2));
        CoprimeTable table = rough_coprime_sieve(n + 2);
        t0 = std::chrono::steady_clock::now();
        ring.ops.reset();
        auto c = eisenstein_coeffs(ring, 1, ephi, epsi, n, table, false);
        std::printf("eisenstein_time_s=%.6f\n", seconds_since(t0));
        std::printf("muls=%llu\nadds=%llu\n", static_cast<unsigned long long>(ring.ops.muls),
                    static_cast<unsigned long long>(ring.ops.adds));
        std::printf("check=%llu\n", static_cast<unsigned long long>(c.a[n]));
        return 0;
    }
    if (op == "euler") {
        FftPrime f = find_fft_prime(n + 1, {1}, 50);
        Fp64 ring(f.q);
        CoprimeTable table = rough_coprime_sieve(n + 2);
        auto provider = [&](u64 p) {
            return make_sigma(ring, 2, std::vector<u64>{ring.from_index(p), ring.one()});
        };
        t0 = std::chrono::steady_clock::now();
        ring.ops.reset();
        auto a = expand_precomp(ring, provider, table, n);
        std::printf("euler_time_s=%.6f\n", seconds_since(t0));
        std::printf("muls=%llu\nadds=%llu\ndivs=%llu\n", static_cast<unsigned long long>(ring.ops.muls),
                    static_cast<unsigned long long>(ring.ops.adds),
                    static_cast<unsigned long long>(ring.ops.divs));
        std::printf("check=%llu\n", static_cast<unsigned long long>(a[n]));
        return 0;
    }
    if (op == "mf-coefs") {
        if (decomp.empty()) throw std::invalid_argument("bench mf-coefs needs --decomp");
        BGDecomposition dec = load_decomposition(decomp);
        FftPrime f = choose_prime(dec, n);
        PreparedDecomposition pd(dec, f);
        t0 = std::chrono::steady_clock::now();
        ModqCoefficients mc = mf_coefficients(pd, n, CoefMode::primes_only, threads);
        double tp = seconds_since(t0);
        std::printf("mfcoefs_time_s=%.6f\n", tp);
        std::printf("primes=%zu\n", mc.index.size());
        std::printf("q=%llu\n", static_cast<unsigned long long>(mc.q));
        return 0;
    }
    throw std::invalid_argument("bench --op must be sieve, eisenstein, euler or mf-coefs");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Euler products, Eisenstein series and modular form coefficients"};
    app.set_help_flag("--help", "print help");  // long-only: triple uses --h for its third form
    app.require_subcommand(1);

    // sieve
    u64 s_n = 0;
    bool s_dec = false, s_pr = false, s_stats = false;
    auto* sieve_cmd = app.add_subcommand("sieve", "rough-coprime factorization table");
    sieve_cmd->add_option("--length", s_n, "exclusive index bound")->required();
    sieve_cmd->add_flag("--print-decomps", s_dec, "print k = pe * m lines");
    sieve_cmd->add_flag("--print-primes", s_pr, "print the primes");
    sieve_cmd->add_flag("--stats", s_stats, "print counts");

    // eisenstein
    u32 e_k = 1;
    std::string e_phi = "1,1", e_psi = "1,1", e_out;
    u64 e_n = 0, e_prime = 0;
    u32 e_bits = 50;
    bool e_bin = false;
    auto* eis_cmd = app.add_subcommand("eisenstein", "coefficients of E_k^{phi,psi}");
    eis_cmd->add_option("--weight", e_k, "weight k >= 1")->required();
    eis_cmd->add_option("--phi", e_phi, "first character as N,a");
    eis_cmd->add_option("--psi", e_psi, "second character as N,a");
    eis_cmd->add_option("--length", e_n, "number of coefficients")->required();
    eis_cmd->add_option("--prime", e_prime, "unsupported here; kept for symmetry");
    eis_cmd->add_option("--min-bits", e_bits, "minimum prime size");
    eis_cmd->add_option("--out", e_out, "output path (default stdout)");
    eis_cmd->add_flag("--binary", e_bin, "binary output");

    // euler-expand
    std::string x_factors, x_ring = "zz", x_out;
    u64 x_n = 0, x_prime = 0;
    bool x_bin = false;
    auto* euler_cmd = app.add_subcommand("euler-expand", "expand an Euler product from a factor file");
    euler_cmd->add_option("--factors", x_factors, "JSON factor file")->required();
    euler_cmd->add_option("--length", x_n, "number of coefficients")->required();
    euler_cmd->add_option("--ring", x_ring, "zz (default) or fq");
    euler_cmd->add_option("--prime", x_prime, "prime for --ring fq");
    euler_cmd->add_option("--out", x_out, "output path");
    euler_cmd->add_flag("--binary", x_bin, "binary output");

    // tensor
    std::vector<std::string> t_files;
    u64 t_n = 0;
    std::string t_out;
    bool t_bin = false;
    auto* tensor_cmd = app.add_subcommand("tensor", "tensor-product Dirichlet coefficients");
    tensor_cmd->add_option("files", t_files, "factor files")->required()->expected(-1);
    tensor_cmd->add_option("--length", t_n, "number of coefficients")->required();
    tensor_cmd->add_option("--out", t_out, "output path");
    tensor_cmd->add_flag("--binary", t_bin, "binary output");

    // sympow
    std::string p_file, p_out;
    u32 p_k = 1;
    u64 p_n = 0;
    bool p_bin = false;
    auto* sympow_cmd = app.add_subcommand("sympow", "symmetric-power Dirichlet coefficients");
    sympow_cmd->add_option("--factors", p_file, "factor file")->required();
    sympow_cmd->add_option("--power", p_k, "exponent k >= 1")->required();
    sympow_cmd->add_option("--length", p_n, "number of coefficients")->required();
    sympow_cmd->add_option("--out", p_out, "output path");
    sympow_cmd->add_flag("--binary", p_bin, "binary output");

    // mf-coefs
    std::string m_decomp, m_out;
    u64 m_n = 0, m_prime = 0;
    bool m_all = false, m_primes_only = false, m_bin = false;
    u32 m_threads = 1;
    auto* mf_cmd = app.add_subcommand("mf-coefs", "modular form coefficients from a decomposition");
    mf_cmd->add_option("--decomp", m_decomp, "decomposition JSON")->required();
    mf_cmd->add_option("--length", m_n, "number of coefficients")->required();
    mf_cmd->add_option("--prime", m_prime, "explicit FFT prime (auto otherwise)");
    mf_cmd->add_flag("--all", m_all, "all indices (default: primes only)");
    mf_cmd->add_flag("--primes-only", m_primes_only, "prime indices only (default)");
    mf_cmd->add_option("--threads", m_threads, "parallel Eisenstein-product pool");
    mf_cmd->add_option("--out", m_out, "output path");
    mf_cmd->add_flag("--binary", m_bin, "binary output");

    // triple
    std::string r_f, r_g, r_h, r_out;
    u32 r_level = 0, r_threads = 1;
    u64 r_n = 0;
    bool r_bin = false;
    auto* triple_cmd = app.add_subcommand("triple", "triple-product L-series coefficients");
    triple_cmd->set_help_flag("--help", "print help");
    triple_cmd->add_option("--f", r_f, "decomposition of f")->required();
    triple_cmd->add_option("--g", r_g, "decomposition of g")->required();
    triple_cmd->add_option("--h", r_h, "decomposition of h")->required();
    triple_cmd->add_option("--level", r_level, "common level N0")->required();
    triple_cmd->add_option("--length", r_n, "number of coefficients")->required();
    triple_cmd->add_option("--threads", r_threads, "parallel pool");
    triple_cmd->add_option("--out", r_out, "output path");
    triple_cmd->add_flag("--binary", r_bin, "binary output");

    // bench
    std::string b_op, b_decomp;
    u64 b_n = 0;
    u32 b_threads = 1;
    auto* bench_cmd = app.add_subcommand("bench", "timing and operation counters, metric=value lines");
    bench_cmd->add_option("--op", b_op, "sieve | eisenstein | euler | mf-coefs")->required();
    bench_cmd->add_option("--length", b_n, "problem size")->required();
    bench_cmd->add_option("--decomp", b_decomp, "decomposition for mf-coefs");
    bench_cmd->add_option("--threads", b_threads, "parallel pool");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*sieve_cmd) return cmd_sieve(s_n, s_dec, s_pr, s_stats);
        if (*eis_cmd) return cmd_eisenstein(e_k, e_phi, e_psi, e_n, e_prime, e_bits, e_out, e_bin);
        if (*euler_cmd) return cmd_euler_expand(x_factors, x_n, x_ring, x_prime, x_out, x_bin);
        if (*tensor_cmd) return cmd_tensor_or_sympow(t_files, 0, t_n, t_out, t_bin);
        if (*sympow_cmd) return cmd_tensor_or_sympow({p_file}, p_k, p_n, p_out, p_bin);
        if (*mf_cmd) {
            if (m_all && m_primes_only) throw std::invalid_argument("--all conflicts with --primes-only");
            return cmd_mf_coefs(m_decomp, m_n, m_prime, m_all, m_threads, m_out, m_bin);
        }
        if (*triple_cmd) return cmd_triple(r_f, r_g, r_h, r_level, r_n, r_threads, r_out, r_bin);
        if (*bench_cmd) return cmd_bench(b_op, b_n, b_decomp, b_threads);
    } catch (const capacity_error& e) {
        std::fprintf(stderr, "capacity: %s\n", e.what());
        return 4;
    } catch (const computation_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid argument: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 0;
}
