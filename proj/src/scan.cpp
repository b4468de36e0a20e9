#include "scf/scan.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "scf/refdata.hpp"

namespace scf {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SCL_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? (int)hc : 1;
}

namespace {

// Apply fn(m) for every m in [lo, hi]; results are gathered in m order.
// The first worker exception is rethrown after the pool drains.
template <typename Fn>
void parallel_over_range(i64 lo, i64 hi, int threads, Fn fn) {
    if (hi < lo) return;
    threads = std::min<i64>(threads, hi - lo + 1);
    if (threads <= 1) {
        for (i64 m = lo; m <= hi; ++m) fn(m);
        return;
    }
    std::atomic<i64> next(lo);
    std::atomic<bool> failed(false);
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            try {
                for (;;) {
                    i64 m = next.fetch_add(1);
                    if (m > hi || failed.load(std::memory_order_relaxed)) break;
                    fn(m);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!err) err = std::current_exception();
                failed.store(true);
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

bool is_squarefree(const Factorization& f) {
    for (const auto& pp : f.factors)
        if (pp.exp > 1) return false;
    return true;
}

ScanRow row_from_report(const ClassNumberReport& rep) {
    ScanRow row;
    row.m = rep.field.m;
    row.D = rep.field.D;
    row.D_factors = render_factorization(rep.field.D_factors);
    row.conductor = rep.field.conductor;
    row.index = rep.field.index;
    row.index_class = rep.field.index_class;
    row.resolved = rep.resolved;
    row.unit_index = rep.unit_index;
    if (rep.resolved) row.h = rep.H_rounded;
    row.constraints_pass = rep.constraints.all_pass();
    return row;
}

void finish_summary(ScanResult& res) {
    for (const auto& r : res.rows) {
        ++res.summary.total;
        if (!r.resolved)
            ++res.summary.unresolved;
        else
            ++res.summary.h_buckets[*r.h];
    }
}

}  // namespace

Subcase subcase_from_string(const std::string& s) {
    if (s == "prime_f") return Subcase::PrimeF;
    if (s == "composite_f") return Subcase::CompositeF;
    if (s == "nine_p") return Subcase::NineP;
    if (s == "nine_s") return Subcase::NineS;
    if (s.empty() || s == "all") return Subcase::None;
    throw std::invalid_argument("unknown subcase: " + s);
}

const char* subcase_name(Subcase s) {
    switch (s) {
        case Subcase::PrimeF: return "prime_f";
        case Subcase::CompositeF: return "composite_f";
        case Subcase::NineP: return "nine_p";
        case Subcase::NineS: return "nine_s";
        default: return "all";
    }
}

bool scan_filter(int index, Subcase sub, i64 m) {
    if (m < -1) return false;
    u64 D = (u64)((i128)m * m + 3 * m + 9);
    i64 m3 = ((m % 3) + 3) % 3;
    i64 m9 = ((m % 9) + 9) % 9;
    i64 m27 = ((m % 27) + 27) % 27;
    switch (index) {
        case 1: {
            bool nine = (m9 == 0 || m9 == 6);
            switch (sub) {
                case Subcase::PrimeF: return m3 != 0 && is_prime(D);
                case Subcase::CompositeF:
                    return m3 != 0 && !is_prime(D) && is_squarefree(factorize(D));
                case Subcase::NineP: return nine && is_prime(D / 9);
                case Subcase::NineS:
                    return nine && m != 0 && !is_prime(D / 9) && is_squarefree(factorize(D / 9));
                default:
                    return m == 0 || scan_filter(1, Subcase::PrimeF, m) || scan_filter(1, Subcase::CompositeF, m) ||
                           scan_filter(1, Subcase::NineP, m) || scan_filter(1, Subcase::NineS, m);
            }
        }
        case 3: {
            bool cls = (m27 == 3 || m27 == 21);
            switch (sub) {
                case Subcase::NineP: return cls && is_prime(D / 27);
                case Subcase::NineS:
                    return cls && m != 3 && !is_prime(D / 27) && is_squarefree(factorize(D / 27));
                case Subcase::PrimeF:
                case Subcase::CompositeF:
                    throw std::invalid_argument("index 3 has subcases nine_p / nine_s");
                default: return m == 3 || scan_filter(3, Subcase::NineP, m) || scan_filter(3, Subcase::NineS, m);
            }
        }
        case 27: {
            bool cls = (m27 == 12);
            switch (sub) {
                case Subcase::PrimeF: return cls && is_prime(D / 27);
                case Subcase::CompositeF:
                    return cls && !is_prime(D / 27) && is_squarefree(factorize(D / 27));
                case Subcase::NineP:
                case Subcase::NineS:
                    throw std::invalid_argument("index 27 has subcases prime_f / composite_f");
                default: return scan_filter(27, Subcase::PrimeF, m) || scan_filter(27, Subcase::CompositeF, m);
            }
        }
        default:
            throw std::invalid_argument("scan index must be 1, 3 or 27");
    }
}

ScanResult scan_small_class(i64 m_lo, i64 m_hi, int index, Subcase sub, u64 hmax, int threads) {
    if (m_lo < -1) m_lo = -1;
    auto t0 = std::chrono::steady_clock::now();
    ScanResult res;
    res.summary.filter = "index=" + std::to_string(index) + " subcase=" + subcase_name(sub) +
                         " hmax=" + std::to_string(hmax);
    res.summary.m_lo = m_lo;
    res.summary.m_hi = m_hi;
    if (m_hi < m_lo) return res;

    std::vector<std::optional<ScanRow>> slots((size_t)(m_hi - m_lo + 1));
    parallel_over_range(m_lo, m_hi, resolve_threads(threads), [&](i64 m) {
        if (!scan_filter(index, sub, m)) return;
        ClassNumberReport rep = class_number(m);
        if ((int)rep.field.index != index)
            throw std::runtime_error("scan filter admitted m with wrong index: m = " + std::to_string(m));
        if (rep.resolved && rep.H_rounded > hmax) return;
        slots[(size_t)(m - m_lo)] = row_from_report(rep);
    });
    for (auto& s : slots)
        if (s) res.rows.push_back(std::move(*s));
    finish_summary(res);
    res.summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

std::vector<u64> conductor_block(i64 lo, i64 hi) {
    // Sieve f = gamma * prod{p != 3 : v_p(D) != 0 mod 3} over D(m) = m^2+3m+9.
    // Primes below 10^5 are divided out by stepping the polynomial's roots;
    // D < 1.0001e14 for m <= 10^7, so the remaining cofactor is 1, p, p^2 or pq
    // and contributes its radical (it can never carry a cube).
    if (lo < -1 || hi <= lo) throw std::invalid_argument("conductor_block: bad range");
    if (hi > 10000001) throw std::invalid_argument("conductor_block: m beyond 10^7");
    const size_t n = (size_t)(hi - lo);
    std::vector<u64> rem(n), fpart(n, 1);
    for (size_t i = 0; i < n; ++i) {
        i64 m = lo + (i64)i;
        rem[i] = (u64)((i128)m * m + 3 * m + 9);
    }

    struct RootPair {
        u32 p;
        u32 r[2];
        int nroots;
    };
    static const std::vector<RootPair> roots = [] {
        // roots of x^2 + 3x + 9 mod p exist only for p = 3 (x = 0) and p = 1 (mod 3)
        std::vector<RootPair> out;
        for (u32 p : small_primes()) {
            if (p > 100000) break;
            if (p == 3) {
                out.push_back({3, {0, 0}, 1});
                continue;
            }
            if (p % 3 != 1) continue;
            // x = (-3 +- sqrt(-27)) / 2 mod p
            u64 s = [&]() -> u64 {  // Tonelli-Shanks for sqrt(-27)
                u64 a = (u64)((-27 % (i64)p) + p) % p;
                if (a == 0) return 0;
                if (pow_mod(a, (p - 1) / 2, p) != 1) throw std::runtime_error("sieve: -27 not a QR mod p=1(3)");
                if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
                u64 q = p - 1;
                int e = 0;
                while ((q & 1) == 0) { q >>= 1; ++e; }
                u64 z = 2;
                while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
                u64 c = pow_mod(z, q, p);
                u64 x = pow_mod(a, (q + 1) / 2, p);
                u64 t = pow_mod(a, q, p);
                int mble = e;
                while (t != 1) {
                    u64 tt = t;
                    int i = 0;
                    while (tt != 1) { tt = mul_mod(tt, tt, p); ++i; }
                    u64 bpow = c;
                    for (int j = 0; j < mble - i - 1; ++j) bpow = mul_mod(bpow, bpow, p);
                    x = mul_mod(x, bpow, p);
                    c = mul_mod(bpow, bpow, p);
                    t = mul_mod(t, c, p);
                    mble = i;
                }
                return x;
            }();
            u64 inv2 = (p + 1) / 2;
            u64 r1 = mul_mod((s + p - 3 % p) % p, inv2, p);
            u64 r2 = mul_mod((p - s + p - 3 % p) % p, inv2, p);
            // verify
            for (u64 r : {r1, r2})
                if ((mul_mod(r, r, p) + 3 * r + 9) % p != 0) throw std::runtime_error("sieve: bad root");
            RootPair rp{p, {(u32)r1, (u32)r2}, r1 == r2 ? 1 : 2};
            out.push_back(rp);
        }
        return out;
    }();

    for (const auto& rp : roots) {
        for (int k = 0; k < rp.nroots; ++k) {
            i64 p = rp.p;
            i64 start = lo + ((rp.r[k] - (lo % p) + p) % p);
            for (i64 m = start; m < hi; m += p) {
                size_t i = (size_t)(m - lo);
                int e = 0;
                while (rem[i] % (u64)p == 0) {
                    rem[i] /= (u64)p;
                    ++e;
                }
                if (p != 3 && e % 3 != 0) fpart[i] *= (u64)p;
            }
        }
    }

    std::vector<u64> f(n);
    for (size_t i = 0; i < n; ++i) {
        u64 r = rem[i];
        u64 part = fpart[i];
        if (r > 1) {
            u64 s = isqrt_u64(r);
            part *= (s * s == r) ? s : r;  // p^2 contributes p; p or pq contribute everything
        }
        i64 m = lo + (i64)i;
        i64 m3 = ((m % 3) + 3) % 3;
        i64 m27 = ((m % 27) + 27) % 27;
        int gamma = (m3 != 0 || m27 == 12) ? 1 : 9;
        f[i] = part * (u64)gamma;
    }
    return f;
}

ScanResult scan_h_below_16(i64 m_lo, i64 m_hi, bool prefilter, int threads) {
    if (m_lo < -1) m_lo = -1;
    auto t0 = std::chrono::steady_clock::now();
    ScanResult res;
    res.summary.filter = std::string("h<16") + (prefilter ? "" : " no-prefilter");
    res.summary.m_lo = m_lo;
    res.summary.m_hi = m_hi;

    const u64 hcap = 16;
    const i64 block = 1 << 20;
    std::vector<i64> survivors;
    for (i64 lo = m_lo; lo <= m_hi; lo += block) {
        i64 hi = std::min(m_hi + 1, lo + block);
        std::vector<u64> f = conductor_block(lo, hi);
        for (i64 m = lo; m < hi; ++m) {
            if (prefilter) {
                double D = (double)m * (double)m + 3.0 * (double)m + 9.0;
                double fv = (double)f[(size_t)(m - lo)];
                auto lb1 = louboutin_bound(fv, D);
                auto lb2 = lettl_bound(fv, D);
                double best = std::max(lb1.value_or(0.0), lb2.value_or(0.0));
                if (best >= (double)hcap) continue;  // h > bound >= 16
            }
            survivors.push_back(m);
        }
    }

    std::vector<std::optional<ScanRow>> slots(survivors.size());
    std::atomic<size_t> cursor(0);
    int nthreads = std::min<int>(resolve_threads(threads), (int)std::max<size_t>(survivors.size(), 1));
    auto work = [&] {
        for (;;) {
            size_t i = cursor.fetch_add(1);
            if (i >= survivors.size()) break;
            ClassNumberReport rep = class_number(survivors[i]);
            if (rep.resolved && rep.H_rounded >= hcap) continue;
            slots[i] = row_from_report(rep);
        }
    };
    if (nthreads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    for (auto& s : slots)
        if (s) res.rows.push_back(std::move(*s));
    finish_summary(res);
    res.summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

TableVerifyResult verify_tables(int threads) {
    const auto& rows = reference_rows();
    TableVerifyResult out;
    out.rows.resize(rows.size());

    std::atomic<size_t> cursor(0);
    auto work = [&] {
        for (;;) {
            size_t i = cursor.fetch_add(1);
            if (i >= rows.size()) break;
            const ReferenceRow& ref = rows[i];
            TableRowResult& rr = out.rows[i];
            rr.m = ref.m;
            try {
                SimplestCubicField F = build_field(ref.m);
                std::vector<std::pair<u64, int>> fac;
                for (const auto& pp : F.D_factors.factors) fac.push_back({(u64)pp.prime, pp.exp});
                if (fac != ref.D_factors) { rr.stage = "factorization"; continue; }
                u64 f_expected = (u64)((F.gamma == 9) ? 9 : 1);
                for (const auto& [p, e] : fac)
                    if (p != 3 && e % 3 != 0) f_expected *= p;
                if (F.conductor != f_expected || F.D % F.conductor != 0) { rr.stage = "conductor"; continue; }
                if (F.index != F.D / F.conductor) { rr.stage = "index"; continue; }
                if (ref.mod_tag != mod_tag_of(ref.m)) { rr.stage = "mod27"; continue; }
                ClassNumberReport rep = class_number(ref.m);
                u64 u = cross_check(rep, ref.h);
                rr.unit_index = u;
                if (!rep.resolved || rep.H_rounded != ref.h) { rr.stage = "class_number"; continue; }
                if (rep.unit_index != u) { rr.stage = "unit_index"; continue; }
                if (!rep.constraints.all_pass()) { rr.stage = "constraints"; continue; }
                rr.pass = true;
            } catch (const std::exception& e) {
                rr.stage = std::string("exception: ") + e.what();
            }
        }
    };
    int nthreads = std::min<int>(resolve_threads(threads), (int)rows.size());
    if (nthreads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    for (const auto& r : out.rows) (r.pass ? out.passed : out.failed)++;
    return out;
}

}  // namespace scf
