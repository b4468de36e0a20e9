#include "scf/thue.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace scf {

i128 thue_eval(i64 m, i64 x, i64 y) {
    if (std::abs(m) > (i64)1 << 40 || std::abs(x) > (i64)1 << 40 || std::abs(y) > (i64)1 << 40)
        throw std::overflow_error("thue_eval: arguments out of exactly-representable range");
    i128 X = x, Y = y, M = m;
    return X * X * X - M * X * X * Y - (M + 3) * X * Y * Y - Y * Y * Y;
}

std::pair<i64, i64> orbit_representative(i64 x, i64 y) {
    std::pair<i64, i64> a{x, y};
    std::pair<i64, i64> b{y, -x - y};
    std::pair<i64, i64> c{-x - y, x};
    return std::min({a, b, c});
}

std::vector<ThueSolution> solve_bounded(i64 m, const std::vector<u64>& lambdas, i64 B) {
    std::vector<ThueSolution> out;
    if (B < 1 || lambdas.empty()) return out;
    const u64 lam_max = lambdas.back();
    auto is_lambda = [&](u64 v) { return std::binary_search(lambdas.begin(), lambdas.end(), v); };

    // |F(x,y)| <= lam_max forces min_i |x - alpha_i y| <= lam_max^(1/3) =: W.
    // Within the strip of root i the other factors of F = prod (x - alpha_j y)
    // are at least gap_ij |y| - (W+2), which shrinks the strip to
    // lam_max / prod + margin once |y| is large.
    const i64 W = (i64)std::ceil(std::cbrt((double)lam_max)) + 1;
    RealRoots roots = real_roots(m, 53);
    double a[3] = {(double)roots.alpha[0], (double)roots.alpha[1], (double)roots.alpha[2]};

    std::vector<std::pair<i64, i64>> segs;
    for (i64 y = -B; y <= B; ++y) {
        segs.clear();
        double ay = std::abs((double)y);
        for (int i = 0; i < 3; ++i) {
            double c = a[i] * (double)y;
            double g = 1.0;
            bool tight = true;
            for (int j = 0; j < 3 && tight; ++j) {
                if (j == i) continue;
                double t = std::abs(a[i] - a[j]) * ay - (double)(W + 2);
                if (t <= 1.0)
                    tight = false;
                else
                    g *= t;
            }
            i64 w = W;
            if (tight) w = std::min<i64>(W, (i64)((double)lam_max / g) + 2);
            i64 lo = (i64)std::floor(c) - w, hi = (i64)std::ceil(c) + w;
            lo = std::max(lo, -B);
            hi = std::min(hi, B);
            if (lo <= hi) segs.push_back({lo, hi});
        }
        std::sort(segs.begin(), segs.end());
        i64 cursor = -B - 1;
        for (auto [lo, hi] : segs) {
            lo = std::max(lo, cursor + 1);
            for (i64 x = lo; x <= hi; ++x) {
                i128 F = thue_eval(m, x, y);
                if (F <= 0 || (u128)F > lam_max) continue;
                if (!is_lambda((u64)F)) continue;
                ThueSolution s;
                s.m = m;
                s.x = x;
                s.y = y;
                s.lambda = (u64)F;
                s.trivial = (x == 0 || y == 0 || x + y == 0);
                s.orbit_rep = orbit_representative(x, y);
                if (!s.trivial) {
                    i128 D = (i128)m * m + 3 * (i128)m + 9;
                    if (D % F == 0) {
                        s.target_n = coincidence_target(m, x, y).n;
                        s.target_valid = true;
                    }
                }
                out.push_back(s);
            }
            cursor = std::max(cursor, hi);
        }
    }
    return out;
}

CoincidenceTarget coincidence_target(i64 m, i64 x, i64 y) {
    i128 xyz = (i128)x * y * (x + y);
    if (xyz == 0) throw std::invalid_argument("coincidence_target: trivial solution");
    i128 F = thue_eval(m, x, y);
    i128 D = (i128)m * m + 3 * (i128)m + 9;
    if (F <= 0 || D % F != 0)
        throw std::domain_error("coincidence_target: F_m(x,y) is not a positive divisor of m^2+3m+9");
    i128 N = (i128)m + D * xyz / F;
    if (N > INT64_MAX || N < INT64_MIN) throw std::overflow_error("coincidence_target: N out of range");
    CoincidenceTarget t;
    t.N = (i64)N;
    t.n = normalize(t.N);
    return t;
}

std::vector<CoincidencePair> coincidence_scan(i64 M, i64 B, int threads) {
    (void)threads;  // per-m work is tiny; sequential keeps ordering trivial
    if (M < -1) throw std::invalid_argument("coincidence_scan: M must be >= -1");

    // route 1: Thue search + target formula
    std::map<std::pair<i64, i64>, std::pair<std::vector<ThueSolution>, std::vector<ThueSolution>>> found;
    for (i64 m = -1; m <= M; ++m) {
        SimplestCubicField F = build_field(m);
        std::vector<u64> lambdas = divisors_u64(F.D_factors);
        for (const ThueSolution& s : solve_bounded(m, lambdas, B)) {
            if (s.trivial || !s.target_valid) continue;
            i64 n = s.target_n;
            if (n == m || n > M) continue;
            auto key = std::minmax(m, n);
            auto& w = found[{key.first, key.second}];
            (m < n ? w.first : w.second).push_back(s);
        }
    }

    // route 2: identical selected character pairs (grouped by conductor)
    std::map<std::string, std::vector<i64>> by_class;
    for (i64 m = -1; m <= M; ++m) {
        SimplestCubicField F = build_field(m);
        by_class[select_for_field(F).class_id()].push_back(m);
    }
    std::set<std::pair<i64, i64>> char_pairs;
    for (const auto& [id, ms] : by_class)
        for (size_t i = 0; i < ms.size(); ++i)
            for (size_t j = i + 1; j < ms.size(); ++j) char_pairs.insert({ms[i], ms[j]});

    std::set<std::pair<i64, i64>> thue_pairs;
    for (const auto& [k, v] : found) thue_pairs.insert(k);
    if (thue_pairs != char_pairs)
        throw std::runtime_error("coincidence_scan: Thue-search and character certifications disagree");

    std::vector<CoincidencePair> out;
    for (auto& [k, w] : found) {
        CoincidencePair p;
        p.m = k.first;
        p.n = k.second;
        p.shared_conductor = build_field(k.first).conductor;
        if (p.shared_conductor != build_field(k.second).conductor)
            throw std::runtime_error("coincidence_scan: conductor mismatch within a certified pair");
        p.witnesses_m = std::move(w.first);
        p.witnesses_n = std::move(w.second);
        out.push_back(std::move(p));
    }
    return out;
}

Count66Result count_nontrivial_66(i64 B, const std::vector<i64>* restrict_m) {
    static const std::vector<i64> all = {-1, 0, 1, 2, 3, 5, 12, 54, 66, 1259, 2389};
    const std::vector<i64>& ms = restrict_m ? *restrict_m : all;

    Count66Result res;
    res.orbit_structure_ok = true;
    for (i64 m : ms) {
        SimplestCubicField F = build_field(m);
        std::vector<u64> lambdas = divisors_u64(F.D_factors);
        std::map<i64, std::vector<ThueSolution>> groups;
        for (const ThueSolution& s : solve_bounded(m, lambdas, B)) {
            if (s.trivial || !s.target_valid) continue;
            groups[s.target_n].push_back(s);
            ++res.total;
        }
        for (const auto& [n, sols] : groups) {
            res.per_endpoint[{m, n}] = (int)sols.size();
            // one full orbit per endpoint: 3 solutions sharing an orbit representative
            std::set<std::pair<i64, i64>> reps;
            for (const auto& s : sols) reps.insert(s.orbit_rep);
            if (sols.size() != 3 || reps.size() != 1) res.orbit_structure_ok = false;
        }
    }
    return res;
}

}  // namespace scf
