#include "scf/classno.hpp"

#include <cmath>
#include <stdexcept>

namespace scf {

namespace {

constexpr double kRoundTol = 1e-3;

bool round_ok(double value, u64 rounded) {
    return std::abs(value - (double)rounded) < kRoundTol * std::max(1.0, value);
}

int conductor_components(const SimplestCubicField& F) {
    // r in the sense of f = p1...pr or 9 p1...p_{r-1} (the 9 counts as one)
    int r = (F.conductor % 9 == 0) ? 1 : 0;
    for (const auto& [p, e] : factorize(F.conductor).factors)
        if (p != 3) ++r;
    return r;
}

}  // namespace

bool allowed_small_h(u64 h) {
    if (h == 0 || h >= 43) throw std::invalid_argument("allowed_small_h: h must be in [1, 43)");
    for (u64 A = 0; A * A <= h; ++A) {
        u64 rem = h - A * A;
        u64 B2 = rem / 3;
        if (rem % 3 == 0) {
            u64 s = isqrt_u64(B2);
            if (s * s == B2) return true;
        }
    }
    return false;
}

const std::vector<u64>& allowed_h_list() {
    static const std::vector<u64> list = {1, 3, 4, 7, 9, 12, 13, 16, 19, 21, 25, 27, 28, 31, 36, 37, 39};
    return list;
}

ConstraintRecord congruence_checks(const ClassNumberReport& rep) {
    ConstraintRecord c;
    if (!rep.resolved) return c;
    c.evaluated = true;
    u64 h = rep.H_rounded;
    const auto& F = rep.field;

    c.mod3 = (h % 3 == 0) || (h % 3 == 1);
    c.allowed_small = (h < 43) ? allowed_small_h(h) : true;
    bool f_simple = (F.conductor == 9) || is_prime(F.conductor);
    c.cong_i = ((h % 3 == 1) == f_simple);
    int r = conductor_components(F);
    if (r >= 2) {
        u64 pw = 1;
        for (int i = 1; i < r; ++i) pw *= 3;
        c.cong_ii = (h % pw == 0);
    }
    return c;
}

ClassNumberReport class_number(i64 m) {
    ClassNumberReport rep;
    rep.field = build_field(m);
    rep.chi = select_for_field(rep.field);
    rep.l_value = l1_abs_squared(rep.chi);

    if (rep.field.index == 1) {
        rep.unit_index = 1;
        rep.unit_index_proven = true;
        rep.reg_E = regulator_E(rep.field.m).reg_E;
    } else {
        UnitGroupInfo sat = saturate_unit_group(rep.field);
        rep.unit_index = sat.unit_index;
        rep.unit_index_proven = sat.proven;
        rep.reg_E = sat.reg_E;
    }

    auto combine = [&](const LValue& l) {
        rep.H_raw = (double)rep.field.conductor * l.abs_squared / (4.0 * rep.reg_E);
        double H = rep.H_raw * (double)rep.unit_index;
        rep.H_rounded = (u64)std::llround(H);
        rep.round_residual = H - (double)rep.H_rounded;
        rep.resolved = rep.H_rounded >= 1 && round_ok(H, rep.H_rounded);
    };
    combine(rep.l_value);
    if (!rep.resolved) {
        rep.escalated = true;
        rep.l_value = l1_abs_squared_ld(rep.chi);
        combine(rep.l_value);
    }
    rep.constraints = congruence_checks(rep);
    return rep;
}

u64 cross_check(ClassNumberReport& rep, u64 expected_h) {
    if (expected_h == 0) throw std::invalid_argument("cross_check: expected_h must be positive");
    double ratio = (double)expected_h / rep.H_raw;
    u64 u = (u64)std::llround(ratio);
    if (u < 1 || std::abs(ratio - (double)u) > kRoundTol * std::max(1.0, ratio))
        throw std::runtime_error("cross_check: expected_h / H_raw = " + std::to_string(ratio) +
                                 " is not a positive integer (m = " + std::to_string(rep.field.m) + ")");
    if (rep.field.index == 1 && u != 1)
        throw std::runtime_error("cross_check: monogenic field with unit index " + std::to_string(u));
    rep.unit_index_hint = u;
    return u;
}

}  // namespace scf
