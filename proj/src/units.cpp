#include "scf/units.hpp"

#include <cmath>

namespace scf {

double regulator_from_embeddings(const RealRoots& r, int i, int j) {
    long double a = logl(fabsl(r.alpha[i])), b = logl(fabsl(r.alpha_plus1[i]));
    long double c = logl(fabsl(r.alpha[j])), d = logl(fabsl(r.alpha_plus1[j]));
    return (double)fabsl(a * d - b * c);
}

RegulatorReport regulator_E(i64 m, int precision_bits) {
    RealRoots roots = real_roots(normalize(m), precision_bits);
    RegulatorReport rep;
    rep.precision_bits = roots.precision_bits;
    rep.log_matrix[0][0] = (double)logl(fabsl(roots.alpha[0]));
    rep.log_matrix[0][1] = (double)logl(fabsl(roots.alpha[1]));
    rep.log_matrix[1][0] = (double)logl(fabsl(roots.alpha_plus1[0]));
    rep.log_matrix[1][1] = (double)logl(fabsl(roots.alpha_plus1[1]));
    rep.reg_E = regulator_from_embeddings(roots, 0, 1);
    return rep;
}

double regulator_lower_bound(double field_disc) {
    double t = std::log(field_disc / 4.0);
    return t * t / 16.0;
}

}  // namespace scf
