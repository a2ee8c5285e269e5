#include "logk3/grouparith.hpp"

#include <numeric>
#include <stdexcept>

namespace logk3 {

namespace {

long long mod_n(long long x, long long n) { return ((x % n) + n) % n; }

void check_model(const FiniteGroupModel& model) {
    if (model.modulus < 1) throw std::invalid_argument("modulus must be positive");
}

} // namespace

long long subgroup_generator(const FiniteGroupModel& model) {
    check_model(model);
    long long g = model.modulus;
    for (long long x : model.subgroup_gens) g = std::gcd(g, mod_n(x, model.modulus));
    return g == 0 ? model.modulus : g;
}

long long subgroup_order(const FiniteGroupModel& model) {
    return model.modulus / subgroup_generator(model);
}

bool in_subgroup(const FiniteGroupModel& model, long long x) {
    return mod_n(x, model.modulus) % subgroup_generator(model) == 0;
}

bool verify_marked_point(const FiniteGroupModel& model, const MarkedPoint& candidate) {
    check_model(model);
    if (candidate.a < 1) return false;
    const long long n = model.modulus;
    const Int ap = Int(candidate.a) * mod_n(candidate.p, n);
    if ((ap - mod_n(candidate.target, n)) % n != 0) return false;
    // m ranges over 0 < m < sqrt(a / |G|), exactly: m^2 |G| < a
    const Int order = subgroup_order(model);
    for (long long m = 1; Int(m) * m * order < candidate.a; ++m) {
        const long long mp = mod_n(static_cast<long long>((Int(m) * mod_n(candidate.p, n)) % n), n);
        if (in_subgroup(model, mp)) return false;
    }
    return true;
}

std::optional<MarkedPoint> find_marked_point(const FiniteGroupModel& model, long long a,
                                             long long target) {
    check_model(model);
    if (a < 1) throw std::invalid_argument("the pairing degree a must be positive");
    for (long long p = 0; p < model.modulus; ++p) {
        MarkedPoint candidate{p, a, mod_n(target, model.modulus)};
        if (verify_marked_point(model, candidate)) return candidate;
    }
    return std::nullopt;
}

} // namespace logk3
