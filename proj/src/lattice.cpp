#include "logk3/lattice.hpp"

#include <stdexcept>

namespace logk3 {

bool DivisorClass::is_zero() const {
    for (const Int& x : coeffs)
        if (x != 0) return false;
    return true;
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    if (coeffs.size() != o.coeffs.size())
        throw std::invalid_argument("divisor class sum: length mismatch");
    DivisorClass r(coeffs);
    for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
    return r;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    if (coeffs.size() != o.coeffs.size())
        throw std::invalid_argument("divisor class difference: length mismatch");
    DivisorClass r(coeffs);
    for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] -= o.coeffs[i];
    return r;
}

DivisorClass DivisorClass::operator-() const {
    DivisorClass r(coeffs);
    for (Int& x : r.coeffs) x = -x;
    return r;
}

DivisorClass operator*(const Int& s, const DivisorClass& a) {
    DivisorClass r(a.coeffs);
    for (Int& x : r.coeffs) x *= s;
    return r;
}

IntersectionLattice make_lattice(IMat gram, IntVec canonical) {
    if (gram.rows != gram.cols)
        throw std::invalid_argument("gram matrix must be square");
    for (int i = 0; i < gram.rows; ++i)
        for (int j = i + 1; j < gram.cols; ++j)
            if (gram.at(i, j) != gram.at(j, i))
                throw std::invalid_argument("gram matrix must be symmetric");
    if (static_cast<int>(canonical.size()) != gram.rows)
        throw std::invalid_argument("canonical class length must equal the rank");
    IntersectionLattice l;
    l.rank = gram.rows;
    l.gram = std::move(gram);
    l.canonical = DivisorClass(std::move(canonical));
    return l;
}

Int pairing(const IntersectionLattice& l, const DivisorClass& a, const DivisorClass& b) {
    if (a.length() != l.rank || b.length() != l.rank)
        throw std::invalid_argument("pairing: class length does not match lattice rank");
    Int s = 0;
    for (int i = 0; i < l.rank; ++i) {
        if (a.coeffs[i] == 0) continue;
        Int row = 0;
        for (int j = 0; j < l.rank; ++j) row += l.gram.at(i, j) * b.coeffs[j];
        s += a.coeffs[i] * row;
    }
    return s;
}

static IMat gram_of(const IntersectionLattice& l, const std::vector<DivisorClass>& subset) {
    const int k = static_cast<int>(subset.size());
    IMat g(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            Int p = pairing(l, subset[i], subset[j]);
            g.at(j, i) = p;
            g.at(i, j) = std::move(p);
        }
    return g;
}

bool is_negative_definite(const IntersectionLattice& l, const std::vector<DivisorClass>& subset) {
    return negdef_by_minors(gram_of(l, subset));
}

std::tuple<int, int, int> signature(const IntersectionLattice& l) {
    return signature_of(l.gram);
}

BlowupResult blowup_lattice(const IntersectionLattice& l) {
    const int n = l.rank;
    BlowupResult r;
    r.lattice.rank = n + 1;
    r.lattice.gram = IMat(n + 1, n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.lattice.gram.at(i, j) = l.gram.at(i, j);
    r.lattice.gram.at(n, n) = -1;

    IMat embed(n + 1, n);
    for (int i = 0; i < n; ++i) embed.at(i, i) = 1;
    r.embed = LatticeMap{std::move(embed), MapKind::EmbedAfterBlowup};

    IntVec e(static_cast<size_t>(n) + 1);
    e[n] = 1;
    r.e = DivisorClass(std::move(e));

    r.lattice.canonical = r.embed.apply(l.canonical) + r.e;
    return r;
}

ContractionResult contract_lattice(const IntersectionLattice& l, const DivisorClass& e) {
    if (e.length() != l.rank)
        throw std::invalid_argument("contraction: class length does not match lattice rank");
    if (pairing(l, e, e) != -1 || pairing(l, l.canonical, e) != -1)
        throw std::invalid_argument("not a numerical (-1)-class");

    const int n = l.rank;
    // f = gram . e is the covector "pair with e"; f.e = -1 gives gcd(f) = 1,
    // so Z^n splits as ker(f) + Z e and the kernel is the contracted lattice.
    IntVec f = mat_apply(l.gram, e.coeffs);
    IMat u = unimodular_covector_completion(f);

    IMat w(n, n); // columns: kernel basis (cols 1..n-1 of u), then e
    for (int i = 0; i < n; ++i) {
        for (int j = 1; j < n; ++j) w.at(i, j - 1) = u.at(i, j);
        w.at(i, n - 1) = e.coeffs[i];
    }
    const IMat w_inv = unimodular_inverse(w);

    // push(a) = a + (a.e) e expressed in the kernel basis; as a matrix this is
    // the first n-1 rows of w_inv (I + e f^T).
    IMat proj = IMat::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) proj.at(i, j) += e.coeffs[i] * f[j];
    const IMat full = mat_mul(w_inv, proj);
    IMat push(n - 1, n);
    for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j < n; ++j) push.at(i, j) = full.at(i, j);

    ContractionResult r;
    IMat basis(n, n - 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j + 1 < n; ++j) basis.at(i, j) = w.at(i, j);
    r.lattice.rank = n - 1;
    r.lattice.gram = mat_mul(mat_mul(basis.transposed(), l.gram), basis);
    r.push = LatticeMap{std::move(push), MapKind::PushforwardAfterContraction};
    r.lattice.canonical = r.push.apply(l.canonical);
    return r;
}

int kernel_dim(const IntersectionLattice& l, const std::vector<DivisorClass>& classes) {
    const int k = static_cast<int>(classes.size());
    IMat m(l.rank, k);
    for (int j = 0; j < k; ++j) {
        if (classes[j].length() != l.rank)
            throw std::invalid_argument("kernel_dim: class length does not match lattice rank");
        for (int i = 0; i < l.rank; ++i) m.at(i, j) = classes[j].coeffs[i];
    }
    return k - rank_of(std::move(m));
}

} // namespace logk3
