#include "trivext/lattice.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace trivext {

mpz_class floor_mod(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

bool Hnf2::contains(const IntVec2& v) const {
    return coordinates(v).has_value();
}

std::optional<std::array<mpz_class, 2>> Hnf2::coordinates(const IntVec2& v) const {
    if (!mpz_divisible_p(v[1].get_mpz_t(), c.get_mpz_t()))
        return std::nullopt;
    mpz_class k2 = v[1] / c;
    mpz_class rest = v[0] - k2 * b;
    if (!mpz_divisible_p(rest.get_mpz_t(), a.get_mpz_t()))
        return std::nullopt;
    mpz_class k1 = rest / a;
    return std::array<mpz_class, 2>{k1, k2};
}

namespace {

struct Column {
    IntVec2 v;
    std::vector<mpz_class> combo;
};

// col_j -= q * col_i
void subtract_multiple(Column& target, const Column& pivot, const mpz_class& q) {
    for (int k = 0; k < 2; ++k)
        target.v[k] -= q * pivot.v[k];
    for (std::size_t k = 0; k < target.combo.size(); ++k)
        target.combo[k] -= q * pivot.combo[k];
}

void negate(Column& col) {
    for (auto& x : col.v)
        x = -x;
    for (auto& x : col.combo)
        x = -x;
}

// Euclid across `cols` on coordinate `row`; afterwards at most one column has
// a nonzero entry there, and its index is returned (or -1).
int euclid_on_row(std::vector<Column>& cols, int row) {
    for (;;) {
        int pivot = -1;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (cols[i].v[row] == 0)
                continue;
            if (pivot < 0 || abs(cols[i].v[row]) < abs(cols[pivot].v[row]))
                pivot = static_cast<int>(i);
        }
        if (pivot < 0)
            return -1;
        bool reduced = false;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (static_cast<int>(i) == pivot || cols[i].v[row] == 0)
                continue;
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), cols[i].v[row].get_mpz_t(), cols[pivot].v[row].get_mpz_t());
            subtract_multiple(cols[i], cols[pivot], q);
            reduced = true;
        }
        if (!reduced) {
            if (cols[pivot].v[row] < 0)
                negate(cols[pivot]);
            return pivot;
        }
    }
}

} // namespace

std::optional<Hnf2WithTransform> hermite_reduce(const std::vector<IntVec2>& columns) {
    const std::size_t n = columns.size();
    std::vector<Column> cols;
    cols.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Column col{columns[i], std::vector<mpz_class>(n, mpz_class(0))};
        col.combo[i] = 1;
        cols.push_back(std::move(col));
    }

    const int ypivot = euclid_on_row(cols, 1);
    if (ypivot < 0)
        return std::nullopt;
    Column second = std::move(cols[ypivot]);
    cols.erase(cols.begin() + ypivot);

    const int xpivot = euclid_on_row(cols, 0);
    if (xpivot < 0)
        return std::nullopt;
    Column first = std::move(cols[xpivot]);

    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), second.v[0].get_mpz_t(), first.v[0].get_mpz_t());
    subtract_multiple(second, first, q);

    Hnf2WithTransform out;
    out.form = Hnf2{first.v[0], second.v[0], second.v[1]};
    out.combo1 = std::move(first.combo);
    out.combo2 = std::move(second.combo);
    return out;
}

Hnf2 intersect(const Hnf2& l1, const Hnf2& l2) {
    // Second coordinates common to both: multiples of lcm(c1, c2) = L.
    // At y = L*s the first coordinate must satisfy x ≡ r1*s (mod a1), x ≡ r2*s (mod a2).
    const mpz_class L = lcm(l1.c, l2.c);
    const mpz_class r1 = l1.b * (L / l1.c);
    const mpz_class r2 = l2.b * (L / l2.c);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), l1.a.get_mpz_t(), l2.a.get_mpz_t());
    mpz_class delta = r1 - r2;
    mpz_class h;
    mpz_gcd(h.get_mpz_t(), g.get_mpz_t(), delta.get_mpz_t());
    const mpz_class s0 = g / h;

    const mpz_class x1 = floor_mod(r1 * s0, l1.a);
    const mpz_class x2 = floor_mod(r2 * s0, l2.a);
    // CRT with moduli a1, a2 sharing gcd g; x2 - x1 is divisible by g by choice of s0.
    const mpz_class m1 = l1.a / g;
    const mpz_class m2 = l2.a / g;
    mpz_class inv;
    if (m2 == 1) {
        inv = 0;
    } else if (mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t()) == 0) {
        throw std::logic_error("lattice intersection: CRT inverse missing");
    }
    const mpz_class k = floor_mod(((x2 - x1) / g) * inv, m2);
    const mpz_class A = lcm(l1.a, l2.a);
    return Hnf2{A, floor_mod(x1 + l1.a * k, A), L * s0};
}

} // namespace trivext
