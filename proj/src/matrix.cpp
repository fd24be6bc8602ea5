#include "mstruct/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace mstruct {

IntMat IntMat::identity(int n)
{
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

bool IntMat::is_zero() const
{
    for (const auto& x : a)
        if (x != 0)
            return false;
    return true;
}

IntMat mul(const IntMat& x, const IntMat& y)
{
    if (x.cols != y.rows)
        throw std::invalid_argument("mul: shape mismatch");
    IntMat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Int& xik = x.at(i, k);
            if (xik == 0)
                continue;
            for (int j = 0; j < y.cols; ++j) {
                const Int& ykj = y.at(k, j);
                if (ykj != 0)
                    z.at(i, j) += xik * ykj;
            }
        }
    return z;
}

IntMat add(const IntMat& x, const IntMat& y)
{
    if (x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument("add: shape mismatch");
    IntMat z(x.rows, x.cols);
    for (size_t i = 0; i < z.a.size(); ++i)
        z.a[i] = x.a[i] + y.a[i];
    return z;
}

IntMat sub(const IntMat& x, const IntMat& y)
{
    if (x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument("sub: shape mismatch");
    IntMat z(x.rows, x.cols);
    for (size_t i = 0; i < z.a.size(); ++i)
        z.a[i] = x.a[i] - y.a[i];
    return z;
}

IntMat transpose(const IntMat& x)
{
    IntMat z(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j)
            z.at(j, i) = x.at(i, j);
    return z;
}

std::vector<Int> apply(const IntMat& m, const std::vector<Int>& v)
{
    if (static_cast<int>(v.size()) != m.cols)
        throw std::invalid_argument("apply: shape mismatch");
    std::vector<Int> out(m.rows);
    for (int i = 0; i < m.rows; ++i) {
        Int acc = 0;
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0 && v[j] != 0)
                acc += m.at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

namespace {

    struct SnfWork {
        IntMat d, u, uinv, v, vinv;
        bool tr;

        void row_swap(int i, int j)
        {
            if (i == j)
                return;
            for (int c = 0; c < d.cols; ++c)
                std::swap(d.at(i, c), d.at(j, c));
            if (!tr)
                return;
            for (int c = 0; c < u.cols; ++c)
                std::swap(u.at(i, c), u.at(j, c));
            for (int r = 0; r < uinv.rows; ++r)
                std::swap(uinv.at(r, i), uinv.at(r, j));
        }

        void col_swap(int i, int j)
        {
            if (i == j)
                return;
            for (int r = 0; r < d.rows; ++r)
                std::swap(d.at(r, i), d.at(r, j));
            if (!tr)
                return;
            for (int r = 0; r < v.rows; ++r)
                std::swap(v.at(r, i), v.at(r, j));
            for (int c = 0; c < vinv.cols; ++c)
                std::swap(vinv.at(i, c), vinv.at(j, c));
        }

        // row i -= q * row j ;  uinv column update keeps u*uinv = 1
        void row_axpy(int i, int j, const Int& q)
        {
            if (q == 0)
                return;
            for (int c = 0; c < d.cols; ++c)
                d.at(i, c) -= q * d.at(j, c);
            if (!tr)
                return;
            for (int c = 0; c < u.cols; ++c)
                u.at(i, c) -= q * u.at(j, c);
            for (int r = 0; r < uinv.rows; ++r)
                uinv.at(r, j) += q * uinv.at(r, i);
        }

        void col_axpy(int i, int j, const Int& q)
        {
            if (q == 0)
                return;
            for (int r = 0; r < d.rows; ++r)
                d.at(r, i) -= q * d.at(r, j);
            if (!tr)
                return;
            for (int r = 0; r < v.rows; ++r)
                v.at(r, i) -= q * v.at(r, j);
            for (int c = 0; c < vinv.cols; ++c)
                vinv.at(j, c) += q * vinv.at(i, c);
        }

        void row_negate(int i)
        {
            for (int c = 0; c < d.cols; ++c)
                d.at(i, c) = -d.at(i, c);
            if (!tr)
                return;
            for (int c = 0; c < u.cols; ++c)
                u.at(i, c) = -u.at(i, c);
            for (int r = 0; r < uinv.rows; ++r)
                uinv.at(r, i) = -uinv.at(r, i);
        }
    };

}  // namespace

SmithResult smith(const IntMat& a, bool with_transforms)
{
    SnfWork w;
    w.d = a;
    w.tr = with_transforms;
    if (with_transforms) {
        w.u = IntMat::identity(a.rows);
        w.uinv = IntMat::identity(a.rows);
        w.v = IntMat::identity(a.cols);
        w.vinv = IntMat::identity(a.cols);
    }

    const int n = std::min(a.rows, a.cols);
    for (int t = 0; t < n; ++t) {
        // smallest-magnitude pivot keeps intermediate entries small
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = t; i < w.d.rows; ++i)
            for (int j = t; j < w.d.cols; ++j) {
                const Int& x = w.d.at(i, j);
                if (x == 0)
                    continue;
                Int ax = abs(x);
                if (pi < 0 || ax < best) {
                    best = ax;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0)
            break;
        w.row_swap(t, pi);
        w.col_swap(t, pj);

        for (;;) {
            bool dirty = false;
            for (int i = t + 1; i < w.d.rows; ++i) {
                if (w.d.at(i, t) == 0)
                    continue;
                Int q = w.d.at(i, t) / w.d.at(t, t);
                w.row_axpy(i, t, q);
                if (w.d.at(i, t) != 0) {
                    w.row_swap(t, i);  // remainder is smaller; continue euclid
                    dirty = true;
                }
            }
            for (int j = t + 1; j < w.d.cols; ++j) {
                if (w.d.at(t, j) == 0)
                    continue;
                Int q = w.d.at(t, j) / w.d.at(t, t);
                w.col_axpy(j, t, q);
                if (w.d.at(t, j) != 0) {
                    w.col_swap(t, j);
                    dirty = true;
                }
            }
            if (!dirty)
                break;
        }
        if (w.d.at(t, t) < 0)
            w.row_negate(t);
    }

    // enforce divisibility chain d_t | d_{t+1}
    for (int t = 0; t + 1 < n; ++t) {
        if (w.d.at(t, t) == 0)
            break;
        for (int s = t + 1; s < n; ++s) {
            if (w.d.at(s, s) % w.d.at(t, t) == 0)
                continue;
            // fold d_ss into position (t,t) and rediagonalize the 2x2 block
            w.col_axpy(t, s, Int(-1));
            for (;;) {
                Int q = w.d.at(s, t) / w.d.at(t, t);
                w.row_axpy(s, t, q);
                if (w.d.at(s, t) == 0)
                    break;
                w.row_swap(t, s);
            }
            Int q2 = w.d.at(t, s) / w.d.at(t, t);
            w.col_axpy(s, t, q2);
            if (w.d.at(t, s) != 0)
                throw std::logic_error("smith: divisibility cleanup failed");
            if (w.d.at(t, t) < 0)
                w.row_negate(t);
            if (w.d.at(s, s) < 0)
                w.row_negate(s);
        }
    }

    SmithResult r;
    r.d = std::move(w.d);
    if (with_transforms) {
        r.u = std::move(w.u);
        r.uinv = std::move(w.uinv);
        r.v = std::move(w.v);
        r.vinv = std::move(w.vinv);
    }
    return r;
}

std::vector<Int> invariant_factors(const IntMat& a)
{
    SmithResult s = smith(a, false);
    std::vector<Int> out;
    int n = std::min(a.rows, a.cols);
    for (int i = 0; i < n; ++i)
        if (s.d.at(i, i) != 0)
            out.push_back(s.d.at(i, i));
    return out;
}

int rank(const IntMat& a)
{
    return static_cast<int>(invariant_factors(a).size());
}

IntMat kernel_basis(const IntMat& a)
{
    if (a.cols == 0)
        return IntMat(a.cols, 0);
    SmithResult s = smith(a);
    int n = std::min(a.rows, a.cols);
    int r = 0;
    while (r < n && s.d.at(r, r) != 0)
        ++r;
    IntMat k(a.cols, a.cols - r);
    for (int j = r; j < a.cols; ++j)
        for (int i = 0; i < a.cols; ++i)
            k.at(i, j - r) = s.v.at(i, j);
    return k;
}

std::optional<std::vector<Int>> solve(const IntMat& a, const std::vector<Int>& b)
{
    if (static_cast<int>(b.size()) != a.rows)
        throw std::invalid_argument("solve: shape mismatch");
    SmithResult s = smith(a);
    std::vector<Int> ub = apply(s.u, b);
    std::vector<Int> y(a.cols, Int(0));
    int n = std::min(a.rows, a.cols);
    for (int i = 0; i < a.rows; ++i) {
        Int di = (i < n) ? s.d.at(i, i) : Int(0);
        if (di == 0) {
            if (ub[i] != 0)
                return std::nullopt;
        }
        else {
            if (ub[i] % di != 0)
                return std::nullopt;
            y[i] = ub[i] / di;
        }
    }
    return apply(s.v, y);
}

std::optional<std::vector<Rational>> solve_rational(const IntMat& a, const std::vector<Int>& b)
{
    if (static_cast<int>(b.size()) != a.rows)
        throw std::invalid_argument("solve_rational: shape mismatch");
    SmithResult s = smith(a);
    std::vector<Int> ub = apply(s.u, b);
    std::vector<Rational> y(a.cols, Rational(0));
    int n = std::min(a.rows, a.cols);
    for (int i = 0; i < a.rows; ++i) {
        Int di = (i < n) ? s.d.at(i, i) : Int(0);
        if (di == 0) {
            if (ub[i] != 0)
                return std::nullopt;
        }
        else {
            y[i] = Rational(ub[i], di);
        }
    }
    std::vector<Rational> x(a.cols, Rational(0));
    for (int i = 0; i < a.cols; ++i) {
        Rational acc = 0;
        for (int j = 0; j < a.cols; ++j)
            if (s.v.at(i, j) != 0 && y[j] != 0)
                acc += Rational(s.v.at(i, j)) * y[j];
        x[i] = acc;
    }
    return x;
}

IntMat lattice_basis(const IntMat& a)
{
    SmithResult s = smith(a);
    int n = std::min(a.rows, a.cols);
    int r = 0;
    while (r < n && s.d.at(r, r) != 0)
        ++r;
    // span(a) = uinv * span(d); d's nonzero columns give an independent basis
    IntMat basis(a.rows, r);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < a.rows; ++i)
            basis.at(i, j) = s.uinv.at(i, j) * s.d.at(j, j);
    return basis;
}

IntMat split_complement(const IntMat& s)
{
    SmithResult f = smith(s);
    int n = std::min(s.rows, s.cols);
    for (int i = 0; i < n; ++i)
        if (abs(f.d.at(i, i)) != 1)
            throw std::invalid_argument("split_complement: matrix is not split injective");
    if (n < s.cols)
        throw std::invalid_argument("split_complement: matrix is not injective");
    IntMat t(s.rows, s.rows - s.cols);
    for (int j = s.cols; j < s.rows; ++j)
        for (int i = 0; i < s.rows; ++i)
            t.at(i, j - s.cols) = f.uinv.at(i, j);
    return t;
}

AbelianInvariants quotient_invariants(int ambient_rank, const IntMat& rel)
{
    if (rel.rows != ambient_rank)
        throw std::invalid_argument("quotient_invariants: shape mismatch");
    std::vector<Int> f = invariant_factors(rel);
    AbelianInvariants inv;
    inv.free_rank = ambient_rank - static_cast<int>(f.size());
    for (const auto& x : f)
        if (x != 1)
            inv.torsion.push_back(x);
    return inv;
}

AbelianInvariants subquotient_invariants(const IntMat& num, const IntMat& den)
{
    if (num.rows != den.rows)
        throw std::invalid_argument("subquotient_invariants: shape mismatch");
    IntMat coeff(num.cols, den.cols);
    for (int j = 0; j < den.cols; ++j) {
        std::vector<Int> col(den.rows);
        for (int i = 0; i < den.rows; ++i)
            col[i] = den.at(i, j);
        auto x = solve(num, col);
        if (!x)
            throw std::invalid_argument("subquotient_invariants: denominator outside numerator");
        for (int i = 0; i < num.cols; ++i)
            coeff.at(i, j) = (*x)[i];
    }
    return quotient_invariants(num.cols, coeff);
}

}  // namespace mstruct
