#include "tentspec/exact.hpp"

#include <algorithm>
#include <string>

namespace tentspec {

namespace {

using IntRow = std::vector<BigInt>;

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

void remove_content(IntRow& row) {
    BigInt g = 0;
    for (const BigInt& v : row) {
        if (v != 0) g = boost::multiprecision::gcd(g, abs_big(v));
        if (g == 1) return;
    }
    if (g > 1) {
        for (BigInt& v : row) v /= g;
    }
}

IntRow scale_to_integers(const RationalVector& v) {
    BigInt den = 1;
    for (const Rational& x : v) {
        const BigInt d = boost::multiprecision::denominator(x);
        den = den / boost::multiprecision::gcd(den, d) * d;
    }
    IntRow out;
    out.reserve(v.size());
    for (const Rational& x : v) {
        out.push_back(boost::multiprecision::numerator(x) * (den / boost::multiprecision::denominator(x)));
    }
    return out;
}

struct Echelon {
    std::vector<IntRow> rows;
    std::vector<std::size_t> pivots;
};

// Fraction-free reduction to a scaled reduced row echelon form: every pivot
// column is zero outside its pivot row, rows have unit content.
Echelon reduce(std::vector<IntRow> rows, std::size_t ncols) {
    Echelon e;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        const BigInt piv = rows[r][c];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const BigInt f = rows[i][c];
            for (std::size_t k = 0; k < ncols; ++k) rows[i][k] = piv * rows[i][k] - f * rows[r][k];
            remove_content(rows[i]);
        }
        remove_content(rows[r]);
        e.pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    e.rows = std::move(rows);
    return e;
}

std::vector<IntRow> matrix_rows(const ExactMatrix& m) {
    std::vector<IntRow> rows(m.rows(), IntRow(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return rows;
}

void require_square(const ExactMatrix& m, const char* what) {
    if (!m.is_square()) throw DimensionMismatch(std::string(what) + ": matrix must be square");
}

} // namespace

ExactMatrix flip_matrix(std::size_t size) {
    ExactMatrix j(size, size);
    for (std::size_t i = 0; i < size; ++i) j(size - 1 - i, i) = 1;
    return j;
}

ExactMatrix mat_poly_apply(const IntPolynomial& p, const ExactMatrix& m) {
    require_square(m, "mat_poly_apply");
    const std::size_t n = m.rows();
    ExactMatrix acc(n, n);
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * m;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
    }
    return acc;
}

bool verify_pair_identity(const ExactMatrix& a, const ExactMatrix& j, unsigned n) {
    require_square(a, "verify_pair_identity");
    require_square(j, "verify_pair_identity");
    if (a.rows() != j.rows()) throw DimensionMismatch("verify_pair_identity: A and J differ in size");
    if (!(a * j == j * a)) return false;
    const ExactMatrix an = matrix_power(a, n);
    const ExactMatrix h = an * a - BigInt(2) * an - BigInt(2) * j;
    return (a * h).is_zero();
}

IntPolynomial local_min_poly(const ExactMatrix& m, const std::vector<BigInt>& v) {
    require_square(m, "local_min_poly");
    if (v.size() != m.cols()) throw DimensionMismatch("local_min_poly: vector length");
    const std::size_t dim = v.size();

    // Invariant: stored[i].w == stored[i].q(M) v, with w zero at all earlier pivots.
    struct Reduced {
        IntRow w;
        IntRow q;
        std::size_t pivot;
    };
    std::vector<Reduced> stored;
    IntRow krylov = v;

    for (std::size_t k = 0; k <= dim; ++k) {
        IntRow w = krylov;
        IntRow q(k + 1);
        q[k] = 1;
        for (const Reduced& s : stored) {
            const BigInt f = w[s.pivot];
            if (f == 0) continue;
            const BigInt a = s.w[s.pivot];
            for (std::size_t t = 0; t < dim; ++t) w[t] = a * w[t] - f * s.w[t];
            for (std::size_t t = 0; t < q.size(); ++t) {
                q[t] = a * q[t] - (t < s.q.size() ? f * s.q[t] : BigInt(0));
            }
            // Joint content removal keeps w == q(M) v.
            BigInt g = 0;
            for (const BigInt& x : w) g = boost::multiprecision::gcd(g, abs_big(x));
            for (const BigInt& x : q) g = boost::multiprecision::gcd(g, abs_big(x));
            if (g > 1) {
                for (BigInt& x : w) x /= g;
                for (BigInt& x : q) x /= g;
            }
        }
        const auto nz = std::find_if(w.begin(), w.end(), [](const BigInt& x) { return x != 0; });
        if (nz == w.end()) return primitive_part(IntPolynomial(std::move(q)));
        const auto pivot = static_cast<std::size_t>(nz - w.begin());
        stored.push_back({std::move(w), std::move(q), pivot});
        krylov = m * krylov;
    }
    throw DomainError("Krylov sequence failed to become dependent");
}

IntPolynomial krylov_min_poly(const ExactMatrix& m) {
    require_square(m, "krylov_min_poly");
    RationalPolynomial acc{1};
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::vector<BigInt> e(m.rows());
        e[j] = 1;
        acc = lcm(acc, to_rational(local_min_poly(m, e)));
    }
    return primitive_part(acc);
}

std::vector<RationalVector> kernel_basis(const ExactMatrix& m) {
    const Echelon e = reduce(matrix_rows(m), m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;

    std::vector<RationalVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RationalVector x(m.cols());
        x[f] = 1;
        for (std::size_t k = 0; k < e.rows.size(); ++k) {
            const std::size_t p = e.pivots[k];
            const BigInt& den = e.rows[k][p];
            x[p] = den < 0 ? Rational(BigInt(e.rows[k][f]), BigInt(-den)) : Rational(BigInt(-e.rows[k][f]), den);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::size_t rank(const std::vector<RationalVector>& vectors) {
    if (vectors.empty()) return 0;
    std::vector<IntRow> rows;
    rows.reserve(vectors.size());
    for (const RationalVector& v : vectors) {
        if (v.size() != vectors.front().size()) throw DimensionMismatch("rank: vectors differ in length");
        rows.push_back(scale_to_integers(v));
    }
    return reduce(std::move(rows), vectors.front().size()).pivots.size();
}

std::size_t rank(const ExactMatrix& m) { return reduce(matrix_rows(m), m.cols()).pivots.size(); }

std::size_t rank(const RationalMatrix& m) {
    std::vector<RationalVector> rows(m.rows(), RationalVector(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return rank(rows);
}

bool in_span(const std::vector<RationalVector>& basis, const RationalVector& v) {
    std::vector<RationalVector> extended = basis;
    extended.push_back(v);
    return rank(extended) == rank(basis);
}

bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b) {
    return std::all_of(b.begin(), b.end(), [&](const RationalVector& v) { return in_span(a, v); }) &&
           std::all_of(a.begin(), a.end(), [&](const RationalVector& v) { return in_span(b, v); });
}

std::vector<RationalVector> column_vectors(const ExactMatrix& m) {
    std::vector<RationalVector> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        RationalVector c(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) c[i] = Rational(m(i, j));
        cols.push_back(std::move(c));
    }
    return cols;
}

RationalVector symmetric_basis_vector(unsigned n, unsigned i) {
    if (i < 1 || i > n + 2) throw DomainError("symmetric basis index out of range");
    RationalVector s(2 * static_cast<std::size_t>(n) + 4);
    s[n + 2 - i] += Rational(1, 2);
    s[n + 1 + i] += Rational(1, 2);
    return s;
}

ExactMatrix symmetric_restriction(const ExactMatrix& a, unsigned n) {
    const std::size_t size = 2 * static_cast<std::size_t>(n) + 4;
    if (!a.is_square() || a.rows() != size) {
        throw DimensionMismatch("symmetric_restriction: matrix must be (2n+4)-square");
    }
    const RationalMatrix ar = to_rational(a);
    ExactMatrix c(n + 2, n + 2);
    for (unsigned i = 1; i <= n + 2; ++i) {
        const RationalVector y = ar * symmetric_basis_vector(n, i);
        for (std::size_t t = 0; t < size; ++t) {
            if (y[t] != y[size - 1 - t]) {
                throw NonIntegralRestriction("A s_i leaves the symmetric subspace");
            }
        }
        for (unsigned k = 1; k <= n + 2; ++k) {
            const Rational coef = 2 * y[n + 1 + k];
            if (boost::multiprecision::denominator(coef) != 1) {
                throw NonIntegralRestriction("restriction has a non-integer coordinate");
            }
            c(k - 1, i - 1) = boost::multiprecision::numerator(coef);
        }
    }
    return c;
}

ExactMatrix inclusion_iota(unsigned n) {
    if (n < 1) throw DomainError("inclusion_iota requires n >= 1");
    // For n >= 2 the refined interval is (kappa, 1/2) = s_2; for n = 1 the
    // split point 1 - kappa_1 lies in (1/2, 1) = s_3.
    const unsigned split = (n == 1) ? 3 : 2;
    ExactMatrix iota(n + 3, n + 2);
    for (unsigned k = 1; k <= n + 2; ++k) {
        const unsigned d = (k <= split) ? k : k + 1;
        iota(d - 1, k - 1) = 1;
        if (k == split) iota(d, k - 1) = 1;
    }
    return iota;
}

std::vector<RationalVector> full_kernel_reference(unsigned n) {
    if (n < 1) throw DomainError("full_kernel_reference requires n >= 1");
    const std::size_t size = 2 * static_cast<std::size_t>(n) + 4;
    RationalVector v(size);
    for (unsigned i = 0; i < n; ++i) v[i] = 1;
    v[n] = -1;
    v[n + 1] = -1;
    RationalVector plus(size), minus(size);
    for (std::size_t i = 0; i < size; ++i) {
        plus[i] = v[i] + v[size - 1 - i];
        minus[i] = v[i] - v[size - 1 - i];
    }
    return {plus, minus};
}

std::vector<RationalVector> folded_kernel_reference(unsigned n) {
    if (n < 1) throw DomainError("folded_kernel_reference requires n >= 1");
    const std::size_t size = n + 3;
    // 0-based index of the interval ending at 1/2.
    const std::size_t p = (n == 1) ? 1 : 2;
    RationalVector shorter(size), longer(size);
    shorter[p] = 1;
    shorter[p + 1] = -1;
    for (std::size_t i = 0; i < p; ++i) longer[i] = 1;
    for (std::size_t i = p + 2; i < size; ++i) longer[i] = -1;
    return {shorter, longer};
}

bool verify_intertwine(const ExactMatrix& b, const ExactMatrix& c, const ExactMatrix& iota) {
    if (!b.is_square() || !c.is_square() || iota.rows() != b.rows() || iota.cols() != c.rows()) {
        throw DimensionMismatch("verify_intertwine: incompatible shapes");
    }
    return iota * c == b * iota;
}

} // namespace tentspec
