#include <doctest.h>

#include "tentspec/errors.hpp"
#include "tentspec/exact.hpp"
#include "tentspec/markov.hpp"
#include "tentspec/poly.hpp"

#include <random>

using namespace tentspec;

namespace {

ExactMatrix full_a(unsigned n) { return build_system(n, MapKind::full).adjacency; }
ExactMatrix folded_b(unsigned n) { return build_system(n, MapKind::folded).adjacency; }

// Layout of C_n for n >= 2 (1-based rows/cols).
ExactMatrix layout_c(unsigned n) {
    const unsigned size = n + 2;
    ExactMatrix c(size, size);
    c(0, 1) = 2;
    c(0, 2) = 1;
    c(0, 3) = 1;
    c(1, 1) = 1;
    c(1, 3) = 1;
    for (unsigned k = 3; k < size; ++k) {
        c(k - 1, 1) = 1;
        c(k - 1, k) = 1;
    }
    c(size - 1, 0) = 1;
    c(size - 1, size - 1) = 1;
    return c;
}

// s_k covers the folded intervals lying inside the k-th positive interval of
// the full partition.
ExactMatrix geometric_iota(unsigned n) {
    const double k = solve_kappa(n).kappa;
    const auto full = analytic_partition(n, MapKind::full, k).breakpoints();
    const auto folded = analytic_partition(n, MapKind::folded, k).breakpoints();
    ExactMatrix iota(n + 3, n + 2);
    for (unsigned s = 0; s < n + 2; ++s) {
        const double lo = full[n + 2 + s], hi = full[n + 3 + s];
        for (unsigned d = 0; d < n + 3; ++d) {
            if (folded[d] >= lo - 1e-12 && folded[d + 1] <= hi + 1e-12) iota(d, s) = 1;
        }
    }
    return iota;
}

RationalVector column(const ExactMatrix& m, std::size_t j) {
    RationalVector v;
    for (const BigInt& x : m.column(j)) v.emplace_back(x);
    return v;
}

} // namespace

TEST_CASE("flip matrix") {
    CHECK(flip_matrix(2) == ExactMatrix{{0, 1}, {1, 0}});
    for (std::size_t s = 1; s <= 12; ++s) {
        const ExactMatrix j = flip_matrix(s);
        CHECK(j * j == ExactMatrix::identity(s));
    }
    CHECK_THROWS_AS(flip_matrix(0), DimensionMismatch);
}

TEST_CASE("matrix polynomial evaluation") {
    const ExactMatrix a = full_a(2);
    CHECK(mat_poly_apply(x_poly(), a) == a);
    CHECK(mat_poly_apply(IntPolynomial{3}, a) == BigInt(3) * ExactMatrix::identity(a.rows()));
    CHECK(mat_poly_apply(IntPolynomial{-1, 0, 1}, flip_matrix(7)).is_zero());
    CHECK(mat_poly_apply(IntPolynomial{0, 0, 1}, a) == a * a);
}

TEST_CASE("pair identity") {
    for (unsigned n = 1; n <= 14; ++n) {
        const ExactMatrix a = full_a(n);
        CHECK(verify_pair_identity(a, flip_matrix(a.rows()), n));
        CHECK(mat_poly_apply(min_poly(n), a).is_zero());
    }
    ExactMatrix broken = full_a(1);
    broken(0, 0) = 0;
    CHECK_FALSE(verify_pair_identity(broken, flip_matrix(6), 1));
    CHECK_FALSE(verify_pair_identity(ExactMatrix::identity(6), flip_matrix(6), 1));
    CHECK_FALSE(verify_pair_identity(full_a(2), flip_matrix(8), 3));
}

TEST_CASE("Krylov minimal polynomials") {
    CHECK(krylov_min_poly(ExactMatrix::identity(4)) == IntPolynomial{-1, 1});
    CHECK(krylov_min_poly(flip_matrix(9)) == IntPolynomial{-1, 0, 1});
    CHECK(krylov_min_poly(ExactMatrix{{0, 1}, {0, 0}}) == IntPolynomial{0, 0, 1});
    CHECK_THROWS_AS(krylov_min_poly(ExactMatrix(2, 3)), DimensionMismatch);
    for (unsigned n = 1; n <= 10; ++n) {
        const ExactMatrix a = full_a(n);
        const IntPolynomial m = krylov_min_poly(a);
        CHECK(m == min_poly(n));
        CHECK(m.degree() == static_cast<int>(a.rows()) - 1);
        // Removing any one factor no longer annihilates A_n.
        for (const IntPolynomial& factor : {x_poly(), f_poly(n), g_poly(n)}) {
            CHECK_FALSE(mat_poly_apply(exact_quotient(m, factor), a).is_zero());
        }
        CHECK(krylov_min_poly(folded_b(n)) == x_poly() * f_poly(n));
        CHECK(kernel_basis(a).size() == 2);
        CHECK(kernel_basis(folded_b(n)).size() == 2);
    }
}

TEST_CASE("local minimal polynomial") {
    const ExactMatrix a = full_a(3);
    std::vector<BigInt> e(a.rows());
    e[0] = 1;
    const IntPolynomial p = local_min_poly(a, e);
    CHECK(p.leading() == 1);
    const ExactMatrix pa = mat_poly_apply(p, a);
    const auto col = pa.column(0);
    CHECK(std::all_of(col.begin(), col.end(), [](const BigInt& v) { return v == 0; }));
    CHECK(exact_quotient(min_poly(3), p).degree() == min_poly(3).degree() - p.degree());
}

TEST_CASE("spectral projectors for J") {
    for (std::size_t s : {6u, 9u, 14u}) {
        const RationalMatrix j = to_rational(flip_matrix(s));
        const RationalMatrix i = RationalMatrix::identity(s);
        const RationalMatrix pp = Rational(1, 2) * (i + j);
        const RationalMatrix pm = Rational(1, 2) * (i - j);
        CHECK(pp * pp == pp);
        CHECK(pm * pm == pm);
        CHECK((pp * pm).is_zero());
        CHECK(pp + pm == i);
    }
}

TEST_CASE("kernel of A_n") {
    for (unsigned n = 1; n <= 12; ++n) {
        const ExactMatrix a = full_a(n);
        const auto ker = kernel_basis(a);
        CHECK(same_span(ker, full_kernel_reference(n)));
        for (const RationalVector& v : ker) {
            const RationalVector av = to_rational(a) * v;
            CHECK(std::all_of(av.begin(), av.end(), [](const Rational& x) { return x == 0; }));
        }
    }
    CHECK(kernel_basis(flip_matrix(5)).empty());
}

TEST_CASE("kernel of B_n") {
    for (unsigned n = 1; n <= 12; ++n) CHECK(same_span(kernel_basis(folded_b(n)), folded_kernel_reference(n)));

    // The index-based reading d_3 - d_4, d_1 + d_2 - (d_5 + ... + d_{n+3})
    // does not hold at n = 1.
    RationalVector a(4), b(4);
    a[2] = 1;
    a[3] = -1;
    b[0] = 1;
    b[1] = 1;
    CHECK_FALSE(same_span(kernel_basis(folded_b(1)), {a, b}));
    for (unsigned n = 2; n <= 8; ++n) {
        RationalVector u(n + 3), w(n + 3);
        u[2] = 1;
        u[3] = -1;
        w[0] = 1;
        w[1] = 1;
        for (unsigned i = 4; i < n + 3; ++i) w[i] = -1;
        CHECK(same_span(kernel_basis(folded_b(n)), {u, w}));
    }
}

TEST_CASE("rank and span helpers") {
    CHECK(rank(ExactMatrix::identity(5)) == 5);
    CHECK(rank(ExactMatrix{{1, 2}, {2, 4}}) == 1);
    const RationalVector e0 = unit_vector(3, 0), e1 = unit_vector(3, 1);
    RationalVector sum(3);
    sum[0] = 1;
    sum[1] = 1;
    CHECK(in_span({e0, e1}, sum));
    CHECK_FALSE(in_span({e0, e1}, unit_vector(3, 2)));
    CHECK(same_span({e0, e1}, {sum, e1}));
    CHECK_FALSE(same_span({e0}, {e0, e1}));
    CHECK(rank(std::vector<RationalVector>{e0, sum, e1}) == 2);
}

TEST_CASE("restriction to the symmetric subspace") {
    for (unsigned n = 1; n <= 10; ++n) {
        const ExactMatrix c = symmetric_restriction(full_a(n), n);
        CHECK(c.rows() == n + 2);
        if (n >= 2) CHECK(c == layout_c(n));
        CHECK(krylov_min_poly(c) == x_poly() * f_poly(n));
        CHECK(mat_poly_apply(x_poly() * f_poly(n), c).is_zero());
        // C^{n+2} - 2C^{n+1} - 2C = 0.
        const ExactMatrix lhs = matrix_power(c, n + 2) - BigInt(2) * matrix_power(c, n + 1) - BigInt(2) * c;
        CHECK(lhs.is_zero());
    }
    CHECK(symmetric_restriction(ExactMatrix::identity(6), 1) == ExactMatrix::identity(3));
    ExactMatrix e(6, 6);
    e(0, 0) = 1;
    CHECK_THROWS_AS(symmetric_restriction(e, 1), NonIntegralRestriction);
    CHECK_THROWS_AS(symmetric_restriction(full_a(2), 1), DimensionMismatch);
}

TEST_CASE("inclusion iota") {
    const ExactMatrix i4 = inclusion_iota(4);
    ExactMatrix expect(7, 6);
    expect(0, 0) = 1;
    expect(1, 1) = 1;
    expect(2, 1) = 1;
    for (unsigned k = 3; k <= 6; ++k) expect(k, k - 1) = 1;
    CHECK(i4 == expect);

    for (unsigned n = 1; n <= 12; ++n) {
        const ExactMatrix iota = inclusion_iota(n);
        CHECK(iota == geometric_iota(n));
        CHECK(verify_intertwine(folded_b(n), symmetric_restriction(full_a(n), n), iota));
        CHECK(rank(iota) == n + 2);
        RationalVector d(n + 3);
        d[2] = 1;
        d[3] = -1;
        std::vector<RationalVector> cols;
        for (std::size_t j = 0; j < iota.cols(); ++j) cols.push_back(column(iota, j));
        CHECK_FALSE(in_span(cols, d));
    }

    // Splitting s_2 at n = 1 breaks the intertwining.
    ExactMatrix literal(4, 3);
    literal(0, 0) = 1;
    literal(1, 1) = 1;
    literal(2, 1) = 1;
    literal(3, 2) = 1;
    CHECK_FALSE(verify_intertwine(folded_b(1), symmetric_restriction(full_a(1), 1), literal));
    CHECK(inclusion_iota(1)(2, 2) == 1);
    CHECK(inclusion_iota(1)(3, 2) == 1);
}

TEST_CASE("intertwining checks") {
    ExactMatrix b = folded_b(3);
    const ExactMatrix c = symmetric_restriction(full_a(3), 3);
    b(0, 0) += 1;
    CHECK_FALSE(verify_intertwine(b, c, inclusion_iota(3)));
    CHECK(verify_intertwine(ExactMatrix::identity(4), ExactMatrix::identity(4), ExactMatrix::identity(4)));
    CHECK_THROWS_AS(verify_intertwine(folded_b(3), c, inclusion_iota(2)), DimensionMismatch);
}

TEST_CASE("random matrices satisfy their Krylov polynomial") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t s = 2 + trial % 6;
        ExactMatrix m(s, s);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) m(i, j) = entry(rng);
        const IntPolynomial p = krylov_min_poly(m);
        CHECK(p.leading() == 1);
        CHECK(mat_poly_apply(p, m).is_zero());
        CHECK(p.degree() <= static_cast<int>(s));
        CHECK(kernel_basis(m).size() + rank(m) == s);
    }
}
