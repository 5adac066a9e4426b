#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "swdual/duality.hpp"
#include "swdual/linalg.hpp"

using namespace swdual;

namespace {

const FieldSpec Q = FieldSpec::rationals();

SparseVec vec(std::vector<std::pair<std::int64_t, long long>> entries, FieldSpec f = Q) {
    SparseVec v;
    for (auto [i, c] : entries) {
        Scalar x = Scalar::of(c, f);
        if (!x.is_zero()) v.emplace_back(i, x);
    }
    return v;
}

TensorSpaceSpec spec_of(int m, int n, int r, int s, FieldSpec f = Q) {
    return TensorSpaceSpec{m, n, r, s, f};
}

} // namespace

TEST_CASE("echelon basis") {
    SUBCASE("insertion, span membership, dimension") {
        SubspaceBasis b(4, Q);
        CHECK(b.insert(vec({{0, 1}, {1, 2}})));
        CHECK(b.insert(vec({{1, 1}, {3, 1}})));
        CHECK_FALSE(b.insert(vec({{0, 2}, {1, 5}, {3, 1}}))); // 2*row1 + row2
        CHECK(b.dim() == 2);
        CHECK(b.contains(vec({{0, 3}, {1, 6}})));
        CHECK_FALSE(b.contains(vec({{2, 1}})));
        CHECK(b.contains({}));
    }
    SUBCASE("rows are in reduced echelon form") {
        SubspaceBasis b(3, Q);
        b.insert(vec({{0, 2}, {1, 2}, {2, 2}}));
        b.insert(vec({{1, 3}, {2, 3}}));
        // pivots are monic and back-eliminated: rows are e0, e1+e2
        REQUIRE(b.dim() == 2);
        CHECK(b.rows()[0] == vec({{0, 1}}));
        CHECK(b.rows()[1] == vec({{1, 1}, {2, 1}}));
    }
    SUBCASE("duplicates collapse over F_2") {
        const FieldSpec f2 = FieldSpec::prime(2);
        SubspaceBasis b(3, f2);
        CHECK(b.insert(vec({{0, 1}, {1, 1}}, f2)));
        CHECK_FALSE(b.insert(vec({{0, 3}, {1, 5}}, f2)));
        CHECK(b.insert(vec({{1, 1}}, f2)));
        CHECK(b.dim() == 2);
    }
    SUBCASE("canonical form is generator-order independent") {
        std::vector<SparseVec> gens = {vec({{0, 1}, {2, 3}}), vec({{1, 2}, {2, 1}}),
                                       vec({{0, 2}, {1, 2}, {2, 7}}), vec({{3, 5}})};
        SubspaceBasis ref = rref(gens, 5, Q);
        std::mt19937 rng(7);
        for (int trial = 0; trial < 6; ++trial) {
            std::shuffle(gens.begin(), gens.end(), rng);
            CHECK(rref(gens, 5, Q) == ref);
            CHECK(subspace_equal(rref(gens, 5, Q), ref));
        }
    }
    SUBCASE("out-of-range coordinates are rejected") {
        SubspaceBasis b(2, Q);
        CHECK_THROWS_AS(b.insert(vec({{2, 1}})), std::invalid_argument);
    }
}

TEST_CASE("containment and equality") {
    SubspaceBasis big = rref({vec({{0, 1}}), vec({{1, 1}}), vec({{2, 1}})}, 4, Q);
    SubspaceBasis small = rref({vec({{0, 1}, {1, -1}}), vec({{2, 4}})}, 4, Q);
    CHECK(subspace_contains(big, small));
    CHECK_FALSE(subspace_contains(small, big));
    CHECK_FALSE(subspace_equal(big, small));
    CHECK(subspace_equal(big, rref({vec({{2, 1}}), vec({{0, 5}, {1, 1}}), vec({{1, 3}})}, 4, Q)));
    SubspaceBasis other(3, Q);
    CHECK_THROWS_AS(subspace_contains(big, other), std::invalid_argument);
}

TEST_CASE("flatten round trip") {
    auto sp = spec_of(2, 0, 1, 1);
    for (const auto& M : {left_matrix_unit(1, 2, sp), right_tau(1, sp),
                          left_matrix_unit(2, 2, sp) * right_tau(1, sp)}) {
        SparseVec v = flatten(M);
        CHECK(unflatten(v, sp.dim(), Q) == M);
        CHECK(std::is_sorted(v.begin(), v.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; }));
    }
    // row-major layout: entry (row, col) of an N x N matrix lands at row*N + col
    OperatorMatrix M(3, Q);
    M.add(1, 2, Scalar::of(5, Q));
    CHECK(flatten(M) == vec({{5, 5}}));
}

TEST_CASE("commutant") {
    SUBCASE("of nothing is everything") {
        CHECK(commutant({}, 3, Q).dim() == 9);
    }
    SUBCASE("of all matrix units is the scalars") {
        std::vector<OperatorMatrix> units;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                OperatorMatrix e(3, Q);
                e.add(i, j, Scalar::one(Q));
                units.push_back(std::move(e));
            }
        SubspaceBasis c = commutant(units, 3, Q);
        CHECK(c.dim() == 1);
        CHECK(c.contains(flatten(OperatorMatrix::identity(3, Q))));
    }
    SUBCASE("of the place transposition on 2 slots") {
        auto sp = spec_of(2, 0, 2, 0);
        SubspaceBasis c = commutant({right_tau(1, sp)}, sp.dim(), Q);
        CHECK(c.dim() == 10); // 6 symmetric-block + 4 from the sign block
        CHECK(c.contains(flatten(left_matrix_unit(1, 2, sp))));
    }
    SUBCASE("contains the identity and is closed under multiplication") {
        auto sp = spec_of(2, 0, 1, 1);
        SubspaceBasis c = commutant(right_generators(sp), sp.dim(), Q);
        CHECK(c.contains(flatten(OperatorMatrix::identity(sp.dim(), Q))));
        for (const auto& u : c.rows())
            for (const auto& v : c.rows())
                CHECK(c.contains(flatten(unflatten(u, sp.dim(), Q) * unflatten(v, sp.dim(), Q))));
    }
    SUBCASE("empty ambient space is rejected") {
        CHECK_THROWS_AS(commutant({}, 0, Q), std::invalid_argument);
    }
}

TEST_CASE("algebra closure") {
    SUBCASE("no generators gives the scalars") {
        CHECK(algebra_closure({}, 3, Q).dim() == 1);
        CHECK(algebra_closure({}, 3, Q, false).dim() == 0);
    }
    SUBCASE("e_12, e_21 generate all of End(V) at m=2, r=1") {
        auto sp = spec_of(2, 0, 1, 0);
        auto a = algebra_closure({left_matrix_unit(1, 2, sp), left_matrix_unit(2, 1, sp)},
                                 sp.dim(), Q);
        CHECK(a.dim() == 4);
    }
    SUBCASE("derivation images at m=2, r=2 span the Schur algebra") {
        auto sp = spec_of(2, 0, 2, 0);
        CHECK(algebra_closure(dist_generators(sp), sp.dim(), Q).dim() == 10);
    }
    SUBCASE("idempotent") {
        auto sp = spec_of(2, 0, 1, 1);
        auto gens = dist_generators(sp);
        SubspaceBasis a = algebra_closure(gens, sp.dim(), Q);
        std::vector<OperatorMatrix> basis_mats;
        for (const auto& v : a.rows()) basis_mats.push_back(unflatten(v, sp.dim(), Q));
        CHECK(algebra_closure(basis_mats, sp.dim(), Q) == a);
    }
    SUBCASE("generator order does not change the canonical basis") {
        auto sp = spec_of(2, 0, 2, 0);
        auto gens = dist_generators(sp);
        SubspaceBasis ref = algebra_closure(gens, sp.dim(), Q);
        std::mt19937 rng(11);
        for (int trial = 0; trial < 4; ++trial) {
            std::shuffle(gens.begin(), gens.end(), rng);
            CHECK(algebra_closure(gens, sp.dim(), Q) == ref);
        }
    }
}

TEST_CASE("double centralizer containments") {
    for (auto [m, n, r, s] : {std::tuple{2, 0, 2, 0}, {2, 0, 1, 1}, {1, 1, 1, 1}}) {
        for (FieldSpec f : {Q, FieldSpec::prime(3)}) {
            auto sp = spec_of(m, n, r, s, f);
            const std::int64_t N = sp.dim();
            SubspaceBasis A = algebra_closure(dist_generators(sp), N, f);
            SubspaceBasis B = commutant(right_generators(sp), N, f);
            SubspaceBasis C = algebra_closure(right_generators(sp), N, f);
            SubspaceBasis D = commutant(dist_generators(sp), N, f);
            CHECK(subspace_contains(B, A));
            CHECK(subspace_contains(D, C));
            // each side commutes with the commutant of the other
            CHECK(subspace_contains(commutant(dist_generators(sp), N, f), C));
        }
    }
}
