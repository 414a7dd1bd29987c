#include "doctest.h"

#include <vector>

#include "cyclo/errors.hpp"
#include "cyclo/params.hpp"
#include "cyclo/quiver.hpp"

#include "test_util.hpp"

using namespace cyclo;

namespace {

QuiverData one_vertex() {
    QuiverData q;
    q.nv = 1;
    return q;
}

QuiverData jordan() {
    QuiverData q;
    q.nv = 1;
    q.arrows = {Arrow{0, 0, 1}};
    return q;
}

}  // namespace

TEST_CASE("tits form is symmetric and matches the cyclic Cartan matrix") {
    QuiverData q = cyclic_quiver(3);
    DimVector e0 = {1, 0, 0}, e1 = {0, 1, 0}, delta = {1, 1, 1};
    CHECK(tits_form(q, e0, e0) == 2);
    CHECK(tits_form(q, e0, e1) == -1);
    CHECK(tits_form(q, e1, e0) == -1);
    CHECK(tits_form(q, delta, delta) == 0);
    CHECK(p_of(q, delta) == 1);
    // Bilinearity spot check.
    DimVector v = {2, 1, 0};
    CHECK(tits_form(q, v, delta) == 2 * tits_form(q, e0, delta) + tits_form(q, e1, delta));

    // ell = 2 doubles the arrow count between the two vertices.
    QuiverData q2 = cyclic_quiver(2);
    CHECK(tits_form(q2, {1, 0}, {0, 1}) == -2);
    CHECK(p_of(q2, {1, 1}) == 1);
}

TEST_CASE("loops subtract from the diagonal") {
    QuiverData j = jordan();
    CHECK(tits_form(j, {1}, {1}) == 0);
    CHECK(p_of(j, {1}) == 1);
    CHECK(p_of(j, {2}) == 1);  // (v,v) vanishes identically with one loop

    QuiverData two;
    two.nv = 1;
    two.arrows = {Arrow{0, 0, 2}};
    CHECK(tits_form(two, {1}, {1}) == -2);
    CHECK(p_of(two, {1}) == 2);
    CHECK(p_of(two, {2}) == 5);
}

TEST_CASE("root classification by reflections") {
    QuiverData q1 = one_vertex();
    CHECK(classify_root(q1, {1}) == RootKind::Real);
    CHECK(classify_root(q1, {2}) == RootKind::NotARoot);
    CHECK(classify_root(q1, {0}) == RootKind::NotARoot);
    CHECK(classify_root(q1, {-1}) == RootKind::NotARoot);

    CHECK(classify_root(jordan(), {1}) == RootKind::Imaginary);
    CHECK(classify_root(jordan(), {5}) == RootKind::Imaginary);

    QuiverData c2 = cyclic_quiver(2);
    CHECK(classify_root(c2, {1, 1}) == RootKind::Imaginary);  // delta
    CHECK(classify_root(c2, {2, 1}) == RootKind::Real);       // reflects to (0,1)
    CHECK(classify_root(c2, {2, 2}) == RootKind::Imaginary);  // 2*delta
    CHECK(classify_root(c2, {3, 1}) == RootKind::NotARoot);

    QuiverData c4 = cyclic_quiver(4);
    CHECK(classify_root(c4, {1, 0, 1, 0}) == RootKind::NotARoot);  // disconnected support
    CHECK(classify_root(c4, {1, 1, 0, 0}) == RootKind::Real);

    // Real root family of the cyclic quiver: a*delta + chi_arc.
    for (int len = 1; len <= 2; ++len) {
        for (long long a = 0; a <= 2; ++a) {
            DimVector v(3, a);
            for (int k = 0; k < len; ++k) v[static_cast<std::size_t>(k)] += 1;
            QuiverData c3 = cyclic_quiver(3);
            CHECK(tits_form(c3, v, v) == 2);
            CHECK(classify_root(c3, v) == RootKind::Real);
        }
    }
}

TEST_CASE("framing adds one vertex named inf") {
    QuiverData f = framed(one_vertex(), {3});
    CHECK(f.nv == 2);
    REQUIRE(f.arrows.size() == 1);
    CHECK(f.arrows[0].t == 0);
    CHECK(f.arrows[0].h == 1);
    CHECK(f.arrows[0].mult == 3);
    CHECK(f.names.back() == "inf");
    CHECK(classify_root(f, {1, 1}) == RootKind::Imaginary);
    // p((v-s, 1)) = (w - v + s)(v - s) for the framed one-vertex quiver.
    for (long long v = 0; v <= 4; ++v)
        for (long long w = 1; w <= 6; ++w)
            for (long long s = 0; s <= v; ++s)
                CHECK(p_of(framed(one_vertex(), {w}), {v - s, 1}) == (w - v + s) * (v - s));
}

TEST_CASE("simple-representation existence for framed dimension vectors") {
    QuiverData f3 = framed(one_vertex(), {3});
    std::vector<ExactScalar> zero = {ExactScalar(0), ExactScalar(0)};
    CHECK(cb_simple_exists(f3, zero, {1, 1}));

    QuiverData f1 = framed(one_vertex(), {1});
    CHECK(!cb_simple_exists(f1, zero, {1, 1}));  // real root splits with p = 0

    // Non-orthogonal deformation parameter rules the vector out immediately.
    std::vector<ExactScalar> skew = {ExactScalar(1), ExactScalar(0)};
    CHECK(!cb_simple_exists(f3, skew, {1, 1}));
    // Orthogonal lambda that kills the splitting parts restores existence.
    std::vector<ExactScalar> diag = {ExactScalar(1), ExactScalar(-1)};
    CHECK(cb_simple_exists(f1, diag, {1, 1}));

    CHECK(error_code_of([&] { cb_simple_exists(f3, zero, {14, 1}); }) ==
          cyclo::errc::resource_limit);
}

TEST_CASE("moment map flatness defects") {
    QuiverData q = one_vertex();
    CHECK(moment_flat(q, {1}, {3}));
    CHECK(moment_flat(q, {1}, {1}));
    CHECK(!moment_flat(q, {2}, {1}));
    CHECK(moment_flat(q, {0}, {0}));
    QuiverData c2 = cyclic_quiver(2);
    CHECK(moment_flat(c2, {1, 1}, {1, 0}));
}

TEST_CASE("generic pairs exclude orthogonal subroots") {
    QuiverData q = one_vertex();
    std::vector<ExactScalar> zero = {ExactScalar(0)};
    CHECK(generic_pair(q, {1}, zero, {1}));
    CHECK(!generic_pair(q, {1}, zero, {0}));
    std::vector<ExactScalar> weil = {ExactScalar::kappa()};
    CHECK(generic_pair(q, {1}, weil, {0}));
}

TEST_CASE("rho halves the framing surplus") {
    QuiverData q1 = one_vertex();
    auto r = rho(q1, {2}, {3});
    REQUIRE(r.size() == 1);
    CHECK(r[0] == Rational(3, 2));

    QuiverData c2 = cyclic_quiver(2);
    auto r2 = rho(c2, {4, 4}, {1, 0});
    CHECK(r2[0] == Rational(1, 2));
    CHECK(r2[1] == Rational(0));
}

TEST_CASE("slice of the framed one-vertex quiver reproduces the Grassmannian data") {
    QuiverData q = one_vertex();
    for (long long s = 1; s <= 3; ++s) {
        Decomposition dec;
        dec.v0 = {3 - s};
        dec.parts = {{DimVector{1}, s}};
        SliceQuiver sq = slice(q, {3}, {8}, dec, {ExactScalar(0)});
        REQUIRE(sq.vhat.size() == 1);
        CHECK(sq.vhat[0] == s);
        CHECK(sq.what[0] == 8 - 2 * 3 + 2 * s);
        CHECK(sq.lambda_hat[0] == ExactScalar(3 - s));
        CHECK(sq.quiver.arrows.empty());
    }
    Decomposition bad;
    bad.v0 = {1};
    bad.parts = {{DimVector{1}, 1}};
    CHECK(error_code_of([&] { slice(q, {3}, {8}, bad, {ExactScalar(0)}); }) ==
          cyclo::errc::inconsistent_decomposition);
    Decomposition notroot;
    notroot.v0 = {1};
    notroot.parts = {{DimVector{2}, 1}};
    CHECK(error_code_of([&] { slice(q, {3}, {8}, notroot, {ExactScalar(0)}); }) ==
          cyclo::errc::inconsistent_decomposition);
}

TEST_CASE("cherednik real root v-prime") {
    CHECK(cherednik_vprime(HyperplaneParams{2, 0, 1, 1, 0}) == DimVector{1, 0});
    CHECK(cherednik_vprime(HyperplaneParams{2, 0, 1, 0, 0}) == DimVector{0, 1});
    CHECK(cherednik_vprime(HyperplaneParams{2, 0, 1, -1, 0}) == DimVector{1, 2});
    CHECK(cherednik_vprime(HyperplaneParams{3, 0, 2, 1, 0}) == DimVector{1, 0, 0});
    CHECK(cherednik_vprime(HyperplaneParams{3, 1, 2, -1, 0}) == DimVector{1, 1, 2});

    // Always a real root; its pairing with the classical parameter on the
    // wall is the rational constant sign(m<=0) * k_c / ell.
    for (const HyperplaneParams& hp :
         {HyperplaneParams{2, 0, 1, -2, 0}, HyperplaneParams{2, 0, 1, 0, 1},
          HyperplaneParams{3, 0, 1, 2, 0}, HyperplaneParams{3, 1, 2, 0, -1}}) {
        DimVector vp = cherednik_vprime(hp);
        QuiverData q = cyclic_quiver(hp.ell);
        CHECK(tits_form(q, vp, vp) == 2);
        CHECK(classify_root(q, vp) == RootKind::Real);
        auto lam = lambda_classical(hyperplane_cparams(hp));
        ExactScalar dot(0);
        for (int k = 0; k < hp.ell; ++k) dot += lam[k] * ExactScalar(vp[k]);
        long long eps = hp.m <= 0 ? 1 : -1;
        CHECK(dot == ExactScalar(Rational(eps * hp.k_c(), hp.ell)));
    }
}

TEST_CASE("cherednik decompositions walk s = 0..q") {
    HyperplaneParams hp{2, 0, 1, 0, 1};
    auto decs = cherednik_decompositions(hp, 6);
    REQUIRE(decs.size() == 3);  // q_floor(6, 0) = 2
    CHECK(decs[0].parts.empty());
    CHECK(decs[0].v0 == DimVector{6, 6});
    CHECK(decs[1].v0 == DimVector{6, 5});
    CHECK(decs[2].v0 == DimVector{6, 4});
    CHECK(decs[2].parts.front().second == 2);
}

TEST_CASE("cherednik slice parameter restricts to t - s") {
    HyperplaneParams hp{2, 0, 1, 0, 1};
    auto lam = cherednik_slice_parameter(hp);
    REQUIRE(lam.size() == 2);
    CHECK(lam[0] == ExactScalar::kappa() - ExactScalar(1));
    CHECK(lam[1] == ExactScalar(1));

    HyperplaneParams flip{2, 0, 1, 1, 0};
    auto lam2 = cherednik_slice_parameter(flip);
    CHECK(lam2[0] == ExactScalar(0));
    CHECK(lam2[1] == -ExactScalar::kappa());

    // lambda_pre . v' = t on several walls.
    for (const HyperplaneParams& w :
         {hp, flip, HyperplaneParams{2, 0, 1, -1, 0}, HyperplaneParams{3, 1, 2, 0, -1}}) {
        auto l = cherednik_slice_parameter(w);
        DimVector vp = cherednik_vprime(w);
        ExactScalar dot(0);
        for (int k = 0; k < w.ell; ++k) dot += l[k] * ExactScalar(vp[k]);
        CHECK(dot == ExactScalar(w.t));
    }
}
