#include "doctest.h"
#include "fixtures.hpp"
#include "olkit/enumerate.hpp"
#include "olkit/functional.hpp"

using namespace olkit;
using namespace fixtures;

namespace {

FunctionTable table(const DomainPtr& d, const OLPtr& A, const std::vector<std::string>& names) {
    FunctionTable f{d, A, {}};
    for (const auto& n : names) f.values.push_back(A->index_of(n));
    return f;
}

}  // namespace

TEST_CASE("pointwise operations") {
    auto A = c2();
    auto X = plain_domain({"1", "2"});
    auto f = table(X, A, {"0", "1"});
    auto g = table(X, A, {"1", "1"});
    CHECK(pointwise_meet(f, g) == f);
    CHECK(pointwise_ortho(f) == table(X, A, {"1", "0"}));
    auto c0 = constant_table(X, A, A->bottom());
    CHECK(pointwise_join(c0, f) == f);
    auto other = plain_domain({"1", "2", "3"});
    CHECK_THROWS_AS(pointwise_meet(f, constant_table(other, A, 0)), input_error);
}

TEST_CASE("diamond is the constant at the join of the range") {
    auto A = c2();
    auto X = plain_domain({"1", "2"});
    CHECK(diamond(table(X, A, {"0", "1"})) == table(X, A, {"1", "1"}));
    auto c0 = constant_table(X, A, A->bottom());
    CHECK(diamond(c0) == c0);

    auto L = o6();
    auto f = table(X, L, {"a", "b"});
    CHECK(diamond(f) == constant_table(X, L, L->index_of("1")));  // a v b = 1 in O6
}

TEST_CASE("j_star compares coordinates outside J") {
    auto d = power_domain({"0", "1"}, {"i", "k"});
    // tuples in odometer order: (0,0) (0,1) (1,0) (1,1)
    REQUIRE(d->names == std::vector<std::string>{"(0,0)", "(0,1)", "(1,0)", "(1,1)"});
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            CHECK(j_star(*d, x, y, 0) == (x == y));
            CHECK(j_star(*d, x, y, 0b11));
        }
    // J = {i}: compare coordinate k only
    CHECK(j_star(*d, 1, 3, 0b01));   // (0,1) vs (1,1)
    CHECK(!j_star(*d, 1, 0, 0b01));  // (0,1) vs (0,0)
}

TEST_CASE("nabla_hat joins over J*-classes") {
    auto A = c2();
    auto d = power_domain({"0", "1"}, {"i", "k"});
    auto f = table(d, A, {"1", "0", "0", "0"});  // indicator of (0,0)
    CHECK(nabla_hat(f, 0) == f);
    CHECK(nabla_hat(f, 0b01) == table(d, A, {"1", "0", "1", "0"}));  // join over i
    CHECK(nabla_hat(f, 0b11) == diamond(f));
    // idempotent class join: nabla_{i} f is independent of {i}
    CHECK(is_independent(nabla_hat(f, 0b01), 0b01));
}

TEST_CASE("independence") {
    auto A = c2();
    auto d = power_domain({"0", "1"}, {"i", "k"});
    auto c1 = constant_table(d, A, A->top());
    for (std::uint32_t m = 0; m < 4; ++m) CHECK(is_independent(c1, m));
    auto f = table(d, A, {"1", "0", "0", "0"});
    CHECK(is_independent(f, 0));
    CHECK(!is_independent(f, 0b01));
    CHECK(!is_independent(f, 0b10));
}

TEST_CASE("full functional monadic over (C2, two points) is B4 with the simple quantifier") {
    auto F = build_full_functional(c2(), {"1", "2"}, FunctionalKind::Monadic);
    CHECK(F.verification.pass());
    CHECK(F.carrier->size() == 4);
    CHECK(is_isomorphic(F.carrier, b4()).has_value());
    // diamond fixes only the constants
    int fixed = 0;
    for (int f = 0; f < 4; ++f)
        if (F.diamond_map[f] == f) ++fixed;
    CHECK(fixed == 2);
    CHECK(F.diamond_map[F.carrier->bottom()] == F.carrier->bottom());
}

TEST_CASE("full functional monadic over a singleton point set is the base itself") {
    auto F = build_full_functional(o6(), {"x"}, FunctionalKind::Monadic);
    CHECK(F.carrier->size() == 6);
    CHECK(is_isomorphic(F.carrier, o6()).has_value());
    for (int f = 0; f < F.carrier->size(); ++f) CHECK(F.diamond_map[f] == f);
}

TEST_CASE("materialization cap") {
    CHECK_THROWS_AS(
        build_full_functional(o6(), {"1", "2", "3", "4", "5", "6"}, FunctionalKind::Monadic),
        cap_error);
}

TEST_CASE("sigma-free polyadic construction over (C2, X=2, I=2)") {
    auto F = build_full_functional(c2(), {"0", "1"}, FunctionalKind::SigmaFreePolyadic,
                                   {"i", "k"});
    CHECK(F.verification.pass());  // includes all 16 subset-pair compositions
    CHECK(F.carrier->size() == 16);
    // diamond agrees with nabla over the full index set
    for (int f = 0; f < 16; ++f) CHECK(F.diamond_map[f] == F.nabla_map(0b11)[f]);
    // coordinatewise quantifiers commute
    const auto& ni = F.nabla_map(0b01);
    const auto& nk = F.nabla_map(0b10);
    for (int f = 0; f < 16; ++f) CHECK(ni[nk[f]] == nk[ni[f]]);
}

TEST_CASE("delta-free kinds verify as families") {
    auto lit = build_full_functional(b4(), {"1", "2"}, FunctionalKind::DeltaFreeLiteral,
                                     {"i", "k"});
    CHECK(lit.verification.pass());
    auto coord = build_full_functional(b4(), {"0", "1"}, FunctionalKind::DeltaFreeCoordinatewise,
                                       {"i", "k"});
    CHECK(coord.verification.pass());
}

TEST_CASE("proof identity: diamond of the complement of a diamond") {
    for (const auto& base : {c2(), b4(), o6()}) {
        auto F = build_full_functional(base, {"1", "2"}, FunctionalKind::Monadic);
        for (int f = 0; f < F.carrier->size(); ++f) {
            int df = F.diamond_map[f];
            int neg = F.carrier->ortho(df);
            CHECK(F.diamond_map[neg] == neg);  // diamond(-diamond f) = -diamond f
        }
    }
}

TEST_CASE("local finiteness of materialized polyadic carriers") {
    auto F = build_full_functional(c2(), {"0", "1"}, FunctionalKind::SigmaFreePolyadic,
                                   {"i", "k"});
    CHECK(check_locally_finite_fun(F).pass());
}

TEST_CASE("functional subalgebra closure") {
    auto F = build_full_functional(c2(), {"1", "2"}, FunctionalKind::Monadic);
    int c0 = F.carrier->bottom(), c1 = F.carrier->top();
    CHECK(check_functional_subalgebra({c0, c1}, F).pass());

    int f01 = F.carrier->index_of("(0,1)");
    REQUIRE(f01 != -1);
    auto r = check_functional_subalgebra({c0, c1, f01}, F);
    CHECK(!r.pass());
    CHECK(r.has("subalgebra-ortho"));

    std::vector<int> all;
    for (int f = 0; f < F.carrier->size(); ++f) all.push_back(f);
    CHECK(check_functional_subalgebra(all, F).pass());
}

TEST_CASE("embed_search finds the Halmos-style witnesses") {
    auto B = b4();

    MonadicOrtholattice simple{B, simple_map(*B)};
    auto w = embed_search(simple, {4, 3});
    REQUIRE(w.has_value());
    CHECK(w->base->size() == 2);
    CHECK(w->points == 2);
    // h(a) = (0,1), h(a') = (1,0) in terms of the canonical base's bounds
    std::string zero = w->base->name(w->base->bottom()), one = w->base->name(w->base->top());
    CHECK(w->algebra->carrier->name(w->embedding.map[B->index_of("a")]) ==
          "(" + zero + "," + one + ")");
    CHECK(w->algebra->carrier->name(w->embedding.map[B->index_of("a'")]) ==
          "(" + one + "," + zero + ")");
    CHECK(check_homomorphism(w->embedding, true).pass());

    MonadicOrtholattice ident{B, identity_map(*B)};
    auto wi = embed_search(ident, {4, 3});
    REQUIRE(wi.has_value());
    CHECK(wi->base->size() == 4);
    CHECK(wi->points == 1);

    auto C = c2();
    MonadicOrtholattice cid{C, identity_map(*C)};
    auto wc = embed_search(cid, {4, 3});
    REQUIRE(wc.has_value());
    CHECK(wc->base->size() == 2);
    CHECK(wc->points == 1);

    CHECK_THROWS_AS(embed_search(simple, {12, 3}), cap_error);
}
