#include "doctest.h"
#include "fixtures.hpp"
#include "olkit/enumerate.hpp"
#include "olkit/indexset.hpp"
#include "olkit/polyadic.hpp"

using namespace olkit;
using namespace fixtures;

TEST_CASE("finite-cofinite index algebra over omega") {
    auto w = omega_universe();
    auto f0 = IndexSet::fin(w, {"0"});
    auto c0 = IndexSet::cofin(w, {"0"});
    CHECK(iset_union(c0, f0) == IndexSet::cofin(w, {}));  // the whole of omega

    auto c01 = IndexSet::cofin(w, {"0", "1"});
    auto c12 = IndexSet::cofin(w, {"1", "2"});
    CHECK(iset_intersect(c01, c12) == IndexSet::cofin(w, {"0", "1", "2"}));

    auto f34 = IndexSet::fin(w, {"3", "4"});
    auto c3 = IndexSet::cofin(w, {"3"});
    CHECK(iset_difference(f34, c3) == IndexSet::fin(w, {"3"}));

    for (const auto& s : {f0, c0, c01, f34})
        CHECK(iset_complement(iset_complement(s)) == s);

    CHECK_THROWS_AS(IndexSet::fin(w, {"x"}), input_error);
    auto fin_u = finite_universe({"i", "k"});
    CHECK_THROWS_AS(iset_union(f0, IndexSet::fin(fin_u, {"i"})), input_error);
}

TEST_CASE("membership agrees with evaluation on the first naturals plus the tail") {
    auto w = omega_universe();
    auto sets = {IndexSet::fin(w, {"2", "63"}), IndexSet::cofin(w, {"0", "40"}),
                 IndexSet::fin(w, {}), IndexSet::cofin(w, {})};
    for (const auto& s : sets) {
        for (int i = 0; i < 64; ++i) {
            std::string tok = std::to_string(i);
            bool listed = std::find(s.members.begin(), s.members.end(), tok) != s.members.end();
            CHECK(s.contains(tok) == (s.cofinite ? !listed : listed));
        }
        // symbolic tail: membership far beyond any listed index is the shape
        CHECK(s.contains("1000000") == s.cofinite);
        CHECK(s.is_cofinite() == s.cofinite);
    }
}

TEST_CASE("cofinite normalizes away over finite universes") {
    auto u = finite_universe({"i", "k", "l"});
    auto s = IndexSet::cofin(u, {"k"});
    CHECK(!s.cofinite);
    CHECK(s.members == std::vector<std::string>{"i", "l"});
    CHECK(s.is_cofinite());  // every subset of a finite universe counts
    CHECK(IndexSet::all(u).members.size() == 3);
}

namespace {

SigmaFreePolyadic b4_omega_simple() {
    auto B = b4();
    SigmaFreePolyadic P{B, omega_universe(), {}};
    P.generators.emplace_back("0", simple_map(*B));
    P.generators.emplace_back("1", identity_map(*B));
    return P;
}

}  // namespace

TEST_CASE("nabla evaluation through the generators") {
    auto P = b4_omega_simple();
    const auto& B = *P.carrier;
    int a = B.index_of("a");

    CHECK(nabla_eval(P, IndexSet::empty(P.universe), a) == a);
    CHECK(nabla_eval(P, IndexSet::cofin(P.universe, {}), a) == B.top());
    CHECK(nabla_eval(P, IndexSet::fin(P.universe, {"1"}), a) == a);  // identity generator
    CHECK(nabla_eval(P, IndexSet::fin(P.universe, {"5"}), a) == a);  // default identity
    CHECK(nabla_eval(P, IndexSet::cofin(P.universe, {"0"}), a) == a);
}

TEST_CASE("check_sigma_free") {
    CHECK(check_sigma_free(b4_omega_simple()).pass());

    auto B = b4();
    SigmaFreePolyadic two{B, finite_universe({"i", "k"}), {}};
    two.generators.emplace_back("i", simple_map(*B));
    two.generators.emplace_back("k", simple_map(*B));
    auto r = check_sigma_free(two);
    CHECK(r.pass());
    CHECK(!r.notes.empty());  // subset-pair count recorded

    // non-commuting generators break the union condition
    auto L = o6();
    SigmaFreePolyadic bad{L, finite_universe({"i", "k"}), {}};
    bad.generators.emplace_back("i", closed_set_map(*L, {"0", "a", "a'", "1"}));
    bad.generators.emplace_back("k", closed_set_map(*L, {"0", "b", "b'", "1"}));
    CHECK(check_sigma_free(bad).has(law::nabla_union));
}

TEST_CASE("support computation") {
    auto P = b4_omega_simple();
    const auto& B = *P.carrier;

    CHECK(support_of(P, B.index_of("a")) == IndexSet::fin(P.universe, {"0"}));
    CHECK(support_of(P, B.bottom()) == IndexSet::empty(P.universe));
    CHECK(support_of(P, B.top()) == IndexSet::empty(P.universe));

    // no proper subset of the support satisfies the defining equation
    for (int a = 0; a < B.size(); ++a) {
        auto s = support_of(P, a);
        CHECK(nabla_eval(P, iset_complement(s), a) == a);
        for (const auto& dropped : s.members) {
            std::vector<std::string> rest;
            for (const auto& m : s.members)
                if (m != dropped) rest.push_back(m);
            auto smaller = IndexSet::fin(P.universe, rest);
            CHECK(nabla_eval(P, iset_complement(smaller), a) != a);
        }
    }
}

TEST_CASE("correspondence between families and polyadic structures") {
    auto B = b4();

    DeltaFreeCylindric C{B, omega_universe(), {}};
    C.active.emplace_back("0", simple_map(*B));
    auto P = cyl_to_pol(C);
    auto back = pol_to_cyl(P);
    REQUIRE(back.active.size() == C.active.size());
    for (std::size_t i = 0; i < C.active.size(); ++i) {
        CHECK(back.active[i].first == C.active[i].first);
        CHECK(back.active[i].second == C.active[i].second);
    }
    CHECK(roundtrip_check(C).pass());

    // all-identity family: every nabla is the identity
    DeltaFreeCylindric ident{B, finite_universe({"i", "k"}), {}};
    ident.active.emplace_back("i", identity_map(*B));
    ident.active.emplace_back("k", identity_map(*B));
    auto Pi = cyl_to_pol(ident);
    for (int a = 0; a < B->size(); ++a)
        CHECK(nabla_eval(Pi, IndexSet::all(Pi.universe), a) == a);
    CHECK(roundtrip_check(ident).pass());

    // two simple quantifiers at two indices
    DeltaFreeCylindric twin{B, finite_universe({"i", "k"}), {}};
    twin.active.emplace_back("i", simple_map(*B));
    twin.active.emplace_back("k", simple_map(*B));
    CHECK(roundtrip_check(twin).pass());

    // the non-commuting O6 pair is refused
    auto L = o6();
    DeltaFreeCylindric bad{L, finite_universe({"i", "k"}), {}};
    bad.active.emplace_back("i", closed_set_map(*L, {"0", "a", "a'", "1"}));
    bad.active.emplace_back("k", closed_set_map(*L, {"0", "b", "b'", "1"}));
    CHECK_THROWS_AS(cyl_to_pol(bad), input_error);
}

TEST_CASE("roundtrip over enumerated carriers with commuting quantifier pairs") {
    for (int n : {2, 4})
        for (const auto& L : enumerate_ortholattices(n)) {
            auto qs = enumerate_quantifiers(*L);
            for (const auto& e1 : qs)
                for (const auto& e2 : qs) {
                    bool commute = true;
                    for (int a = 0; a < L->size() && commute; ++a)
                        commute = e1[e2[a]] == e2[e1[a]];
                    if (!commute) continue;
                    DeltaFreeCylindric C{L, finite_universe({"i", "k"}), {}};
                    C.active.emplace_back("i", e1);
                    C.active.emplace_back("k", e2);
                    CHECK(roundtrip_check(C).pass());
                }
        }
}

TEST_CASE("explicit nabla tables must be generated") {
    auto B = b4();
    auto u = finite_universe({"i", "k"});

    std::map<std::string, std::vector<int>> tables;
    tables["i"] = simple_map(*B);
    tables["k"] = identity_map(*B);
    tables[""] = identity_map(*B);
    tables["i,k"] = simple_map(*B);  // equals the generated composition
    auto P = from_explicit_tables(B, u, tables);
    CHECK(check_sigma_free(P).pass());

    auto tampered = tables;
    tampered["i,k"] = identity_map(*B);  // not the composition of the singletons
    CHECK_THROWS_AS(from_explicit_tables(B, u, tampered), input_error);

    std::map<std::string, std::vector<int>> missing{{"i", simple_map(*B)}};
    CHECK_THROWS_AS(from_explicit_tables(B, u, missing), input_error);
}
