#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "olkit/enumerate.hpp"

using namespace olkit;
using namespace fixtures;

TEST_CASE("canonical form is relabeling-invariant") {
    auto L = o6();
    auto relabeled = make({"x", "y", "u", "v", "w", "z"},
                          {{"x", "y"}, {"x", "u"}, {"y", "v"}, {"u", "w"}, {"w", "z"}, {"v", "z"}},
                          {{"x", "z"}, {"z", "x"}, {"y", "w"}, {"w", "y"}, {"u", "v"}, {"v", "u"}});
    CHECK(canonical_form(*L) == canonical_form(*relabeled));
    CHECK(canonical_form(*L) != canonical_form(*mo2()));

    auto witness = is_isomorphic(L, relabeled);
    REQUIRE(witness.has_value());
    CHECK(check_homomorphism(*witness, true).pass());
}

TEST_CASE("is_isomorphic distinguishes O6 from MO2 and size mismatches") {
    CHECK(!is_isomorphic(o6(), mo2()).has_value());
    CHECK(!is_isomorphic(c2(), b4()).has_value());
    for (const auto& L : {c2(), b4(), o6(), mo2()})
        CHECK(is_isomorphic(L, L).has_value());  // reflexive
}

TEST_CASE("is_isomorphic is symmetric across enumerated pairs up to size 6") {
    RunConfig cfg;
    std::vector<OLPtr> all;
    for (int n : {2, 4, 6})
        for (const auto& L : enumerate_ortholattices(n, cfg)) all.push_back(L);
    for (const auto& a : all)
        for (const auto& b : all)
            CHECK(is_isomorphic(a, b).has_value() == is_isomorphic(b, a).has_value());
}

TEST_CASE("enumeration counts at small sizes") {
    RunConfig cfg;
    CHECK(enumerate_ortholattices(2, cfg).size() == 1);
    CHECK(enumerate_ortholattices(3, cfg).empty());
    CHECK(enumerate_ortholattices(4, cfg).size() == 1);
    CHECK(enumerate_ortholattices(5, cfg).empty());
    CHECK(enumerate_ortholattices(6, cfg).size() == 2);

    CHECK(is_isomorphic(enumerate_ortholattices(2, cfg)[0], c2()).has_value());
    CHECK(is_isomorphic(enumerate_ortholattices(4, cfg)[0], b4()).has_value());

    auto size6 = enumerate_ortholattices(6, cfg);
    bool has_o6 = false, has_mo2 = false;
    for (const auto& L : size6) {
        if (is_isomorphic(L, o6())) has_o6 = true;
        if (is_isomorphic(L, mo2())) has_mo2 = true;
    }
    CHECK(has_o6);
    CHECK(has_mo2);

    CHECK_THROWS_AS(enumerate_ortholattices(12, cfg), cap_error);
    CHECK_THROWS_AS(enumerate_ortholattices(1, cfg), input_error);
}

TEST_CASE("every enumerated algebra passes the checker and stream is canonical") {
    RunConfig cfg;
    for (int n : {2, 4, 6, 8}) {
        auto list = enumerate_ortholattices(n, cfg);
        std::vector<std::vector<std::uint8_t>> encodings;
        for (const auto& L : list) {
            CHECK(check_ortholattice(*L, cfg).pass());
            encodings.push_back(canonical_form(*L));
        }
        for (std::size_t i = 0; i + 1 < encodings.size(); ++i)
            CHECK(encodings[i] < encodings[i + 1]);  // ascending, hence no duplicates
    }
}

// Independent route: labeled strict orders on the full element set, every
// fixed-point-free involution as complement candidate, laws by direct scans,
// classes counted by pairwise isomorphism.
namespace {

int oracle_class_count(int n) {
    std::vector<OLPtr> reps;
    for (const auto& up : all_strict_orders(n)) {
        // bounded: unique minimum and maximum
        int bot = -1, top = -1;
        for (int i = 0; i < n; ++i) {
            bool least = true, greatest = true;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                if (!((up[i] >> j) & 1)) least = false;
                if (!((up[j] >> i) & 1)) greatest = false;
            }
            if (least) bot = i;
            if (greatest) top = i;
        }
        if (bot == -1 || top == -1) continue;

        std::vector<std::string> names(n);
        for (int i = 0; i < n; ++i) names[i] = "n" + std::to_string(i);
        std::vector<Bitset> rows(n, Bitset(n));
        for (int i = 0; i < n; ++i) {
            rows[i].set(i);
            for (int j = 0; j < n; ++j)
                if ((up[i] >> j) & 1) rows[i].set(j);
        }

        // all fixed-point-free involutions mapping bot<->top
        std::vector<int> ortho(n, -1);
        ortho[bot] = top;
        ortho[top] = bot;
        std::vector<int> rest;
        for (int i = 0; i < n; ++i)
            if (i != bot && i != top) rest.push_back(i);

        std::vector<std::vector<int>> pairings;
        struct Pair {
            static void go(std::vector<int> todo, std::vector<int> acc,
                           std::vector<std::vector<int>>& out) {
                if (todo.empty()) {
                    out.push_back(acc);
                    return;
                }
                int first = todo[0];
                for (std::size_t i = 1; i < todo.size(); ++i) {
                    auto next = todo;
                    next.erase(next.begin() + i);
                    next.erase(next.begin());
                    auto a2 = acc;
                    a2.push_back(first);
                    a2.push_back(todo[i]);
                    go(std::move(next), std::move(a2), out);
                }
            }
        };
        Pair::go(rest, {}, pairings);
        if (rest.empty()) pairings.push_back({});

        for (const auto& p : pairings) {
            auto o = ortho;
            for (std::size_t i = 0; i < p.size(); i += 2) {
                o[p[i]] = p[i + 1];
                o[p[i + 1]] = p[i];
            }
            auto cand = std::make_shared<Ortholattice>(names, rows, o);
            // direct law evaluation
            bool ok = true;
            for (int a = 0; a < n && ok; ++a) {
                if (oracle_glb(*cand, a, o[a]) != bot) ok = false;
                if (oracle_lub(*cand, a, o[a]) != top) ok = false;
                for (int b = 0; b < n && ok; ++b) {
                    if (cand->leq(a, b) && !cand->leq(o[b], o[a])) ok = false;
                    if (oracle_glb(*cand, a, b) == -1 || oracle_lub(*cand, a, b) == -1) ok = false;
                }
            }
            if (!ok) continue;
            bool fresh = true;
            for (const auto& r : reps)
                if (is_isomorphic(r, cand)) fresh = false;
            if (fresh) reps.push_back(cand);
        }
    }
    return static_cast<int>(reps.size());
}

}  // namespace

TEST_CASE("oracle cross-check of the enumeration at sizes 2..6") {
    RunConfig cfg;
    CHECK(oracle_class_count(2) == static_cast<int>(enumerate_ortholattices(2, cfg).size()));
    CHECK(oracle_class_count(3) == 0);
    CHECK(oracle_class_count(4) == static_cast<int>(enumerate_ortholattices(4, cfg).size()));
    CHECK(oracle_class_count(5) == 0);
    CHECK(oracle_class_count(6) == static_cast<int>(enumerate_ortholattices(6, cfg).size()));
}

TEST_CASE("serial and parallel enumeration kernels agree") {
    for (int n : {6, 8}) {
        auto a = enumerate_encodings_serial(n);
        auto b = enumerate_encodings_parallel(n, 4);
        CHECK(a == b);
    }
}
