#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bridgewalk/decompose.hpp"
#include "oracles.hpp"

using namespace bridgewalk;

namespace {

std::vector<long> to_longs(const CountTable& t) {
    std::vector<long> v;
    for (const auto& c : t.counts) v.push_back(c.get_si());
    return v;
}

}  // namespace

TEST_CASE("z1: two rays, one bridge") {
    LatticeModel z1(1);
    LatticeVertex o{};
    CHECK(to_longs(count_walks(z1, o, WalkClass::Saw, 6)) ==
          std::vector<long>{1, 2, 2, 2, 2, 2, 2});
    CHECK(to_longs(count_walks(z1, o, WalkClass::Bridge, 6)) ==
          std::vector<long>{1, 1, 1, 1, 1, 1, 1});
    CHECK(to_longs(count_walks(z1, o, WalkClass::ReversedBridge, 6)) ==
          std::vector<long>{1, 1, 1, 1, 1, 1, 1});
    CHECK(to_longs(count_walks(z1, o, WalkClass::Hsw, 6)) ==
          std::vector<long>{1, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("z2: SAW counts match the frozen series and the oracle") {
    LatticeModel z2(2);
    LatticeVertex o{};
    auto saw = count_walks(z2, o, WalkClass::Saw, 6);
    CHECK(to_longs(saw) == std::vector<long>{1, 4, 12, 36, 100, 284, 780});

    auto en = oracle::z2_oracle();
    for (int n = 0; n <= 5; ++n) {
        auto ref = oracle::count_classes(en, {0, 0}, n);
        CHECK(saw.counts[std::size_t(n)] == ref.saw);
        auto hsw = count_walks(z2, o, WalkClass::Hsw, n);
        CHECK(hsw.counts[std::size_t(n)] == ref.hsw);
        auto spans = count_bridges_by_span(z2, o, false, n);
        for (auto& [a, k] : ref.bridge_by_span) CHECK(spans.at(n, a) == k);
        CHECK(spans.row_total(n) == [&] {
            long t = 0;
            for (auto& [a, k] : ref.bridge_by_span) t += k;
            return t;
        }());
    }
}

TEST_CASE("t3: geometric growth and monotone bridges") {
    Tree3Model t3;
    TreeVertex o{};
    CHECK(to_longs(count_walks(t3, o, WalkClass::Saw, 6)) ==
          std::vector<long>{1, 3, 6, 12, 24, 48, 96});
    CHECK(to_longs(count_walks(t3, o, WalkClass::Hsw, 6)) ==
          std::vector<long>{1, 2, 4, 8, 16, 32, 64});
    // every bridge descends straight into the tree: 2^n of span exactly n
    auto spans = count_bridges_by_span(t3, o, false, 5);
    for (int n = 1; n <= 5; ++n) {
        CHECK(spans.at(n, n) == BigInt(1) << unsigned(n));
        CHECK(spans.row_total(n) == BigInt(1) << unsigned(n));
    }
    // exactly one reversed bridge: the ancestor path
    CHECK(to_longs(count_walks(t3, o, WalkClass::ReversedBridge, 5)) ==
          std::vector<long>{1, 1, 1, 1, 1, 1});
}

TEST_CASE("gp: all classes match the string oracle") {
    GrandparentModel gp;
    TreeVertex o{};
    auto en = oracle::gp_oracle();
    for (int n = 0; n <= 4; ++n) {
        auto ref = oracle::count_classes(en, oracle::gp_oracle_root(n), n);
        CHECK(count_walks(gp, o, WalkClass::Saw, n).counts[std::size_t(n)] == ref.saw);
        CHECK(count_walks(gp, o, WalkClass::Hsw, n).counts[std::size_t(n)] == ref.hsw);
        CHECK(count_walks(gp, o, WalkClass::ReversedHsw, n).counts[std::size_t(n)] ==
              ref.rhsw);
        auto fwd = count_bridges_by_span(gp, o, false, n);
        auto rev = count_bridges_by_span(gp, o, true, n);
        long fwd_total = 0, rev_total = 0;
        for (auto& [a, k] : ref.bridge_by_span) {
            CHECK(fwd.at(n, a) == k);
            fwd_total += k;
        }
        for (auto& [a, k] : ref.rbridge_by_span) {
            CHECK(rev.at(n, a) == k);
            rev_total += k;
        }
        CHECK(fwd.row_total(n) == fwd_total);
        CHECK(rev.row_total(n) == rev_total);
    }
}

TEST_CASE("gp: frozen small counts") {
    GrandparentModel gp;
    TreeVertex o{};
    CHECK(to_longs(count_walks(gp, o, WalkClass::Saw, 5)) ==
          std::vector<long>{1, 8, 56, 378, 2524, 16810});
    CHECK(to_longs(count_walks(gp, o, WalkClass::Hsw, 5)) ==
          std::vector<long>{1, 6, 40, 268, 1784, 11864});

    auto spans = count_bridges_by_span(gp, o, false, 3);
    CHECK(spans.at(1, 1) == 2);
    CHECK(spans.at(1, 2) == 4);
    CHECK(spans.at(2, 2) == 4);
    CHECK(spans.at(2, 3) == 16);
    CHECK(spans.at(2, 4) == 16);
    CHECK(spans.row_total(2) == 36);  // b_1 * b_1 == b_2 exactly here

    // reversed-bridge base polynomials: span 2 -> x + x^2, span 3 -> 2x^2 + 3x^3 + x^4
    auto rev = count_bridges_by_span(gp, o, true, 4);
    CHECK(rev.at(1, 2) == 1);
    CHECK(rev.at(2, 2) == 1);
    CHECK(rev.at(2, 3) == 2);
    CHECK(rev.at(3, 3) == 3);
    CHECK(rev.at(4, 3) == 1);
}

TEST_CASE("gp: span cap prunes high bridges but keeps low spans exact") {
    GrandparentModel gp;
    TreeVertex o{};
    auto full = count_bridges_by_span(gp, o, false, 5);
    auto capped = count_bridges_by_span(gp, o, false, 5, {}, 3);
    REQUIRE(capped.span_cap == 3);
    for (int n = 0; n <= 5; ++n) {
        for (int a = 0; a <= 3; ++a) CHECK(capped.at(n, a) == full.at(n, a));
        CHECK(int(capped.rows[std::size_t(n)].size()) <= 4);
    }
}

TEST_CASE("honeycomb: both orbit representatives match the oracle") {
    HoneycombModel hc;
    auto en = oracle::honeycomb_oracle();
    for (int orbit = 0; orbit <= 1; ++orbit) {
        BrickVertex rep = hc.orbit_rep(orbit);
        std::pair<int, int> ref_rep{rep.x, rep.y};
        auto saw = count_walks(hc, rep, WalkClass::Saw, 8);
        auto hsw = count_walks(hc, rep, WalkClass::Hsw, 8);
        auto spans = count_bridges_by_span(hc, rep, false, 8);
        for (int n = 0; n <= 8; ++n) {
            auto ref = oracle::count_classes(en, ref_rep, n);
            CHECK(saw.counts[std::size_t(n)] == ref.saw);
            CHECK(hsw.counts[std::size_t(n)] == ref.hsw);
            for (auto& [a, k] : ref.bridge_by_span) CHECK(spans.at(n, a) == k);
        }
    }
    // frozen: the two orbits have identical counts (glide symmetry)
    auto c0 = count_walks(hc, hc.orbit_rep(0), WalkClass::Saw, 8);
    auto c1 = count_walks(hc, hc.orbit_rep(1), WalkClass::Saw, 8);
    CHECK(c0.counts == c1.counts);
    CHECK(to_longs(c0) == std::vector<long>{1, 3, 6, 12, 24, 48, 90, 174, 336});
}

TEST_CASE("signature tallies: sums and the single-piece identity") {
    LatticeModel z2(2);
    LatticeVertex o{};
    for (int n = 1; n <= 5; ++n) {
        auto sigs = count_hsws_by_signature(z2, o, n);
        BigInt total = 0;
        for (auto& [sig, k] : sigs) {
            total += k;
            REQUIRE(!sig.empty());
            for (std::size_t i = 1; i < sig.size(); ++i) CHECK(sig[i] < sig[i - 1]);
        }
        CHECK(total == count_walks(z2, o, WalkClass::Hsw, n).counts[std::size_t(n)]);

        // k = 1 signatures are exactly the bridges of that span
        auto spans = count_bridges_by_span(z2, o, false, n);
        for (int a = 1; a <= n; ++a) {
            auto it = sigs.find({a});
            BigInt got = (it == sigs.end()) ? 0 : it->second;
            CHECK(got == spans.at(n, a));
        }
    }

    // against the oracle's independent signature computation on gp
    GrandparentModel gp;
    auto en = oracle::gp_oracle();
    for (int n = 1; n <= 4; ++n) {
        auto ref = oracle::count_classes(en, oracle::gp_oracle_root(n), n);
        auto got = count_hsws_by_signature(gp, TreeVertex{}, n);
        REQUIRE(got.size() == ref.hsw_signatures.size());
        for (auto& [sig, k] : ref.hsw_signatures) {
            REQUIRE(got.count(sig));
            CHECK(got[sig] == k);
        }
    }
}

TEST_CASE("enumerate_walks: canonical order and abort") {
    LatticeModel z2(2);
    LatticeVertex o{};
    std::vector<std::vector<Label>> seen;
    enumerate_walks<LatticeModel>(z2, o, WalkClass::Saw, 2, [&](const Walk<LatticeModel>& w) {
        seen.push_back(w.steps);
        return true;
    });
    REQUIRE(seen.size() == 12);
    CHECK(seen.front() == std::vector<Label>{0, 0});  // E,E first in label order
    CHECK(std::is_sorted(seen.begin(), seen.end()));  // DFS emits in label order

    int visits = 0;
    bool completed =
        enumerate_walks<LatticeModel>(z2, o, WalkClass::Saw, 2, [&](const Walk<LatticeModel>&) {
            return ++visits < 3;
        });
    CHECK(!completed);
    CHECK(visits == 3);
}

TEST_CASE("worker count does not change results") {
    GrandparentModel gp;
    TreeVertex o{};
    EnumOptions serial{1, {}};
    EnumOptions wide{4, {}};
    auto a = count_walks(gp, o, WalkClass::Saw, 5, serial);
    auto b = count_walks(gp, o, WalkClass::Saw, 5, wide);
    CHECK(a.counts == b.counts);
    auto sa = count_bridges_by_span(gp, o, false, 5, serial);
    auto sb = count_bridges_by_span(gp, o, false, 5, wide);
    CHECK(sa.rows == sb.rows);
}

TEST_CASE("zero budget yields a clean partial table") {
    GrandparentModel gp;
    EnumOptions opts;
    opts.budget_seconds = 0.0;
    auto t = count_walks(gp, TreeVertex{}, WalkClass::Saw, 8, opts);
    CHECK(t.partial);
    CHECK(t.n_complete() < 8);
    CHECK(t.counts[0] == 1);  // completed prefix is still correct
    for (int n = 1; n <= t.n_complete(); ++n)
        CHECK(t.counts[std::size_t(n)] > 0);
}

TEST_CASE("counts respect the degree bound") {
    GrandparentModel gp;
    auto t = count_walks(gp, TreeVertex{}, WalkClass::Saw, 4);
    BigInt bound = 1;
    for (int n = 1; n <= 4; ++n) {
        bound *= (n == 1) ? 8 : 7;
        CHECK(t.counts[std::size_t(n)] <= bound);
    }
}
