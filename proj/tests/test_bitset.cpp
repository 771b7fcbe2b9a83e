#include <catch_amalgamated.hpp>

#include <random>

#include "sct/bitset.hpp"

using sct::BasicVertexSet;
using sct::VertexSet;

TEST_CASE("basic set operations") {
    VertexSet s{3, 1, 7};
    CHECK(s.count() == 3);
    CHECK(s.test(1));
    CHECK(s.test(3));
    CHECK_FALSE(s.test(2));
    CHECK(s.min_label() == 1);
    CHECK(s.max_label() == 7);
    CHECK(s.labels() == std::vector<int>{1, 3, 7});

    s.reset(3);
    CHECK(s.labels() == std::vector<int>{1, 7});

    const VertexSet a{1, 2, 3}, b{2, 3, 4};
    CHECK((a & b) == VertexSet{2, 3});
    CHECK((a | b) == VertexSet{1, 2, 3, 4});
    CHECK((a - b) == VertexSet{1});
    CHECK(a.intersects(b));
    CHECK((a | b).contains(a));
    CHECK_FALSE(a.contains(b));

    CHECK(VertexSet::range(3, 5) == VertexSet{3, 4, 5});
    CHECK(VertexSet::range(5, 3).empty());
}

TEST_CASE("labels across word boundaries") {
    VertexSet s;
    s.set(64);
    s.set(65);
    s.set(1000);
    CHECK(s.count() == 3);
    CHECK(s.labels() == std::vector<int>{64, 65, 1000});
    CHECK(s.next_label(64) == 65);
    CHECK(s.next_label(65) == 1000);
    CHECK(s.next_label(1000) == 0);
    CHECK(s.max_label() == 1000);
}

TEST_CASE("lexicographic comparison of facet sequences") {
    CHECK(VertexSet{1, 2, 3} < VertexSet{1, 2, 4});
    CHECK(VertexSet{1, 2, 4} < VertexSet{1, 3, 4});
    CHECK(VertexSet{1, 2} < VertexSet{1, 2, 3});   // proper prefix first
    CHECK_FALSE(VertexSet{1, 2, 3} < VertexSet{1, 2});
    CHECK(VertexSet{1, 2, 5} < VertexSet{1, 3});
    CHECK(VertexSet::lex_compare(VertexSet{2, 70}, VertexSet{2, 70}) == 0);
    CHECK(VertexSet{2, 70} < VertexSet{2, 71});
}

TEST_CASE("lex order matches label-vector comparison on random sets") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> label(1, 130), sz(0, 6);
    for (int rep = 0; rep < 2000; ++rep) {
        VertexSet a, b;
        for (int i = sz(rng); i > 0; --i) a.set(label(rng));
        for (int i = sz(rng); i > 0; --i) b.set(label(rng));
        const auto la = a.labels(), lb = b.labels();
        const bool expect = std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end());
        CHECK((a < b) == expect);
    }
}

TEST_CASE("narrow word budget behaves identically") {
    using Small = BasicVertexSet<1>;
    Small s{1, 64};
    CHECK(s.count() == 2);
    CHECK(s.max_label() == 64);
    CHECK(Small::capacity() == 64);
    CHECK((Small{1, 2} < Small{1, 3}));
}
