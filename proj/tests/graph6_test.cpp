#include "distspec/families.hpp"
#include "distspec/graph6.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace distspec;

TEST(Graph6, ParseKnownRecords) {
    // "Bw" is K3: order byte 'B' = 3, data 'w' = 56 = 111000b.
    Graph k3 = parse_graph6("Bw");
    EXPECT_EQ(k3.order(), 3);
    EXPECT_EQ(k3.edge_count(), 3u);

    // "Ch" is P4 with edges {01,12,23}: bits 101001b = 41 = 'h'-63.
    Graph p4 = parse_graph6("Ch");
    EXPECT_EQ(p4, make_path(4));

    // "C~" is K4: all six bits set.
    Graph k4 = parse_graph6("C~");
    EXPECT_EQ(k4, make_complete(4));

    // "A_" is K2: single bit, 100000b = 32 = '_'-63.
    Graph k2 = parse_graph6("A_");
    EXPECT_EQ(k2, make_complete(2));
}

TEST(Graph6, WriteKnownRecords) {
    EXPECT_EQ(write_graph6(make_complete(3)), "Bw");
    EXPECT_EQ(write_graph6(make_path(4)), "Ch");
    EXPECT_EQ(write_graph6(make_complete(2)), "A_");
    EXPECT_EQ(write_graph6(make_complete(4)), "C~");
}

TEST(Graph6, OptionalHeader) {
    EXPECT_EQ(parse_graph6(">>graph6<<Bw"), make_complete(3));
}

TEST(Graph6, ErrorsCarryByteOffset) {
    try {
        parse_graph6("B\x01");
        FAIL() << "expected parse error";
    } catch (const graph6_parse_error& e) {
        EXPECT_EQ(e.offset(), 1u);
    }
    try {
        parse_graph6("B"); // truncated
        FAIL() << "expected parse error";
    } catch (const graph6_parse_error& e) {
        SUCCEED();
    }
    try {
        parse_graph6("Bww"); // trailing characters
        FAIL() << "expected parse error";
    } catch (const graph6_parse_error& e) {
        EXPECT_EQ(e.offset(), 2u);
    }
    // "A" + '|' has padding bits set: only bit 0 is real for n=2.
    try {
        parse_graph6("Ao");
        FAIL() << "expected parse error";
    } catch (const graph6_parse_error& e) {
        EXPECT_EQ(e.offset(), 1u);
    }
    EXPECT_THROW(parse_graph6(""), graph6_parse_error);
    EXPECT_THROW(parse_graph6("~??"), graph6_parse_error); // long form prefix
}

TEST(Graph6, SizeCap) {
    EXPECT_THROW(write_graph6(Graph(63)), unsupported_size_error);
    EXPECT_NO_THROW(write_graph6(make_path(62)));
}

TEST(Graph6, RoundTripRandomGraphs) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 62);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) g.add_edge(u, v);
        EXPECT_EQ(parse_graph6(write_graph6(g)), g);
    }
}

TEST(EdgeList, RoundTrip) {
    Graph g = make_path(6);
    g.add_edge(0, 3);
    std::istringstream in(write_edge_list(g));
    EXPECT_EQ(parse_edge_list(in), g);
}

TEST(EdgeList, Errors) {
    std::istringstream bad("0 zero\n");
    EXPECT_THROW(parse_edge_list(bad), std::runtime_error);
    std::istringstream loop("3 3\n");
    EXPECT_THROW(parse_edge_list(loop), std::runtime_error);
}
