#include <gtest/gtest.h>

#include "test_support.hpp"

namespace polaritylab {
namespace {

std::size_t parse_error_line(const std::string& text) {
  try {
    read_dimacs_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return 0;
}

TEST(ReadDimacs, SingleEdge) { EXPECT_EQ(read_dimacs_graph("p edge 2 1\ne 1 2\n"), complete_graph(2)); }

TEST(ReadDimacs, EdgelessThree) {
  Graph g = read_dimacs_graph("p edge 3 0\n");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(ReadDimacs, CommentsAndBlankLines) {
  Graph g = read_dimacs_graph("c a comment\n\nc another\np edge 3 2\n e 1 2\n\ne 3 2\nc trailing\n");
  EXPECT_EQ(g, path_graph(3));
}

TEST(ReadDimacs, NoTrailingNewline) { EXPECT_EQ(read_dimacs_graph("p edge 2 1\ne 2 1"), complete_graph(2)); }

TEST(ReadDimacs, MalformedHeader) {
  EXPECT_EQ(parse_error_line("c x\np edges 2 1\ne 1 2\n"), 2u);
  EXPECT_EQ(parse_error_line("p edge two 1\n"), 1u);
  EXPECT_EQ(parse_error_line("p edge 2\n"), 1u);
  EXPECT_EQ(parse_error_line("e 1 2\n"), 1u);
  EXPECT_EQ(parse_error_line(""), 0u);
}

TEST(ReadDimacs, EdgeCountMismatch) {
  EXPECT_THROW(read_dimacs_graph("p edge 3 2\ne 1 2\n"), ParseError);
  EXPECT_THROW(read_dimacs_graph("p edge 3 1\ne 1 2\ne 2 3\n"), ParseError);
}

TEST(ReadDimacs, EndpointOutOfRange) {
  EXPECT_EQ(parse_error_line("p edge 3 2\ne 1 2\ne 1 4\n"), 3u);
  EXPECT_EQ(parse_error_line("p edge 3 1\ne 0 2\n"), 2u);
}

TEST(ReadDimacs, SelfLoopAndBadEdgeLine) {
  EXPECT_EQ(parse_error_line("p edge 3 1\ne 2 2\n"), 2u);
  EXPECT_EQ(parse_error_line("p edge 3 1\ne 1 2 3\n"), 2u);
  EXPECT_EQ(parse_error_line("p edge 3 1\ne 1 x\n"), 2u);
}

TEST(ReadDimacs, GarbageAfterEdges) { EXPECT_EQ(parse_error_line("p edge 2 1\ne 1 2\nq 1\n"), 3u); }

TEST(ReadDimacs, ErrorMessageNamesLine) {
  try {
    read_dimacs_graph("p edge 3 1\ne 1 9\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("line 2:", 0), 0u);
  }
}

TEST(WriteDimacs, CanonicalForm) {
  Graph g = make_graph(4, {{3, 1}, {0, 2}, {1, 0}});
  EXPECT_EQ(write_dimacs_graph(g), "c polaritylab graph\np edge 4 3\ne 1 2\ne 1 3\ne 2 4\n");
}

TEST(WriteDimacs, CanonicalisesUnsortedInput) {
  const std::string messy = "c messy\np edge 4 3\ne 4 2\ne 3 1\ne 2 1\n";
  const std::string canonical = write_dimacs_graph(read_dimacs_graph(messy));
  EXPECT_EQ(canonical, "c polaritylab graph\np edge 4 3\ne 1 2\ne 1 3\ne 2 4\n");
  EXPECT_EQ(write_dimacs_graph(read_dimacs_graph(canonical)), canonical);
}

TEST(WriteDimacs, RoundTripRandomGraphs) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_graph(static_cast<std::size_t>(i % 15), 0.35, rng);
    ASSERT_EQ(read_dimacs_graph(write_dimacs_graph(g)), g);
  }
}

TEST(WriteDimacs, RoundTripShippedFiles) {
  for (const char* name : {"q.dimacs", "c5.dimacs", "k4.dimacs", "double_q.dimacs"}) {
    const std::string text = testing::data_file(name);
    ASSERT_FALSE(text.empty()) << name;
    Graph g = read_dimacs_graph(text);
    EXPECT_EQ(read_dimacs_graph(write_dimacs_graph(g)), g) << name;
  }
}

}  // namespace
}  // namespace polaritylab
