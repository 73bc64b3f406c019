#include <gtest/gtest.h>

#include <sstream>

#include "rainbow/error.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/graph_io.hpp"

using namespace rainbow;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidSpec;
}

}  // namespace

TEST(EdgeList, ParsesCommentsAndHeader) {
  std::istringstream in("# a comment\np 5 2\n0 1\n\n3 4  # trailing\n");
  Graph g = read_edge_list(in);
  EXPECT_EQ(g.order(), 5u);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_TRUE(g.adjacent(3, 4));
}

TEST(EdgeList, OrderFromMaxIndex) {
  std::istringstream in("0 1\n1 6\n");
  EXPECT_EQ(read_edge_list(in).order(), 7u);
}

TEST(EdgeList, Malformed) {
  std::istringstream bad("0 1\n1 x\n");
  EXPECT_EQ(code_of([&] { read_edge_list(bad); }), ErrorCode::ParseError);
  std::istringstream loop("2 2\n");
  EXPECT_EQ(code_of([&] { read_edge_list(loop); }), ErrorCode::InvalidEdge);
  std::istringstream range("p 3 1\n0 3\n");
  EXPECT_EQ(code_of([&] { read_edge_list(range); }), ErrorCode::IndexOutOfRange);
}

TEST(EdgeList, RoundTrip) {
  for (const Graph& g : {gen::petersen(), gen::tight_example(2, 3), gen::star(1)}) {
    std::stringstream io;
    write_edge_list(io, g, {"fixture"});
    EXPECT_EQ(read_edge_list(io), g);
  }
}

TEST(ColoringFile, RoundTripAndErrors) {
  Graph c4 = gen::cycle(4);
  EdgeColoring col(c4, {1, 2, 2, 1});
  std::stringstream io;
  write_coloring(io, c4, col);
  EXPECT_EQ(read_coloring(io, c4), col);

  std::istringstream missing("0 1 1\n1 2 2\n2 3 1\n");
  EXPECT_EQ(code_of([&] { read_coloring(missing, c4); }), ErrorCode::ColoringMismatch);
  std::istringstream extra("0 1 1\n1 2 2\n2 3 1\n0 3 2\n0 2 1\n");
  EXPECT_EQ(code_of([&] { read_coloring(extra, c4); }), ErrorCode::ColoringMismatch);
  std::istringstream zero("0 1 0\n1 2 2\n2 3 1\n0 3 2\n");
  EXPECT_EQ(code_of([&] { read_coloring(zero, c4); }), ErrorCode::ParseError);
  std::istringstream junk("0 1 a\n");
  EXPECT_EQ(code_of([&] { read_coloring(junk, c4); }), ErrorCode::ParseError);
}

TEST(ColoringFile, ReversedEndpointsAccepted) {
  Graph c4 = gen::cycle(4);
  std::istringstream in("1 0 1\n2 1 2\n3 2 1\n3 0 2\n");
  EXPECT_EQ(read_coloring(in, c4).colors_used(), 2u);
}
