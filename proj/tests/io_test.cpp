#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "mqtc/error.hpp"
#include "mqtc/matrix_io.hpp"
#include "mqtc/quartet.hpp"
#include "mqtc/tree_io.hpp"
#include "oracles.hpp"

using namespace mqtc;

namespace {

std::vector<std::string> names_of(int n, const std::string& prefix = "t") {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

DistanceMatrix irrational_matrix(int n, Rng& rng, std::vector<std::string> names) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(static_cast<std::size_t>(n * n), 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double x = u(rng) / 3.0;
      v[static_cast<std::size_t>(i * n + j)] = x;
      v[static_cast<std::size_t>(j * n + i)] = x;
    }
  return DistanceMatrix(static_cast<std::size_t>(n), std::move(v), std::move(names));
}

template <typename Fn>
parse_error catch_parse(Fn&& fn) {
  try {
    fn();
  } catch (const parse_error& e) {
    return e;
  }
  ADD_FAILURE() << "no parse_error thrown";
  return parse_error("none", 0, 0);
}

}  // namespace

TEST(Newick, RoundTrip) {
  Rng rng(61);
  for (int n = 4; n <= 20; ++n) {
    const auto names = names_of(n);
    const Tree t = random_tree(n, rng);
    const std::string text = to_newick(t, names);
    const Tree back = from_newick(text, names);
    EXPECT_TRUE(oracle::same_tree(t, back));
    EXPECT_EQ(to_newick(back, names), text);
  }
}

TEST(Newick, CanonicalText) {
  Rng rng(62);
  const Tree t = random_tree(9, rng);
  std::vector<node_id> perm(7);
  for (int i = 0; i < 7; ++i) perm[static_cast<std::size_t>(i)] = 15 - i;
  EXPECT_EQ(to_newick(t), to_newick(t.relabel_internal(perm)));
  EXPECT_EQ(to_newick(oracle::five_object_optimum()), "(0,1,((2,3),4));");
}

TEST(Newick, ReaderAcceptsCommonVariants) {
  const std::vector<std::string> names{"a", "b", "c", "d", "e"};
  const Tree expected = from_newick("((a,b),(c,d),e);", names);
  for (const char* text :
       {"((a:0.1,b:0.2)x:0.5,(c,d),e);", "(((a,b),(c,d)),e);", "[comment] ((a,b) , ( c , d ),e) ;",
        "(e,((c,d),(b,a)));", "((a,b)[&x=1],(c,d)90,e)root;"}) {
    EXPECT_TRUE(oracle::same_tree(from_newick(text, names), expected)) << text;
  }
  const std::vector<std::string> quoted{"it's", "a b", "c", "d"};
  const Tree q = from_newick("(('it''s','a b'),c,d);", quoted);
  EXPECT_TRUE(q.are_siblings(0, 1));
  EXPECT_TRUE(trees_equal(from_newick(to_newick(q, quoted), quoted), q));
}

TEST(Newick, Errors) {
  const std::vector<std::string> names{"a", "b", "c", "d", "e"};
  EXPECT_THROW(from_newick("((a,b,c),d,e);", names), invalid_node_error);
  EXPECT_THROW(from_newick("(((a),b),(c,d),e);", names), invalid_node_error);
  EXPECT_THROW(from_newick("((a,b),(c,d),f);", names), invalid_label_error);
  EXPECT_THROW(from_newick("((a,b),(c,d),a);", names), invalid_label_error);
  EXPECT_THROW(from_newick("((a,b),c,d);", names), invalid_label_error);
  EXPECT_THROW(from_newick("(a,b,c);", {names.data(), 3}), invalid_size_error);
  const auto e = catch_parse([&] { from_newick("((a,b),\n(c,d,e);", names); });
  EXPECT_EQ(e.line(), 2u);
  EXPECT_THROW(from_newick("((a,b),(c,d),e)", names), parse_error);
  EXPECT_EQ(newick_leaf_names("((x,y),(z,w),v);"),
            (std::vector<std::string>{"x", "y", "z", "w", "v"}));
}

TEST(Dot, NamesInternalNodes) {
  const auto names = names_of(6, "s");
  Rng rng(63);
  const std::string dot = to_dot(random_tree(6, rng), names);
  EXPECT_EQ(dot.rfind("graph", 0), 0u);
  for (const char* k : {"k1", "k2", "k3", "k4"}) EXPECT_NE(dot.find(k), std::string::npos);
  EXPECT_EQ(dot.find("k5"), std::string::npos);
  for (const auto& s : names) EXPECT_NE(dot.find("\"" + s + "\""), std::string::npos);
  // 2n-3 edges.
  std::size_t edges = 0;
  for (std::size_t p = dot.find("--"); p != std::string::npos; p = dot.find("--", p + 2)) ++edges;
  EXPECT_EQ(edges, 9u);
}

TEST(MatrixIo, RoundTripsAtFullPrecision) {
  Rng rng(64);
  for (const auto format : {MatrixFormat::csv, MatrixFormat::phylip, MatrixFormat::nexus}) {
    const auto dm = irrational_matrix(7, rng, names_of(7, "obj"));
    const std::string text = write_matrix(dm, format);
    EXPECT_EQ(detect_matrix_format(text), format);
    const auto back = read_matrix(text, format);
    EXPECT_EQ(back, dm) << to_string(format);
  }
  for (const double x : {0.1, 1.0 / 3.0, 2.0 / 3.0, 1e-300, 123456789.123456789}) {
    EXPECT_EQ(std::stod(format_real(x)), x);
  }
}

TEST(MatrixIo, CsvVariants) {
  const std::string plain = "0,1,2,3\n1,0,4,5\n2,4,0,6\n3,5,6,0\n";
  const auto a = read_matrix(plain, MatrixFormat::csv);
  EXPECT_EQ(a.names(), (std::vector<std::string>{"0", "1", "2", "3"}));
  EXPECT_EQ(a(2, 3), 6.0);
  const auto b = read_matrix(",w,x,y,z\nw,0,1,2,3\nx,1,0,4,5\ny,2,4,0,6\nz,3,5,6,0\n", MatrixFormat::csv);
  EXPECT_EQ(b.names(), (std::vector<std::string>{"w", "x", "y", "z"}));
  EXPECT_EQ(b.values(), a.values());
  const auto c = read_matrix("w,x,y,z\n0,1,2,3\n1,0,4,5\n2,4,0,6\n3,5,6,0\n", MatrixFormat::csv);
  EXPECT_EQ(c.names(), b.names());
  const auto d = read_matrix("w,0,1,2,3\nx,1,0,4,5\ny,2,4,0,6\nz,3,5,6,0\n", MatrixFormat::csv);
  EXPECT_EQ(d.names(), b.names());
  const auto e =
      read_matrix("\"a,1\",0,1,2,3\n\"b\"\"\",1,0,4,5\nc,2,4,0,6\nd,3,5,6,0\n", MatrixFormat::csv);
  EXPECT_EQ(e.names()[0], "a,1");
  EXPECT_EQ(e.names()[1], "b\"");
  const DistanceMatrix numeric_names(4, a.values(), {"10", "20", "30", "40"});
  EXPECT_EQ(read_matrix(write_matrix(numeric_names, MatrixFormat::csv), MatrixFormat::csv),
            numeric_names);
}

TEST(MatrixIo, CsvErrors) {
  const auto e = catch_parse([] {
    read_matrix("0,1,2,3\n1,0,4,5\n2,4,0,x\n3,5,6,0\n", MatrixFormat::csv);
  });
  EXPECT_EQ(e.line(), 3u);
  EXPECT_EQ(e.column(), 7u);
  const auto f = catch_parse([] { read_matrix("0,1,2,3\n1,0,4\n", MatrixFormat::csv); });
  EXPECT_EQ(f.line(), 2u);
  try {
    read_matrix("0,1,2,3\n1,0,4,5\n2,4,0,6\n3,5,7,0\n", MatrixFormat::csv);
    FAIL();
  } catch (const invalid_input_error& err) {
    EXPECT_NE(std::string(err.what()).find("not symmetric"), std::string::npos);
  }
  EXPECT_THROW(read_matrix("0,-1,2,3\n-1,0,4,5\n2,4,0,6\n3,5,6,0\n", MatrixFormat::csv),
               invalid_input_error);
  EXPECT_THROW(read_matrix("1,1,2,3\n1,0,4,5\n2,4,0,6\n3,5,6,0\n", MatrixFormat::csv),
               invalid_input_error);
}

TEST(MatrixIo, Phylip) {
  const std::string text =
      "  4\nalpha 0 1 2 3\nbeta  1 0 4 5\ngamma 2 4\n 0 6\ndelta 3 5 6 0\n";
  EXPECT_EQ(detect_matrix_format(text), MatrixFormat::phylip);
  const auto dm = read_matrix(text, MatrixFormat::phylip);
  EXPECT_EQ(dm.names(), (std::vector<std::string>{"alpha", "beta", "gamma", "delta"}));
  EXPECT_EQ(dm(2, 3), 6.0);
  const auto e = catch_parse([] { read_matrix("4\na 0 1 2 3\nb 1 0 4 5\n", MatrixFormat::phylip); });
  EXPECT_GE(e.line(), 3u);
  const DistanceMatrix spaced(4, dm.values(), {"a b", "c", "d", "e"});
  EXPECT_THROW(write_matrix(spaced, MatrixFormat::phylip), invalid_input_error);
}

TEST(MatrixIo, NexusVariants) {
  const std::string taxa =
      "#NEXUS\nBEGIN TAXA;\n DIMENSIONS NTAX=4;\n TAXLABELS a b c 'd d';\nEND;\n";
  const std::string lower =
      taxa +
      "BEGIN DISTANCES;\n FORMAT TRIANGLE=LOWER DIAGONAL LABELS=LEFT;\n MATRIX\n"
      " a 0\n b 1 0\n c 2 4 0\n 'd d' 3 5 6 0\n ;\nEND;\n";
  const std::string upper_nodiag =
      taxa +
      "BEGIN DISTANCES; [comment]\n FORMAT TRIANGLE=UPPER NODIAGONAL LABELS=NO;\n MATRIX\n"
      " 1 2 3\n 4 5\n 6\n ;\nEND;\n";
  const std::string lower_nodiag =
      "#NEXUS\nBEGIN DISTANCES;\n DIMENSIONS NTAX=4;\n FORMAT TRIANGLE=LOWER NODIAGONAL;\n MATRIX\n"
      " a\n b 1\n c 2 4\n 'd d' 3 5 6\n;\nEND;\n";
  const auto x = read_matrix(lower, MatrixFormat::nexus);
  const auto y = read_matrix(upper_nodiag, MatrixFormat::nexus);
  const auto z = read_matrix(lower_nodiag, MatrixFormat::nexus);
  EXPECT_EQ(x.names(), (std::vector<std::string>{"a", "b", "c", "d d"}));
  EXPECT_EQ(x, y);
  EXPECT_EQ(x, z);
  EXPECT_EQ(x(1, 3), 5.0);
  EXPECT_THROW(read_matrix("#NEXUS\nBEGIN TREES;\nEND;\n", MatrixFormat::nexus), parse_error);
  const auto e = catch_parse([&] {
    read_matrix(taxa + "BEGIN DISTANCES;\n FORMAT TRIANGLE=SIDEWAYS;\nEND;\n", MatrixFormat::nexus);
  });
  EXPECT_EQ(e.line(), 7u);
}

TEST(MatrixIo, FormatNamesAndFiles) {
  EXPECT_EQ(parse_matrix_format("phylip"), MatrixFormat::phylip);
  EXPECT_FALSE(parse_matrix_format("xml").has_value());
  EXPECT_EQ(detect_matrix_format("a,b\n"), MatrixFormat::csv);
  const auto dir = std::filesystem::temp_directory_path() / "mqtc_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "m.phy";
  Rng rng(65);
  const auto dm = irrational_matrix(5, rng, names_of(5));
  std::ofstream(path) << write_matrix(dm, MatrixFormat::phylip);
  EXPECT_EQ(read_matrix_file(path), dm);
  EXPECT_THROW(read_matrix_file(dir / "missing.csv"), invalid_input_error);
  std::filesystem::remove_all(dir);
}
