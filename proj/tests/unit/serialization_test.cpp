#include <gtest/gtest.h>

#include <random>

#include "climakg/errors.hpp"
#include "climakg/store/serialization.hpp"
#include "oracles.hpp"

using namespace climakg;
namespace ct = climakg::testing;
using rdf::Iri;
using rdf::Literal;
using store::Graph;

TEST(NTriples, ParsesEveryTermForm) {
  Graph g;
  const std::size_t n = store::LoadNTriples(g,
      "<http://x/s> <http://x/p> <http://x/o> .\n"
      "_:b1 <http://x/p> \"plain\" .\n"
      "<http://x/s> <http://x/p> \"chat\"@fr .\n"
      "<http://x/s> <http://x/p> \"4.5\"^^<http://www.w3.org/2001/XMLSchema#double> .\n"
      "# comment line\n"
      "\n"
      "<http://x/s> <http://x/q> \"tab\\there \\\"q\\\" \\u00e9\" .\n");
  EXPECT_EQ(n, 5u);
  EXPECT_TRUE(g.Contains(rdf::Triple(Iri("http://x/s"), Iri("http://x/p"),
                                     Literal::Make("4.5", rdf::LiteralType::kDouble))));
  EXPECT_TRUE(g.Contains(rdf::Triple(Iri("http://x/s"), Iri("http://x/q"),
                                     Literal::String("tab\there \"q\" \xc3\xa9"))));
  EXPECT_TRUE(g.Contains(rdf::Triple(rdf::BlankNode("b1"), Iri("http://x/p"),
                                     Literal::String("plain"))));
}

TEST(NTriples, ErrorsAreAtomicAndPositioned) {
  Graph g;
  try {
    store::LoadNTriples(g,
                        "<http://x/s> <http://x/p> <http://x/o> .\n"
                        "<http://x/s> \"lit\" <http://x/o> .\n");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_EQ(g.size(), 0u);
  EXPECT_THROW(store::LoadNTriples(g, "<http://x/s> <http://x/p> <http://x/o>\n"), SyntaxError);
  EXPECT_THROW(store::LoadNTriples(g, "<http://x/s> <http://x/p>\n <http://x/o> .\n"), SyntaxError);
  EXPECT_THROW(store::LoadNTriples(g, "<http://x/s> <http://x/p> \"x\"^^<http://x/unknown> .\n"),
               SyntaxError);
  EXPECT_THROW(store::LoadNTriples(g, "<http://x/s> <http://x/p> \"1.2\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n"),
               SyntaxError);
}

TEST(NTriples, SerializationIsSortedAndDeterministic) {
  Graph a;
  store::LoadNTriples(a,
                      "<http://x/b> <http://x/p> \"2\" .\n"
                      "<http://x/a> <http://x/p> \"1\" .\n");
  const std::string text = store::SerializeNTriples(a);
  EXPECT_EQ(text,
            "<http://x/a> <http://x/p> \"1\" .\n"
            "<http://x/b> <http://x/p> \"2\" .\n");
  Graph b;
  store::LoadNTriples(b, text);
  EXPECT_EQ(store::SerializeNTriples(b), text);
}

TEST(NTriplesProperties, RoundTripRandomGraphs) {
  std::mt19937_64 rng(31);
  auto pool = ct::MakeTermPool(false);
  pool.objects.emplace_back(Literal::String("line\nbreak \"quoted\" back\\slash \xe2\x82\xac"));
  pool.objects.emplace_back(Literal::String("hello", "en-GB"));
  pool.objects.emplace_back(Literal::Double(1e-300));
  for (int round = 0; round < 50; ++round) {
    const Graph g = ct::BuildGraph(ct::RandomTriples(rng, pool, 200));
    Graph back;
    store::LoadNTriples(back, store::SerializeNTriples(g));
    EXPECT_TRUE(back == g) << "round " << round;
  }
}

TEST(Turtle, SupportedSubset) {
  Graph g;
  store::LoadTurtle(g,
                    "@prefix ca: <http://example.org/ca#> .\n"
                    "PREFIX ex: <http://example.org/>\n"
                    "ex:s a ca:Station ;\n"
                    "     ca:name \"Dublin\", \"Dublin Airport\" ;\n"
                    "     ca:lat 53.428 ;\n"
                    "     ca:count 3 ;\n"
                    "     ca:exp 1e2 ;\n"
                    "     ca:neg -6.241 ;\n"
                    "     ca:ok true .\n");
  EXPECT_EQ(g.size(), 8u);
  const Iri s("http://example.org/s");
  EXPECT_TRUE(g.Contains(rdf::Triple(s, Iri(std::string(rdf::kRdfType)),
                                     Iri("http://example.org/ca#Station"))));
  EXPECT_TRUE(g.Contains(rdf::Triple(s, Iri("http://example.org/ca#lat"),
                                     Literal::Make("53.428", rdf::LiteralType::kDouble))));
  EXPECT_TRUE(g.Contains(rdf::Triple(s, Iri("http://example.org/ca#count"), Literal::Integer(3))));
  EXPECT_TRUE(g.Contains(rdf::Triple(s, Iri("http://example.org/ca#neg"),
                                     Literal::Make("-6.241", rdf::LiteralType::kDouble))));
  EXPECT_TRUE(g.Contains(rdf::Triple(s, Iri("http://example.org/ca#ok"), Literal::Boolean(true))));
}

TEST(Turtle, RejectsUnsupportedConstructs) {
  Graph g;
  EXPECT_THROW(store::LoadTurtle(g, "ex:s ex:p ex:o .\n"), UnknownPrefix);
  EXPECT_THROW(store::LoadTurtle(g, "@prefix ex: <http://x/> .\nex:s ex:p ( 1 2 ) .\n"),
               SyntaxError);
  EXPECT_THROW(store::LoadTurtle(g, "@prefix ex: <http://x/> .\nex:s ex:p [ ex:q 1 ] .\n"),
               SyntaxError);
  EXPECT_EQ(g.size(), 0u);
}

TEST(Turtle, AgreesWithNTriplesSerialization) {
  std::mt19937_64 rng(32);
  const auto pool = ct::MakeTermPool(false);
  const Graph g = ct::BuildGraph(ct::RandomTriples(rng, pool, 150));
  Graph back;
  store::LoadTurtle(back, store::SerializeNTriples(g));
  EXPECT_TRUE(back == g);
}
