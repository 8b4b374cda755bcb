#include <gtest/gtest.h>

#include <random>
#include <set>

#include "climakg/ca/mapping.hpp"
#include "climakg/errors.hpp"
#include "climakg/sparql/evaluator.hpp"
#include "climakg/sparql/parser.hpp"
#include "oracles.hpp"

using namespace climakg;
namespace ct = climakg::testing;
using ca::DatatypeCode;

TEST(Vocabulary, IriLayout) {
  ca::Vocabulary v("http://example.org/climakg");
  EXPECT_EQ(v.station_class().str(), "http://example.org/climakg/ca#Station");
  EXPECT_EQ(v.generated_by().str(), "http://example.org/climakg/ca#generatedBy");
  EXPECT_EQ(v.datatype(DatatypeCode::kTavg).str(), "http://example.org/climakg/noaa#TAVG");
  EXPECT_EQ(v.StationIri("GHCND:EI000003969").str(),
            "http://example.org/climakg/station/GHCND_EI000003969");
  EXPECT_EQ(v.CodeOf(v.datatype(DatatypeCode::kWt16)), DatatypeCode::kWt16);
  EXPECT_FALSE(v.CodeOf(rdf::Iri("http://example.org/climakg/noaa#NOPE")));
  const auto props = v.Properties();
  EXPECT_EQ(std::set<rdf::Iri>(props.begin(), props.end()).size(), props.size());
  EXPECT_THROW(ca::Vocabulary("not an iri"), InvalidTerm);
}

TEST(Vocabulary, DatatypeCatalog) {
  for (DatatypeCode c : ca::AllDatatypeCodes()) {
    EXPECT_EQ(ca::ParseDatatypeCode(ca::CodeName(c)), c);
  }
  EXPECT_THROW(ca::ParseDatatypeCode("WT99"), UnknownDatatypeCode);
  EXPECT_TRUE(ca::IsWeatherTypeFlag(DatatypeCode::kWt08));
  EXPECT_FALSE(ca::IsWeatherTypeFlag(DatatypeCode::kPrcp));
  EXPECT_TRUE(ca::IsTemperature(DatatypeCode::kTmin));
}

TEST(Records, Validation) {
  EXPECT_THROW((ca::StationRecord{"", "x", 0, 0}.Validate()), InvalidRecord);
  EXPECT_THROW((ca::StationRecord{"S", "x", 91, 0}.Validate()), InvalidRecord);
  EXPECT_THROW((ca::StationRecord{"S", "x", 0, -180.5}.Validate()), InvalidRecord);
  const Date d = *ParseIsoDate("1990-01-01");
  EXPECT_THROW(ca::MakeObservation("S", d, "WT16", 1.0), InvalidRecord);
  EXPECT_THROW(ca::MakeObservation("S", d, "TAVG", true), InvalidRecord);
  EXPECT_THROW(ca::MakeObservation("S", d, "XYZ", 1.0), UnknownDatatypeCode);
  EXPECT_THROW(ca::MakeObservation("", d, "TAVG", 1.0), InvalidRecord);
}

TEST(Mapping, FiveTriplesEach) {
  ca::Vocabulary v;
  const ca::StationRecord s{"GHCND:EI000003969", "DUBLIN AIRPORT, EI", 53.428, -6.241};
  EXPECT_EQ(ca::StationToTriples(v, s).size(), 5u);
  const auto obs = ca::MakeObservation(s.station_id, *ParseIsoDate("1990-07-01"), "WT16", true);
  const auto triples = ca::ObservationToTriples(v, obs);
  ASSERT_EQ(triples.size(), 5u);
  EXPECT_EQ(triples[0].subject.iri().str(),
            "http://example.org/climakg/obs/GHCND_EI000003969/1990-07-01/WT16");
  EXPECT_EQ(triples[4].object, rdf::Term(rdf::Literal::Boolean(true)));
}

TEST(MappingProperties, CountLawInjectivityAndIntegrity) {
  std::mt19937_64 rng(61);
  ca::Vocabulary v;
  const auto& codes = ca::AllDatatypeCodes();
  for (int round = 0; round < 20; ++round) {
    const int n_stations = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<ca::StationRecord> stations;
    for (int i = 0; i < n_stations; ++i) {
      stations.push_back({"GHCND:ST" + std::to_string(round) + "X" + std::to_string(i),
                          "Station " + std::to_string(i), -10.0 + i, 20.0 - i});
    }
    std::set<std::tuple<std::string, int, int>> keys;
    std::vector<ca::ObservationRecord> obs;
    const int n_obs = std::uniform_int_distribution<int>(0, 300)(rng);
    for (int i = 0; i < n_obs; ++i) {
      const auto& st = stations[std::uniform_int_distribution<int>(0, n_stations - 1)(rng)];
      const int day = std::uniform_int_distribution<int>(1, 60)(rng);
      const int ci = std::uniform_int_distribution<int>(0, static_cast<int>(codes.size()) - 1)(rng);
      if (!keys.insert({st.station_id, day, ci}).second) continue;
      const DatatypeCode code = codes[ci];
      ca::ObservationValue value = 0.0;
      if (ca::IsWeatherTypeFlag(code)) value = true;
      else value = static_cast<double>(i % 17) - 3.5;
      obs.push_back({st.station_id, DateFromDayOfYear(1990, day), code, value});
    }
    store::Graph g;
    const auto counts = ca::MapDataset(v, stations, obs, g);
    EXPECT_EQ(g.size(), 5 * stations.size() + 5 * obs.size());
    EXPECT_EQ(counts.triples_inserted, g.size());

    std::set<std::string> iris;
    for (const auto& o : obs) iris.insert(ca::MintObservationIri(v, o.station_id, o.date, o.code).str());
    EXPECT_EQ(iris.size(), obs.size());

    g.Freeze();
    const auto integrity = sparql::Evaluate(
        sparql::ParseQuery(ct::ReadFile(ct::SourcePath("queries/integrity.rq"))), g);
    EXPECT_EQ(integrity.rows.size(), 0u);
  }
}

TEST(Mapping, IntegrityQueryFindsOrphans) {
  ca::Vocabulary v;
  store::Graph g;
  const auto obs = ca::MakeObservation("GHCND:NOWHERE", *ParseIsoDate("1990-01-01"), "TAVG", 1.0);
  for (const auto& t : ca::ObservationToTriples(v, obs)) g.Insert(t);
  g.Freeze();
  const auto integrity = sparql::Evaluate(
      sparql::ParseQuery(ct::ReadFile(ct::SourcePath("queries/integrity.rq"))), g);
  EXPECT_EQ(integrity.rows.size(), 1u);
}
