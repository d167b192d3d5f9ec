#include <filesystem>
#include <random>
#include <sstream>

#include "blockset/error.hpp"
#include "blockset/io.hpp"
#include "doctest.h"

using namespace blockset;

namespace {

BlockLanguage random_lang(std::mt19937_64& rng, std::uint32_t k, std::size_t ell) {
  for (;;) {
    BitSeq bits(block_size(k, ell));
    for (std::size_t i = 0; i < bits.size(); ++i) bits.set(i, rng() & 1U);
    if (!bits.none()) return BlockLanguage(Alphabet(k), ell, std::move(bits));
  }
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("language JSON round trip") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 30; ++round) {
    const BlockLanguage lang = random_lang(rng, 1 + rng() % 3, 1 + rng() % 3);
    const Json j = language_to_json(lang);
    CHECK(j["bitmap"].get<std::string>() == lang.bits().to_string());
    CHECK(language_from_json(Json::parse(j.dump())) == lang);
  }
  CHECK(kind_of([] { language_from_json(Json::parse(R"({"k":2,"ell":2,"bitmap":"101"})")); }) == ErrorKind::LengthMismatch);
  CHECK(kind_of([] { language_from_json(Json::parse(R"({"k":2,"bitmap":"1010"})")); }) == ErrorKind::Parse);
  CHECK_THROWS_AS(language_from_json(Json::parse(R"({"k":2,"ell":2,"bitmap":"10x0"})")), Error);
}

TEST_CASE("word lists") {
  std::istringstream in("abab\n\naaaa\nbbbb\n");
  const BlockLanguage lang = read_word_list(in, 2);
  CHECK(lang.ell() == 4);
  CHECK(lang.word_count() == 3);
  CHECK(lang.contains(Alphabet(2).parse("abab")));

  std::istringstream mixed("ab\naba\n");
  CHECK(kind_of([&] { read_word_list(mixed, 2); }) == ErrorKind::LengthMismatch);
  std::istringstream empty("\n\n");
  CHECK(kind_of([&] { read_word_list(empty, 2); }) == ErrorKind::Parse);
  std::istringstream bad("abc\n");
  CHECK_THROWS_AS(read_word_list(bad, 2), Error);
}

TEST_CASE("automaton JSON round trip") {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 30; ++round) {
    const BlockLanguage lang = random_lang(rng, 1 + rng() % 3, 1 + rng() % 4);
    const RankedDFA dfa = min_dfa_from_bitmap(lang);
    const Json dj = automaton_to_json(dfa);
    const RankedDFA back = ranked_dfa_from_json(Json::parse(dj.dump()));
    CHECK(back == dfa);
    const RankedNFA nfa = min_nfa_from_bitmap(lang);
    const RankedNFA nback = ranked_nfa_from_json(automaton_to_json(nfa));
    CHECK(nback.state_count() == nfa.state_count());
    CHECK(enumerate_language(nback) == lang);
  }
  const BlockLanguage full = full_language(2, 3);
  const Json j = automaton_to_json(min_dfa_from_bitmap(full));
  CHECK(j["states"].size() == 5);
  CHECK_THROWS_AS(ranked_dfa_from_json(Json::parse(R"({"k":2})")), Error);
}

TEST_CASE("DOT output") {
  const BlockLanguage lang(Alphabet(2), 2, BitSeq::from_string("1001"));
  const RankedDFA dfa = min_dfa_from_bitmap(lang);
  const std::string dot = to_dot(dfa);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("rank=same") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot.find("qdead") == std::string::npos);
  CHECK(to_dot(dfa, true).find("qdead") != std::string::npos);
  CHECK(to_dot(min_nfa_from_bitmap(lang)).find("digraph") != std::string::npos);
  CHECK(to_dot(star(lang)).find("digraph") != std::string::npos);
}

TEST_CASE("outcome and report JSON") {
  const BlockLanguage ops[] = {witness_E(5)};
  const OpOutcome o = run_op("reverse", ops);
  const Json j = outcome_to_json(o);
  for (const char* key : {"op", "operands", "result", "formula", "relation", "nsc_formula", "nsc_relation",
                          "route_agreement", "dsc_ok", "nsc_ok", "notes"})
    CHECK_MESSAGE(j.contains(key), key);
  CHECK(j["op"] == "reverse");
  CHECK(j["route_agreement"] == true);
  const Json r = report_to_json(measure(witness_E(5)));
  CHECK(r["dsc"] == 20);
  CHECK(r["nsc"] == 14);
  CHECK(report_to_markdown(measure(witness_E(5))).find("20") != std::string::npos);
  const Json b = bound_params_to_json(bound_params(2, 5));
  CHECK(b["max_dsc"] == "20");
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "blockset_test_io";
  std::filesystem::create_directories(dir);
  const auto path = dir / "lang.json";
  write_file(path, language_to_json(witness_E(4)).dump());
  CHECK(read_language_file(path) == witness_E(4));
  write_file(path, "{not json");
  CHECK(kind_of([&] { read_language_file(path); }) == ErrorKind::Parse);
  CHECK(kind_of([&] { read_file(dir / "missing.json"); }) == ErrorKind::Parse);
  CHECK(kind_of([&] { write_file(dir / "no" / "such" / "dir.json", "x"); }) == ErrorKind::Parse);
  std::filesystem::remove_all(dir);
}
