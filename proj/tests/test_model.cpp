#include <doctest.h>

#include "helpers.hpp"
#include "qlogic/generators.hpp"
#include "qlogic/model.hpp"
#include "qlogic/oracle.hpp"

using namespace testing;

namespace {

const char* kHeader =
    "[logic]\n"
    "elements 0 1 a a' b b'\n"
    "complement a a'\n"
    "complement b b'\n";

std::string with_header(const std::string& body) { return kHeader + body; }

ParseError parse_error(const std::string& text) {
  try {
    parse_model_text(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("parsed");
  return ParseError(ParseErrorKind::Io, 0, "");
}

}  // namespace

TEST_CASE("the shipped fixtures parse and resolve") {
  const ModelFile m = parse_model(fixture("example21.qlm"));
  const Logic logic = resolve_logic(m);
  CHECK(find_isomorphism(*logic, *six()).has_value());
  REQUIRE(m.find_cond("f"));
  REQUIRE(m.find_smap("p"));
  const ConditionalState f = resolve_cond(logic, *m.find_cond("f"));
  CHECK(f(logic->at("b"), logic->at("a'")) == Rational(11, 30));
  const SMap p = resolve_smap(logic, *m.find_smap("p"));
  CHECK(p(logic->at("a"), logic->one()) == q("0.4"));
  CHECK(resolve_observable(logic, *m.find_observable("y")).spectrum() ==
        std::vector<Rational>{Rational(0), Rational(5)});

  const ModelFile printed = parse_model(fixture("example22_printed.qlm"));
  CHECK_THROWS_AS(resolve_smap(resolve_logic(printed), *printed.find_smap("p")), ValidationError);
  const ModelFile corrected = parse_model(fixture("example22_corrected.qlm"));
  CHECK_NOTHROW(resolve_smap(resolve_logic(corrected), *corrected.find_smap("p")));
}

TEST_CASE("print and parse round trip") {
  for (const char* name : {"example21.qlm", "example22_printed.qlm", "example22_corrected.qlm"}) {
    const ModelFile m = parse_model(fixture(name));
    CHECK(parse_model_text(to_text(m)) == m);
  }
  for (const Logic& logic : {gen_mo(3), gen_boolean(3), gen_horizontal_sum({3, 2})}) {
    const SMap p = random_smap(logic, 9);
    ModelFile m;
    m.logic = logic_section(*logic);
    m.smaps.push_back(smap_section("p", p));
    m.conds.push_back(cond_section("f", conditional_from_smap(p)));
    m.states.push_back(state_section("nu", diagonal_state(p)));
    const ModelFile back = parse_model_text(to_text(m));
    CHECK(back == m);
    const Logic again = resolve_logic(back);
    CHECK(find_isomorphism(*again, *logic).has_value());
    CHECK(resolve_smap(again, back.smaps[0]).table() == p.table());
    CHECK(resolve_state(again, back.states[0]).values() == diagonal_state(p).values());
  }
}

TEST_CASE("omitted entries are completed") {
  const ModelFile m = parse_model_text(with_header(
      "[state m]\na = 2/5\na' = 3/5\nb = 0.3\nb' = 0.7\n"
      "[smap p]\n"
      "a , a = 0.4\na , a' = 0\na , b = 0.12\na , b' = 0.28\n"
      "a' , a = 0\na' , a' = 0.6\na' , b = 0.18\na' , b' = 0.42\n"
      "b , a = 0.08\nb , a' = 0.22\nb , b = 0.3\nb , b' = 0\n"
      "b' , a = 0.32\nb' , a' = 0.38\nb' , b = 0\nb' , b' = 0.7\n"));
  const Logic logic = resolve_logic(m);
  const State s = resolve_state(logic, m.states[0]);
  CHECK(s(logic->one()) == 1);
  CHECK(s(logic->zero()) == 0);
  const SMap p = resolve_smap(logic, m.smaps[0]);
  CHECK(p(logic->one(), logic->one()) == 1);
  CHECK(p(logic->one(), logic->at("b")) == q("0.3"));
  CHECK(p(logic->at("b"), logic->one()) == q("0.3"));
}

TEST_CASE("conditional sections are closed and completed") {
  const ModelFile m = parse_model_text(with_header("[cond f]\nb | a = 0.2\nb' | a = 0.8\n"));
  const Logic logic = resolve_logic(m);
  // f(a, a) and f(a', a) do not follow from the given entries.
  CHECK_THROWS_AS(resolve_cond(logic, m.conds[0]), Error);

  const ModelFile c2 =
      parse_model_text(with_header("[cond f]\na | a = 0.5\na' | a = 0.5\nb | a = 0.2\nb' | a = 0.8\n"));
  try {
    resolve_cond(logic, c2.conds[0]);
    FAIL("resolved");
  } catch (const ValidationError& e) {
    CHECK(e.violation().rule == Rule::C2);
  }

  const ModelFile ok = parse_model_text(with_header("[cond f]\na | a = 1\na' | a = 0\nb | a = 0.2\nb' | a = 0.8\n"));
  const ConditionalState f = resolve_cond(logic, ok.conds[0]);
  CHECK(f.system().members() == singleton(logic->at("a")));
  CHECK(f(logic->one(), logic->at("a")) == 1);

  // {a, b} closes to {a, a', b, b', 1}; nothing is given for a', b' or 1.
  const ModelFile missing = parse_model_text(
      with_header("[cond f]\na | a = 1\na' | a = 0\nb | a = 0.2\nb' | a = 0.8\n"
                  "a | b = 0.4\na' | b = 0.6\nb | b = 1\nb' | b = 0\n"));
  try {
    resolve_cond(logic, missing.conds[0]);
    FAIL("resolved");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IncompleteTable);
  }
}

TEST_CASE("incomplete tables name the missing entry") {
  const ModelFile m = parse_model_text(with_header("[smap p]\na , a = 0.4\n"));
  const Logic logic = resolve_logic(m);
  try {
    resolve_smap(logic, m.smaps[0]);
    FAIL("resolved");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IncompleteTable);
    CHECK(std::string(e.what()).find("p(") != std::string::npos);
  }
  const ModelFile s = parse_model_text(with_header("[state m]\na = 0.4\n"));
  CHECK_THROWS_AS(resolve_state(logic, s.states[0]), Error);
}

TEST_CASE("parse errors carry kind and line") {
  ParseError e = parse_error("[logic]\nelements 0 1 a b\norder a c\n");
  CHECK(e.kind() == ParseErrorKind::UnknownElement);
  CHECK(e.line() == 3);

  e = parse_error(with_header("[smap p]\n[smap p]\n"));
  CHECK(e.kind() == ParseErrorKind::DuplicateSection);
  CHECK(e.line() == 6);

  CHECK(parse_error("[logic]\n[logic]\n").kind() == ParseErrorKind::DuplicateSection);
  CHECK(parse_error("# nothing\n").kind() == ParseErrorKind::Syntax);
  CHECK(parse_error("a = 1\n[logic]\n").kind() == ParseErrorKind::Syntax);
  CHECK(parse_error("[state m]\n[logic]\n").kind() == ParseErrorKind::Syntax);
  CHECK(parse_error("[logic]\nelements 0 1 a,b\n").kind() == ParseErrorKind::Syntax);
  CHECK(parse_error("[logic]\nelements 0 1 a a\n").kind() == ParseErrorKind::Syntax);
  CHECK(parse_error("[logic]\nsize 4\n").kind() == ParseErrorKind::Syntax);
  CHECK(parse_error(with_header("[matrix m]\n")).kind() == ParseErrorKind::Syntax);
  CHECK(parse_error(with_header("[state]\n")).kind() == ParseErrorKind::Syntax);
  CHECK(parse_error(with_header("[state m\n")).kind() == ParseErrorKind::Syntax);

  e = parse_error(with_header("[state m]\na = 0.4\na = 0.5\n"));
  CHECK(e.kind() == ParseErrorKind::Syntax);
  CHECK(e.line() == 7);

  e = parse_error(with_header("[state m]\na = 2/0\n"));
  CHECK(e.line() == 6);
  CHECK(parse_error(with_header("[state m]\nc = 1\n")).kind() == ParseErrorKind::UnknownElement);
  CHECK(parse_error(with_header("[cond f]\na , b = 1\n")).kind() == ParseErrorKind::Syntax);
  CHECK(parse_error(with_header("[smap p]\na | b = 1\n")).kind() == ParseErrorKind::Syntax);
  CHECK(parse_error(with_header("[observable x]\n1 = a\n")).kind() == ParseErrorKind::Syntax);
  CHECK(parse_error(with_header("[observable x]\n1 -> a\n1.0 -> a'\n")).kind() == ParseErrorKind::Syntax);
}

TEST_CASE("comments, blank lines and CRLF") {
  const ModelFile m = parse_model_text(
      "# header\r\n\r\n[logic]   # section\r\nelements 0 1 a a'  \r\ncomplement a a' # pair\r\n"
      "[observable x]\r\n-1/2 -> a\r\n  0.5 -> a'\r\n");
  REQUIRE(m.observables.size() == 1);
  CHECK(m.observables[0].entries[0].value == Rational(-1, 2));
  CHECK(m.observables[0].line == 6);
  CHECK(m.logic.elements.size() == 4);
}

TEST_CASE("missing files") {
  CHECK_THROWS_AS(parse_model("/nonexistent/model.qlm"), ParseError);
}

TEST_CASE("logic sections list covering pairs and complements") {
  const LogicSection s = logic_section(*gen_boolean(2));
  CHECK(s.order.empty());
  CHECK(s.complements.size() == 1);
  const LogicSection h = logic_section(*gen_horizontal_sum({3}));
  CHECK(h.order.size() == 6);
  CHECK(h.complements.size() == 3);
}
