#include <doctest.h>

#include "castreg/analyze.hpp"
#include "castreg/error.hpp"
#include "castreg/generators.hpp"
#include "castreg/io.hpp"
#include "support.hpp"

using namespace castreg;

TEST_CASE("pcfg parse and emit") {
  const std::string text =
      "pcfg 1\n"
      "# four points\n"
      "field 7 1\n"
      "ambient 2\n"
      "points 4   # trailing comment\n"
      "1 0 0\n"
      "0 2 0\n"
      "\n"
      "0 0 3\n"
      "1 1 1\n";
  const auto c = parse_pcfg(text);
  CHECK(c.size() == 4);
  CHECK(c.point(1).coords == testing_support::elems({0, 1, 0}));
  const auto canon = emit_pcfg(c);
  CHECK(canon == "pcfg 1\nfield 7 1\nambient 2\npoints 4\n1 0 0\n0 1 0\n0 0 1\n1 1 1\n");
  CHECK(emit_pcfg(parse_pcfg(canon)) == canon);

  const auto ext = gen_f2linear(3, 2, 0, 0, F2Mode::Projective);
  const auto e = emit_pcfg(ext);
  CHECK(e.find("field 2 3 1 1 0 1\n") != std::string::npos);
  CHECK(emit_pcfg(parse_pcfg(e)) == e);
  CHECK(parse_pcfg(e).field().degree() == 3);
}

TEST_CASE("pcfg errors") {
  auto syntax_at = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_pcfg(text);
    } catch (const SyntaxError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(syntax_at("pcfg 1\nfield 7 1\npoints 1\n1 0\n") == std::pair<std::size_t, std::size_t>{3, 1});
  CHECK(syntax_at("pcfg 1\nfield 7 1\nambient 1\npoints 2\n1 0\n0 x\n") == std::pair<std::size_t, std::size_t>{6, 3});
  CHECK(syntax_at("pcfg 1\nfield 7 1\nambient 1\npoints 2\n1 0\n0 1 1\n") == std::pair<std::size_t, std::size_t>{6, 5});
  CHECK(syntax_at("pcfg 2\n").first == 1);
  CHECK(syntax_at("pcfg 1\nfield 7 1\nambient 1\npoints 2\n1 0\n").first == 6);

  auto semantic = [](const std::string& text) {
    try {
      parse_pcfg(text);
    } catch (const Error& e) {
      return e.code() == ErrorCode::SemanticError;
    }
    return false;
  };
  CHECK(semantic("pcfg 1\nfield 6 1\nambient 1\npoints 2\n1 0\n0 1\n"));
  CHECK(semantic("pcfg 1\nfield 7 1\nambient 1\npoints 2\n1 0\n2 0\n"));
  CHECK(semantic("pcfg 1\nfield 7 1\nambient 1\npoints 2\n1 0\n0 7\n"));
  CHECK(semantic("pcfg 1\nfield 2 2 1 0 1\nambient 1\npoints 2\n1 0\n0 1\n"));
}

TEST_CASE("sepcert round trip") {
  const auto pg = gen_f2linear(1, 4, 0, 0, F2Mode::Projective);
  const auto cert = separator_lemma_v1ge3(pg, 3);
  const auto text = emit_sepcert(cert);
  CHECK(text.rfind("sepcert 1\n# method lemma21\npoint 3\n", 0) == 0);
  const auto back = parse_sepcert(text, pg.field());
  CHECK(back == cert);
  CHECK(emit_sepcert(back) == text);
  CHECK_THROWS_AS(parse_sepcert("sepcert 1\npoint 0\ndegree 1\nhyp 1 2\n", pg.field()), Error);
  CHECK_THROWS_AS(parse_sepcert("sepcert 1\npoint 0\n", pg.field()), SyntaxError);
}

TEST_CASE("analysis reports") {
  const Field f = Field::make(101);
  std::vector<CurveParam> ps;
  for (std::uint64_t t = 0; t < 20; ++t) ps.emplace_back(Elem{t});
  const auto r = analyze(gen_rnc(f, 3, ps));
  CHECK(r.equality);
  CHECK(r.rnc_member == true);
  CHECK_FALSE(r.discrepancy);
  CHECK(r.bound == 7);

  const auto pg = analyze(gen_f2linear(1, 4, 0, 0, F2Mode::Projective));
  CHECK_FALSE(pg.equality);
  CHECK(pg.ell_star <= 7);
  CHECK(pg.threshold);

  const auto four = analyze(testing_support::config_of(Field::make(7), 2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}));
  CHECK_FALSE(four.threshold);
  CHECK_FALSE(four.rnc_member.has_value());
  CHECK(emit_report(four).find("note curve criterion inapplicable") != std::string::npos);
}
