// Copyright 2026 The ffperm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ffperm/io.hpp"

namespace ffperm {
namespace {

TEST(FieldSpec, ParseAndFormat) {
  const FieldCtx F5 = parse_field_spec("p=5");
  EXPECT_EQ(F5.q(), 5u);
  EXPECT_EQ(format_field_spec(F5), "p=5");
  const FieldCtx F9 = parse_field_spec("p=3,n=2");
  EXPECT_EQ(format_field_spec(F9), "p=3,n=2,mod=1,0,1");
  const FieldCtx G9 = parse_field_spec("p=3,n=2,mod=2,1,1");
  EXPECT_EQ(G9.modulus(), (std::vector<std::uint32_t>{2, 1, 1}));
  EXPECT_EQ(parse_field_spec("p=3,mod=2,1,1").n(), 2u);
  EXPECT_TRUE(parse_field_spec(format_field_spec(G9)) == G9);
}

TEST(FieldSpec, Errors) {
  auto code = [](const char* s) {
    try {
      parse_field_spec(s);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::kBadParam;
  };
  EXPECT_EQ(code("n=2"), Errc::kParse);
  EXPECT_EQ(code("p=x"), Errc::kParse);
  EXPECT_EQ(code("p=5,z=1"), Errc::kParse);
  EXPECT_EQ(code("p=9"), Errc::kCompositeP);
  EXPECT_EQ(code("p=3,n=2,mod=0,0,1"), Errc::kReducibleModulus);
  EXPECT_EQ(code("p=3,n=2,mod=1,0,2"), Errc::kParse);
}

TEST(Elements, RoundTrip) {
  const FieldCtx F = parse_field_spec("p=3,n=2");
  for (std::uint32_t v = 0; v < F.q(); ++v) {
    const Fe a{v};
    EXPECT_EQ(parse_element(F, format_element(F, a)), a);
    EXPECT_EQ(element_from_json(F, element_to_json(F, a)), a);
  }
  const FieldCtx P = make_field(7);
  EXPECT_EQ(parse_element(P, "-1"), Fe{6});
  EXPECT_EQ(parse_element_list(P, "-1,2,9").size(), 3u);
  EXPECT_THROW(parse_element(P, "abc"), Error);
}

TEST(Json, PolyAndChain) {
  const FieldCtx F = make_field(5);
  const Chain ch(F, {F.embed(-1), Fe{1}, Fe{4}, Fe{0}});
  const Poly f = expand_chain(ch);
  const Json pj = poly_to_json(f);
  EXPECT_EQ(pj.dump(), R"({"field":"p=5","coeffs":[0,1,1,2,0]})");
  EXPECT_EQ(poly_from_json(pj), f);
  const Json cj = chain_to_json(ch);
  EXPECT_EQ(chain_from_json(cj).params(), ch.params());
  EXPECT_THROW(poly_from_json(Json::parse(R"({"coeffs":[1]})")), Error);
  const Json ext = Json::parse(R"({"field":"p=3,n=2,mod=1,0,1","coeffs":[[0,1],2]})");
  const Poly g = poly_from_json(ext);
  EXPECT_EQ(g.coeff(0), g.field().from_coeffs(std::vector<std::int64_t>{0, 1}));
  EXPECT_EQ(poly_from_json(poly_to_json(g)), g);
}

TEST(Json, RankReport) {
  const FieldCtx F = make_field(5);
  const Json j = rank_report_to_json(rank_upto2(expand_chain(Chain(F, {F.embed(-1), Fe{1}, Fe{4}, Fe{0}}))));
  EXPECT_EQ(j["rank"], "1");
  EXPECT_EQ(j["witness"]["a"], Json::parse("[3,3,3]"));
}

TEST(Csv, NuRow) {
  EXPECT_EQ(nu_csv_header(), "p,nu,argmax_list,bound_num,bound_formula,ratio_log");
  const std::string row = nu_row_to_csv(nu_p(11));
  EXPECT_EQ(row.rfind("11,3,7,5.000000,5,", 0), 0u) << row;
}

TEST(Csv, Sweep) {
  const FieldCtx F = make_field(11);
  const auto rows = sweep_rank2_csv_rows(sweep_rank2(F));
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[3], "11,11,all,6,6.500000,6,0");
  EXPECT_EQ(sweep_csv_header(), "q,p,case,min_weight,bound_thm33,bound_cor35,violations");
}

}  // namespace
}  // namespace ffperm
