#include <doctest.h>

#include "antileib/functors.hpp"
#include "antileib/laws.hpp"
#include "fixtures.hpp"

using namespace antileib;

TEST_CASE("law name round trip") {
  for (LawId law : all_laws()) {
    auto parsed = parse_law(law_name(law));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == law);
  }
  CHECK_FALSE(parse_law("no_such_law").has_value());
}

TEST_CASE("square-style bundles satisfy the commutative bracket laws") {
  RationalField f;
  for (const auto& alg :
       {fixtures::ml2(f), fixtures::ml3(f), fixtures::ml4(f), fixtures::ml5(f),
        fixtures::square3(f)}) {
    auto r = check_law(alg, LawId::mock_lie);
    CHECK(r.pass);
    CHECK(r.witnesses_total == 0);
    CHECK(r.triples_checked == alg.dim * alg.dim + alg.dim * alg.dim * alg.dim);
    // Commutativity plus the cyclic identity forces the left derivation law.
    CHECK(check_law(alg, LawId::anti_leibniz_left).pass);
    CHECK(check_law(alg, LawId::anti_leibniz_right).pass);
    CHECK(check_law(alg, LawId::anti_leibniz_symmetric).pass);
  }
}

TEST_CASE("mock-lie fixtures survive a prime field") {
  PrimeField f(5);
  CHECK(check_law(fixtures::ml3(f), LawId::mock_lie).pass);
  CHECK(check_law(fixtures::ml4(f), LawId::mock_lie).pass);
  CHECK(check_law(fixtures::ml5(f), LawId::mock_lie).pass);
}

TEST_CASE("b3 separates anti-associativity from the bracket laws") {
  RationalField f;
  auto alg = fixtures::b3(f);
  CHECK(check_law(alg, LawId::anti_associativity).pass);

  auto comm = check_law(alg, LawId::commutativity);
  CHECK_FALSE(comm.pass);
  CHECK(comm.witnesses_total == 2);
  REQUIRE(comm.witnesses.size() == 2);
  CHECK(comm.witnesses[0].i == 0);
  CHECK(comm.witnesses[0].j == 1);
  CHECK(comm.witnesses[0].k == no_index);
  CHECK(comm.witnesses[0].residual ==
        Vec<RationalField>{Rational(0), Rational(0), Rational(2)});

  auto al = check_law(alg, LawId::anti_leibniz_left);
  CHECK_FALSE(al.pass);
  REQUIRE_FALSE(al.witnesses.empty());
  CHECK(al.witnesses[0].i == 0);
  CHECK(al.witnesses[0].j == 0);
  CHECK(al.witnesses[0].k == 0);
  CHECK(al.witnesses[0].sub == "anti_leibniz_left");
  CHECK(al.witnesses[0].residual ==
        Vec<RationalField>{Rational(0), Rational(0), Rational(1)});
}

TEST_CASE("anti-associative fixtures") {
  RationalField f;
  CHECK(check_law(fixtures::aa2(f), LawId::anti_associativity).pass);
  CHECK(check_law(fixtures::aa3(f), LawId::anti_associativity).pass);
}

TEST_CASE("idempotent generator fails the derivation law with residual 3") {
  RationalField f;
  auto alg = fixtures::idem1(f);
  auto r = check_law(alg, LawId::anti_leibniz_left);
  CHECK_FALSE(r.pass);
  CHECK(r.triples_checked == 1);
  CHECK(r.witnesses_total == 1);
  REQUIRE(r.witnesses.size() == 1);
  const auto& w = r.witnesses[0];
  CHECK(w.i == 0);
  CHECK(w.j == 0);
  CHECK(w.k == 0);
  CHECK(w.sub == "anti_leibniz_left");
  CHECK(w.residual == Vec<RationalField>{Rational(3)});
  // The same generator also fails anti-associativity but stays commutative.
  CHECK_FALSE(check_law(alg, LawId::anti_associativity).pass);
  CHECK(check_law(alg, LawId::commutativity).pass);
}

TEST_CASE("check_law requires the products the law reads") {
  RationalField f;
  CHECK_THROWS_AS(check_law(fixtures::ml3(f), LawId::dialg_all), value_error);
  CHECK_THROWS_AS(
      check_law(fixtures::dialg_eq(f, fixtures::aa2(f)), LawId::mock_lie),
      value_error);
}

TEST_CASE("equal-sided dialgebra passes strict and non-strict axioms") {
  RationalField f;
  auto d = fixtures::dialg_eq(f, fixtures::aa2(f));
  auto loose = check_law(d, LawId::dialg_all);
  CHECK(loose.pass);
  CHECK(loose.triples_checked == 3 * 8);
  CheckOptions strict;
  strict.strict_dialgebra = true;
  auto tight = check_law(d, LawId::dialg_all, strict);
  CHECK(tight.pass);
  CHECK(tight.triples_checked == 5 * 8);
  CHECK(check_law(d, LawId::dialg_left_antiassoc).pass);
  CHECK(check_law(d, LawId::dialg_right_antiassoc).pass);
  CHECK(check_law(d, LawId::dialg_inner_antiassoc).pass);
}

TEST_CASE("one-sided dialgebra shows the gap the bar identities close") {
  RationalField f;
  // left product zero, right product the b3 table
  auto d = fixtures::dialg_pair(f, fixtures::default_labels(3),
                                StructureTensor<RationalField>(f, 3),
                                fixtures::b3(f).product("mul"));
  CHECK(check_law(d, LawId::dialg_all).pass);
  CheckOptions strict;
  strict.strict_dialgebra = true;
  auto tight = check_law(d, LawId::dialg_all, strict);
  CHECK_FALSE(tight.pass);
  REQUIRE_FALSE(tight.witnesses.empty());
  for (const auto& w : tight.witnesses) CHECK(w.sub == "dialg_bar_right");
  CHECK(tight.witnesses[0].i == 0);
  CHECK(tight.witnesses[0].j == 0);
  CHECK(tight.witnesses[0].k == 0);
  CHECK(tight.witnesses[0].residual ==
        Vec<RationalField>{Rational(0), Rational(0), Rational(1)});
}

TEST_CASE("trialgebra fixtures pass the full axiom list") {
  RationalField f;
  CheckOptions strict;
  strict.strict_dialgebra = true;
  for (const auto& t : {fixtures::trialg_eq(f, fixtures::aa2(f)),
                        fixtures::trialg_mid(f, fixtures::aa2(f)),
                        fixtures::trialg_eq(f, fixtures::b3(f)),
                        fixtures::trialg_mid(f, fixtures::b3(f))}) {
    CHECK(check_law(t, LawId::trialg_axioms).pass);
    CHECK(check_law(t, LawId::trialg_axioms, strict).pass);
  }
}

TEST_CASE("opposite algebra swaps the one-sided derivation laws") {
  RationalField f;
  auto hemi =
      hemisemidirect(adjoint_representation(fixtures::ml3(f), RepKind::mlie_rep));
  CHECK(hemi.claimed == AlgebraClass::anti_leibniz_left);
  CHECK(check_law(hemi, LawId::anti_leibniz_left).pass);
  CHECK_FALSE(check_law(hemi, LawId::commutativity).pass);

  auto opp = opposite_algebra(hemi);
  CHECK(opp.claimed == AlgebraClass::anti_leibniz_right);
  CHECK(check_law(opp, LawId::anti_leibniz_right).pass);
  CHECK(opposite_algebra(opp).product("mul").equals(f, hemi.product("mul")));
}

TEST_CASE("adjoint representations satisfy their defining identities") {
  RationalField f;
  auto rml3 = adjoint_representation(fixtures::ml3(f), RepKind::mlie_rep);
  auto r1 = check_representation(rml3);
  CHECK(r1.pass);
  CHECK(r1.triples_checked == 9);

  auto rml4 = adjoint_representation(fixtures::ml4(f), RepKind::mlie_rep);
  CHECK(check_representation(rml4).pass);

  auto rb3 = adjoint_representation(fixtures::b3(f), RepKind::anti_assoc_rep);
  auto r3 = check_representation(rb3);
  CHECK(r3.pass);
  CHECK(r3.triples_checked == 3 * 9);

  auto ral = adjoint_representation(fixtures::ml3(f), RepKind::anti_leib_rep);
  auto r4 = check_representation(ral);
  CHECK(r4.pass);
  CHECK(r4.triples_checked == 4 * 9);
}

TEST_CASE("action kinds check the carrier product and compatibility") {
  RationalField f;
  auto act = adjoint_representation(fixtures::ml3(f), RepKind::mlie_action);
  auto ok = check_representation(act);
  CHECK(ok.pass);
  // pair scan 9 + carrier law 9 + 27 + compatibility 27
  CHECK(ok.triples_checked == 9 + 36 + 27);

  auto broken = act;
  broken.carrier_product = fixtures::tensor(f, 3, {{0, 1, 0, 1}});
  auto bad = check_representation(broken);
  CHECK_FALSE(bad.pass);
  bool saw_carrier_comm = false;
  for (const auto& w : bad.witnesses)
    if (w.sub == "carrier_commutativity") saw_carrier_comm = true;
  CHECK(saw_carrier_comm);
}

TEST_CASE("matrix identities fail with carrier-column witnesses") {
  RationalField f;
  auto rep = adjoint_representation(fixtures::ml3(f), RepKind::mlie_rep);
  // Corrupt pi(e1) so pi(e1 e1) + 2 pi(e1)^2 picks up a residual.
  rep.maps["pi"][0].at(0, 0) = Rational(1);
  auto r = check_representation(rep);
  CHECK_FALSE(r.pass);
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK(r.witnesses[0].sub == "rep_pi");
  CHECK(r.witnesses[0].residual.size() == 3);
}

TEST_CASE("basis scan agrees with evaluation at random vectors") {
  RationalField f;
  const auto t = fixtures::ml5(f).product("mul");
  REQUIRE(check_law(fixtures::ml5(f), LawId::anti_leibniz_left).pass);
  auto rng = fixtures::seeded_rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    Vec<RationalField> x, y, z;
    for (int i = 0; i < 5; ++i) {
      x.push_back(fixtures::random_rational(rng));
      y.push_back(fixtures::random_rational(rng));
      z.push_back(fixtures::random_rational(rng));
    }
    // {x,{y,z}} + {{x,y},z} + {y,{x,z}} must vanish off basis too.
    auto acc = t.eval(f, x, t.eval(f, y, z));
    add_into(f, acc, t.eval(f, t.eval(f, x, y), z));
    add_into(f, acc, t.eval(f, y, t.eval(f, x, z)));
    CHECK(is_zero_vec(f, acc));
  }
}

TEST_CASE("witness list is capped but the total keeps counting") {
  RationalField f;
  // Every basis product equals e1, so every triple leaves residual 3 e1.
  auto alg = make_algebra(
      f, fixtures::default_labels(2),
      fixtures::tensor(f, 2, {{0, 0, 0, 1}, {0, 1, 0, 1}, {1, 0, 0, 1}, {1, 1, 0, 1}}));
  CheckOptions opts;
  opts.witness_cap = 2;
  auto r = check_law(alg, LawId::anti_leibniz_left, opts);
  CHECK_FALSE(r.pass);
  CHECK(r.witnesses.size() == 2);
  CHECK(r.witnesses_total > 2);
  // Witnesses arrive sorted by (i, j, k).
  CHECK(r.witnesses[0].i == 0);
  CHECK(r.witnesses[0].j == 0);
  CHECK(r.witnesses[0].k == 0);
}

TEST_CASE("span closure and ideal checks on ml3") {
  RationalField f;
  const auto t = fixtures::ml3(f).product("mul");
  Subspace<RationalField> e2_span(
      f, 3, {Vec<RationalField>{Rational(0), Rational(1), Rational(0)}});
  CHECK(span_closure_check(f, t, e2_span).pass);
  CHECK(ideal_check(f, t, e2_span, IdealSide::two_sided).pass);

  Subspace<RationalField> e1_span(
      f, 3, {Vec<RationalField>{Rational(1), Rational(0), Rational(0)}});
  auto close = span_closure_check(f, t, e1_span);
  CHECK_FALSE(close.pass);
  REQUIRE(close.witnesses.size() == 1);
  CHECK(close.witnesses[0].i == 0);
  CHECK(close.witnesses[0].j == 0);
  CHECK(close.witnesses[0].residual ==
        Vec<RationalField>{Rational(0), Rational(1), Rational(0)});

  auto left = ideal_check(f, t, e1_span, IdealSide::left);
  CHECK_FALSE(left.pass);
  REQUIRE(left.witnesses.size() == 1);
  CHECK(left.witnesses[0].sub == "ideal_left");
  CHECK(left.witnesses[0].i == 0);
  CHECK(left.witnesses[0].residual ==
        Vec<RationalField>{Rational(0), Rational(1), Rational(0)});

  Subspace<RationalField> wrong(f, 2, {Vec<RationalField>{Rational(1), Rational(0)}});
  CHECK_THROWS_AS(span_closure_check(f, t, wrong), value_error);
}

TEST_CASE("early-exit law predicate matches the full scan") {
  PrimeField f(5);
  auto rng = fixtures::seeded_rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    StructureTensor<PrimeField> t(f, 2);
    for (auto& e : t.flat()) e = fixtures::random_residue(f, rng);
    auto alg = make_algebra(f, fixtures::default_labels(2), t);
    for (LawId law : {LawId::mock_lie, LawId::anti_associativity,
                      LawId::anti_leibniz_left}) {
      CHECK(law_holds(alg, law) == check_law(alg, law).pass);
    }
  }
}
