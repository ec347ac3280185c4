#include "doctest.h"
#include "qpsi/cli/output.hpp"
#include "qpsi/corpus/registry.hpp"
#include "qpsi/errors.hpp"

using namespace qpsi;
using namespace qpsi::corpus;

TEST_CASE("registry names are stable and ordered") {
  const std::vector<std::string> want{"1psi1",          "q-binomial",         "triple-product",
                                      "q-beta-integral", "reflection",         "kronecker",
                                      "guo-schlosser",   "four-square",        "two-square",
                                      "poincare",        "macdonald-coroot",   "gustafson-milne",
                                      "new-multiple-1psi1", "noncommutative-1psi1"};
  CHECK(identity_names() == want);
  CHECK(find_identity("kronecker").formal);
  CHECK(!find_identity("q-beta-integral").formal);
  CHECK_THROWS_AS(find_identity("bogus"), UnknownIdentity);
}

TEST_CASE("corpus_run") {
  RunConfig c;
  c.backend = BackendSelection::Formal;

  SUBCASE("1psi1 formal to order 30 gives one zero-residual report") {
    const auto r = corpus_run({"1psi1"}, c);
    REQUIRE(r.size() == 1);
    CHECK(r[0].pass);
    CHECK(r[0].residual == "0");
    CHECK(r[0].order == 30);
  }

  SUBCASE("empty selection") { CHECK(corpus_run({}, c).empty()); }

  SUBCASE("unknown names are rejected before anything runs") {
    CHECK_THROWS_AS(corpus_run({"1psi1", "bogus"}, c), UnknownIdentity);
  }

  SUBCASE("invalid configurations") {
    RunConfig bad = c;
    bad.order = 0;
    CHECK_THROWS_AS(corpus_run({"1psi1"}, bad), InvalidArgument);
    bad = c;
    bad.precision = 32;
    CHECK_THROWS_AS(corpus_run({"1psi1"}, bad), InvalidArgument);
    bad = c;
    bad.tolerance = "-1";
    CHECK_THROWS_AS(corpus_run({"1psi1"}, bad), InvalidArgument);
    bad.tolerance = "abc";
    CHECK_THROWS_AS(corpus_run({"1psi1"}, bad), InvalidArgument);
  }

  SUBCASE("formal before numeric, selection order kept") {
    RunConfig both;
    const auto r = corpus_run({"kronecker", "1psi1"}, both);
    REQUIRE(r.size() == 4);
    CHECK(r[0].identity == "kronecker");
    CHECK(r[0].backend == identities::Backend::Formal);
    CHECK(r[1].backend == identities::Backend::Numeric);
    CHECK(r[2].identity == "1psi1");
    CHECK(all_pass(r));
  }
}

TEST_CASE("every numeric default passes, at two precisions") {
  RunConfig c;
  c.backend = BackendSelection::Numeric;
  const auto r = corpus_run(identity_names(), c);
  CHECK(r.size() > 20);
  for (const auto& x : r) {
    CAPTURE(x.identity);
    CAPTURE(x.instance);
    CAPTURE(x.note);
    CHECK(x.pass);
  }

  RunConfig wide = c;
  wide.precision = 400;
  wide.tolerance = "1e-40";
  for (const auto& name : {"1psi1", "triple-product", "q-beta-integral", "kronecker", "noncommutative-1psi1"}) {
    for (const auto& x : corpus_run({name}, wide)) {
      CAPTURE(x.instance);
      CHECK(x.pass);
    }
  }
}

TEST_CASE("reports are reproducible") {
  RunConfig c;
  c.order = 20;
  const std::vector<std::string> names{"1psi1", "guo-schlosser", "noncommutative-1psi1", "poincare"};
  const auto a = cli::reports_to_json(corpus_run(names, c));
  const auto b = cli::reports_to_json(corpus_run(names, c));
  CHECK(a == b);

  RunConfig other = c;
  other.seed = 2;
  CHECK(cli::reports_to_json(corpus_run({"guo-schlosser"}, other)) !=
        cli::reports_to_json(corpus_run({"guo-schlosser"}, c)));
}
