#include <doctest.h>

#include "tlir/generators.hpp"
#include "tlir/sweep.hpp"

using namespace tlir;

TEST_CASE("sweep examples") {
  SweepResult one = sweep_serial(1);
  REQUIRE(one.entries.size() == 1);
  CHECK(one.max_tlir == 1);
  CHECK(one.holds());

  SweepResult four = sweep_serial(4);
  CHECK(four.entries.size() == 10);
  CHECK(four.graphs_per_n[2] == 1);
  CHECK(four.graphs_per_n[3] == 2);
  CHECK(four.graphs_per_n[4] == 6);
  CHECK(four.max_tlir == 2);
  CHECK(four.holds());
}

TEST_CASE("parallel sweep equals the serial sweep") {
  SweepResult serial = sweep_serial(5);
  for (int jobs : {1, 2, 4}) {
    SweepResult parallel = sweep_parallel(5, jobs);
    REQUIRE(parallel.entries.size() == serial.entries.size());
    for (std::size_t i = 0; i < serial.entries.size(); ++i) {
      CHECK(parallel.entries[i].n == serial.entries[i].n);
      CHECK(parallel.entries[i].index == serial.entries[i].index);
      CHECK(parallel.entries[i].status == serial.entries[i].status);
      CHECK(parallel.entries[i].value == serial.entries[i].value);
      CHECK(parallel.entries[i].nodes == serial.entries[i].nodes);
    }
    CHECK(parallel.max_tlir == serial.max_tlir);
    CHECK(parallel.graphs_per_n == serial.graphs_per_n);
  }
}

TEST_CASE("a tight budget leaves graphs unresolved") {
  SearchBudget tiny;
  tiny.node_limit = 1;
  SweepResult r = sweep_serial(4, tiny);
  CHECK(r.unresolved > 0);
  CHECK(!r.holds());
}
