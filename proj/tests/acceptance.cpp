// Acceptance suite: one pass/fail line per criterion, every tolerance pinned.

#include <hydrosym/catalog.hpp>
#include <hydrosym/conserve.hpp>
#include <hydrosym/hydro.hpp>
#include <hydrosym/reduction.hpp>
#include <hydrosym/suites.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>

using namespace hydrosym;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void line(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
  std::printf("%s: criterion %d - %s%s%s\n", ok ? "PASS" : "FAIL", criterion,
              what.c_str(), detail.empty() ? "" : ": ", detail.c_str());
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main() {
  // 1. structure tables: 36 + 64 exact entries, under 5 seconds
  {
    auto start = Clock::now();
    Report rep = run_tables_suite("all");
    double elapsed = seconds_since(start);
    int pass = rep.count("pass");
    bool ok = pass == 36 + 64 && rep.count("fail") == 0 && elapsed < 5.0;
    std::ostringstream os;
    os << pass << "/100 entries, " << elapsed << " s";
    line(1, "structure tables match Tables I and IV", ok, os.str());
  }

  // 2. symmetry verification: 6/6 classical, 8/8 susy, negative control, < 30 s
  {
    auto start = Clock::now();
    Report rep = run_symmetries_suite();
    double elapsed = seconds_since(start);
    int pass = rep.count("pass");
    bool ok = pass == 6 + 8 + 2 && rep.count("fail") == 0 && elapsed < 30.0;
    std::ostringstream os;
    os << pass << "/16 checks (incl. negative controls), " << elapsed << " s";
    line(2, "generators leave their systems invariant on-shell", ok, os.str());
  }

  // 3. superfield decomposition identities
  {
    Report rep = run_superfield_suite();
    bool ok = rep.count("fail") == 0 && rep.count("pass") == (int)rep.items.size();
    line(3, "theta-expansion reproduces the component systems exactly", ok);
  }

  // 4. reductions: 13 classical + 25 susy rows match up to a recorded factor
  {
    Report rep = run_reduce_suite();
    int pass = 0, erratum = 0, skipped = 0, fail = 0, inv_fail = 0;
    for (const auto& item : rep.items) {
      bool inv = item.id.find(":invariants") != std::string::npos;
      if (inv) {
        if (item.status != "pass") ++inv_fail;
        continue;
      }
      if (item.status == "pass") ++pass;
      if (item.status == "erratum") ++erratum;
      if (item.status == "skipped") ++skipped;
      if (item.status == "fail") ++fail;
    }
    bool ok = fail == 0 && inv_fail == 0 && pass + erratum == 38 && skipped == 3 &&
              erratum >= 1;  // SL6 change-of-variable typo is flagged
    std::ostringstream os;
    os << pass << " matched, " << erratum << " errata, " << skipped
       << " N/A rows, " << fail << " failed";
    line(4, "tabulated reductions reproduce the printed reduced equations", ok, os.str());
  }

  // 5. solution catalog: every record verifies at its recorded tier
  {
    Report rep = run_solutions_suite(42);
    int fail = rep.count("fail");
    bool ok = fail == 0 && rep.items.size() >= 40;
    std::ostringstream os;
    os << rep.count("pass") << " pass, " << rep.count("erratum")
       << " verified-with-erratum, " << fail << " failed of " << rep.items.size();
    line(5, "solution catalog verifies (symbolic / numeric 1e-9 / modulo-ODE)", ok,
         os.str());
  }

  // 6. conservation laws and Weierstrass path independence
  {
    Report corrected = run_conservation_suite(10, true);
    Report printed = run_conservation_suite(2, false, true);
    bool printed_errata = printed.count("erratum") == 2;
    Report weier = run_weierstrass_suite(1, 10000);
    bool ok = corrected.count("pass") == 10 && corrected.count("fail") == 0 &&
              printed_errata && weier.count("fail") == 0;
    std::ostringstream os;
    os << "corrected k=1..10 conserved; printed k=1,2 nonzero divergence; "
       << "staircase paths agree within 1e-8 at 10^4 steps";
    line(6, "conservation pairs and Weierstrass integrals behave as claimed", ok,
         os.str());
  }

  // 7. general integral: round trip, grid residuals, catastrophe locus
  {
    Report rep = run_hydro_suite(42);
    bool ok = rep.count("fail") == 0;
    std::ostringstream os;
    for (const auto& item : rep.items)
      if (item.status == "fail") os << item.id << " failed (" << item.witness << ") ";
    line(7, "hodograph round trip 1e-10, grid residuals 1e-6 with >=3.5x halving, "
            "locus |det|<=1e-10 on R=S",
         ok, os.str());
  }

  // 8. Euler double wave reduction, with the sign-flip negative control
  {
    EulerOutcome out = verify_euler_double_wave();
    line(8, "double-wave substitution vanishes; flipped sign fails",
         out.pass && out.negative_control_fails, out.witness);
  }

  // 9. whole suite: byte-reproducible and under 5 minutes
  {
    auto start = Clock::now();
    std::ostringstream a, b;
    run_all(42).emit_jsonl(a);
    run_all(42).emit_jsonl(b);
    double elapsed = seconds_since(start);
    bool ok = a.str() == b.str() && elapsed < 300.0;
    std::ostringstream os;
    os << "two runs " << (a.str() == b.str() ? "identical" : "differ") << ", "
       << elapsed << " s for both";
    line(9, "full verification run is byte-reproducible and fast", ok, os.str());
  }

  if (failures == 0)
    std::printf("acceptance: all criteria satisfied\n");
  else
    std::printf("acceptance: %d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
