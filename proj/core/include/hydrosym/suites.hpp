#pragma once

#include <hydrosym/report.hpp>

#include <string>

namespace hydrosym {

// Verification suites behind the CLI subcommands. Each returns a Report with
// one item per checked fact; ordering inside the report is canonicalized at
// emission time.

// Computed structure tables vs the embedded reference tables.
Report run_tables_suite(const std::string& algebra = "all", bool reference = true);

// On-shell invariance of every generator, plus the negative control.
Report run_symmetries_suite();

// Superfield decomposition identities (component systems for general and
// unit a, b; classical limit).
Report run_superfield_suite();

// Reduced equations of every tabulated subalgebra, and the invariant checks.
Report run_reduce_suite();

// Solution catalog (optionally one id), plus the Euler double-wave check.
Report run_solutions_suite(std::uint64_t seed = 42, const std::string& id_filter = "",
                           const std::string& tier_filter = "");

// With document_errata the known-nonconserving printed pairs are reported as
// erratum (for the combined run); otherwise a nonzero divergence fails, which
// is what an explicit --convention paper run asks for.
Report run_conservation_suite(int kmax = 10, bool corrected = true,
                              bool document_errata = false);

// Path independence of the Weierstrass integral on the as4 solution with
// C1 = C2 = 0 (two staircase paths).
Report run_weierstrass_suite(int k = 1, int steps = 10000);

// Hodograph round trip, grid residual convergence, catastrophe locus.
Report run_hydro_suite(std::uint64_t seed = 42);

Report run_all(std::uint64_t seed = 42);

}  // namespace hydrosym
