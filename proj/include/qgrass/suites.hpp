#pragma once

/**
 * @file suites.hpp
 * @brief Named verification suites and their text/JSON rendering.
 *
 * A suite is a fixed bundle of checks at one ambient size (m, n). The `all`
 * suite runs every applicable suite, ordered by name. Output is
 * byte-deterministic for a fixed config; per-check timings are zeroed unless
 * explicitly requested, and then every check carries the wall time of the
 * verification step that produced it.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "qgrass/report.hpp"

namespace qgr {

struct SuiteConfig {
  int m = 2;
  int n = 4;
  std::string suite = "all";
  int degree_bound = 2;        // domain probe only
  std::uint64_t seed = 2024;   // sampled property checks only
  bool timings = false;
};

/// The closed set of suite names, sorted.
const std::vector<std::string>& suite_names();

/// The (2,4) commutation table among the six maximal minors: the two general
/// families [ij][ik] = q [ik][ij] and [ik][jk] = q [jk][ik] over all i<j<k,
/// the three exceptional identities, the derived form of the mixed one, and
/// both quadratic Plucker forms, all as canonical-form zeroes.
Report verify_relation_table_24();

/// The (2,4) cycling obstruction: the shifted quadratic combination is
/// nonzero, the valid rearranged form is zero, and their difference is
/// exactly (q^4 - q^2) [3,4][1,2].
Report verify_nonautomorphism();

/// Index extension of quadratic relations: every relation at (m, n) extends
/// to a verified zero in G(m+1, n+1) by adjoining the new column n+1, and
/// the fixed G(1,4) -> G(3,4) singleton example round-trips.
Report verify_muir(int m, int n);

/// Runs the configured suite. InvalidConfig on an unknown suite name,
/// out-of-range sizes, or a size-pinned suite at the wrong size (nonauto
/// needs (2,4)).
Report run_suite(const SuiteConfig& cfg);

std::string render_text(const Report& rep, const SuiteConfig& cfg);
std::string render_json(const Report& rep, const SuiteConfig& cfg);

}  // namespace qgr
